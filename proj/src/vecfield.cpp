#include "axinorm/vecfield.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace axinorm {

namespace {

const GaussRational kI = GaussRational::i();

void append(NormReport& out, const std::string& prefix, const NormReport& part, const Rational& scale = Rational(1)) {
  for (const auto& t : part.terms) out.add(prefix + t.label, t.value.scaled(scale));
}

NormReport empty_report(const MeridianDomain& domain) {
  NormReport r;
  r.total = ExtendedNorm(EpsForm{}, domain);
  return r;
}

}  // namespace

std::pair<ComplexFun, ComplexFun> cartesian_link(const VecCoefficient& v) {
  const ComplexFun iw = v.w_theta * kI;
  return {v.w_r + iw, v.w_r - iw};
}

NormReport vec_hk_norm_sq(const VecCoefficient& v, int k, int m, const MeridianDomain& domain) {
  const auto [plus, minus] = cartesian_link(v);
  NormReport report = empty_report(domain);
  const Rational half(1, 2);
  append(report, "1/2 (w_r + i w_theta) k+1: ", hk_norm_sq(plus, k + 1, m, domain), half);
  append(report, "1/2 (w_r - i w_theta) k-1: ", hk_norm_sq(minus, k - 1, m, domain), half);
  return report;
}

NormReport vec_c_norm_sq(const VecCoefficient& v, int k, int m, const MeridianDomain& domain) {
  const int ak = std::abs(k);
  NormReport report = empty_report(domain);
  int shifted = ak;
  if (ak == 0)
    shifted = 1;
  else if (ak <= m)
    shifted = ak - 1;
  const std::string tag = "C^" + std::to_string(m) + "_(" + std::to_string(shifted) + ") ";
  append(report, tag + "w_r: ", c_norm_sq(v.w_r, shifted, m, domain));
  append(report, tag + "w_theta: ", c_norm_sq(v.w_theta, shifted, m, domain));
  if (ak >= 1 && ak <= m) {
    const GaussRational sign = k > 0 ? kI : -kI;
    const ComplexFun combo = mul_r_pow(v.w_r + v.w_theta * sign, -ak);
    report.add("|(1/r)^" + std::to_string(ak) + " (w_r + i sgn(k) w_theta)|^2 in H^" + std::to_string(m - ak) + "_1",
               h1_norm_sq(combo, m - ak, domain).total);
  }
  return report;
}

VecParsevalPair vec_parseval(const VecFourierSum& u, int m, const MeridianDomain& domain) {
  VecParsevalPair out{ExtendedNorm(EpsForm{}, domain), ExtendedNorm(EpsForm{}, domain)};
  ComplexAxiFun plus, minus;  // u_x + i u_y and u_x - i u_y
  for (const auto& [k, v] : u) {
    out.lhs += vec_hk_norm_sq(v, k, m, domain).total;
    const auto [p, q] = cartesian_link(v);
    plus.add_to_mode(k + 1, p);
    minus.add_to_mode(k - 1, q);
  }
  const GaussRational half(Rational(1, 2));
  const GaussRational minus_half_i(Rational(0), Rational(-1, 2));
  std::map<int, bool> seen;
  for (const auto& [j, f] : plus.modes()) seen[j] = true;
  for (const auto& [j, f] : minus.modes()) seen[j] = true;
  for (const auto& [j, unused] : seen) {
    const ComplexFun x = (plus.mode(j) + minus.mode(j)) * half;
    const ComplexFun y = (plus.mode(j) - minus.mode(j)) * minus_half_i;
    out.rhs += hk_norm_sq(x, j, m, domain).total;
    out.rhs += hk_norm_sq(y, j, m, domain).total;
  }
  return out;
}

std::vector<VecCoefficient> vec_ensemble(int m, int k, bool planar, const EnsembleConfig& config) {
  const auto plus = admissible_ensemble(m, k + 1, planar, config);
  EnsembleConfig other = config;
  other.seed = config.seed ^ 0x5bd1e9955bd1e995ULL;
  const auto minus = admissible_ensemble(m, k - 1, planar, other);
  // w_r = (p + q)/2, w_theta = (p - q)/(2i)
  const GaussRational half(Rational(1, 2));
  const GaussRational minus_half_i(Rational(0), Rational(-1, 2));
  std::vector<VecCoefficient> out;
  out.reserve(plus.size());
  for (std::size_t n = 0; n < plus.size(); ++n) {
    const ComplexFun p = to_complex(plus[n]);
    const ComplexFun q = to_complex(minus[n]);
    out.push_back({(p + q) * half, (p - q) * minus_half_i});
  }
  return out;
}

VecSweepResult vec_equivalence_sweep(int m, const std::vector<int>& k_values, const std::vector<Rational>& eps_list,
                                     const MeridianDomain& family, const EnsembleConfig& config) {
  VecSweepResult result;
  result.m = m;
  const double inf = std::numeric_limits<double>::infinity();
  result.ratio_min = inf;
  result.ratio_max = -inf;
  for (int k : k_values) {
    const auto draws = vec_ensemble(m, k, family.is_planar(), config);
    for (const auto& eps : eps_list) {
      const MeridianDomain domain = family.with_r_min(eps);
      VecSweepCell cell;
      cell.k = k;
      cell.eps = eps;
      cell.ratio_min = inf;
      cell.ratio_max = -inf;
      for (const auto& v : draws) {
        const ExtendedNorm h = vec_hk_norm_sq(v, k, m, domain).total;
        const ExtendedNorm c = vec_c_norm_sq(v, k, m, domain).total;
        if (!h.is_finite() || !c.is_finite() || (sgn(h.pi_coeff()) == 0 && sgn(h.log_coeff()) == 0)) {
          ++cell.skipped;
          continue;
        }
        ++cell.accepted;
        const double q = static_cast<double>(c.to_long_double() / h.to_long_double());
        cell.ratio_min = std::min(cell.ratio_min, q);
        cell.ratio_max = std::max(cell.ratio_max, q);
      }
      if (cell.accepted == 0)
        throw std::runtime_error("vec_equivalence_sweep: every draw skipped for m=" + std::to_string(m) +
                                 ", k=" + std::to_string(k));
      result.ratio_min = std::min(result.ratio_min, cell.ratio_min);
      result.ratio_max = std::max(result.ratio_max, cell.ratio_max);
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

}  // namespace axinorm
