#include "axinorm/sobolev.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <tuple>

namespace axinorm {

namespace {

void check_order(int m) {
  if (m < 0) throw std::invalid_argument("Sobolev order must be >= 0");
  if (m > kMaxOrder) throw std::invalid_argument("Sobolev order above " + std::to_string(kMaxOrder));
}

std::string sup(int v) { return std::to_string(v); }

/// Memoized zeta recursion. Keys are normalized so the leading coefficient
/// is 1, using |c w|^2 = c^2 |w|^2. Confined to one evaluation.
class PerpSeminorm {
 public:
  explicit PerpSeminorm(const MeridianDomain& domain) : domain_(domain) {}

  EpsForm operator()(const RealFun& w, int k, int j) {
    if (w.is_zero()) return {};
    const Rational lead = w.terms().front().coeff;
    RealFun unit = w * Rational(1 / lead);
    auto key = std::make_tuple(unit, k, j);
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(std::move(key), compute(unit, k, j)).first;
    return it->second.scaled(lead * lead);
  }

 private:
  EpsForm compute(const RealFun& w, int k, int j) {
    if (j == 0) return l21_inner_form(w, w, domain_);
    const RealFun dr = d_dr(w);
    const RealFun weighted = mul_r_pow(w, -1) * Rational(k);
    EpsForm out = (*this)(dr + weighted, k - 1, j - 1).scaled(Rational(1, 2));
    out += (*this)(dr - weighted, k + 1, j - 1).scaled(Rational(1, 2));
    return out;
  }

  const MeridianDomain& domain_;
  std::map<std::tuple<RealFun, int, int>, EpsForm> memo_;
};

NormReport empty_report(const MeridianDomain& domain) {
  NormReport r;
  r.total = ExtendedNorm(EpsForm{}, domain);
  return r;
}

NormReport combine(NormReport a, const NormReport& b) {
  a.total += b.total;
  for (std::size_t i = 0; i < a.terms.size(); ++i) a.terms[i].value += b.terms.at(i).value;
  return a;
}

/// (|k|/r)^l w with the l = 0 convention.
RealFun radial_weight(const RealFun& w, int abs_k, int l) {
  if (l == 0) return w;
  return mul_r_pow(w, -l) * pow(Rational(abs_k), l);
}

}  // namespace

std::string NormReport::first_divergent() const {
  for (const auto& t : terms)
    if (!t.value.is_finite()) return t.label;
  return {};
}

ExtendedNorm h_perp_seminorm_sq(const RealFun& w, int k, int j, const MeridianDomain& domain) {
  check_order(j);
  PerpSeminorm perp(domain);
  return ExtendedNorm(perp(w, k, j), domain);
}

NormReport hk_norm_sq(const RealFun& w, int k, int m, const MeridianDomain& domain) {
  check_order(m);
  NormReport report = empty_report(domain);
  PerpSeminorm perp(domain);
  const bool planar = domain.is_planar();
  for (int j = 0; j <= m; ++j) {
    for (int i = planar ? j : 0; i <= j; ++i) {
      const int p = j - i;
      std::string label = "|d_z^" + sup(p) + " w|^2 in H^" + sup(i) + "_perp(" + sup(k) + ")";
      report.add(std::move(label), ExtendedNorm(perp(d_dz(w, p), k, i), domain));
    }
  }
  return report;
}

NormReport hk_norm_sq(const ComplexFun& w, int k, int m, const MeridianDomain& domain) {
  return combine(hk_norm_sq(real_part(w), k, m, domain), hk_norm_sq(imag_part(w), k, m, domain));
}

NormReport w_seminorm_sq(const RealFun& w, int k, int m, const MeridianDomain& domain) {
  check_order(m);
  NormReport report = empty_report(domain);
  const int ak = std::abs(k);
  for (int l = 0; l <= std::min(ak, m); ++l) {
    RealFun g = d_dr(radial_weight(w, ak, l), m - l);
    report.add("W l=" + sup(l) + ": |d_r^" + sup(m - l) + " (|k|/r)^" + sup(l) + " w|^2", l21_norm_sq(g, domain));
  }
  return report;
}

NormReport x_seminorm_sq(const RealFun& w, int k, int m, const MeridianDomain& domain) {
  check_order(m);
  NormReport report = empty_report(domain);
  const int ak = std::abs(k);
  if (m - ak < 2) return report;
  const RealFun base = mul_r_pow(w, -ak);
  for (int l = 1; l <= (m - ak) / 2; ++l) {
    RealFun g = d_dr(apply_r_dr(base, l), m - ak - 2 * l);
    report.add("X l=" + sup(l) + ": |d_r^" + sup(m - ak - 2 * l) + " (1/r d_r)^" + sup(l) + " (1/r)^" + sup(ak) + " w|^2",
               l21_norm_sq(g, domain));
  }
  return report;
}

NormReport h1_norm_sq(const RealFun& w, int m, const MeridianDomain& domain) {
  check_order(m);
  NormReport report = empty_report(domain);
  const int zmax = domain.is_planar() ? 0 : m;
  for (int b = 0; b <= zmax; ++b) {
    RealFun dz = d_dz(w, b);
    for (int a = 0; a + b <= m; ++a) {
      report.add("|d_r^" + sup(a) + " d_z^" + sup(b) + " w|^2", l21_norm_sq(d_dr(dz, a), domain));
    }
  }
  return report;
}

NormReport h1_norm_sq(const ComplexFun& w, int m, const MeridianDomain& domain) {
  return combine(h1_norm_sq(real_part(w), m, domain), h1_norm_sq(imag_part(w), m, domain));
}

NormReport h1_bullet_norm_sq(const RealFun& w, int m, const MeridianDomain& domain) {
  if (m < 1) throw std::invalid_argument("h1_bullet_norm_sq needs m >= 1");
  NormReport report = h1_norm_sq(w, m, domain);
  report.add("bullet weight: |(1/r) d_r^" + sup(m - 1) + " w|^2", l21_norm_sq(mul_r_pow(d_dr(w, m - 1), -1), domain));
  return report;
}

NormReport v1_norm_sq(const RealFun& w, int m, const MeridianDomain& domain) {
  check_order(m);
  NormReport report = empty_report(domain);
  const int zmax = domain.is_planar() ? 0 : m;
  for (int b = 0; b <= zmax; ++b) {
    RealFun dz = d_dz(w, b);
    for (int a = 0; a + b <= m; ++a) {
      const int weight = m - a - b;
      report.add("|(1/r)^" + sup(weight) + " d_r^" + sup(a) + " d_z^" + sup(b) + " w|^2",
                 l21_norm_sq(mul_r_pow(d_dr(dz, a), -weight), domain));
    }
  }
  return report;
}

NormReport c_norm_sq(const RealFun& w, int k, int m, const MeridianDomain& domain) {
  check_order(m);
  NormReport report = empty_report(domain);
  const int ak = std::abs(k);
  for (int l = 0; l <= std::min(ak, m); ++l) {
    NormReport part = h1_norm_sq(radial_weight(w, ak, l), m - l, domain);
    report.add("W-part l=" + sup(l) + ": |(|k|/r)^" + sup(l) + " w|^2 in H^" + sup(m - l) + "_1", part.total);
  }
  if (m - ak >= 2) {
    const RealFun base = mul_r_pow(w, -ak);
    for (int l = 1; l <= (m - ak) / 2; ++l) {
      NormReport part = h1_norm_sq(apply_r_dr(base, l), m - ak - 2 * l, domain);
      report.add("X-part l=" + sup(l) + ": |(1/r d_r)^" + sup(l) + " (1/r)^" + sup(ak) + " w|^2 in H^" +
                     sup(m - ak - 2 * l) + "_1",
                 part.total);
    }
  }
  return report;
}

NormReport c_norm_sq(const ComplexFun& w, int k, int m, const MeridianDomain& domain) {
  return combine(c_norm_sq(real_part(w), k, m, domain), c_norm_sq(imag_part(w), k, m, domain));
}

}  // namespace axinorm
