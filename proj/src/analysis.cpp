#include "axinorm/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>

#include "axinorm/bdm.hpp"

namespace axinorm {

std::int64_t pw_constant(int m, int n, int ell) {
  if (ell < 0 || ell > m) throw std::invalid_argument("pw_constant: need 0 <= ell <= m");
  std::int64_t p = 1;
  for (int q = ell; q <= m - 1; ++q) p *= n - q;
  return p;
}

std::int64_t px_constant(int m, int k, int n, int ell) {
  const int ak = std::abs(k);
  if (ell < 1 || 2 * ell > m - ak) throw std::invalid_argument("px_constant: need 1 <= ell <= (m-|k|)/2");
  std::int64_t p = 1;
  for (int q = ak + 2 * ell; q <= m - 1; ++q) p *= n - q;
  for (int q = 0; q <= ell - 1; ++q) p *= n - ak - 2 * q;
  return p;
}

bool boundedness_verdict(int k, int m, int n) {
  if (n < 0) throw std::invalid_argument("boundedness_verdict: need n >= 0");
  const int ak = std::abs(k);
  return n >= m || (n >= ak && (n - ak) % 2 == 0);
}

std::set<int> trace_set(int k, int m) {
  const int ak = std::abs(k);
  std::set<int> out;
  for (int j = 0; j < ak; ++j) out.insert(j);
  for (int j = ak + 1; j < m - 1; j += 2) out.insert(j);
  return out;
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::bounded:
      return "O(1)";
    case Regime::log:
      return "log";
    case Regime::power:
      return "power";
  }
  return "?";
}

Regime classify(const EpsForm& form) {
  if (form.leading_negative_power()) return Regime::power;
  if (sgn(form.log_coeff) != 0) return Regime::log;
  return Regime::bounded;
}

AsymptoticsReport eps_asymptotics(int n, int m, const MeridianDomain& family, const std::vector<Rational>& eps_list) {
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (sgn(eps_list[i]) <= 0) throw std::invalid_argument("eps values must be positive");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1])) throw std::invalid_argument("eps values must be strictly decreasing");
  }
  AsymptoticsReport report;
  report.n = n;
  report.m = m;
  const RealFun f = RealFun::r(n - m);
  report.form = l21_inner_form(f, f, family);
  report.regime = classify(report.form);
  if (report.regime == Regime::power) report.exponent = *report.form.leading_negative_power();
  for (const auto& eps : eps_list) {
    const MeridianDomain d = family.with_r_min(eps);
    report.rows.push_back({eps, ExtendedNorm(report.form, d)});
  }
  return report;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

double ratio(const ExtendedNorm& num, const ExtendedNorm& den) {
  return static_cast<double>(num.to_long_double() / den.to_long_double());
}

bool is_zero_value(const ExtendedNorm& v) {
  return v.is_finite() && sgn(v.pi_coeff()) == 0 && sgn(v.log_coeff()) == 0;
}

}  // namespace

std::vector<RealFun> admissible_ensemble(int m, int k, bool planar, const EnsembleConfig& config) {
  std::vector<int> exponents;
  for (int n = 0; n <= m + config.extra_r_exp; ++n)
    if (boundedness_verdict(k, m, n)) exponents.push_back(n);
  std::uint64_t s = splitmix(config.seed);
  s = splitmix(s ^ static_cast<std::uint64_t>(m));
  s = splitmix(s ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(k) + 1000003));
  Draw draw(s);
  std::vector<RealFun> out;
  out.reserve(static_cast<std::size_t>(config.size));
  while (static_cast<int>(out.size()) < config.size) {
    RealFun f;
    const int terms = draw.uniform(1, config.max_terms);
    for (int t = 0; t < terms; ++t) {
      const int n = exponents[static_cast<std::size_t>(draw.uniform(0, static_cast<int>(exponents.size()) - 1))];
      const int b = planar ? 0 : draw.uniform(0, config.max_z_exp);
      const int den = draw.uniform(1, 4);
      int num = draw.uniform(-config.coeff_bound * den, config.coeff_bound * den - 1);
      if (num >= 0) ++num;  // skip zero
      Rational c(num, den);
      c.canonicalize();
      f += RealFun::monomial(c, n, b);
    }
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

SweepResult equivalence_sweep(int m, const std::vector<int>& k_values, const std::vector<Rational>& eps_list,
                              const MeridianDomain& family, const EnsembleConfig& config) {
  SweepResult result;
  result.m = m;
  result.ensemble = config;
  const double inf = std::numeric_limits<double>::infinity();
  result.seminorm_min = result.full_min = inf;
  result.seminorm_max = result.full_max = -inf;
  for (int k : k_values) {
    const auto draws = admissible_ensemble(m, k, family.is_planar(), config);
    for (const auto& eps : eps_list) {
      const MeridianDomain domain = family.with_r_min(eps);
      SweepCell cell;
      cell.k = k;
      cell.eps = eps;
      cell.seminorm_min = cell.full_min = inf;
      cell.seminorm_max = cell.full_max = -inf;
      for (const auto& w : draws) {
        const ExtendedNorm perp = h_perp_seminorm_sq(w, k, m, domain);
        const ExtendedNorm wx = w_seminorm_sq(w, k, m, domain).total + x_seminorm_sq(w, k, m, domain).total;
        const ExtendedNorm h = hk_norm_sq(w, k, m, domain).total;
        const ExtendedNorm c = c_norm_sq(w, k, m, domain).total;
        if (!perp.is_finite() || !wx.is_finite() || !h.is_finite() || !c.is_finite() ||
            (is_zero_value(perp) && is_zero_value(wx))) {
          ++cell.skipped;
          continue;
        }
        ++cell.accepted;
        if (!wx.same_value(perp)) cell.seminorm_exactly_one = false;
        const double rs = ratio(wx, perp);
        const double rf = ratio(c, h);
        cell.seminorm_min = std::min(cell.seminorm_min, rs);
        cell.seminorm_max = std::max(cell.seminorm_max, rs);
        cell.full_min = std::min(cell.full_min, rf);
        cell.full_max = std::max(cell.full_max, rf);
      }
      if (cell.accepted == 0)
        throw std::runtime_error("equivalence_sweep: every draw skipped for m=" + std::to_string(m) +
                                 ", k=" + std::to_string(k) + ", eps=" + eps.get_str());
      result.seminorm_min = std::min(result.seminorm_min, cell.seminorm_min);
      result.seminorm_max = std::max(result.seminorm_max, cell.seminorm_max);
      result.full_min = std::min(result.full_min, cell.full_min);
      result.full_max = std::max(result.full_max, cell.full_max);
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

ComparisonTable bc_comparison(int k, int m, int j, const MeridianDomain& family, const std::vector<Rational>& eps_list) {
  if (!trace_set(k, m).contains(j))
    throw std::invalid_argument("j=" + std::to_string(j) + " is not in the trace set N_{k,m}");
  ComparisonTable table;
  table.k = k;
  table.m = m;
  table.j = j;
  const RealFun w = RealFun::r(j);
  const MeridianDomain axis = family.with_r_min(Rational(0));
  table.b_on_axis = b_norm_sq(w, k, m, axis).total;
  table.c_on_axis = c_norm_sq(w, k, m, axis).total;
  table.b_form = table.b_on_axis.form();
  table.c_form = table.c_on_axis.form();
  table.b_bounded = table.b_form.is_bounded();
  table.c_bounded = table.c_form.is_bounded();
  for (const auto& eps : eps_list) {
    if (sgn(eps) <= 0) throw std::invalid_argument("eps values must be positive");
    const MeridianDomain d = family.with_r_min(eps);
    table.rows.push_back({eps, ExtendedNorm(table.b_form, d), ExtendedNorm(table.c_form, d)});
  }
  return table;
}

}  // namespace axinorm
