#include "axinorm/bdm.hpp"

#include <cstdlib>
#include <stdexcept>

namespace axinorm {

namespace {

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool trace_vanishes(const RealFun& w, int j, const MeridianDomain& domain) {
  auto t = trace_dr(w, j, domain);
  return !t || t->is_zero();
}

}  // namespace

std::optional<RealFun> trace_dr(const RealFun& w, int j, const MeridianDomain& domain) {
  if (j < 0) throw std::invalid_argument("trace_dr: negative order");
  if (!domain.touches_axis()) return std::nullopt;
  std::vector<Monomial<Rational>> out;
  const Rational scale = factorial(j);
  for (const auto& t : w)
    if (t.r_exp == j) out.push_back({t.coeff * scale, 0, t.z_exp});
  return RealFun(std::move(out));
}

TraceProfile trace_profile(const RealFun& w, int m, const MeridianDomain& domain) {
  TraceProfile p;
  for (int j = 0; j <= m - 2; ++j) p.traces.push_back(trace_dr(w, j, domain));
  return p;
}

Membership membership(const RealFun& w, int k, int m, const MeridianDomain& domain) {
  Membership out;
  const int ak = std::abs(k);
  if (!domain.touches_axis()) {
    if (!h1_norm_sq(w, m, domain).total.is_finite()) out.witness.push_back("H^m_1 finiteness");
    out.in_space = out.witness.empty();
    return out;
  }
  if (ak >= m) {
    if (!v1_norm_sq(w, m, domain).total.is_finite()) out.witness.push_back("V^m_1 finiteness");
    out.in_space = out.witness.empty();
    return out;
  }
  if (!h1_norm_sq(w, m, domain).total.is_finite()) out.witness.push_back("H^m_1 finiteness");
  for (int j = 0; j < ak; ++j)
    if (!trace_vanishes(w, j, domain)) out.witness.push_back("Z^k trace " + std::to_string(j));
  if ((m - ak) % 2 != 0) {
    for (int l = 1; l <= m / 2; ++l)
      if (!trace_vanishes(w, m - 2 * l, domain)) out.witness.push_back("T^m_1 trace " + std::to_string(m - 2 * l));
  } else {
    const RealFun weighted = mul_r_pow(d_dr(w, m - 1), -1);
    if (!l21_norm_sq(weighted, domain).is_finite()) out.witness.push_back("bullet weight");
    for (int l = 1; l <= (m - 1) / 2; ++l)
      if (!trace_vanishes(w, m - 1 - 2 * l, domain))
        out.witness.push_back("T^m_1bullet trace " + std::to_string(m - 1 - 2 * l));
  }
  out.in_space = out.witness.empty();
  return out;
}

NormReport b_norm_sq(const RealFun& w, int k, int m, const MeridianDomain& domain) {
  const int ak = std::abs(k);
  if (ak >= m) {
    NormReport report = h1_norm_sq(w, m, domain);
    const RealFun weighted = mul_r_pow(w, -m) * pow(Rational(k), m);
    report.add("|(k/r)^" + std::to_string(m) + " w|^2", l21_norm_sq(weighted, domain));
    return report;
  }
  if ((m - ak) % 2 != 0) return h1_norm_sq(w, m, domain);
  return h1_bullet_norm_sq(w, m, domain);
}

}  // namespace axinorm
