#include "axinorm/fourier.hpp"

#include <cmath>

namespace axinorm {

bool is_real_valued(const ComplexAxiFun& u) {
  for (const auto& [k, f] : u.modes()) {
    std::vector<Monomial<GaussRational>> conj;
    for (const auto& t : f) conj.push_back({t.coeff.conj(), t.r_exp, t.z_exp});
    if (u.mode(-k) != ComplexFun(std::move(conj))) return false;
  }
  return true;
}

SampledProjection project_sampled(std::span<const SampledFun> samples, int k) {
  const int grid = static_cast<int>(samples.size());
  if (grid == 0) throw std::invalid_argument("project_sampled: empty theta grid");
  SampledProjection out;
  for (int j = 0; j < grid; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / grid;
    out.coefficient += samples[j] * std::polar(1.0 / grid, -k * theta);
  }
  if (grid <= 2 * std::abs(k))
    out.warning = "theta grid of size " + std::to_string(grid) + " aliases mode " + std::to_string(k);
  return out;
}

namespace {

template <class Scalar>
ParsevalPair parseval_impl(const AxiFun<Scalar>& u, const MeridianDomain& domain) {
  ParsevalPair out;
  out.lhs = ExtendedNorm(EpsForm{}, domain);
  out.rhs = ExtendedNorm(EpsForm{}, domain);
  for (const auto& [k, f] : u.modes()) out.lhs += l21_norm_sq(f, domain);

  std::vector<AxiFun<Scalar>> pieces;
  for (const auto& [k, f] : u.modes()) pieces.push_back(project(u, k));
  for (const auto& p : pieces) {
    for (const auto& q : pieces) {
      const auto& [kp, fp] = *p.modes().begin();
      const auto& [kq, fq] = *q.modes().begin();
      if (angular_mean(kp - kq) == 0) continue;
      if constexpr (std::is_same_v<Scalar, Rational>) {
        out.rhs += l21_inner(fp, fq, domain);
      } else {
        // Re <f, g> for complex coefficients
        out.rhs += l21_inner(real_part(fp), real_part(fq), domain);
        out.rhs += l21_inner(imag_part(fp), imag_part(fq), domain);
      }
    }
  }
  return out;
}

}  // namespace

ParsevalPair parseval_l2(const RealAxiFun& u, const MeridianDomain& domain) {
  return parseval_impl(u, domain);
}

ParsevalPair parseval_l2(const ComplexAxiFun& u, const MeridianDomain& domain) {
  return parseval_impl(u, domain);
}

}  // namespace axinorm
