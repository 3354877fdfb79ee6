#pragma once

#include <complex>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axinorm/domain.hpp"
#include "axinorm/expr.hpp"

namespace axinorm {

/// Finite angular Fourier sum  u = sum_k u^k(r, z) e^{i k theta}.
/// Zero coefficients are never stored.
template <class Scalar>
class AxiFun {
 public:
  using coefficient_type = SymFun<Scalar>;

  AxiFun() = default;
  AxiFun(std::initializer_list<std::pair<const int, coefficient_type>> modes) {
    for (const auto& [k, f] : modes) set_mode(k, f);
  }

  void set_mode(int k, coefficient_type f) {
    if (f.is_zero())
      modes_.erase(k);
    else
      modes_[k] = std::move(f);
  }
  void add_to_mode(int k, const coefficient_type& f) { set_mode(k, mode(k) + f); }

  coefficient_type mode(int k) const {
    auto it = modes_.find(k);
    return it == modes_.end() ? coefficient_type{} : it->second;
  }
  const std::map<int, coefficient_type>& modes() const { return modes_; }
  bool is_zero() const { return modes_.empty(); }

  int max_abs_mode() const {
    int m = 0;
    for (const auto& [k, f] : modes_) m = std::max(m, std::abs(k));
    return m;
  }

  AxiFun& operator+=(const AxiFun& o) {
    for (const auto& [k, f] : o.modes_) add_to_mode(k, f);
    return *this;
  }
  friend AxiFun operator+(AxiFun a, const AxiFun& b) { return a += b; }
  friend bool operator==(const AxiFun&, const AxiFun&) = default;

 private:
  std::map<int, coefficient_type> modes_;
};

using RealAxiFun = AxiFun<Rational>;
using ComplexAxiFun = AxiFun<GaussRational>;

/// F^k: keep mode k only.
template <class Scalar>
AxiFun<Scalar> project(const AxiFun<Scalar>& u, int k) {
  AxiFun<Scalar> out;
  out.set_mode(k, u.mode(k));
  return out;
}

/// u is real-valued iff u^{-k} is the conjugate of u^k for every k.
inline bool is_real_valued(const RealAxiFun& u) {
  for (const auto& [k, f] : u.modes())
    if (u.mode(-k) != f) return false;
  return true;
}

bool is_real_valued(const ComplexAxiFun& u);

/// Theta-grid size that keeps the trapezoid rule exact with margin.
template <class Scalar>
int default_theta_grid(const AxiFun<Scalar>& u) {
  return 4 * (u.max_abs_mode() + 1);
}

/// u(., theta_j) for theta_j = 2 pi j / M, j = 0..M-1.
template <class Scalar>
std::vector<SampledFun> sample_theta(const AxiFun<Scalar>& u, int grid) {
  std::vector<SampledFun> out(static_cast<std::size_t>(grid));
  for (int j = 0; j < grid; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / grid;
    for (const auto& [k, f] : u.modes()) out[j] += to_sampled(f) * std::polar(1.0, k * theta);
  }
  return out;
}

struct SampledProjection {
  SampledFun coefficient;
  /// Set when the grid cannot resolve mode k (M <= 2|k|).
  std::optional<std::string> warning;
};

/// Trapezoid rule for u^k = (1/2pi) int u(theta) e^{-ik theta} d theta on a
/// uniform grid; exact for trigonometric polynomials of degree < M/2.
SampledProjection project_sampled(std::span<const SampledFun> samples, int k);

struct ParsevalPair {
  ExtendedNorm lhs;  ///< sum_k |u^k|^2_{L^2_1}
  ExtendedNorm rhs;  ///< |sum_k F^k u|^2 assembled from the bilinear expansion
};

/// L^2 decomposition of a finite real-coefficient Fourier sum.
ParsevalPair parseval_l2(const RealAxiFun& u, const MeridianDomain& domain);
ParsevalPair parseval_l2(const ComplexAxiFun& u, const MeridianDomain& domain);

/// (1/2pi) int_0^{2pi} e^{i k theta} d theta, exact.
inline int angular_mean(int k) { return k == 0 ? 1 : 0; }

}  // namespace axinorm
