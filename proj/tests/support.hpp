#pragma once

#include <random>

#include <doctest.h>

#include "axinorm/domain.hpp"
#include "axinorm/expr.hpp"

namespace testing {

using namespace axinorm;

inline MeridianDomain unit_square() { return MeridianDomain::rectangle(0, 1, 0, 1); }
inline MeridianDomain annulus(const Rational& eps) { return MeridianDomain::rectangle(eps, 1, 0, 1); }

/// Value of a finite norm in units of pi, for norms with no log part.
inline Rational pis(const ExtendedNorm& v) {
  REQUIRE(v.is_finite());
  REQUIRE(sgn(v.log_coeff()) == 0);
  return v.pi_coeff();
}

class RandomFun {
 public:
  explicit RandomFun(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int bound = 5) {
    Rational q(uniform(-bound * 4, bound * 4), uniform(1, 4));
    q.canonicalize();
    return q;
  }

  /// Monomial sum with r exponents in [r_lo, r_hi], z exponents in [0, z_hi].
  RealFun fun(int terms, int r_lo, int r_hi, int z_hi) {
    RealFun f;
    for (int t = 0; t < terms; ++t) f += RealFun::monomial(rational(), uniform(r_lo, r_hi), uniform(0, z_hi));
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing
