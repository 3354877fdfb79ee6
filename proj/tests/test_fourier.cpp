#include <doctest.h>

#include <cmath>
#include <numbers>

#include "axinorm/fourier.hpp"
#include "axinorm/quad.hpp"
#include "support.hpp"

using namespace axinorm;
using testing::annulus;
using testing::pis;
using testing::RandomFun;
using testing::unit_square;

namespace {

ComplexAxiFun random_sum(RandomFun& rnd, int modes) {
  ComplexAxiFun u;
  for (int i = 0; i < modes; ++i) {
    const int k = rnd.uniform(-6, 6);
    u.add_to_mode(k, to_complex(rnd.fun(2, 0, 4, 2), rnd.fun(2, 0, 4, 2)));
  }
  return u;
}

/// Independent 3D value of |u|^2: trapezoid in theta, Gauss in (r, z).
double sampled_norm_sq(const ComplexAxiFun& u, const MeridianDomain& d, int grid) {
  const auto samples = sample_theta(u, grid);
  double total = 0;
  for (const auto& s : samples) {
    total += integrate([&](double r, double z) { return std::norm(evaluate(s, r, z)); }, d, 12);
  }
  return total / grid;
}

}  // namespace

TEST_CASE("projection") {
  RealAxiFun u{{0, RealFun(1)}, {2, RealFun::r()}};
  CHECK(project(u, 2) == RealAxiFun{{2, RealFun::r()}});
  CHECK(project(project(u, 2), 3).is_zero());
  CHECK(project(project(u, 2), 2) == project(u, 2));
  RealAxiFun sum;
  for (int k = -3; k <= 3; ++k) sum += project(u, k);
  CHECK(sum == u);
  u.set_mode(5, RealFun{});
  CHECK(u.modes().size() == 2);
  u.add_to_mode(2, -RealFun::r());
  CHECK(u.modes().size() == 1);
}

TEST_CASE("real-valuedness") {
  CHECK(is_real_valued(RealAxiFun{{1, RealFun::r()}, {-1, RealFun::r()}}));
  CHECK_FALSE(is_real_valued(RealAxiFun{{1, RealFun::r()}}));
  ComplexAxiFun c{{1, parse_complex("r + i*r")}, {-1, parse_complex("r - i*r")}};
  CHECK(is_real_valued(c));
  c.set_mode(-1, parse_complex("r + i*r"));
  CHECK_FALSE(is_real_valued(c));
}

TEST_CASE("trapezoid projection of sampled sums") {
  const ComplexAxiFun e1{{1, to_complex(RealFun::r())}};
  const auto samples = sample_theta(e1, 8);
  const auto p1 = project_sampled(samples, 1);
  CHECK_FALSE(p1.warning);
  CHECK(std::abs(evaluate(p1.coefficient, 0.7, 0.3) - std::complex<double>(0.7)) < 1e-14);
  const auto p0 = project_sampled(samples, 0);
  CHECK(std::abs(evaluate(p0.coefficient, 0.7, 0.3)) < 1e-14);
  const auto one = sample_theta(ComplexAxiFun{{0, ComplexFun(GaussRational(1))}}, 4);
  CHECK(std::abs(evaluate(project_sampled(one, 0).coefficient, 0.2, 0.0) - 1.0) < 1e-15);
  CHECK(project_sampled(samples, 4).warning);
  CHECK_THROWS(project_sampled(std::span<const SampledFun>{}, 0));
}

TEST_CASE("sampling then projecting recovers every mode") {
  RandomFun rnd(17);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexAxiFun u = random_sum(rnd, 5);
    const auto samples = sample_theta(u, default_theta_grid(u));
    for (int k = -7; k <= 7; ++k) {
      const auto p = project_sampled(samples, k);
      CHECK_FALSE(p.warning);
      const auto expected = evaluate(u.mode(k), 0.6, 0.4);
      CHECK(std::abs(evaluate(p.coefficient, 0.6, 0.4) - expected) < 1e-12 * (1 + std::abs(expected)));
    }
  }
}

TEST_CASE("Parseval examples") {
  const auto d = unit_square();
  auto p = parseval_l2(RealAxiFun{{0, RealFun(1)}}, d);
  CHECK(pis(p.lhs) == 1);
  CHECK(p.lhs == p.rhs);
  p = parseval_l2(RealAxiFun{{1, RealFun::r()}, {-1, RealFun::r()}}, d);
  CHECK(pis(p.lhs) == 1);
  CHECK(p.lhs == p.rhs);
  p = parseval_l2(RealAxiFun{}, d);
  CHECK(pis(p.lhs) == 0);
  CHECK(pis(p.rhs) == 0);
}

TEST_CASE("Parseval against an independent 3D quadrature") {
  RandomFun rnd(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = trial % 2 ? unit_square() : annulus(Rational(1, 4));
    const ComplexAxiFun u = random_sum(rnd, 5);
    const auto p = parseval_l2(u, d);
    CHECK(p.lhs == p.rhs);
    const double numeric = sampled_norm_sq(u, d, default_theta_grid(u));
    CHECK(std::abs(numeric - p.lhs.to_double()) <= 1e-11 * std::max(1.0, p.lhs.to_double()));
  }
}

TEST_CASE("distinct modes are orthogonal after the angular integral") {
  CHECK(angular_mean(0) == 1);
  for (int k = -5; k <= 5; ++k)
    if (k != 0) CHECK(angular_mean(k) == 0);
}
