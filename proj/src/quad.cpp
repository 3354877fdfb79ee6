#include "axinorm/quad.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

namespace axinorm {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre gl{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  auto legendre = [n](double x) {
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= n; ++j) {
      double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    // P_n(x) and P_n'(x)
    double pn = n == 0 ? 1.0 : p1;
    double pn1 = n == 0 ? 0.0 : p0;
    return std::pair{pn, n * (x * pn - pn1) / (x * x - 1.0)};
  };
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      auto [p, dp] = legendre(x);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    auto [p, dp] = legendre(x);
    (void)p;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendre>(compute_gauss_legendre(n));
  return *slot;
}

std::shared_ptr<const QuadratureRule> make_rule(const MeridianDomain& domain, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::string>, std::shared_ptr<const QuadratureRule>> cache;
  auto key = std::pair{n, domain.to_string()};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const GaussLegendre& gl = gauss_legendre(n);
  const double a = domain.r_min().get_d();
  const double b = domain.r_max().get_d();
  Eigen::ArrayXd r = 0.5 * (b + a) + 0.5 * (b - a) * gl.nodes.array();
  Eigen::ArrayXd wr = 0.5 * (b - a) * gl.weights.array() * r * (2.0 * std::numbers::pi);

  auto rule = std::make_shared<QuadratureRule>();
  rule->order = n;
  if (const auto& zi = domain.z_interval()) {
    const double c = zi->lo.get_d();
    const double d = zi->hi.get_d();
    Eigen::ArrayXd z = 0.5 * (d + c) + 0.5 * (d - c) * gl.nodes.array();
    Eigen::ArrayXd wz = 0.5 * (d - c) * gl.weights.array();
    rule->r.resize(n * n);
    rule->z.resize(n * n);
    rule->weight.resize(n * n);
    for (int i = 0; i < n; ++i) {
      rule->r.segment(i * n, n) = r;
      rule->z.segment(i * n, n).setConstant(z[i]);
      rule->weight.segment(i * n, n) = wr * wz[i];
    }
  } else {
    rule->r = r;
    rule->z = Eigen::ArrayXd::Zero(n);
    rule->weight = wr;
  }
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(rule)).first->second;
}

double l21_norm_sq_quad(const RealFun& f, const MeridianDomain& domain, int n) {
  auto rule = make_rule(domain, n);
  Eigen::ArrayXd values = evaluate(f, rule->r, rule->z);
  if (!values.allFinite()) throw std::domain_error("non-finite sample in l21_norm_sq_quad");
  return (rule->weight * values.square()).sum();
}

}  // namespace axinorm
