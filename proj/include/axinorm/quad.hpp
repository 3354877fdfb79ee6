#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <Eigen/Core>

#include "axinorm/domain.hpp"

namespace axinorm {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// N-point rule by Newton iteration on P_N; cached per N.
const GaussLegendre& gauss_legendre(int n);

/// Tensor rule on a meridian domain with the 2 pi r measure folded into the
/// weights. Planar domains carry z = 0 at every node.
struct QuadratureRule {
  Eigen::ArrayXd r;
  Eigen::ArrayXd z;
  Eigen::ArrayXd weight;
  int order = 0;
};

/// Cached per (N, domain).
std::shared_ptr<const QuadratureRule> make_rule(const MeridianDomain& domain, int n);

/// 2 pi int f r dr dz over the rule's nodes. Throws std::domain_error naming
/// the node when a sample is not finite.
template <class F>
double integrate(F&& f, const QuadratureRule& rule) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < rule.r.size(); ++i) {
    double v = f(rule.r[i], rule.z[i]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "non-finite integrand value " << v << " at r=" << rule.r[i] << ", z=" << rule.z[i];
      throw std::domain_error(msg.str());
    }
    acc += rule.weight[i] * v;
  }
  return acc;
}

template <class F>
double integrate(F&& f, const MeridianDomain& domain, int n) {
  return integrate(std::forward<F>(f), *make_rule(domain, n));
}

/// Quadrature value of |f|^2 in L^2_1, vectorized over the nodes.
double l21_norm_sq_quad(const RealFun& f, const MeridianDomain& domain, int n);

}  // namespace axinorm
