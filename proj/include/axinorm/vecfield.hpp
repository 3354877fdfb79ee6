#pragma once

#include <map>
#include <utility>
#include <vector>

#include "axinorm/analysis.hpp"
#include "axinorm/domain.hpp"
#include "axinorm/expr.hpp"
#include "axinorm/fourier.hpp"
#include "axinorm/sobolev.hpp"

namespace axinorm {

/// Radial and angular Fourier coefficients of a 2D vector field for one mode.
struct VecCoefficient {
  ComplexFun w_r;
  ComplexFun w_theta;

  bool is_zero() const { return w_r.is_zero() && w_theta.is_zero(); }
  VecCoefficient& operator+=(const VecCoefficient& o) {
    w_r += o.w_r;
    w_theta += o.w_theta;
    return *this;
  }
  friend VecCoefficient operator+(VecCoefficient a, const VecCoefficient& b) { return a += b; }
  friend bool operator==(const VecCoefficient&, const VecCoefficient&) = default;
};

/// (w_r + i w_theta, w_r - i w_theta).
std::pair<ComplexFun, ComplexFun> cartesian_link(const VecCoefficient& v);

/// |(u_r, u_theta) e^{ik theta}|^2 in H^m:
///   1/2 |w_r + i w_theta|^2_{H^m_(k+1)} + 1/2 |w_r - i w_theta|^2_{H^m_(k-1)}
NormReport vec_hk_norm_sq(const VecCoefficient& v, int k, int m, const MeridianDomain& domain);

/// Weighted vector norm:
///   |k| >= m+1   : C^m_(k) on both components
///   1 <= |k| <= m: C^m_(|k|-1) on both + |(1/r)^{|k|} (w_r + i sgn(k) w_theta)|^2_{H^{m-|k|}_1}
///   k = 0        : C^m_(1) on both
NormReport vec_c_norm_sq(const VecCoefficient& v, int k, int m, const MeridianDomain& domain);

/// A finite vector Fourier sum, mode -> coefficient.
using VecFourierSum = std::map<int, VecCoefficient>;

struct VecParsevalPair {
  ExtendedNorm lhs;  ///< sum_k vec_hk_norm_sq(u^k, k, m)
  ExtendedNorm rhs;  ///< |u_x|^2 + |u_y|^2 assembled from the Cartesian scalar modes
};

/// Cross-check of the scalar/vector identity: the Cartesian components are
/// rebuilt mode by mode from u_x +- i u_y and measured with the scalar norm.
VecParsevalPair vec_parseval(const VecFourierSum& u, int m, const MeridianDomain& domain);

struct VecSweepCell {
  int k = 0;
  Rational eps;
  double ratio_min = 0;  ///< vec_c / vec_h
  double ratio_max = 0;
  int accepted = 0;
  int skipped = 0;
};

struct VecSweepResult {
  int m = 0;
  std::vector<VecSweepCell> cells;
  double ratio_min = 0;
  double ratio_max = 0;
};

/// Draws w_r +- i w_theta from the scalar admissible ensembles of modes k+-1.
std::vector<VecCoefficient> vec_ensemble(int m, int k, bool planar, const EnsembleConfig& config);

VecSweepResult vec_equivalence_sweep(int m, const std::vector<int>& k_values, const std::vector<Rational>& eps_list,
                                     const MeridianDomain& family, const EnsembleConfig& config);

}  // namespace axinorm
