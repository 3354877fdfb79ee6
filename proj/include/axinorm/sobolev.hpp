#pragma once

#include <string>
#include <utility>
#include <vector>

#include "axinorm/domain.hpp"
#include "axinorm/expr.hpp"

namespace axinorm {

/// Largest Sobolev order accepted; the zeta recursion has 2^m leaves.
inline constexpr int kMaxOrder = 12;

struct NormTerm {
  std::string label;
  ExtendedNorm value;
};

/// A squared norm together with every summand that produced it.
struct NormReport {
  ExtendedNorm total;
  std::vector<NormTerm> terms;

  void add(std::string label, ExtendedNorm value) {
    total += value;
    terms.push_back({std::move(label), std::move(value)});
  }
  /// Label of the first divergent term, empty when the total is finite.
  std::string first_divergent() const;
};

// All routines below are exact. Complex overloads use |f|^2 = |Re f|^2 + |Im f|^2,
// valid because every operator involved has real coefficients.

/// |w|^2 in H^j_perp(k): the seminorm of e^{ik theta} w built from the
/// derivatives in x and y only, via
///   |w|_{j,k}^2 = 1/2 |(d_r + k/r) w|_{j-1,k-1}^2 + 1/2 |(d_r - k/r) w|_{j-1,k+1}^2.
ExtendedNorm h_perp_seminorm_sq(const RealFun& w, int k, int j, const MeridianDomain& domain);

/// |e^{ik theta} w|^2 in H^m of the rotated domain:
///   sum_{j<=m} sum_{i<=j} |d_z^{j-i} w|^2_{H^i_perp(k)}   (planar: sum_j |w|^2_{H^j_perp(k)})
NormReport hk_norm_sq(const RealFun& w, int k, int m, const MeridianDomain& domain);
NormReport hk_norm_sq(const ComplexFun& w, int k, int m, const MeridianDomain& domain);

/// sum_{l=0}^{min(|k|,m)} |d_r^{m-l} (|k|/r)^l w|^2, with (|k|/r)^0 = 1 for every k.
NormReport w_seminorm_sq(const RealFun& w, int k, int m, const MeridianDomain& domain);

/// sum_{l=1}^{floor((m-|k|)/2)} |d_r^{m-|k|-2l} (1/r d_r)^l (1/r)^{|k|} w|^2; empty when |k| >= m-1.
NormReport x_seminorm_sq(const RealFun& w, int k, int m, const MeridianDomain& domain);

/// Weighted norm uniformly equivalent to hk_norm_sq:
///   sum_{l=0}^{min(|k|,m)} |(|k|/r)^l w|^2_{H^{m-l}_1}
///   + sum_{l=1}^{floor((m-|k|)/2)} |(1/r d_r)^l (1/r)^{|k|} w|^2_{H^{m-|k|-2l}_1}
NormReport c_norm_sq(const RealFun& w, int k, int m, const MeridianDomain& domain);
NormReport c_norm_sq(const ComplexFun& w, int k, int m, const MeridianDomain& domain);

/// sum_{|alpha|<=m} |d^alpha w|^2 (planar: d_r only).
NormReport h1_norm_sq(const RealFun& w, int m, const MeridianDomain& domain);
NormReport h1_norm_sq(const ComplexFun& w, int m, const MeridianDomain& domain);

/// h1_norm_sq + |(1/r) d_r^{m-1} w|^2. Requires m >= 1.
NormReport h1_bullet_norm_sq(const RealFun& w, int m, const MeridianDomain& domain);

/// sum_{|alpha|<=m} |(1/r)^{m-|alpha|} d^alpha w|^2 (Kondrat'ev type).
NormReport v1_norm_sq(const RealFun& w, int m, const MeridianDomain& domain);

}  // namespace axinorm
