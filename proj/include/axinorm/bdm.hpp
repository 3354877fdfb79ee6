#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axinorm/domain.hpp"
#include "axinorm/expr.hpp"
#include "axinorm/sobolev.hpp"

namespace axinorm {

/// Trace of d_r^j w on the axis, as a polynomial in z (r exponents all 0).
/// Empty when the domain does not reach the axis.
std::optional<RealFun> trace_dr(const RealFun& w, int j, const MeridianDomain& domain);

/// Per j in {0..m-2}: the axis trace of d_r^j w.
struct TraceProfile {
  std::vector<std::optional<RealFun>> traces;
};

TraceProfile trace_profile(const RealFun& w, int m, const MeridianDomain& domain);

struct Membership {
  bool in_space = false;
  /// Violated conditions, labelled "Z^k trace j", "T^m_1 trace j",
  /// "T^m_1bullet trace j", "bullet weight", "H^m_1 finiteness",
  /// "V^m_1 finiteness".
  std::vector<std::string> witness;
};

/// Trace-based description of H^m_(k):
///   |k| >= m           : V^m_1
///   |k| <= m-1, m-k odd : Z^k cap T^m_1
///   |k| <= m-1, m-k even: Z^k cap T^m_1bullet
/// On domains away from the axis only H^m_1 finiteness is checked.
Membership membership(const RealFun& w, int k, int m, const MeridianDomain& domain);

/// |k| >= m: |w|^2_{H^m_1} + |(k/r)^m w|^2; otherwise H^m_1 (m-k odd) or
/// H^m_1bullet (m-k even).
NormReport b_norm_sq(const RealFun& w, int k, int m, const MeridianDomain& domain);

}  // namespace axinorm
