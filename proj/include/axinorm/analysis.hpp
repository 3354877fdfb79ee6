#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "axinorm/domain.hpp"
#include "axinorm/expr.hpp"
#include "axinorm/sobolev.hpp"

namespace axinorm {

/// d_r^{m-l} (1/r)^l r^n = P^W r^{n-m},  P^W = prod_{p=l}^{m-1} (n - p).
std::int64_t pw_constant(int m, int n, int ell);

/// d_r^{m-|k|-2l} (1/r d_r)^l (1/r)^{|k|} r^n = P^X r^{n-m},
/// P^X = prod_{p=|k|+2l}^{m-1} (n-p) * prod_{q=0}^{l-1} (n-|k|-2q).
std::int64_t px_constant(int m, int k, int n, int ell);

/// True iff the W and X seminorms of r^n stay bounded as eps -> 0:
/// n >= m, or n = |k| + 2q for some natural q.
bool boundedness_verdict(int k, int m, int n);

/// Radial derivative orders whose axis traces vanish on C^m_(k)(Omega_0):
/// {0..|k|-1} cup {|k|+1+2l : |k|+1+2l < m-1}.
std::set<int> trace_set(int k, int m);

enum class Regime { bounded, log, power };
std::string to_string(Regime regime);

/// Regime of an eps-form as eps -> 0 (read off symbolically).
Regime classify(const EpsForm& form);

struct AsymptoticsRow {
  Rational eps;
  ExtendedNorm value;
};

struct AsymptoticsReport {
  int n = 0;
  int m = 0;
  EpsForm form;  ///< |r^{n-m}|^2 over Omega_eps, symbolic in eps
  Regime regime = Regime::bounded;
  /// 2(n-m+1) in the power regime.
  std::optional<int> exponent;
  std::vector<AsymptoticsRow> rows;
};

/// |r^{n-m}|^2_{L^2_1(Omega_eps)} for Omega_eps = family.with_r_min(eps).
/// eps_list must be strictly decreasing and positive.
AsymptoticsReport eps_asymptotics(int n, int m, const MeridianDomain& family, const std::vector<Rational>& eps_list);

struct EnsembleConfig {
  int size = 64;
  std::uint64_t seed = 20240611;
  int max_terms = 4;
  int max_z_exp = 3;
  int coeff_bound = 5;
  /// r exponents range over admissible n <= m + extra_r_exp.
  int extra_r_exp = 4;
};

/// Random monomial sums whose r exponents satisfy boundedness_verdict(k, m, .).
/// Planar families get no z dependence. Deterministic in (config, m, k).
std::vector<RealFun> admissible_ensemble(int m, int k, bool planar, const EnsembleConfig& config);

struct SweepCell {
  int k = 0;
  Rational eps;
  double seminorm_min = 0;  ///< (W+X)/H_perp
  double seminorm_max = 0;
  double full_min = 0;      ///< C/H
  double full_max = 0;
  int accepted = 0;
  int skipped = 0;
  /// Every accepted draw had exactly equal seminorm sides.
  bool seminorm_exactly_one = true;
};

struct SweepResult {
  int m = 0;
  EnsembleConfig ensemble;
  std::vector<SweepCell> cells;
  double seminorm_min = 0;
  double seminorm_max = 0;
  double full_min = 0;
  double full_max = 0;
};

/// Empirical envelope of the equivalence ratios over k in k_values and the
/// inner radii eps_list, on family.with_r_min(eps). Throws std::runtime_error
/// if every draw of some cell is skipped.
SweepResult equivalence_sweep(int m, const std::vector<int>& k_values, const std::vector<Rational>& eps_list,
                              const MeridianDomain& family, const EnsembleConfig& config);

struct ComparisonRow {
  Rational eps;
  ExtendedNorm b_norm;
  ExtendedNorm c_norm;
};

struct ComparisonTable {
  int k = 0;
  int m = 0;
  int j = 0;
  EpsForm b_form;
  EpsForm c_form;
  bool b_bounded = false;  ///< b_form has no negative power or log of eps
  bool c_bounded = false;
  ExtendedNorm b_on_axis;  ///< on the eps = 0 domain
  ExtendedNorm c_on_axis;
  std::vector<ComparisonRow> rows;
};

/// B- and C-norms of r^j for j in trace_set(k, m) as the hole closes.
/// Throws std::invalid_argument if j is not in the trace set.
ComparisonTable bc_comparison(int k, int m, int j, const MeridianDomain& family, const std::vector<Rational>& eps_list);

}  // namespace axinorm
