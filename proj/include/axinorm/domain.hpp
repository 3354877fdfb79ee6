#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "axinorm/expr.hpp"
#include "axinorm/scalar.hpp"

namespace axinorm {

struct ZInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const ZInterval&, const ZInterval&) = default;
};

/// Meridian domain (eps, R) x (z0, z1), or the interval (eps, R) for the
/// planar (disc/annulus) case. eps = 0 means the domain touches the axis.
class MeridianDomain {
 public:
  static MeridianDomain rectangle(Rational eps, Rational r_max, Rational z0, Rational z1);
  static MeridianDomain interval(Rational eps, Rational r_max);

  const Rational& r_min() const { return r_min_; }
  const Rational& r_max() const { return r_max_; }
  const std::optional<ZInterval>& z_interval() const { return z_; }

  bool touches_axis() const { return sgn(r_min_) == 0; }
  bool is_planar() const { return !z_.has_value(); }

  /// Same R and z-interval, different inner radius.
  MeridianDomain with_r_min(Rational eps) const;

  /// "rect:eps,R,z0,z1" or "interval:eps,R".
  std::string to_string() const;

  friend bool operator==(const MeridianDomain&, const MeridianDomain&) = default;

 private:
  MeridianDomain(Rational eps, Rational r_max, std::optional<ZInterval> z);

  Rational r_min_;
  Rational r_max_;
  std::optional<ZInterval> z_;
};

/// Reads the CLI domain literal. Throws std::invalid_argument.
MeridianDomain parse_domain(std::string_view literal);

/// pi * ( sum_e c_e eps^e + log_coeff * ln(R/eps) ): the closed form of an
/// L^2_1 integral over the family Omega_eps with R and the z-interval fixed.
struct EpsForm {
  std::map<int, Rational> powers;
  Rational log_coeff;

  EpsForm& operator+=(const EpsForm& o);
  EpsForm scaled(const Rational& c) const;

  bool is_zero() const { return powers.empty() && sgn(log_coeff) == 0; }
  /// No negative power of eps and no log term.
  bool is_bounded() const;
  /// Most negative eps power with a nonzero coefficient, if any.
  std::optional<int> leading_negative_power() const;
  /// Coefficient of eps^e.
  Rational coeff(int e) const;

  friend bool operator==(const EpsForm&, const EpsForm&) = default;
};

std::string to_string(const EpsForm& form);

/// Value of an L^2_1-type integral on one concrete domain. Carries the full
/// eps-form so callers can reason about eps -> 0 without refitting.
///
/// On eps > 0 domains every value is Finite. On eps = 0 a form with a
/// negative eps power is Infinite, a form whose only singular part is the
/// log term is LogDivergentAtAxis, and otherwise the value is the eps^0
/// coefficient. Inner products share this type and may be negative.
class ExtendedNorm {
 public:
  enum class Kind { finite, log_divergent, infinite };

  /// Zero, not yet bound to a domain.
  ExtendedNorm() = default;
  ExtendedNorm(EpsForm form, const MeridianDomain& domain);

  Kind kind() const;
  bool is_finite() const { return kind() == Kind::finite; }
  bool is_infinite() const { return !is_finite(); }

  const EpsForm& form() const { return form_; }
  const std::optional<Rational>& eps() const { return eps_; }
  const std::optional<Rational>& r_max() const { return r_max_; }

  /// Finite value = pi * (pi_coeff() + log_coeff() * ln(log_arg())).
  Rational pi_coeff() const;
  Rational log_coeff() const;
  Rational log_arg() const;
  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }

  /// "17/6*pi", "pi*(3/2 + 2*ln(10))", "+inf", "log-div".
  std::string exact_string() const;

  ExtendedNorm& operator+=(const ExtendedNorm& o);
  friend ExtendedNorm operator+(ExtendedNorm a, const ExtendedNorm& b) { return a += b; }
  ExtendedNorm scaled(const Rational& c) const;

  /// Same domain anchor and identical eps-form.
  friend bool operator==(const ExtendedNorm& a, const ExtendedNorm& b);

  /// Exact equality of the values on the bound domain (finite values only).
  bool same_value(const ExtendedNorm& o) const;

 private:
  EpsForm form_;
  std::optional<Rational> eps_;
  std::optional<Rational> r_max_;
};

/// 2 pi int f g r dr dz (planar: 2 pi int f g r dr), exact.
EpsForm l21_inner_form(const RealFun& f, const RealFun& g, const MeridianDomain& domain);

ExtendedNorm l21_norm_sq(const RealFun& f, const MeridianDomain& domain);
ExtendedNorm l21_inner(const RealFun& f, const RealFun& g, const MeridianDomain& domain);

/// |f|^2 = |Re f|^2 + |Im f|^2
ExtendedNorm l21_norm_sq(const ComplexFun& f, const MeridianDomain& domain);

}  // namespace axinorm
