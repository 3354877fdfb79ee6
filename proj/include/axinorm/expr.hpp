#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "axinorm/scalar.hpp"

namespace axinorm {

/// c * r^r_exp * z^z_exp. r_exp may be negative (weight operators produce it).
template <class Scalar>
struct Monomial {
  Scalar coeff{};
  int r_exp = 0;
  int z_exp = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Finite sum of monomials in (r, z) kept in canonical form: terms sorted
/// lexicographically on (r_exp, z_exp), at most one term per exponent pair,
/// no zero coefficients.
template <class Scalar>
class SymFun {
 public:
  using scalar_type = Scalar;
  using term_type = Monomial<Scalar>;

  SymFun() = default;
  SymFun(const Scalar& constant) {
    if (!detail::is_zero(constant)) terms_.push_back({constant, 0, 0});
  }
  explicit SymFun(std::vector<term_type> terms) : terms_(std::move(terms)) { canonicalize(); }

  static SymFun monomial(const Scalar& c, int r_exp, int z_exp = 0) {
    if (z_exp < 0) throw std::invalid_argument("negative z exponent");
    SymFun f;
    if (!detail::is_zero(c)) f.terms_.push_back({c, r_exp, z_exp});
    return f;
  }
  static SymFun r(int exponent = 1) { return monomial(Scalar(1), exponent, 0); }
  static SymFun z(int exponent = 1) { return monomial(Scalar(1), 0, exponent); }

  const std::vector<term_type>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(int r_exp, int z_exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{r_exp, z_exp},
                               [](const term_type& t, const std::pair<int, int>& key) {
                                 return std::pair{t.r_exp, t.z_exp} < key;
                               });
    if (it != terms_.end() && it->r_exp == r_exp && it->z_exp == z_exp) return it->coeff;
    return Scalar(0);
  }

  /// Smallest r exponent; 0 for the zero function.
  int min_r_exp() const { return terms_.empty() ? 0 : terms_.front().r_exp; }
  int max_r_exp() const { return terms_.empty() ? 0 : terms_.back().r_exp; }
  int max_z_exp() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.z_exp);
    return m;
  }

  SymFun& operator+=(const SymFun& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    canonicalize();
    return *this;
  }
  SymFun& operator-=(const SymFun& o) { return *this += -o; }
  SymFun& operator*=(const Scalar& c) {
    if (detail::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coeff = t.coeff * c;
    return *this;
  }
  SymFun& operator*=(const SymFun& o) { return *this = *this * o; }

  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
  friend SymFun operator-(SymFun a) {
    for (auto& t : a.terms_) t.coeff = -t.coeff;
    return a;
  }
  friend SymFun operator*(SymFun a, const Scalar& c) { return a *= c; }
  friend SymFun operator*(const Scalar& c, SymFun a) { return a *= c; }
  friend SymFun operator*(const SymFun& a, const SymFun& b) {
    std::vector<term_type> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.coeff * t.coeff, s.r_exp + t.r_exp, s.z_exp + t.z_exp});
    return SymFun(std::move(out));
  }

  friend bool operator==(const SymFun&, const SymFun&) = default;

  /// Strict weak order on canonical forms (usable as a map key).
  friend bool operator<(const SymFun& a, const SymFun& b)
    requires requires(const Scalar& x, const Scalar& y) { x < y; }
  {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const term_type& s, const term_type& t) {
          if (s.r_exp != t.r_exp) return s.r_exp < t.r_exp;
          if (s.z_exp != t.z_exp) return s.z_exp < t.z_exp;
          return s.coeff < t.coeff;
        });
  }

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const term_type& s, const term_type& t) {
      return std::pair{s.r_exp, s.z_exp} < std::pair{t.r_exp, t.z_exp};
    });
    std::vector<term_type> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().r_exp == t.r_exp && merged.back().z_exp == t.z_exp)
        merged.back().coeff = merged.back().coeff + t.coeff;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const term_type& t) { return detail::is_zero(t.coeff); });
    terms_ = std::move(merged);
  }

  std::vector<term_type> terms_;
};

using RealFun = SymFun<Rational>;
using ComplexFun = SymFun<GaussRational>;
using SampledFun = SymFun<std::complex<double>>;

// ---------------------------------------------------------------------------
// Differential and weight operators. All are exact and linear.

template <class Scalar>
SymFun<Scalar> d_dr(const SymFun<Scalar>& f) {
  std::vector<Monomial<Scalar>> out;
  out.reserve(f.size());
  for (const auto& t : f)
    if (t.r_exp != 0) out.push_back({t.coeff * Scalar(t.r_exp), t.r_exp - 1, t.z_exp});
  return SymFun<Scalar>(std::move(out));
}

template <class Scalar>
SymFun<Scalar> d_dz(const SymFun<Scalar>& f) {
  std::vector<Monomial<Scalar>> out;
  out.reserve(f.size());
  for (const auto& t : f)
    if (t.z_exp != 0) out.push_back({t.coeff * Scalar(t.z_exp), t.r_exp, t.z_exp - 1});
  return SymFun<Scalar>(std::move(out));
}

template <class Scalar>
SymFun<Scalar> d_dr(SymFun<Scalar> f, int order) {
  for (int i = 0; i < order; ++i) f = d_dr(f);
  return f;
}

template <class Scalar>
SymFun<Scalar> d_dz(SymFun<Scalar> f, int order) {
  for (int i = 0; i < order; ++i) f = d_dz(f);
  return f;
}

/// r^p * f
template <class Scalar>
SymFun<Scalar> mul_r_pow(const SymFun<Scalar>& f, int p) {
  std::vector<Monomial<Scalar>> out(f.begin(), f.end());
  for (auto& t : out) t.r_exp += p;
  return SymFun<Scalar>(std::move(out));
}

/// (1/r d/dr)^ell f
template <class Scalar>
SymFun<Scalar> apply_r_dr(SymFun<Scalar> f, int ell) {
  if (ell < 0) throw std::invalid_argument("apply_r_dr: negative order");
  for (int i = 0; i < ell; ++i) f = mul_r_pow(d_dr(f), -1);
  return f;
}

template <class Scalar>
std::complex<double> evaluate(const SymFun<Scalar>& f, double r, double z) {
  std::complex<double> acc = 0.0;
  for (const auto& t : f) acc += detail::to_complex(t.coeff) * std::pow(r, t.r_exp) * std::pow(z, t.z_exp);
  return acc;
}

/// Real-valued evaluation over node arrays.
inline Eigen::ArrayXd evaluate(const RealFun& f, const Eigen::ArrayXd& r, const Eigen::ArrayXd& z) {
  Eigen::ArrayXd out = Eigen::ArrayXd::Zero(r.size());
  for (const auto& t : f) out += t.coeff.get_d() * r.pow(t.r_exp) * z.pow(t.z_exp);
  return out;
}

inline RealFun real_part(const ComplexFun& f) {
  std::vector<Monomial<Rational>> out;
  for (const auto& t : f) out.push_back({t.coeff.re, t.r_exp, t.z_exp});
  return RealFun(std::move(out));
}

inline RealFun imag_part(const ComplexFun& f) {
  std::vector<Monomial<Rational>> out;
  for (const auto& t : f) out.push_back({t.coeff.im, t.r_exp, t.z_exp});
  return RealFun(std::move(out));
}

inline ComplexFun to_complex(const RealFun& re, const RealFun& im = {}) {
  std::vector<Monomial<GaussRational>> out;
  for (const auto& t : re) out.push_back({GaussRational(t.coeff), t.r_exp, t.z_exp});
  for (const auto& t : im) out.push_back({GaussRational(Rational(0), t.coeff), t.r_exp, t.z_exp});
  return ComplexFun(std::move(out));
}

template <class Scalar>
SampledFun to_sampled(const SymFun<Scalar>& f) {
  std::vector<Monomial<std::complex<double>>> out;
  for (const auto& t : f) out.push_back({detail::to_complex(t.coeff), t.r_exp, t.z_exp});
  return SampledFun(std::move(out));
}

// ---------------------------------------------------------------------------
// Text form.

/// Thrown by parse() with the byte offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr  := sign? term (("+"|"-") term)*
///   term  := coeff? ("*"? atom)*        (non-empty)
///   atom  := "r" ("^" int)? | "z" ("^" nat)?
///   coeff := rational | decimal
/// User input may not carry negative r exponents.
RealFun parse(std::string_view text);

/// Same grammar, with the extra atom "i" (imaginary unit) allowed as a factor.
ComplexFun parse_complex(std::string_view text);

/// Canonical text form, ascending (r_exp, z_exp); "0" for the zero function.
/// Negative r exponents print as r^-n and are accepted back only by
/// parse_internal().
template <class Scalar>
std::string to_string(const SymFun<Scalar>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f) {
    std::string c = detail::to_string(t.coeff);
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    bool unit = c == "1";
    std::string body;
    if (t.r_exp != 0) body += t.r_exp == 1 ? "r" : "r^" + std::to_string(t.r_exp);
    if (t.z_exp != 0) body += std::string(body.empty() ? "" : "*") + (t.z_exp == 1 ? "z" : "z^" + std::to_string(t.z_exp));
    if (body.empty())
      out += c;
    else if (unit)
      out += body;
    else
      out += c + "*" + body;
  }
  return out;
}

/// parse() without the non-negative r exponent restriction; used to read
/// back printed intermediate functions.
RealFun parse_internal(std::string_view text);

}  // namespace axinorm
