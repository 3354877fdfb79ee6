#pragma once

#include <complex>
#include <compare>
#include <string>

#include <gmpxx.h>

namespace axinorm {

/// Arbitrary precision rational; every exact computation in the library uses it.
using Rational = mpq_class;

/// Complex number with exact rational real and imaginary parts.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(int v) : re(v), im(0) {}
  GaussRational(const Rational& r) : re(r), im(0) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  GaussRational conj() const { return {re, -im}; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational a = re * o.re - im * o.im;
    Rational b = re * o.im + im * o.re;
    re = std::move(a);
    im = std::move(b);
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

namespace detail {

inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(const GaussRational& v) { return sgn(v.re) == 0 && sgn(v.im) == 0; }
inline bool is_zero(const std::complex<double>& v) { return v == std::complex<double>(0.0, 0.0); }
inline bool is_zero(double v) { return v == 0.0; }

inline std::complex<double> to_complex(const Rational& v) { return {v.get_d(), 0.0}; }
inline std::complex<double> to_complex(const GaussRational& v) { return {v.re.get_d(), v.im.get_d()}; }
inline std::complex<double> to_complex(const std::complex<double>& v) { return v; }
inline std::complex<double> to_complex(double v) { return {v, 0.0}; }

inline std::string to_string(const Rational& v) { return v.get_str(); }
std::string to_string(const GaussRational& v);
std::string to_string(const std::complex<double>& v);
inline std::string to_string(double v) { return to_string(std::complex<double>(v, 0.0)); }

}  // namespace detail

/// Exact integer power, negative exponents allowed for nonzero base.
Rational pow(const Rational& base, int exponent);

/// Parses "3", "-3/4", "0.25", "1e-4", "2.5E3" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace axinorm
