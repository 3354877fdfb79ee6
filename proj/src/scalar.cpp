#include "axinorm/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace axinorm {

namespace detail {

std::string to_string(const GaussRational& v) {
  if (sgn(v.im) == 0) return v.re.get_str();
  std::string im;
  if (v.im == 1)
    im = "i";
  else if (v.im == -1)
    im = "-i";
  else
    im = v.im.get_str() + "*i";
  if (sgn(v.re) == 0) return im;
  return "(" + v.re.get_str() + (im.front() == '-' ? "" : "+") + im + ")";
}

std::string to_string(const std::complex<double>& v) {
  char buf[64];
  if (v.imag() == 0.0)
    std::snprintf(buf, sizeof buf, "%.17g", v.real());
  else
    std::snprintf(buf, sizeof buf, "(%.17g%+.17g*i)", v.real(), v.imag());
  return buf;
}

}  // namespace detail

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw std::domain_error("pow: zero to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational { throw std::invalid_argument("malformed number '" + text + "'"); };
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string digits;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
  Rational value;
  if (i < n && text[i] == '/') {
    ++i;
    std::string den;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) den += text[i++];
    if (digits.empty() || den.empty() || i != n) return fail();
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    value = Rational(mpz_class(digits, 10), d);
    value.canonicalize();
    return negative ? Rational(-value) : value;
  }
  std::string frac;
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) frac += text[i++];
  }
  if (digits.empty() && frac.empty()) return fail();
  int exp10 = -static_cast<int>(frac.size());
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    std::string e;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) e += text[i++];
    if (e.empty() || e.size() > 6) return fail();
    exp10 += eneg ? -std::stoi(e) : std::stoi(e);
  }
  if (i != n) return fail();
  std::string all = digits + frac;
  if (all.empty()) all = "0";
  value = Rational(mpz_class(all, 10)) * pow(Rational(10), exp10);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace axinorm
