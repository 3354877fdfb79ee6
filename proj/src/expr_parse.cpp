#include <cctype>
#include <climits>
#include <string>

#include "axinorm/expr.hpp"

namespace axinorm {

namespace {

class Parser {
 public:
  Parser(std::string_view text, bool allow_imaginary, bool allow_negative_r)
      : text_(text), allow_imaginary_(allow_imaginary), allow_negative_r_(allow_negative_r) {}

  ComplexFun parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    ComplexFun out;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    out += signed_term(negative);
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      out += signed_term(c == '-');
    }
    return out;
  }

 private:
  ComplexFun signed_term(bool negative) {
    ComplexFun t = term();
    return negative ? -t : t;
  }

  ComplexFun term() {
    skip_ws();
    std::size_t start = pos_;
    GaussRational coeff(1);
    int r_exp = 0;
    int z_exp = 0;
    bool any = false;
    if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
      coeff = GaussRational(number());
      any = true;
    }
    while (true) {
      skip_ws();
      if (at_end()) break;
      std::size_t save = pos_;
      bool star = false;
      if (peek() == '*') {
        star = true;
        ++pos_;
        skip_ws();
        if (at_end()) throw ParseError("expected factor after '*'", pos_);
      }
      char c = peek();
      if (c == 'r') {
        ++pos_;
        int e = exponent(true);
        if (e < 0 && !allow_negative_r_) throw ParseError("negative r exponent not allowed in input", save);
        r_exp += e;
      } else if (c == 'z') {
        ++pos_;
        z_exp += exponent(false);
      } else if (c == 'i' && allow_imaginary_) {
        ++pos_;
        coeff *= GaussRational::i();
      } else if (star) {
        throw ParseError(std::string("unexpected '") + c + "' after '*'", pos_);
      } else {
        pos_ = save;
        break;
      }
      any = true;
    }
    if (!any) throw ParseError("expected a term", start);
    return ComplexFun::monomial(coeff, r_exp, z_exp);
  }

  Rational number() {
    std::size_t start = pos_;
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
    if (!at_end() && peek() == '/') {
      s += text_[pos_++];
      std::size_t den_start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
      if (pos_ == den_start) throw ParseError("expected denominator", pos_);
    } else {
      if (!at_end() && peek() == '.') {
        s += text_[pos_++];
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
      }
      if (!at_end() && (peek() == 'e' || peek() == 'E')) {
        std::size_t save = pos_;
        std::string e(1, text_[pos_++]);
        if (!at_end() && (peek() == '+' || peek() == '-')) e += text_[pos_++];
        std::size_t digits = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) e += text_[pos_++];
        if (pos_ == digits)
          pos_ = save;
        else
          s += e;
      }
    }
    try {
      return parse_rational(s);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  }

  int exponent(bool allow_sign) {
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      if (negative && !allow_sign) throw ParseError("negative z exponent", pos_);
      ++pos_;
    }
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
    if (digits.empty()) throw ParseError("expected integer exponent", start);
    if (!at_end() && (peek() == '.' || peek() == '/'))
      throw ParseError("non-integer exponent", start);
    if (digits.size() > 6) throw ParseError("exponent too large", start);
    int e = std::stoi(digits);
    return negative ? -e : e;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool allow_imaginary_;
  bool allow_negative_r_;
};

RealFun real_only(const ComplexFun& f) {
  return real_part(f);
}

}  // namespace

RealFun parse(std::string_view text) {
  return real_only(Parser(text, false, false).parse());
}

RealFun parse_internal(std::string_view text) {
  return real_only(Parser(text, false, true).parse());
}

ComplexFun parse_complex(std::string_view text) {
  return Parser(text, true, false).parse();
}

}  // namespace axinorm
