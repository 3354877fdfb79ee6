#include "axinorm/domain.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace axinorm {

MeridianDomain::MeridianDomain(Rational eps, Rational r_max, std::optional<ZInterval> z)
    : r_min_(std::move(eps)), r_max_(std::move(r_max)), z_(std::move(z)) {
  if (sgn(r_min_) < 0) throw std::invalid_argument("domain: inner radius must be >= 0");
  if (!(r_min_ < r_max_)) throw std::invalid_argument("domain: need inner radius < outer radius");
  if (z_ && !(z_->lo < z_->hi)) throw std::invalid_argument("domain: need z0 < z1");
}

MeridianDomain MeridianDomain::rectangle(Rational eps, Rational r_max, Rational z0, Rational z1) {
  return MeridianDomain(std::move(eps), std::move(r_max), ZInterval{std::move(z0), std::move(z1)});
}

MeridianDomain MeridianDomain::interval(Rational eps, Rational r_max) {
  return MeridianDomain(std::move(eps), std::move(r_max), std::nullopt);
}

MeridianDomain MeridianDomain::with_r_min(Rational eps) const {
  return MeridianDomain(std::move(eps), r_max_, z_);
}

std::string MeridianDomain::to_string() const {
  if (z_)
    return "rect:" + r_min_.get_str() + "," + r_max_.get_str() + "," + z_->lo.get_str() + "," +
           z_->hi.get_str();
  return "interval:" + r_min_.get_str() + "," + r_max_.get_str();
}

MeridianDomain parse_domain(std::string_view literal) {
  auto colon = literal.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("domain literal needs 'rect:' or 'interval:'");
  std::string_view kind = literal.substr(0, colon);
  std::vector<Rational> values;
  std::string_view rest = literal.substr(colon + 1);
  while (true) {
    auto comma = rest.find(',');
    values.push_back(parse_rational(std::string(rest.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (kind == "rect") {
    if (values.size() != 4) throw std::invalid_argument("rect domain needs eps,R,z0,z1");
    return MeridianDomain::rectangle(values[0], values[1], values[2], values[3]);
  }
  if (kind == "interval") {
    if (values.size() != 2) throw std::invalid_argument("interval domain needs eps,R");
    return MeridianDomain::interval(values[0], values[1]);
  }
  throw std::invalid_argument("unknown domain kind '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------------------

EpsForm& EpsForm::operator+=(const EpsForm& o) {
  for (const auto& [e, c] : o.powers) {
    Rational& slot = powers[e];
    slot += c;
    if (sgn(slot) == 0) powers.erase(e);
  }
  log_coeff += o.log_coeff;
  return *this;
}

EpsForm EpsForm::scaled(const Rational& c) const {
  EpsForm out;
  if (sgn(c) == 0) return out;
  for (const auto& [e, v] : powers) out.powers.emplace(e, v * c);
  out.log_coeff = log_coeff * c;
  return out;
}

bool EpsForm::is_bounded() const {
  return !leading_negative_power() && sgn(log_coeff) == 0;
}

std::optional<int> EpsForm::leading_negative_power() const {
  if (powers.empty() || powers.begin()->first >= 0) return std::nullopt;
  return powers.begin()->first;
}

Rational EpsForm::coeff(int e) const {
  auto it = powers.find(e);
  return it == powers.end() ? Rational(0) : it->second;
}

std::string to_string(const EpsForm& form) {
  std::string out;
  for (const auto& [e, c] : form.powers) {
    if (!out.empty()) out += " + ";
    out += "(" + c.get_str() + ")";
    if (e != 0) out += "*eps^" + std::to_string(e);
  }
  if (sgn(form.log_coeff) != 0) {
    if (!out.empty()) out += " + ";
    out += "(" + form.log_coeff.get_str() + ")*ln(R/eps)";
  }
  if (out.empty()) out = "0";
  return "pi*(" + out + ")";
}

// ---------------------------------------------------------------------------

ExtendedNorm::ExtendedNorm(EpsForm form, const MeridianDomain& domain)
    : form_(std::move(form)), eps_(domain.r_min()), r_max_(domain.r_max()) {}

ExtendedNorm::Kind ExtendedNorm::kind() const {
  if (!eps_ || sgn(*eps_) > 0) return Kind::finite;
  if (form_.leading_negative_power()) return Kind::infinite;
  if (sgn(form_.log_coeff) != 0) return Kind::log_divergent;
  return Kind::finite;
}

Rational ExtendedNorm::pi_coeff() const {
  if (!eps_) return form_.coeff(0);
  if (sgn(*eps_) == 0) {
    if (!is_finite()) throw std::domain_error("pi_coeff of a divergent norm");
    return form_.coeff(0);
  }
  Rational acc;
  for (const auto& [e, c] : form_.powers) acc += c * pow(*eps_, e);
  return acc;
}

Rational ExtendedNorm::log_coeff() const {
  if (eps_ && sgn(*eps_) == 0) {
    if (!is_finite()) throw std::domain_error("log_coeff of a divergent norm");
    return Rational(0);
  }
  return form_.log_coeff;
}

Rational ExtendedNorm::log_arg() const {
  if (!eps_ || sgn(*eps_) == 0) return Rational(1);
  Rational q = *r_max_ / *eps_;
  q.canonicalize();
  return q;
}

long double ExtendedNorm::to_long_double() const {
  switch (kind()) {
    case Kind::infinite:
    case Kind::log_divergent:
      return HUGE_VALL;
    case Kind::finite:
      break;
  }
  const long double pi = 3.141592653589793238462643383279502884L;
  long double v = pi_coeff().get_d();
  Rational b = log_coeff();
  if (sgn(b) != 0) {
    Rational arg = log_arg();
    long double ln = std::log(static_cast<long double>(arg.get_num().get_d())) -
                     std::log(static_cast<long double>(arg.get_den().get_d()));
    v += static_cast<long double>(b.get_d()) * ln;
  }
  return pi * v;
}

std::string ExtendedNorm::exact_string() const {
  switch (kind()) {
    case Kind::infinite:
      return "+inf";
    case Kind::log_divergent:
      return "log-div";
    case Kind::finite:
      break;
  }
  Rational a = pi_coeff();
  Rational b = log_coeff();
  if (sgn(b) == 0) {
    if (sgn(a) == 0) return "0";
    return a.get_str() + "*pi";
  }
  const std::string log_part = (b == 1 ? "" : b.get_str() + "*") + "ln(" + log_arg().get_str() + ")";
  if (sgn(a) == 0) return "pi*" + log_part;
  return "pi*(" + a.get_str() + " + " + log_part + ")";
}

ExtendedNorm& ExtendedNorm::operator+=(const ExtendedNorm& o) {
  if (!eps_) {
    eps_ = o.eps_;
    r_max_ = o.r_max_;
  } else if (o.eps_ && (*eps_ != *o.eps_ || *r_max_ != *o.r_max_)) {
    throw std::invalid_argument("adding norms computed on different domains");
  }
  form_ += o.form_;
  return *this;
}

ExtendedNorm ExtendedNorm::scaled(const Rational& c) const {
  ExtendedNorm out = *this;
  out.form_ = form_.scaled(c);
  return out;
}

bool operator==(const ExtendedNorm& a, const ExtendedNorm& b) {
  return a.form_ == b.form_ && a.eps_ == b.eps_ && a.r_max_ == b.r_max_;
}

bool ExtendedNorm::same_value(const ExtendedNorm& o) const {
  if (!is_finite() || !o.is_finite()) return kind() == o.kind();
  if (pi_coeff() != o.pi_coeff()) return false;
  Rational b1 = log_coeff(), b2 = o.log_coeff();
  if (sgn(b1) == 0 && sgn(b2) == 0) return true;
  return b1 == b2 && log_arg() == o.log_arg();
}

// ---------------------------------------------------------------------------

EpsForm l21_inner_form(const RealFun& f, const RealFun& g, const MeridianDomain& domain) {
  // Collect the r-integrand after integrating out z: sum_p c_p r^p.
  std::map<int, Rational> radial;
  const auto& zi = domain.z_interval();
  for (const auto& s : f) {
    for (const auto& t : g) {
      int q = s.z_exp + t.z_exp;
      Rational zmoment(1);
      if (zi) {
        zmoment = (pow(zi->hi, q + 1) - pow(zi->lo, q + 1)) / Rational(q + 1);
      } else if (q != 0) {
        throw std::invalid_argument("z-dependent function on a planar (interval) domain");
      }
      radial[s.r_exp + t.r_exp + 1] += s.coeff * t.coeff * zmoment;
    }
  }
  EpsForm form;
  const Rational& R = domain.r_max();
  for (const auto& [p, c] : radial) {
    if (sgn(c) == 0) continue;
    // 2 pi int_eps^R c r^p dr, stored as the coefficient of pi
    if (p == -1) {
      form.log_coeff += 2 * c;
      continue;
    }
    Rational scale = 2 * c / Rational(p + 1);
    EpsForm piece;
    piece.powers[0] = scale * pow(R, p + 1);
    piece.powers[p + 1] += -scale;
    if (sgn(piece.powers[0]) == 0) piece.powers.erase(0);
    form += piece;
  }
  return form;
}

ExtendedNorm l21_norm_sq(const RealFun& f, const MeridianDomain& domain) {
  return ExtendedNorm(l21_inner_form(f, f, domain), domain);
}

ExtendedNorm l21_inner(const RealFun& f, const RealFun& g, const MeridianDomain& domain) {
  return ExtendedNorm(l21_inner_form(f, g, domain), domain);
}

ExtendedNorm l21_norm_sq(const ComplexFun& f, const MeridianDomain& domain) {
  return l21_norm_sq(real_part(f), domain) + l21_norm_sq(imag_part(f), domain);
}

}  // namespace axinorm
