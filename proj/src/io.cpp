#include "axinorm/io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace axinorm {

namespace {

std::string monomial_body(int r_exp, int z_exp) {
  std::string body;
  if (r_exp != 0) body += r_exp == 1 ? "r" : "r^" + std::to_string(r_exp);
  if (z_exp != 0) body += std::string(body.empty() ? "" : "*") + (z_exp == 1 ? "z" : "z^" + std::to_string(z_exp));
  return body;
}

// Splits mixed Gaussian coefficients into a real and an imaginary term so the
// text re-parses with parse_complex().
std::string complex_text(const ComplexFun& f) {
  if (f.is_zero()) return "0";
  std::string out;
  auto emit = [&](const Rational& c, bool imaginary, const std::string& body) {
    if (sgn(c) == 0) return;
    const bool negative = sgn(c) < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational a = abs(c);
    std::string factors;
    if (a != 1) factors = a.get_str();
    if (imaginary) factors += factors.empty() ? "i" : "*i";
    if (!body.empty()) factors += factors.empty() ? body : "*" + body;
    out += factors.empty() ? "1" : factors;
  };
  for (const auto& t : f) {
    const std::string body = monomial_body(t.r_exp, t.z_exp);
    emit(t.coeff.re, false, body);
    emit(t.coeff.im, true, body);
  }
  return out;
}

const char* kind_text(ExtendedNorm::Kind kind) {
  return kind == ExtendedNorm::Kind::infinite ? "+inf" : "log-div";
}

std::string eps_text(const Rational& eps) { return eps.get_str(); }

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const ExtendedNorm& value) {
  if (!value.is_finite()) return kind_text(value.kind());
  json j;
  j["exact"] = value.exact_string();
  j["float"] = value.to_double();
  j["pi_coeff"] = value.pi_coeff().get_str();
  j["log_coeff"] = value.log_coeff().get_str();
  j["log_arg"] = value.log_arg().get_str();
  return j;
}

json to_json(const EpsForm& form) {
  json j;
  j["text"] = to_string(form);
  json powers = json::object();
  for (const auto& [e, c] : form.powers) powers[std::to_string(e)] = c.get_str();
  j["powers"] = std::move(powers);
  j["log_coeff"] = form.log_coeff.get_str();
  return j;
}

json to_json(const NormReport& report) {
  json j;
  j["total"] = to_json(report.total);
  json terms = json::array();
  for (const auto& t : report.terms) terms.push_back({{"label", t.label}, {"value", to_json(t.value)}});
  j["terms"] = std::move(terms);
  return j;
}

json to_json(const Membership& membership) {
  return {{"in_space", membership.in_space}, {"witness", membership.witness}};
}

json to_json(const ComplexAxiFun& u) {
  json modes = json::object();
  for (const auto& [k, f] : u.modes()) modes[std::to_string(k)] = complex_text(f);
  return {{"modes", std::move(modes)}};
}

json to_json(const VecCoefficient& v) { return {{"w_r", complex_text(v.w_r)}, {"w_theta", complex_text(v.w_theta)}}; }

ComplexAxiFun axifun_from_json(const json& j) {
  if (!j.is_object() || !j.contains("modes") || !j["modes"].is_object())
    throw std::invalid_argument("Fourier sum JSON needs an object field \"modes\"");
  ComplexAxiFun u;
  for (const auto& [key, expr] : j["modes"].items()) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size()) throw std::invalid_argument("mode key '" + key + "' is not an integer");
    if (!expr.is_string()) throw std::invalid_argument("mode " + key + ": expression must be a string");
    u.add_to_mode(k, parse_complex(expr.get<std::string>()));
  }
  return u;
}

VecCoefficient vec_coefficient_from_json(const json& j) {
  if (!j.is_object() || !j.contains("w_r") || !j.contains("w_theta") || !j["w_r"].is_string() ||
      !j["w_theta"].is_string())
    throw std::invalid_argument("vector coefficient JSON needs string fields \"w_r\" and \"w_theta\"");
  return {parse_complex(j["w_r"].get<std::string>()), parse_complex(j["w_theta"].get<std::string>())};
}

void check_value_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s != "+inf" && s != "log-div") throw std::invalid_argument("value string must be \"+inf\" or \"log-div\"");
    return;
  }
  if (!j.is_object()) throw std::invalid_argument("value must be an object or a divergence marker");
  for (const char* key : {"exact", "pi_coeff", "log_coeff", "log_arg"}) {
    if (!j.contains(key) || !j[key].is_string()) throw std::invalid_argument(std::string("value lacks string ") + key);
  }
  if (!j.contains("float") || !j["float"].is_number()) throw std::invalid_argument("value lacks number float");
  parse_rational(j["pi_coeff"].get<std::string>());
  parse_rational(j["log_coeff"].get<std::string>());
  parse_rational(j["log_arg"].get<std::string>());
}

void check_report_json(const json& j) {
  if (!j.is_object() || !j.contains("total") || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("report needs \"total\" and an array \"terms\"");
  check_value_json(j["total"]);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("label") || !t["label"].is_string() || !t.contains("value"))
      throw std::invalid_argument("report term needs \"label\" and \"value\"");
    check_value_json(t["value"]);
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep, bool full) {
  out << "m,k,eps,ratio_min,ratio_max,skipped\n";
  for (const auto& c : sweep.cells) {
    out << sweep.m << ',' << c.k << ',' << eps_text(c.eps) << ','
        << format_double(full ? c.full_min : c.seminorm_min) << ','
        << format_double(full ? c.full_max : c.seminorm_max) << ',' << c.skipped << '\n';
  }
}

void write_vec_sweep_csv(std::ostream& out, const VecSweepResult& sweep) {
  out << "m,k,eps,ratio_min,ratio_max,skipped\n";
  for (const auto& c : sweep.cells) {
    out << sweep.m << ',' << c.k << ',' << eps_text(c.eps) << ',' << format_double(c.ratio_min) << ','
        << format_double(c.ratio_max) << ',' << c.skipped << '\n';
  }
}

void write_asymptotics_csv(std::ostream& out, const AsymptoticsReport& report) {
  out << "n,m,eps,regime,exact,float\n";
  for (const auto& row : report.rows) {
    out << report.n << ',' << report.m << ',' << eps_text(row.eps) << ',' << to_string(report.regime) << ",\""
        << row.value.exact_string() << "\"," << format_double(row.value.to_double()) << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const ComparisonTable& table) {
  out << "k,m,j,eps,b_exact,b_float,c_exact,c_float\n";
  for (const auto& row : table.rows) {
    out << table.k << ',' << table.m << ',' << table.j << ',' << eps_text(row.eps) << ",\""
        << row.b_norm.exact_string() << "\"," << format_double(row.b_norm.to_double()) << ",\""
        << row.c_norm.exact_string() << "\"," << format_double(row.c_norm.to_double()) << '\n';
  }
}

json to_json(const AsymptoticsReport& report) {
  json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["regime"] = to_string(report.regime);
  j["exponent"] = report.exponent ? json(*report.exponent) : json(nullptr);
  j["form"] = to_json(report.form);
  json rows = json::array();
  for (const auto& row : report.rows) rows.push_back({{"eps", eps_text(row.eps)}, {"value", to_json(row.value)}});
  j["rows"] = std::move(rows);
  return j;
}

json to_json(const SweepResult& sweep) {
  json j;
  j["m"] = sweep.m;
  j["ensemble"] = {{"size", sweep.ensemble.size},
                   {"seed", sweep.ensemble.seed},
                   {"max_terms", sweep.ensemble.max_terms},
                   {"max_z_exp", sweep.ensemble.max_z_exp},
                   {"coeff_bound", sweep.ensemble.coeff_bound},
                   {"extra_r_exp", sweep.ensemble.extra_r_exp}};
  j["seminorm_envelope"] = {sweep.seminorm_min, sweep.seminorm_max};
  j["full_envelope"] = {sweep.full_min, sweep.full_max};
  json cells = json::array();
  for (const auto& c : sweep.cells) {
    cells.push_back({{"k", c.k},
                     {"eps", eps_text(c.eps)},
                     {"seminorm", {c.seminorm_min, c.seminorm_max}},
                     {"seminorm_exactly_one", c.seminorm_exactly_one},
                     {"full", {c.full_min, c.full_max}},
                     {"accepted", c.accepted},
                     {"skipped", c.skipped}});
  }
  j["cells"] = std::move(cells);
  return j;
}

json to_json(const VecSweepResult& sweep) {
  json j;
  j["m"] = sweep.m;
  j["envelope"] = {sweep.ratio_min, sweep.ratio_max};
  json cells = json::array();
  for (const auto& c : sweep.cells) {
    cells.push_back({{"k", c.k},
                     {"eps", eps_text(c.eps)},
                     {"ratio", {c.ratio_min, c.ratio_max}},
                     {"accepted", c.accepted},
                     {"skipped", c.skipped}});
  }
  j["cells"] = std::move(cells);
  return j;
}

json to_json(const ComparisonTable& table) {
  json j;
  j["k"] = table.k;
  j["m"] = table.m;
  j["j"] = table.j;
  j["b_form"] = to_json(table.b_form);
  j["c_form"] = to_json(table.c_form);
  j["b_bounded"] = table.b_bounded;
  j["c_bounded"] = table.c_bounded;
  j["b_on_axis"] = to_json(table.b_on_axis);
  j["c_on_axis"] = to_json(table.c_on_axis);
  json rows = json::array();
  for (const auto& row : table.rows)
    rows.push_back({{"eps", eps_text(row.eps)}, {"b", to_json(row.b_norm)}, {"c", to_json(row.c_norm)}});
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace axinorm
