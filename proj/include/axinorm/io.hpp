#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "axinorm/analysis.hpp"
#include "axinorm/bdm.hpp"
#include "axinorm/fourier.hpp"
#include "axinorm/sobolev.hpp"
#include "axinorm/vecfield.hpp"

namespace axinorm {

using json = nlohmann::ordered_json;

/// Finite: {"exact", "float", "pi_coeff", "log_coeff", "log_arg"}; otherwise "+inf" or "log-div".
json to_json(const ExtendedNorm& value);
/// {"text", "powers": {"e": "c"}, "log_coeff"}
json to_json(const EpsForm& form);
/// {"total": value, "terms": [{"label", "value"}]}
json to_json(const NormReport& report);
json to_json(const Membership& membership);
json to_json(const ComplexAxiFun& u);
json to_json(const VecCoefficient& v);

ComplexAxiFun axifun_from_json(const json& j);
VecCoefficient vec_coefficient_from_json(const json& j);

/// Throws std::invalid_argument if j does not follow the value / report layout.
void check_value_json(const json& j);
void check_report_json(const json& j);

/// "%.17g", with "inf"/"-inf"/"nan" spelled out.
std::string format_double(double v);

/// Columns m,k,eps,ratio_min,ratio_max,skipped; `full` picks C/H over (W+X)/H_perp.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep, bool full);
void write_vec_sweep_csv(std::ostream& out, const VecSweepResult& sweep);
/// Columns n,m,eps,regime,exact,float.
void write_asymptotics_csv(std::ostream& out, const AsymptoticsReport& report);
/// Columns k,m,j,eps,b_exact,b_float,c_exact,c_float.
void write_comparison_csv(std::ostream& out, const ComparisonTable& table);

json to_json(const AsymptoticsReport& report);
json to_json(const SweepResult& sweep);
json to_json(const VecSweepResult& sweep);
json to_json(const ComparisonTable& table);

}  // namespace axinorm
