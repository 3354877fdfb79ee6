// Command-line front end. Every subcommand builds its whole output in memory
// and writes it once, so identical flags give byte-identical output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "axinorm/analysis.hpp"
#include "axinorm/bdm.hpp"
#include "axinorm/io.hpp"
#include "axinorm/vecfield.hpp"

using namespace axinorm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfinite = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::uint64_t seed = EnsembleConfig{}.seed;
  std::string format;
  std::string out;
};

struct Output {
  std::string text;
  int code = kExitOk;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    int lo = to_int(item.substr(0, dots));
    int hi = to_int(item.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) {
    try {
      out.push_back(parse_rational(s));
    } catch (const std::invalid_argument&) {
      throw UsageError("not a number: '" + s + "'");
    }
  }
  return out;
}

std::string resolve_format(const Global& g, const char* fallback, bool csv_ok) {
  std::string f = g.format.empty() ? fallback : g.format;
  if (f == "csv" && !csv_ok) throw UsageError("this subcommand only writes json");
  return f;
}

std::string dump(json j, const Global& g) {
  json out;
  out["seed"] = g.seed;
  for (auto& [key, value] : j.items()) out[key] = value;
  return out.dump(2) + "\n";
}

std::string seed_line(const Global& g) { return "# seed=" + std::to_string(g.seed) + "\n"; }

ComplexFun parse_fn(const std::string& text) { return parse_complex(text); }

RealFun require_real(const ComplexFun& f, const std::string& which) {
  if (!imag_part(f).is_zero()) throw UsageError("--which " + which + " needs a real coefficient");
  return real_part(f);
}

// ---------------------------------------------------------------------------

struct NormArgs {
  std::string fn;
  int k = 0;
  int m = 0;
  std::string domain;
  std::string which = "H";
};

Output cmd_norm(const NormArgs& a, const Global& g) {
  const std::string fmt = resolve_format(g, "json", true);
  const ComplexFun f = parse_fn(a.fn);
  const MeridianDomain d = parse_domain(a.domain);
  NormReport report;
  if (a.which == "H")
    report = hk_norm_sq(f, a.k, a.m, d);
  else if (a.which == "C")
    report = c_norm_sq(f, a.k, a.m, d);
  else if (a.which == "H1")
    report = h1_norm_sq(f, a.m, d);
  else if (a.which == "W")
    report = w_seminorm_sq(require_real(f, a.which), a.k, a.m, d);
  else if (a.which == "X")
    report = x_seminorm_sq(require_real(f, a.which), a.k, a.m, d);
  else if (a.which == "B")
    report = b_norm_sq(require_real(f, a.which), a.k, a.m, d);
  else if (a.which == "V1")
    report = v1_norm_sq(require_real(f, a.which), a.m, d);
  else if (a.which == "H1b")
    report = h1_bullet_norm_sq(require_real(f, a.which), a.m, d);
  else
    throw UsageError("unknown --which '" + a.which + "'");
  Output o;
  o.code = report.total.is_finite() ? kExitOk : kExitInfinite;
  if (fmt == "csv") {
    std::ostringstream s;
    s << seed_line(g) << "label,exact,float\n";
    for (const auto& t : report.terms)
      s << '"' << t.label << "\",\"" << t.value.exact_string() << "\"," << format_double(t.value.to_double()) << '\n';
    s << "\"total\",\"" << report.total.exact_string() << "\"," << format_double(report.total.to_double()) << '\n';
    o.text = s.str();
    return o;
  }
  json j = to_json(report);
  j["which"] = a.which;
  j["fn"] = a.fn;
  j["k"] = a.k;
  j["m"] = a.m;
  j["domain"] = d.to_string();
  if (!report.total.is_finite()) j["first_divergent"] = report.first_divergent();
  o.text = dump(std::move(j), g);
  return o;
}

struct SweepArgs {
  int m = 2;
  std::string k = "-2..2";
  std::vector<std::string> eps{"0", "1/10", "1/100", "1/10000"};
  std::string domain = "rect:0,1,0,1";
  int size = EnsembleConfig{}.size;
  std::string ratio = "full";
  bool vector = false;
};

Output cmd_sweep(const SweepArgs& a, const Global& g) {
  const std::string fmt = resolve_format(g, "csv", true);
  if (a.ratio != "full" && a.ratio != "seminorm") throw UsageError("--ratio must be full or seminorm");
  if (a.size < 1) throw UsageError("--size must be positive");
  EnsembleConfig config;
  config.seed = g.seed;
  config.size = a.size;
  const auto ks = parse_int_list(a.k);
  const auto eps = parse_rational_list(a.eps);
  const MeridianDomain family = parse_domain(a.domain);
  std::ostringstream s;
  Output o;
  if (a.vector) {
    const auto sweep = vec_equivalence_sweep(a.m, ks, eps, family, config);
    if (fmt == "csv") {
      s << seed_line(g);
      write_vec_sweep_csv(s, sweep);
      o.text = s.str();
    } else {
      o.text = dump(to_json(sweep), g);
    }
    return o;
  }
  const auto sweep = equivalence_sweep(a.m, ks, eps, family, config);
  if (fmt == "csv") {
    s << seed_line(g);
    write_sweep_csv(s, sweep, a.ratio == "full");
    o.text = s.str();
  } else {
    o.text = dump(to_json(sweep), g);
  }
  return o;
}

struct AsymptoticsArgs {
  int n = 0;
  int m = 0;
  std::string R = "1";
  std::string z0 = "0";
  std::string z1 = "1";
  bool planar = false;
  std::vector<std::string> eps{"1/10", "1/100", "1/1000"};
};

Output cmd_asymptotics(const AsymptoticsArgs& a, const Global& g) {
  const std::string fmt = resolve_format(g, "csv", true);
  const Rational big_r = parse_rational(a.R);
  const Rational eps0 = Rational(0);
  const MeridianDomain family = a.planar ? MeridianDomain::interval(eps0, big_r)
                                         : MeridianDomain::rectangle(eps0, big_r, parse_rational(a.z0), parse_rational(a.z1));
  const auto report = eps_asymptotics(a.n, a.m, family, parse_rational_list(a.eps));
  Output o;
  if (fmt == "csv") {
    std::ostringstream s;
    s << seed_line(g);
    write_asymptotics_csv(s, report);
    o.text = s.str();
  } else {
    o.text = dump(to_json(report), g);
  }
  return o;
}

struct TracesArgs {
  int k = 0;
  int m = 0;
  std::string fn;
  std::string domain = "rect:0,1,0,1";
};

Output cmd_traces(const TracesArgs& a, const Global& g) {
  resolve_format(g, "json", false);
  json j;
  j["k"] = a.k;
  j["m"] = a.m;
  const auto n = trace_set(a.k, a.m);
  j["N"] = std::vector<int>(n.begin(), n.end());
  if (!a.fn.empty()) {
    const RealFun w = parse(a.fn);
    const MeridianDomain d = parse_domain(a.domain);
    json traces = json::array();
    const auto profile = trace_profile(w, a.m, d);
    for (std::size_t i = 0; i < profile.traces.size(); ++i) {
      const auto& t = profile.traces[i];
      traces.push_back({{"j", i}, {"trace", t ? json(to_string(*t)) : json(nullptr)}});
    }
    j["fn"] = a.fn;
    j["domain"] = d.to_string();
    j["traces"] = std::move(traces);
    j["membership"] = to_json(membership(w, a.k, a.m, d));
  }
  Output o;
  o.text = dump(std::move(j), g);
  return o;
}

struct PolycheckArgs {
  int m = 0;
  int k = 0;
  int n = 0;
};

Output cmd_polycheck(const PolycheckArgs& a, const Global& g) {
  resolve_format(g, "json", false);
  if (a.m < 0 || a.n < 0) throw UsageError("--m and --n must be >= 0");
  json pw = json::array(), px = json::array(), nonzero = json::array();
  const int ak = std::abs(a.k);
  for (int l = 0; l <= std::min(ak, a.m); ++l) {
    const auto v = pw_constant(a.m, a.n, l);
    pw.push_back({{"l", l}, {"value", v}});
    if (v != 0 && a.n < a.m) nonzero.push_back("P^W l=" + std::to_string(l));
  }
  for (int l = 1; 2 * l <= a.m - ak; ++l) {
    const auto v = px_constant(a.m, a.k, a.n, l);
    px.push_back({{"l", l}, {"value", v}});
    if (v != 0 && a.n < a.m) nonzero.push_back("P^X l=" + std::to_string(l));
  }
  json j;
  j["m"] = a.m;
  j["k"] = a.k;
  j["n"] = a.n;
  j["verdict"] = boundedness_verdict(a.k, a.m, a.n);
  j["P_W"] = std::move(pw);
  j["P_X"] = std::move(px);
  j["nonzero_below_order"] = std::move(nonzero);
  Output o;
  o.text = dump(std::move(j), g);
  return o;
}

struct VecnormArgs {
  std::string wr = "0";
  std::string wtheta = "0";
  int k = 0;
  int m = 0;
  std::string domain;
  std::string which = "H";
};

Output cmd_vecnorm(const VecnormArgs& a, const Global& g) {
  resolve_format(g, "json", false);
  const VecCoefficient v{parse_fn(a.wr), parse_fn(a.wtheta)};
  const MeridianDomain d = parse_domain(a.domain);
  NormReport report;
  if (a.which == "H")
    report = vec_hk_norm_sq(v, a.k, a.m, d);
  else if (a.which == "C")
    report = vec_c_norm_sq(v, a.k, a.m, d);
  else
    throw UsageError("vecnorm --which must be H or C");
  json j = to_json(report);
  j["which"] = a.which;
  j["coefficient"] = to_json(v);
  j["k"] = a.k;
  j["m"] = a.m;
  j["domain"] = d.to_string();
  Output o;
  o.code = report.total.is_finite() ? kExitOk : kExitInfinite;
  o.text = dump(std::move(j), g);
  return o;
}

struct CompareArgs {
  int k = 0;
  int m = 0;
  int j = 0;
  std::string domain = "rect:0,1,0,1";
  std::vector<std::string> eps{"1/10", "1/100", "1/1000"};
};

Output cmd_compare(const CompareArgs& a, const Global& g) {
  const std::string fmt = resolve_format(g, "json", true);
  if (!trace_set(a.k, a.m).contains(a.j))
    throw UsageError("j=" + std::to_string(a.j) + " is not in N_{k,m} for k=" + std::to_string(a.k) +
                     ", m=" + std::to_string(a.m));
  const auto table = bc_comparison(a.k, a.m, a.j, parse_domain(a.domain), parse_rational_list(a.eps));
  Output o;
  if (fmt == "csv") {
    std::ostringstream s;
    s << seed_line(g);
    write_comparison_csv(s, table);
    o.text = s.str();
  } else {
    o.text = dump(to_json(table), g);
  }
  return o;
}

struct ParsevalArgs {
  std::string modes;
  std::string domain = "rect:0,1,0,1";
  int m = 0;
  bool vector = false;
};

Output cmd_parseval(const ParsevalArgs& a, const Global& g) {
  resolve_format(g, "json", false);
  json input;
  try {
    input = json::parse(a.modes);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("--modes is not valid JSON: ") + e.what());
  }
  const MeridianDomain d = parse_domain(a.domain);
  json j;
  j["domain"] = d.to_string();
  if (a.vector) {
    if (!input.is_object() || !input.contains("modes") || !input["modes"].is_object())
      throw UsageError("vector --modes needs {\"modes\": {\"k\": {\"w_r\": ..., \"w_theta\": ...}}}");
    VecFourierSum u;
    for (const auto& [key, coeff] : input["modes"].items()) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw UsageError("mode key '" + key + "' is not an integer");
      }
      u[k] += vec_coefficient_from_json(coeff);
    }
    const auto pair = vec_parseval(u, a.m, d);
    j["m"] = a.m;
    j["mode_sum"] = to_json(pair.lhs);
    j["cartesian"] = to_json(pair.rhs);
    j["equal"] = pair.lhs == pair.rhs;
  } else {
    if (a.m != 0) throw UsageError("scalar parseval is the L^2 identity; use --m 0");
    const auto pair = parseval_l2(axifun_from_json(input), d);
    j["mode_sum"] = to_json(pair.lhs);
    j["assembled"] = to_json(pair.rhs);
    j["equal"] = pair.lhs == pair.rhs;
  }
  Output o;
  o.text = dump(std::move(j), g);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Sobolev norms of Fourier coefficients on axisymmetric domains"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "RNG seed, echoed into every output");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "write here instead of stdout");

  Output result;
  std::function<Output()> run;

  NormArgs norm;
  auto* sub = app.add_subcommand("norm", "squared norm of e^{ik theta} w with its breakdown");
  sub->add_option("--fn", norm.fn, "coefficient w(r,z)")->required();
  sub->add_option("--k", norm.k, "Fourier mode");
  sub->add_option("--m", norm.m, "Sobolev order")->required();
  sub->add_option("--domain", norm.domain, "rect:eps,R,z0,z1 or interval:eps,R")->required();
  sub->add_option("--which", norm.which, "H, C, W, X, B, H1, V1 or H1b");
  sub->callback([&] { run = [&] { return cmd_norm(norm, g); }; });

  SweepArgs sweep;
  sub = app.add_subcommand("sweep", "empirical envelope of the norm equivalence ratios");
  sub->add_option("--m", sweep.m)->required();
  sub->add_option("--k", sweep.k, "list or range, e.g. -8..8 or 0,2,5");
  sub->add_option("--eps", sweep.eps, "inner radii")->delimiter(',');
  sub->add_option("--domain", sweep.domain, "family; its inner radius is replaced by each eps");
  sub->add_option("--size", sweep.size, "draws per (m,k)");
  sub->add_option("--ratio", sweep.ratio, "full (C/H) or seminorm ((W+X)/H_perp)");
  sub->add_flag("--vector", sweep.vector, "vector-field ratio vec_C/vec_H");
  sub->callback([&] { run = [&] { return cmd_sweep(sweep, g); }; });

  AsymptoticsArgs asym;
  sub = app.add_subcommand("asymptotics", "|r^{n-m}|^2 on (eps,R) x I as eps -> 0");
  sub->add_option("--n", asym.n)->required();
  sub->add_option("--m", asym.m)->required();
  sub->add_option("--R", asym.R);
  sub->add_option("--z0", asym.z0);
  sub->add_option("--z1", asym.z1);
  sub->add_flag("--planar", asym.planar, "interval (eps,R) instead of a rectangle");
  sub->add_option("--eps", asym.eps)->delimiter(',');
  sub->callback([&] { run = [&] { return cmd_asymptotics(asym, g); }; });

  TracesArgs traces;
  sub = app.add_subcommand("traces", "trace set N_{k,m}; with --fn also traces and membership");
  sub->add_option("--k", traces.k)->required();
  sub->add_option("--m", traces.m)->required();
  sub->add_option("--fn", traces.fn);
  sub->add_option("--domain", traces.domain);
  sub->callback([&] { run = [&] { return cmd_traces(traces, g); }; });

  PolycheckArgs poly;
  sub = app.add_subcommand("polycheck", "P^W / P^X constants and boundedness verdict for r^n");
  sub->add_option("--m", poly.m)->required();
  sub->add_option("--k", poly.k)->required();
  sub->add_option("--n", poly.n)->required();
  sub->callback([&] { run = [&] { return cmd_polycheck(poly, g); }; });

  VecnormArgs vec;
  sub = app.add_subcommand("vecnorm", "vector-field norms for one mode");
  sub->add_option("--wr", vec.wr);
  sub->add_option("--wtheta", vec.wtheta);
  sub->add_option("--k", vec.k);
  sub->add_option("--m", vec.m)->required();
  sub->add_option("--domain", vec.domain)->required();
  sub->add_option("--which", vec.which, "H or C");
  sub->callback([&] { run = [&] { return cmd_vecnorm(vec, g); }; });

  CompareArgs cmp;
  sub = app.add_subcommand("compare", "B- vs C-norm of r^j for j in N_{k,m}");
  sub->add_option("--k", cmp.k)->required();
  sub->add_option("--m", cmp.m)->required();
  sub->add_option("--j", cmp.j)->required();
  sub->add_option("--domain", cmp.domain);
  sub->add_option("--eps", cmp.eps)->delimiter(',');
  sub->callback([&] { run = [&] { return cmd_compare(cmp, g); }; });

  ParsevalArgs pars;
  sub = app.add_subcommand("parseval", "mode-sum vs assembled norm of a finite Fourier sum");
  sub->add_option("--modes", pars.modes, "JSON {\"modes\": {\"k\": \"expr\"}}")->required();
  sub->add_option("--domain", pars.domain);
  sub->add_option("--m", pars.m);
  sub->add_flag("--vector", pars.vector, "modes are {\"w_r\", \"w_theta\"} objects");
  sub->callback([&] { run = [&] { return cmd_parseval(pars, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    result = run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (g.out.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << g.out << '\n';
      return kExitUsage;
    }
    f << result.text;
  }
  return result.code;
}
