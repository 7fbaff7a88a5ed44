// Copyright 2026 The helium-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#include "helad/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "helad/coulomb.hpp"
#include "helad/model.hpp"
#include "helad/solver.hpp"

namespace helad::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

using ordered_json = nlohmann::ordered_json;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Options shared by the subcommands; each registers only the ones it uses.
struct Options {
  std::string coefficients = "paper";
  double eta = 0.0;
  bool eta_set = false;
  std::string unit = "e2a";
  std::string format;
  std::string grid;
  std::string output;
  bool negative_control = false;
};

// "RMAX:NPOINTS", both parts required.
bool parse_grid(const std::string& text, double* r_max, int* points) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size()) {
    return false;
  }
  try {
    std::size_t used = 0;
    const double r = std::stod(text.substr(0, colon), &used);
    if (used != colon) return false;
    const std::string tail = text.substr(colon + 1);
    const long n = std::stol(tail, &used);
    if (used != tail.size()) return false;
    if (!(r > 0.0) || n < 2 || n > 100000) return false;
    *r_max = r;
    *points = static_cast<int>(n);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_coefficient_file(const std::string& path, ModelCoefficients* out,
                            std::string* error) {
  std::ifstream in(path);
  if (!in) {
    *error = "cannot open coefficient file: " + path;
    return false;
  }
  const char* const keys[] = {"eps1", "eps2", "V1", "V2", "U", "Ubar"};
  std::map<std::string, double> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::replace(line.begin(), line.end(), '=', ' ');
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;  // blank or comment-only line
    const bool known = std::any_of(std::begin(keys), std::end(keys),
                                   [&key](const char* k) { return key == k; });
    if (!known) {
      *error = path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'";
      return false;
    }
    double value = 0.0;
    if (!(fields >> value)) {
      *error = path + ":" + std::to_string(lineno) + ": missing numeric value for '" +
               key + "'";
      return false;
    }
    std::string extra;
    if (fields >> extra) {
      *error = path + ":" + std::to_string(lineno) + ": trailing token '" + extra + "'";
      return false;
    }
    if (!std::isfinite(value)) {
      *error = path + ":" + std::to_string(lineno) + ": non-finite value for '" + key + "'";
      return false;
    }
    if (seen.count(key)) {
      *error = path + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'";
      return false;
    }
    seen[key] = value;
  }
  for (const char* k : keys) {
    if (!seen.count(k)) {
      *error = path + ": missing key '" + std::string(k) + "'";
      return false;
    }
  }
  out->eps1 = seen["eps1"];
  out->eps2 = seen["eps2"];
  out->V1 = seen["V1"];
  out->V2 = seen["V2"];
  out->U = seen["U"];
  out->Ubar = seen["Ubar"];
  return true;
}

struct CoefficientChoice {
  ModelCoefficients values;
  std::string source;  // "paper" | "literal" | "file"
  std::optional<LiteralCoefficientSet> literal;
};

// May throw QuadratureError (handled by the callers as exit code 3).
bool resolve_coefficients(const std::string& arg, const QuadratureSpec& spec,
                          CoefficientChoice* out, std::string* error) {
  if (arg == "paper") {
    out->values = builtin_coefficients();
    out->source = "paper";
    return true;
  }
  if (arg == "quadrature") {
    out->literal = quadrature_coefficients(spec);
    out->values = out->literal->values;
    out->source = "literal";
    return true;
  }
  if (arg.rfind("file:", 0) == 0) {
    if (!parse_coefficient_file(arg.substr(5), &out->values, error)) return false;
    out->source = "file";
    return true;
  }
  *error = "unknown coefficient source '" + arg +
           "' (expected paper, quadrature, or file:PATH)";
  return false;
}

int emit(const std::string& payload, const Options& o, std::ostream& out,
         std::ostream& err) {
  if (o.output.empty()) {
    out << payload;
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file: " << o.output << "\n";
    return kExitUsage;
  }
  file << payload;
  if (!file.good()) {
    err << "error: failed writing output file: " << o.output << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve

ordered_json report_json(const GroundStateReport& r, const CoefficientChoice& choice,
                         EnergyUnit unit, const QuadratureSpec& spec) {
  ordered_json j;
  j["meta"] = {{"generator", "helium-ladder"},
               {"version", kVersion},
               {"command", "solve"},
               {"coefficient_source", choice.source},
               {"unit", unit_name(unit)}};
  j["coefficients"] = {{"eps1", r.coefficients.eps1}, {"eps2", r.coefficients.eps2},
                       {"V1", r.coefficients.V1},     {"V2", r.coefficients.V2},
                       {"U", r.coefficients.U},       {"Ubar", r.coefficients.Ubar}};
  if (choice.literal) {
    j["quadrature"] = {
        {"points", spec.points},
        {"r_max", spec.r_max},
        {"error_estimates",
         {{"V1", choice.literal->V1.error_estimate},
          {"V2", choice.literal->V2.error_estimate},
          {"U", choice.literal->U.error_estimate},
          {"Ubar", choice.literal->Ubar.error_estimate}}}};
  }
  ordered_json stationary = {{"eta", r.stationary.eta},
                             {"boundary_clamped", r.stationary.boundary_clamped},
                             {"linear_model", r.stationary.linear_model},
                             {"curvature_sign", r.stationary.curvature_sign}};
  if (r.stationary.linear_model) {
    stationary["unclamped_eta"] = nullptr;
  } else {
    stationary["unclamped_eta"] = r.stationary.unclamped_eta;
  }
  j["eta"] = {{"value", r.eta},
              {"overridden", r.eta_overridden},
              {"stationary", stationary}};
  j["ladder"] = {{"K", r.ladder.K},
                 {"D_plus", r.ladder.D_plus},
                 {"D_minus", r.ladder.D_minus},
                 {"Lambda_plus", r.ladder.Lambda_plus},
                 {"Lambda_minus", r.ladder.Lambda_minus},
                 {"theta", r.ladder.theta}};
  j["energy"] = {{"e2a", r.energy_e2a},
                 {"hartree", r.energy_hartree},
                 {"ev", r.energy_ev},
                 {"requested_unit", unit_name(unit)},
                 {"requested_value",
                  convert_energy(r.energy_e2a, EnergyUnit::e2a, unit)},
                 {"quadratic_e2a", r.energy_quadratic_e2a},
                 {"ladder_term_e2a", r.lambda_term_e2a}};
  j["state"] = {{"amplitudes", r.state.amplitude},
                {"residual_norm", r.residual}};
  j["diagnostics"] = {
      {"exact_expectation_e2a", r.exact_expectation_e2a},
      {"sector_spectrum_e2a", r.sector_spectrum_e2a},
      {"references",
       {{{"label", kVariationalReference.label},
         {"hartree", r.vs_variational.reference_hartree},
         {"relative_error", r.vs_variational.relative_error}},
        {{"label", kExperimentReference.label},
         {"hartree", r.vs_experiment.reference_hartree},
         {"relative_error", r.vs_experiment.relative_error}},
        {{"label", kHartreeFockReference.label},
         {"hartree", r.vs_hartree_fock.reference_hartree},
         {"relative_error", r.vs_hartree_fock.relative_error}}}}};
  return j;
}

std::string report_csv(const GroundStateReport& r, EnergyUnit unit) {
  std::ostringstream csv;
  csv << "eta,eta_overridden,boundary_clamped,linear_model,curvature_sign,"
         "energy_e2a,energy_hartree,energy_ev,energy_"
      << unit_name(unit)
      << ",energy_quadratic_e2a,ladder_term_e2a,K,D_plus,D_minus,Lambda_plus,"
         "Lambda_minus,theta,residual_norm,exact_expectation_e2a,"
         "sector_0_e2a,sector_1_e2a,sector_2_e2a,sector_3_e2a,"
         "rel_err_variational,rel_err_experiment,rel_err_hartree_fock";
  for (int i = 0; i < kFockDimension; ++i) csv << ",amp_" << i;
  csv << "\n";

  csv << fmt12(r.eta) << ',' << (r.eta_overridden ? 1 : 0) << ','
      << (r.stationary.boundary_clamped ? 1 : 0) << ','
      << (r.stationary.linear_model ? 1 : 0) << ',' << r.stationary.curvature_sign
      << ',' << fmt12(r.energy_e2a) << ',' << fmt12(r.energy_hartree) << ','
      << fmt12(r.energy_ev) << ','
      << fmt12(convert_energy(r.energy_e2a, EnergyUnit::e2a, unit)) << ','
      << fmt12(r.energy_quadratic_e2a) << ',' << fmt12(r.lambda_term_e2a) << ','
      << fmt12(r.ladder.K) << ',' << fmt12(r.ladder.D_plus) << ','
      << fmt12(r.ladder.D_minus) << ',' << fmt12(r.ladder.Lambda_plus) << ','
      << fmt12(r.ladder.Lambda_minus) << ',' << fmt12(r.ladder.theta) << ','
      << fmt12(r.residual) << ',' << fmt12(r.exact_expectation_e2a);
  for (double v : r.sector_spectrum_e2a) csv << ',' << fmt12(v);
  csv << ',' << fmt12(r.vs_variational.relative_error) << ','
      << fmt12(r.vs_experiment.relative_error) << ','
      << fmt12(r.vs_hartree_fock.relative_error);
  for (double amp : r.state.amplitude) csv << ',' << fmt12(amp);
  csv << "\n";
  return csv.str();
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  QuadratureSpec spec;
  if (!parse_grid(o.grid, &spec.r_max, &spec.points)) {
    err << "error: bad --grid value '" << o.grid << "' (expected RMAX:NPOINTS)\n";
    return kExitUsage;
  }

  CoefficientChoice choice;
  std::string problem;
  try {
    if (!resolve_coefficients(o.coefficients, spec, &choice, &problem)) {
      err << "error: " << problem << "\n";
      return kExitUsage;
    }
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << "\n";
    return kExitQuadratureFailure;
  }

  EnergyUnit unit = EnergyUnit::e2a;
  if (!parse_unit(o.unit, &unit)) {
    err << "error: unknown unit '" << o.unit << "' (expected e2a, hartree, or ev)\n";
    return kExitUsage;
  }

  std::optional<double> eta_override;
  if (o.eta_set) {
    if (!(o.eta >= 0.0 && o.eta <= 1.0)) {
      err << "error: --eta must lie in [0, 1]\n";
      return kExitUsage;
    }
    eta_override = o.eta;
  }

  GroundStateReport report;
  try {
    report = solve(choice.values, eta_override);
  } catch (const DegenerateModel& e) {
    err << "error: " << e.what() << "\n";
    return kExitDegenerateModel;
  }

  std::string payload;
  if (o.format == "json") {
    payload = report_json(report, choice, unit, spec).dump(2);
    payload += "\n";
  } else if (o.format == "csv") {
    payload = report_csv(report, unit);
  } else {
    err << "error: unknown format '" << o.format << "' (expected json or csv)\n";
    return kExitUsage;
  }
  return emit(payload, o, out, err);
}

// ---------------------------------------------------------------------------
// scan

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  double ignored_r_max = 1.0;
  int points = 101;
  if (!parse_grid(o.grid, &ignored_r_max, &points)) {
    err << "error: bad --grid value '" << o.grid << "' (expected RMAX:NPOINTS; "
           "scan uses NPOINTS eta samples on [0, 1])\n";
    return kExitUsage;
  }
  if (!o.format.empty() && o.format != "csv") {
    err << "error: scan emits csv only\n";
    return kExitUsage;
  }

  CoefficientChoice choice;
  std::string problem;
  try {
    if (!resolve_coefficients(o.coefficients, QuadratureSpec{}, &choice, &problem)) {
      err << "error: " << problem << "\n";
      return kExitUsage;
    }
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << "\n";
    return kExitQuadratureFailure;
  }

  EnergyUnit unit = EnergyUnit::e2a;
  if (!parse_unit(o.unit, &unit)) {
    err << "error: unknown unit '" << o.unit << "' (expected e2a, hartree, or ev)\n";
    return kExitUsage;
  }
  const char* u = unit_name(unit);

  std::ostringstream csv;
  csv << "eta,energy_quadratic_" << u << ",energy_full_" << u << ",D_plus_" << u
      << ",D_minus_" << u << ",lambda_sum\n";
  for (int i = 0; i < points; ++i) {
    const double eta = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    try {
      const LadderData d = ladder_data(choice.values, eta);
      const GroundEnergy e = ground_energy(choice.values, eta);
      csv << fmt12(eta) << ','
          << fmt12(convert_energy(e.quadratic, EnergyUnit::e2a, unit)) << ','
          << fmt12(convert_energy(e.full, EnergyUnit::e2a, unit)) << ','
          << fmt12(convert_energy(d.D_plus, EnergyUnit::e2a, unit)) << ','
          << fmt12(convert_energy(d.D_minus, EnergyUnit::e2a, unit)) << ','
          << fmt12(d.Lambda_plus + d.Lambda_minus) << "\n";
    } catch (const DegenerateModel& e) {
      err << "error: " << e.what() << "\n";
      return kExitDegenerateModel;
    }
  }
  return emit(csv.str(), o, out, err);
}

// ---------------------------------------------------------------------------
// density

int cmd_density(const Options& o, std::ostream& out, std::ostream& err) {
  double r_max = 40.0;
  int points = 2000;
  if (!parse_grid(o.grid, &r_max, &points)) {
    err << "error: bad --grid value '" << o.grid << "' (expected RMAX:NPOINTS)\n";
    return kExitUsage;
  }
  if (!o.format.empty() && o.format != "csv") {
    err << "error: density emits csv only\n";
    return kExitUsage;
  }

  CoefficientChoice choice;
  std::string problem;
  try {
    if (!resolve_coefficients(o.coefficients, QuadratureSpec{}, &choice, &problem)) {
      err << "error: " << problem << "\n";
      return kExitUsage;
    }
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << "\n";
    return kExitQuadratureFailure;
  }

  double eta = 0.0;
  if (o.eta_set) {
    if (!(o.eta >= 0.0 && o.eta <= 1.0)) {
      err << "error: --eta must lie in [0, 1]\n";
      return kExitUsage;
    }
    eta = o.eta;
  } else {
    eta = stationary_eta(choice.values).eta;
  }

  RadialDensityProfile profile;
  try {
    profile = density_profile(choice.values, eta, uniform_grid(r_max, points));
  } catch (const DegenerateModel& e) {
    err << "error: " << e.what() << "\n";
    return kExitDegenerateModel;
  }

  std::ostringstream csv;
  csv << "r,density\n";
  for (std::size_t i = 0; i < profile.radius.size(); ++i) {
    csv << fmt12(profile.radius[i]) << ',' << fmt12(profile.density[i]) << "\n";
  }
  csv << "integral," << fmt12(profile.integral) << "\n";
  return emit(csv.str(), o, out, err);
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  CoefficientChoice choice;
  std::string problem;
  try {
    if (!resolve_coefficients(o.coefficients, QuadratureSpec{}, &choice, &problem)) {
      err << "error: " << problem << "\n";
      return kExitUsage;
    }
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << "\n";
    return kExitQuadratureFailure;
  }

  const SignString signs =
      o.negative_control ? SignString::none : SignString::fermionic;
  const IdentityReport report = verify_identity_suite(choice.values, signs);

  std::ostringstream text;
  text << "operator identity suite (coefficients: " << choice.source;
  if (o.negative_control) text << ", fermionic sign string disabled";
  text << ")\n\n";
  for (const auto& check : report.checks) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-48s  %-24s  %s\n", check.name.c_str(),
                  fmt17(check.deviation).c_str(),
                  check.deviation == 0.0 ? "ok" : "FAIL");
    text << line;
  }
  text << "\nidentities: " << report.checks.size()
       << "  max deviation: " << fmt17(report.max_deviation())
       << "  result: " << (report.all_exact() ? "PASS" : "FAIL") << "\n";

  const int emitted = emit(text.str(), o, out, err);
  if (emitted != kExitOk) return emitted;
  return report.all_exact() ? kExitOk : kExitIdentityFailure;
}

// ---------------------------------------------------------------------------
// integrals

int cmd_integrals(const Options& o, std::ostream& out, std::ostream& err) {
  QuadratureSpec spec;
  if (!parse_grid(o.grid, &spec.r_max, &spec.points)) {
    err << "error: bad --grid value '" << o.grid << "' (expected RMAX:NPOINTS)\n";
    return kExitUsage;
  }

  LiteralCoefficientSet literal;
  try {
    literal = quadrature_coefficients(spec);
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << "\n";
    return kExitQuadratureFailure;
  }
  const ModelCoefficients builtin = builtin_coefficients();

  struct Row {
    const char* name;
    double builtin_value;
    const QuadratureResult* literal_value;
  };
  const Row rows[] = {{"V1", builtin.V1, &literal.V1},
                      {"V2", builtin.V2, &literal.V2},
                      {"U", builtin.U, &literal.U},
                      {"Ubar", builtin.Ubar, &literal.Ubar}};

  std::ostringstream text;
  text << "orbital repulsion integrals (r_max=" << fmt12(spec.r_max)
       << ", points=" << spec.points << ")\n\n";
  {
    char line[160];
    std::snprintf(line, sizeof line, "  %-5s  %16s  %16s  %12s  %10s  %s\n",
                  "term", "builtin", "literal", "error_est", "ratio", "note");
    text << line;
  }
  for (const auto& row : rows) {
    const double literal_value = row.literal_value->value;
    const double ratio = row.builtin_value / literal_value;
    const char* note = "";
    if (row.builtin_value * literal_value < 0.0) {
      note = "opposite sign";
    } else if (std::abs(ratio - 0.5) < 0.02) {
      note = "builtin = literal / 2";
    }
    char line[160];
    std::snprintf(line, sizeof line, "  %-5s  %16.9g  %16.9g  %12.3e  %10.6g  %s\n",
                  row.name, row.builtin_value, literal_value,
                  row.literal_value->error_estimate, ratio, note);
    text << line;
  }
  text << "\n  level energies: eps1=" << fmt12(builtin.eps1)
       << " eps2=" << fmt12(builtin.eps2)
       << " (orbital values, shared by both sets)\n";
  return emit(text.str(), o, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-level pairing model of the helium atom: exact operator "
               "identities, mean-field ladder solver, and orbital Coulomb "
               "integrals."};
  app.set_version_flag("--version", std::string("helium-ladder ") + kVersion);
  app.require_subcommand(1);

  Options solve_opts, scan_opts, density_opts, verify_opts, integrals_opts;

  CLI::App* solve = app.add_subcommand("solve", "Ground-state report");
  solve_opts.format = "json";
  solve_opts.grid = "60:400";
  solve->add_option("--coefficients", solve_opts.coefficients,
                    "Coefficient source: paper, quadrature, or file:PATH");
  solve->add_option("--eta", solve_opts.eta, "Override the stationary filling");
  solve->add_option("--unit", solve_opts.unit, "Energy unit: e2a, hartree, or ev");
  solve->add_option("--format", solve_opts.format, "Output format: json or csv");
  solve->add_option("--grid", solve_opts.grid,
                    "Quadrature grid RMAX:NPOINTS for --coefficients quadrature");
  solve->add_option("--output", solve_opts.output, "Write output to a file");

  CLI::App* scan = app.add_subcommand("scan", "Sweep eta over [0, 1] (csv)");
  scan_opts.grid = "1:101";
  scan->add_option("--coefficients", scan_opts.coefficients,
                   "Coefficient source: paper, quadrature, or file:PATH");
  scan->add_option("--unit", scan_opts.unit, "Energy unit: e2a, hartree, or ev");
  scan->add_option("--format", scan_opts.format, "Output format (csv only)");
  scan->add_option("--grid", scan_opts.grid,
                   "RMAX:NPOINTS; NPOINTS eta samples on [0, 1]");
  scan->add_option("--output", scan_opts.output, "Write output to a file");

  CLI::App* density = app.add_subcommand("density", "Radial density profile (csv)");
  density_opts.grid = "40:2000";
  density->add_option("--coefficients", density_opts.coefficients,
                      "Coefficient source: paper, quadrature, or file:PATH");
  density->add_option("--eta", density_opts.eta,
                      "Filling (default: stationary point)");
  density->add_option("--format", density_opts.format, "Output format (csv only)");
  density->add_option("--grid", density_opts.grid, "Radial grid RMAX:NPOINTS");
  density->add_option("--output", density_opts.output, "Write output to a file");

  CLI::App* verify = app.add_subcommand("verify", "Operator identity suite");
  verify->add_option("--coefficients", verify_opts.coefficients,
                     "Coefficient source: paper, quadrature, or file:PATH");
  verify->add_flag("--negative-control", verify_opts.negative_control,
                   "Drop the fermionic sign string; the suite must fail");
  verify->add_option("--output", verify_opts.output, "Write output to a file");

  CLI::App* integrals =
      app.add_subcommand("integrals", "Orbital Coulomb integrals report");
  integrals_opts.grid = "60:400";
  integrals->add_option("--grid", integrals_opts.grid,
                        "Quadrature grid RMAX:NPOINTS");
  integrals->add_option("--output", integrals_opts.output, "Write output to a file");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("helium-ladder");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  solve_opts.eta_set = solve->count("--eta") > 0;
  density_opts.eta_set = density->count("--eta") > 0;

  if (solve->parsed()) return cmd_solve(solve_opts, out, err);
  if (scan->parsed()) return cmd_scan(scan_opts, out, err);
  if (density->parsed()) return cmd_density(density_opts, out, err);
  if (verify->parsed()) return cmd_verify(verify_opts, out, err);
  if (integrals->parsed()) return cmd_integrals(integrals_opts, out, err);

  err << "error: no subcommand given\n";
  return kExitUsage;
}

}  // namespace helad::cli
