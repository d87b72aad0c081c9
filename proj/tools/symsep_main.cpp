// Command-line front end: builds the bundled states, runs the separability
// criteria, the operator Schmidt decomposition and the witness pipeline on
// state files, and emits text or JSON reports.
//
// Exit codes: 0 = no criterion violated, 1 = error, 2 = entanglement
// detected.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "symsep/criteria.hpp"
#include "symsep/io.hpp"
#include "symsep/schmidt.hpp"
#include "symsep/states.hpp"
#include "symsep/witness.hpp"

namespace {

using nlohmann::json;
using namespace symsep;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDetected = 2;

json report_envelope(const std::string& command, const std::string& input,
                     double tol) {
  return {{"tool", kToolName},     {"version", kToolVersion},
          {"command", command},    {"input", input},
          {"tolerance", tol},      {"seed", nullptr},
          {"kind", nullptr},       {"d", nullptr},
          {"n", nullptr},          {"symmetric", nullptr},
          {"permutationally_invariant", nullptr},
          {"criteria", nullptr},   {"schmidt", nullptr},
          {"witness", nullptr},    {"multiqubit", nullptr},
          {"entangled_detected", false}};
}

json criteria_to_json(const CriteriaReport& r) {
  return {{"ppt_min_eigenvalue", r.ppt_min_eigenvalue},
          {"ccnr_trace_norm", r.ccnr_trace_norm},
          {"eta_min_eigenvalue", r.eta_min_eigenvalue},
          {"corr_min_eigenvalue", r.corr_min_eigenvalue},
          {"covariance_lhs", r.covariance_lhs},
          {"covariance_rhs", r.covariance_rhs},
          {"violated",
           {{"ppt", r.ppt_violated},
            {"ccnr", r.ccnr_violated},
            {"a_tensor_a", r.a_tensor_a_violated},
            {"eta", r.eta_violated},
            {"correlation", r.correlation_violated},
            {"covariance", r.covariance_violated}}}};
}

json schmidt_to_json(const SchmidtDecomposition& sd,
                     const BipartiteState& s) {
  Eigen::MatrixXcd rebuilt =
      Eigen::MatrixXcd::Zero(s.rho.rows(), s.rho.cols());
  for (Eigen::Index k = 0; k < sd.coefficients.size(); ++k) {
    const auto& m = sd.observables[static_cast<std::size_t>(k)];
    rebuilt += sd.coefficients(k) * kron(m, m);
  }
  json coeffs = json::array();
  for (Eigen::Index k = 0; k < sd.coefficients.size(); ++k)
    coeffs.push_back(sd.coefficients(k));
  return {{"coefficients", std::move(coeffs)},
          {"sum", sd.coefficients.sum()},
          {"reconstruction_error", (rebuilt - s.rho).norm()}};
}

BipartiteState load_bipartite(const std::string& path, double tol) {
  StateFile file = load_state_file(path);
  if (file.kind != "bipartite")
    throw ValidationError("expected a bipartite state file, got '" +
                          file.kind + "' (use the multiqubit command)");
  return make_bipartite_state(file.dim, std::move(file.matrix), tol);
}

MultiQubitState load_multiqubit(const std::string& path, double tol) {
  StateFile file = load_state_file(path);
  if (file.kind != "multiqubit")
    throw ValidationError("expected a multiqubit state file, got '" +
                          file.kind + "'");
  return make_multiqubit_state(file.dim, std::move(file.matrix), tol);
}

void emit(const json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump(2) << '\n';
    return;
  }
  std::cout << report.at("tool").get<std::string>() << ' '
            << report.at("command").get<std::string>() << ": "
            << report.at("input").get<std::string>() << '\n';
  if (report.at("d").is_number())
    std::cout << "  local dimension d = " << report.at("d").get<int>()
              << '\n';
  if (report.at("n").is_number())
    std::cout << "  qubits n = " << report.at("n").get<int>() << '\n';
  if (report.at("symmetric").is_boolean())
    std::cout << "  symmetric: "
              << (report.at("symmetric").get<bool>() ? "yes" : "no")
              << "   permutationally invariant: "
              << (report.at("permutationally_invariant").get<bool>() ? "yes"
                                                                     : "no")
              << '\n';
  if (report.at("criteria").is_object()) {
    const auto& c = report.at("criteria");
    const auto& v = c.at("violated");
    auto line = [&](const char* label, double value, const char* key) {
      std::cout << "  " << label << value
                << (v.at(key).get<bool>() ? "   VIOLATED" : "   ok") << '\n';
    };
    line("PPT          min eigenvalue  ",
         c.at("ppt_min_eigenvalue").get<double>(), "ppt");
    line("CCNR         trace norm      ",
         c.at("ccnr_trace_norm").get<double>(), "ccnr");
    line("<A(x)A>      min value       ",
         c.at("eta_min_eigenvalue").get<double>(), "a_tensor_a");
    line("eta          min eigenvalue  ",
         c.at("eta_min_eigenvalue").get<double>(), "eta");
    line("correlation  min eigenvalue  ",
         c.at("corr_min_eigenvalue").get<double>(), "correlation");
    std::cout << "  covariance   " << c.at("covariance_lhs").get<double>()
              << " <= " << c.at("covariance_rhs").get<double>()
              << (v.at("covariance").get<bool>() ? "   VIOLATED" : "   ok")
              << '\n';
  }
  if (report.at("schmidt").is_object()) {
    const auto& sd = report.at("schmidt");
    std::cout << "  schmidt coefficients:";
    for (const auto& x : sd.at("coefficients"))
      std::cout << ' ' << x.get<double>();
    std::cout << "\n  schmidt sum = " << sd.at("sum").get<double>()
              << ", reconstruction error = "
              << sd.at("reconstruction_error").get<double>() << '\n';
  }
  if (report.at("witness").is_object()) {
    const auto& w = report.at("witness");
    std::cout << "  witness constant    = " << w.at("constant").get<double>()
              << "\n  witness expectation = "
              << w.at("expectation").get<double>()
              << "\n  witness value       = " << w.at("value").get<double>()
              << (w.at("detected").get<bool>() ? "   ENTANGLED" : "   ok")
              << '\n';
  }
  if (report.at("multiqubit").is_object()) {
    const auto& m = report.at("multiqubit");
    std::cout << "  partition left =";
    for (const auto& q : m.at("partition")) std::cout << ' ' << q.get<int>();
    std::cout << "\n  PT min eigenvalue = "
              << m.at("pt_min_eigenvalue").get<double>() << '\n';
    if (m.at("realignment_trace_norm").is_number())
      std::cout << "  realignment trace norm = "
                << m.at("realignment_trace_norm").get<double>() << '\n';
  }
  std::cout << (report.at("entangled_detected").get<bool>()
                    ? "  verdict: entanglement detected"
                    : "  verdict: no criterion violated")
            << '\n';
}

int run_builtin(const std::string& name, int n, const std::string& out) {
  if (name == "rho33") {
    save_state_file(out, builtin_rho33());
  } else if (name == "smolin") {
    save_state_file(out, smolin_state(n));
  } else {
    throw UnknownBuiltinError("unknown builtin: " + name);
  }
  std::cout << "wrote " << out << '\n';
  return kExitOk;
}

int run_analyze(const std::string& input, double tol,
                const std::string& format) {
  const BipartiteState s = load_bipartite(input, tol);
  const LocalOrthogonalBasis basis = hermitian_basis(s.d);
  const CriteriaReport r = full_report(s, basis, tol);

  json report = report_envelope("analyze", input, tol);
  report["kind"] = "bipartite";
  report["d"] = s.d;
  report["symmetric"] = r.symmetric;
  report["permutationally_invariant"] = r.permutationally_invariant;
  report["criteria"] = criteria_to_json(r);
  if (r.permutationally_invariant)
    report["schmidt"] = schmidt_to_json(schmidt_decompose(s, basis), s);

  // The eta/correlation conditions certify entanglement only on symmetric
  // states; PPT, CCNR and the covariance inequality hold generally.
  const bool detected =
      r.ppt_violated || r.ccnr_violated || r.covariance_violated ||
      (r.symmetric && (r.eta_violated || r.correlation_violated));
  report["entangled_detected"] = detected;
  emit(report, format);
  return detected ? kExitDetected : kExitOk;
}

int run_schmidt(const std::string& input, double tol,
                const std::string& format) {
  const BipartiteState s = load_bipartite(input, tol);
  const LocalOrthogonalBasis basis = hermitian_basis(s.d);
  const SchmidtDecomposition sd = schmidt_decompose(s, basis);

  json report = report_envelope("schmidt", input, tol);
  report["kind"] = "bipartite";
  report["d"] = s.d;
  report["symmetric"] = is_symmetric(s, std::max(tol, kHermiticitySlack));
  report["permutationally_invariant"] = true;
  report["schmidt"] = schmidt_to_json(sd, s);
  emit(report, format);
  return kExitOk;
}

int run_witness(const std::string& input, double tol, int restarts,
                std::uint64_t seed, const std::string& format,
                const std::string& out) {
  const BipartiteState s = load_bipartite(input, tol);
  if (!is_symmetric(s, std::max(tol, kHermiticitySlack)))
    throw NotSymmetricError("witness: state is not symmetric");

  // Keep the top two thirds of the Schmidt coefficients; for d = 3 that is
  // exactly the top six.
  const int kept =
      static_cast<int>(std::ceil(double(s.d) * s.d * 2.0 / 3.0));
  const Witness w = build_schmidt_witness(s, kept, restarts, seed);
  const double value = evaluate(w, s);
  const double expectation = w.constant - value;
  const bool detected = value < -kWitnessDetection;

  json report = report_envelope("witness", input, tol);
  report["kind"] = "bipartite";
  report["d"] = s.d;
  report["seed"] = seed;
  report["symmetric"] = true;
  report["permutationally_invariant"] = true;
  report["witness"] = {{"kind", to_string(w.kind)},
                       {"constant", w.constant},
                       {"expectation", expectation},
                       {"value", value},
                       {"detected", detected},
                       {"restarts", restarts},
                       {"kept_coefficients", kept}};
  report["entangled_detected"] = detected;
  if (!out.empty()) save_witness_file(out, w);
  emit(report, format);
  return detected ? kExitDetected : kExitOk;
}

int run_multiqubit(const std::string& input, const std::vector<int>& left,
                   double tol, const std::string& format) {
  const MultiQubitState s = load_multiqubit(input, tol);
  const Bipartition p = make_bipartition(left, s.n);
  const double pt_min =
      min_eigenvalue(multiqubit_partial_transpose(s, p));
  const bool halves = p.left.size() == p.right.size();
  double realignment = 0.0;
  if (halves) realignment = trace_norm(multiqubit_realign(s, p));

  json report = report_envelope("multiqubit", input, tol);
  report["kind"] = "multiqubit";
  report["n"] = s.n;
  json section = {{"partition", p.left},
                  {"pt_min_eigenvalue", pt_min},
                  {"realignment_trace_norm", nullptr}};
  if (halves) section["realignment_trace_norm"] = realignment;
  report["multiqubit"] = std::move(section);

  const bool detected =
      pt_min < -tol || (halves && realignment > 1.0 + tol);
  report["entangled_detected"] = detected;
  emit(report, format);
  return detected ? kExitDetected : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separability analysis for symmetric bipartite states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string input, out, format = "text", builtin_name;
  double tol = 1e-9;
  int restarts = 200;
  std::uint64_t seed = 42;
  int smolin_n = 0;
  std::vector<int> partition;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("--input,-i", input, "state file to analyze")
          ->required();
    cmd->add_option("--tol", tol, "verdict and validation tolerance")
        ->envname("SYMSEP_TOL");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* builtin = app.add_subcommand(
      "builtin", "write one of the bundled states to a file");
  builtin->add_option("name", builtin_name, "rho33 or smolin")->required();
  builtin->add_option("--n", smolin_n, "half-system size for smolin");
  builtin->add_option("--out,-o", out, "output path")->required();

  CLI::App* analyze =
      app.add_subcommand("analyze", "run all separability criteria");
  add_common(analyze, true);

  CLI::App* schmidt =
      app.add_subcommand("schmidt", "operator Schmidt decomposition");
  add_common(schmidt, true);

  CLI::App* witness = app.add_subcommand(
      "witness", "build and evaluate the Schmidt-based witness");
  add_common(witness, true);
  witness->add_option("--restarts", restarts, "see-saw restarts");
  witness->add_option("--seed", seed, "optimizer seed");
  witness->add_option("--out,-o", out, "write the witness to this file");

  CLI::App* multiqubit = app.add_subcommand(
      "multiqubit", "partial transpose / realignment across a bipartition");
  add_common(multiqubit, true);
  multiqubit
      ->add_option("--partition", partition,
                   "comma separated qubit indices of the left side")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (builtin->parsed()) {
      if (builtin_name == "smolin" && smolin_n < 1)
        throw ValidationError("smolin requires --n >= 1");
      return run_builtin(builtin_name, smolin_n, out);
    }
    if (analyze->parsed()) return run_analyze(input, tol, format);
    if (schmidt->parsed()) return run_schmidt(input, tol, format);
    if (witness->parsed())
      return run_witness(input, tol, restarts, seed, format, out);
    if (multiqubit->parsed())
      return run_multiqubit(input, partition, tol, format);
  } catch (const Error& e) {
    std::cerr << "symsep: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "symsep: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
