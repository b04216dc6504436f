// Command-line front door: ingest function specs in mode-form JSON or
// sample-form CSV, run the analysis/construction/certification pipeline,
// and emit machine-readable reports.
//
// Exit codes: 0 success and all requested certificates pass; 2 parse/usage
// error; 3 hypothesis failure; 4 budget/construction failure; 5 certificate
// failure.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hartogs/report_io.hpp"

using namespace hartogs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitBudget = 4;
constexpr int kExitCertificate = 5;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const Json& report, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << report.dump(2) << std::endl;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file: " + out_path);
    out << report.dump(2) << '\n';
  }
}

Complex parse_complex_arg(const std::string& s) {
  std::istringstream is(s);
  Scalar re, im;
  char comma;
  if (!(is >> re >> comma >> im) || comma != ',')
    throw ParseError("expected a complex number as re,im: " + s);
  return {re, im};
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  Scalar ms() const {
    return std::chrono::duration<Scalar, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

int run(int argc, char** argv) {
  CLI::App app{
      "hartogs-lab: Fourier-mode hypothesis checks, smooth approximant "
      "construction, and analytic annulus/disc family certificates for maps "
      "of the closed unit disc"};
  app.require_subcommand(1);

  // ---- analyze ----
  std::string an_input, an_out = "-";
  int an_max_mode = 8;
  auto* analyze = app.add_subcommand(
      "analyze", "Classify a configuration against the extension criteria");
  analyze->add_option("input", an_input, "mode-form .json or sample .csv")
      ->required();
  analyze->add_option("--max-mode", an_max_mode,
                      "mode band extracted from CSV samples");
  analyze->add_option("--out", an_out, "report path (default stdout)");

  // ---- approximate ----
  std::string ap_input, ap_out = "-", ap_approx_out, ap_sign = "auto";
  Scalar ap_epsilon = 0;
  auto* approximate = app.add_subcommand(
      "approximate", "Build and verify the smooth mode-limited approximant");
  approximate->add_option("input", ap_input, "mode-form .json or sample .csv")
      ->required();
  approximate->add_option("--epsilon", ap_epsilon, "target sup closeness")
      ->required();
  approximate
      ->add_option("--mode-sign", ap_sign,
                   "construction route: auto|two-sided|nonneg")
      ->check(CLI::IsMember({"auto", "two-sided", "nonneg"}));
  approximate->add_option("--out", ap_out, "report path (default stdout)");
  approximate->add_option("--approx-out", ap_approx_out,
                          "write the approximant JSON here");

  // ---- family ----
  std::string fa_input, fa_out = "-", fa_kind = "annulus", fa_csv;
  Scalar fa_rg = 0.2, fa_rb = 0.1;
  int fa_slices = 40, fa_eta = 5;
  auto* family = app.add_subcommand(
      "family",
      "Certify the analytic annulus/disc family against a tube neighbourhood");
  family->add_option("approximant", fa_input, "approximant .json")->required();
  family->add_option("--kind", fa_kind, "annulus|disc")
      ->check(CLI::IsMember({"annulus", "disc"}));
  family->add_option("--tube-rg", fa_rg, "graph tube radius");
  family->add_option("--tube-rb", fa_rb, "boundary collar width");
  family->add_option("--slices", fa_slices, "radii in the schedule");
  family->add_option("--eta-grid", fa_eta, "translate grid points per axis");
  family->add_option(
      "--dump-csv", fa_csv,
      "slice dump path; columns r,eta_index,abs_zeta,arg_zeta,component,re,im");
  family->add_option("--out", fa_out, "report path (default stdout)");

  // ---- examples ----
  auto* examples =
      app.add_subcommand("examples", "Reproduce the worked examples");
  examples->require_subcommand(1);
  int ex_n = 3;
  std::string ex_out_cutoff = "-", ex_out_wermer = "-", ex_out_rosay = "-";
  auto* ex_cutoff =
      examples->add_subcommand("cutoff", "cutoff configuration, single "
                                         "negative mode with large interior sup");
  ex_cutoff->add_option("--n", ex_n, "interior sup exceeds this bound");
  ex_cutoff->add_option("--out", ex_out_cutoff, "report path");
  auto* ex_wermer = examples->add_subcommand(
      "wermer", "totally-real disc: reality margin and tube-radius bound");
  ex_wermer->add_option("--out", ex_out_wermer, "report path");
  RosayParams rosay_params;
  auto* ex_rosay = examples->add_subcommand(
      "rosay", "planar tangency ratio of the pseudoconvex counterexample");
  ex_rosay->add_option("--s", rosay_params.s, "oval size parameter");
  ex_rosay->add_option("--delta", rosay_params.delta, "anisotropy parameter");
  ex_rosay->add_option("--bigN", rosay_params.big_n,
                       "exponent (0 = smallest admissible)");
  ex_rosay->add_option("--alpha", rosay_params.alpha,
                       "barrier weight (0 = largest admissible power of 10)");
  ex_rosay->add_option("--out", ex_out_rosay, "report path");

  // ---- extend ----
  std::string xt_name, xt_z = "0,0", xt_w = "0,0", xt_out = "-";
  Scalar xt_rho = 0.95;
  int xt_nodes = 256;
  auto* extend = app.add_subcommand(
      "extend", "Evaluate the Cauchy-slice continuation of a built-in "
                "reference function");
  extend->add_option("--f", xt_name, "built-in reference name")->required();
  extend->add_option("--z", xt_z, "evaluation point, re,im");
  extend->add_option("--w", xt_w, "fiber point(s), re,im[;re,im...]");
  extend->add_option("--rho", xt_rho, "integration circle radius");
  extend->add_option("--nodes", xt_nodes, "quadrature nodes (>= 64)");
  extend->add_option("--out", xt_out, "report path (default stdout)");

  auto* list_refs = app.add_subcommand(
      "references", "List the built-in reference functions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (analyze->parsed()) {
    const Timer timer;
    const std::string bytes = slurp(an_input);
    const RadialModeSeries series = load_series(an_input, an_max_mode);
    const HypothesisReport hyp = classify(series);
    Json report = make_run_report(fnv1a_hex(bytes), "analyze");
    report["hypothesis"] = hypothesis_to_json(hyp);
    report["timings"] = {{"total_ms", timer.ms()}};
    emit(report, an_out);
    return kExitOk;
  }

  if (approximate->parsed()) {
    if (!(ap_epsilon > 0)) throw ParseError("--epsilon must be > 0");
    const Timer timer;
    const std::string bytes = slurp(ap_input);
    const RadialModeSeries series = load_series(ap_input);
    Json report = make_run_report(fnv1a_hex(bytes), "approximate");
    report["hypothesis"] = hypothesis_to_json(classify(series));
    std::optional<ModeSign> sign;
    if (ap_sign == "two-sided") sign = ModeSign::two_sided;
    if (ap_sign == "nonneg") sign = ModeSign::nonnegative_only;
    try {
      const SmoothApproximant g = build_smooth_approximant(series, ap_epsilon, sign);
      report["ledger"] = ledger_to_json(g.ledger());
      report["fejer"] = {{"degree", g.ledger().degree},
                         {"achieved_sup_error", g.ledger().achieved.fejer},
                         {"target", g.ledger().delta / 2}};
      report["verify"] = verify_to_json(verify_approximant(series, g));
      report["timings"] = {{"total_ms", timer.ms()}};
      if (!ap_approx_out.empty()) {
        std::ofstream out(ap_approx_out);
        if (!out)
          throw ParseError("cannot open output file: " + ap_approx_out);
        out << approximant_to_json(g).dump(2) << '\n';
      }
      emit(report, ap_out);
      return kExitOk;
    } catch (const HypothesisError& e) {
      report["error"] = e.what();
      emit(report, ap_out);
      std::cerr << "hypothesis failure: " << e.what() << '\n';
      return kExitHypothesis;
    }
  }

  if (family->parsed()) {
    const Timer timer;
    const std::string bytes = slurp(fa_input);
    const SmoothApproximant g = load_approximant(fa_input);
    const FamilyKind kind =
        fa_kind == "disc" ? FamilyKind::disc : FamilyKind::annulus;
    const TubeNeighborhood tube(g.source(), fa_rg, fa_rb);
    const Scalar eta_radius = std::max(
        0.0, std::min(g.ledger().eta_slack,
                      fa_rg - g.ledger().achieved_closeness) /
                 2);
    const auto eta_grid =
        default_eta_grid(g.series().components(), eta_radius, fa_eta);
    const ArrayXd schedule =
        default_r_schedule(kind, g.series().grid().r_min(), fa_slices);
    const KontinuitaetssatzCertificate cert =
        certify_family(g, tube, kind, eta_grid, schedule);
    Json report = make_run_report(fnv1a_hex(bytes), "family");
    report["kontinuitaetssatz"] = certificate_to_json(cert);
    report["psi"] = limit_graph_to_json(
        limit_graph(g, kind, VectorXcd::Zero(g.series().components()), false));
    report["timings"] = {{"total_ms", timer.ms()}};
    if (!fa_csv.empty()) {
      std::ofstream out(fa_csv);
      if (!out) throw ParseError("cannot open output file: " + fa_csv);
      bool header = true;
      for (int i = 0; i < static_cast<int>(eta_grid.size()); ++i)
        for (Eigen::Index k = 0; k < schedule.size(); ++k) {
          try {
            const FamilySlice slice =
                kind == FamilyKind::annulus
                    ? annulus_map(g, schedule[k], eta_grid[i])
                    : disc_map(g, schedule[k], eta_grid[i]);
            dump_slice_csv(out, slice, i, header);
            header = false;
          } catch (const CertificateError&) {
            // Detached slice: excluded from the dump.
          }
        }
    }
    emit(report, fa_out);
    return cert.pass ? kExitOk : kExitCertificate;
  }

  if (examples->parsed()) {
    const Timer timer;
    ExampleReport rep;
    std::string out_path = "-";
    if (ex_cutoff->parsed()) {
      rep = cutoff_example(ex_n);
      out_path = ex_out_cutoff;
    } else if (ex_wermer->parsed()) {
      rep = wermer_example();
      out_path = ex_out_wermer;
    } else {
      rep = rosay_example(rosay_params);
      out_path = ex_out_rosay;
    }
    Json report = make_run_report(fnv1a_hex(rep.name), "examples");
    report["examples"] = example_to_json(rep);
    report["timings"] = {{"total_ms", timer.ms()}};
    emit(report, out_path);
    return rep.pass ? kExitOk : kExitCertificate;
  }

  if (extend->parsed()) {
    const ReferenceFunction* ref = find_reference(xt_name);
    if (!ref) throw ParseError("unknown reference function: " + xt_name);
    const Complex z = parse_complex_arg(xt_z);
    std::vector<Complex> ws;
    std::istringstream is(xt_w);
    std::string tok;
    while (std::getline(is, tok, ';')) ws.push_back(parse_complex_arg(tok));
    VectorXcd w(ws.size());
    for (size_t i = 0; i < ws.size(); ++i) w[i] = ws[i];
    const Complex value = cauchy_slice_extend(*ref, xt_rho, z, w, xt_nodes);
    Json report = make_run_report(fnv1a_hex(xt_name), "extend");
    report["extend"] = {{"f", xt_name},
                        {"z", Json::array({z.real(), z.imag()})},
                        {"rho", xt_rho},
                        {"nodes", xt_nodes},
                        {"value", Json::array({value.real(), value.imag()})},
                        {"direct", Json::array({ref->f(z, w).real(),
                                                ref->f(z, w).imag()})}};
    emit(report, xt_out);
    return kExitOk;
  }

  if (list_refs->parsed()) {
    Json out = Json::array();
    for (const auto& r : builtin_references())
      out.push_back({{"name", r.name}, {"singularity", r.singularity}});
    std::cout << out.dump(2) << std::endl;
    return kExitOk;
  }

  return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kExitParse;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis failure: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const ResolutionError& e) {
    std::cerr << "budget failure: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ConstructionError& e) {
    std::cerr << "budget failure: " << e.what() << '\n';
    return kExitBudget;
  } catch (const CertificateError& e) {
    std::cerr << "certificate failure: " << e.what() << '\n';
    return kExitCertificate;
  } catch (const ConsistencyError& e) {
    std::cerr << "certificate failure: " << e.what() << '\n';
    return kExitCertificate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
