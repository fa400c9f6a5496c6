// Command-line front end: exact ellipsoid action spectra, lattice capacity
// families, randomized selector-axiom verification, filtered Kunneth checks,
// and gap/Weyl/Dirichlet evidence reports.
//
// Exit codes: 0 success or verifier PASS, 1 verifier FAIL or runtime/I-O
// failure, 2 usage or parse error.  All JSON output uses ordered keys and a
// trailing newline; byte-identical reruns are part of the contract, and
// REEBSPEC_THREADS only caps worker threads without affecting any output.

#include <CLI11.hpp>

#include "reebspec/criterion.hpp"
#include "reebspec/sampling.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace reebspec;

// "250", "1e3", "25e2" -> integer; rejects anything else.
std::uint64_t parse_uint_sci(const std::string& token) {
  std::size_t i = 0;
  auto digits = [&]() {
    std::uint64_t v = 0;
    std::size_t start = i;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(token[i] - '0');
      if (v > 1000000000000000000ULL) throw ParseError("count too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected digits", start);
    return v;
  };
  std::uint64_t mantissa = digits();
  if (i < token.size() && (token[i] == 'e' || token[i] == 'E')) {
    ++i;
    std::uint64_t exp = digits();
    if (exp > 18) throw ParseError("exponent too large", i);
    for (std::uint64_t e = 0; e < exp; ++e) {
      if (mantissa > 1000000000000000000ULL / 10) throw ParseError("count too large", i);
      mantissa *= 10;
    }
  }
  if (i != token.size()) throw ParseError("trailing characters in count", i);
  return mantissa;
}

std::vector<std::uint64_t> parse_checkpoints(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string token =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    out.push_back(parse_uint_sci(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

SelectorFamily resolve_selector(const std::string& name, std::size_t n) {
  if (name == "auto") {
    return SelectorFamily{n == 2 ? SelectorKind::EchLattice : SelectorKind::ChLattice};
  }
  return SelectorFamily{selector_from_name(name)};
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file \"" + out_path + "\"");
  out << payload;
  if (!out.good()) throw std::runtime_error("write failed for \"" + out_path + "\"");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"Exact Reeb action spectra of ellipsoids, lattice capacity "
               "selectors, and closing-criterion gap diagnostics"};
  app.require_subcommand(1);
  unsigned threads = thread_budget();

  std::string axes_text;
  std::string out_path;
  std::string format = "json";
  std::string selector_name_opt = "auto";
  std::string cutoff_text;
  std::uint64_t count = 50;
  std::uint64_t horizon = 100;
  std::uint64_t max_q = 10;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::uint64_t random_n = 100;
  std::uint64_t max_dim = 6;
  std::string axiom;
  std::string field_name = "Q";
  std::string checkpoints_text = "1e2,1e3";

  auto* c_spectrum = app.add_subcommand("spectrum", "Action spectrum window of an ellipsoid");
  c_spectrum->add_option("--axes", axes_text, "Comma-separated axes, e.g. 1,3/2 or 1,sqrt(2)")
      ->required();
  c_spectrum->add_option("--cutoff", cutoff_text, "Window cutoff (exact scalar)")->required();
  c_spectrum->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  c_spectrum->add_option("--out", out_path, "Output path (default stdout)");

  auto* c_capacities = app.add_subcommand("capacities", "Lattice capacity table c_0..c_K");
  c_capacities->add_option("--axes", axes_text, "Comma-separated axes")->required();
  c_capacities->add_option("--count", count, "Largest index K")->required();
  c_capacities->add_option("--selector", selector_name_opt, "ech, ch, or auto");
  c_capacities->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  c_capacities->add_option("--out", out_path, "Output path (default stdout)");

  auto* c_verify =
      app.add_subcommand("verify", "Randomized selector-axiom verification trials");
  c_verify
      ->add_option("--axiom", axiom,
                   "spectrality|conformality|monotonicity|continuity|locality")
      ->required();
  c_verify->add_option("--trials", trials, "Number of random ellipsoids");
  c_verify->add_option("--seed", seed, "Sampling seed");
  c_verify->add_option("--count", count, "Capacity horizon K per trial");
  c_verify->add_option("--out", out_path, "Output path (default stdout)");

  auto* c_kunneth =
      app.add_subcommand("kunneth-check", "Filtered Kunneth comparison on random complexes");
  c_kunneth->add_option("--random", random_n, "Number of random complex pairs");
  c_kunneth->add_option("--max-dim", max_dim, "Largest complex dimension");
  c_kunneth->add_option("--field", field_name, "Q or F2")
      ->check(CLI::IsMember({"Q", "F2"}));
  c_kunneth->add_option("--seed", seed, "Sampling seed");
  c_kunneth->add_option("--out", out_path, "Output path (default stdout)");

  auto* c_gap = app.add_subcommand("gap", "Unnormalized and normalized capacity gaps");
  c_gap->add_option("--axes", axes_text, "Comma-separated axes")->required();
  c_gap->add_option("--horizon", horizon, "Capacity horizon K")->required();
  c_gap->add_option("--selector", selector_name_opt, "ech, ch, or auto");
  c_gap->add_option("--out", out_path, "Output path (default stdout)");

  auto* c_weyl = app.add_subcommand("weyl", "Deviation of c_k^2/k from 2*a1*a2");
  c_weyl->add_option("--axes", axes_text, "Two comma-separated axes")->required();
  c_weyl->add_option("--checkpoints", checkpoints_text, "Comma-separated k values, e.g. 1e3,1e4");
  c_weyl->add_option("--selector", selector_name_opt, "ech, ch, or auto");
  c_weyl->add_option("--out", out_path, "Output path (default stdout)");

  auto* c_dirichlet =
      app.add_subcommand("dirichlet", "Near-collision witnesses from the axis ratio");
  c_dirichlet->add_option("--axes", axes_text, "Two comma-separated axes")->required();
  c_dirichlet->add_option("--max-q", max_q, "Largest convergent denominator")->required();
  c_dirichlet->add_option("--out", out_path, "Output path (default stdout)");

  auto* c_evidence =
      app.add_subcommand("evidence", "Bundled gap, Weyl and Dirichlet evidence report");
  c_evidence->add_option("--axes", axes_text, "Comma-separated axes")->required();
  c_evidence->add_option("--horizon", horizon, "Capacity horizon K")->required();
  c_evidence->add_option("--max-q", max_q, "Largest convergent denominator")->required();
  c_evidence->add_option("--selector", selector_name_opt, "ech, ch, or auto");
  c_evidence->add_option("--seed", seed, "Accepted for interface symmetry; output is deterministic");
  c_evidence->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (c_spectrum->parsed()) {
    EllipsoidParams params = parse_axes(axes_text);
    ExactScalar cutoff = parse_exact_scalar(cutoff_text);
    SpectrumWindow window = spec_plus(params, cutoff, threads);
    emit(format == "csv" ? window_to_csv(window) : dump(window_to_json(window)), out_path);
    return 0;
  }
  if (c_capacities->parsed()) {
    EllipsoidParams params = parse_axes(axes_text);
    SelectorFamily f = resolve_selector(selector_name_opt, params.n());
    std::vector<ExactScalar> table = capacity_table(f, params, count, threads);
    emit(format == "csv" ? capacities_to_csv(table)
                         : dump(capacities_to_json(f, params, table)),
         out_path);
    return 0;
  }
  if (c_verify->parsed()) {
    AxiomTrialsReport report = run_axiom_trials(axiom, trials, seed, count);
    emit(dump(axiom_trials_to_json(report)), out_path);
    return report.pass ? 0 : 1;
  }
  if (c_kunneth->parsed()) {
    SplitMix64 rng(seed);
    bool pass = true;
    Json failures = Json::array();
    for (std::uint64_t t = 0; t < random_n; ++t) {
      std::size_t d1 = static_cast<std::size_t>(rng.range(1, max_dim));
      std::size_t d2 = static_cast<std::size_t>(rng.range(1, max_dim));
      KunnethReport r;
      if (field_name == "F2") {
        FilteredComplex<F2> C1 = random_filtered_complex<F2>(rng, d1);
        FilteredComplex<F2> C2 = random_filtered_complex<F2>(rng, d2);
        r = kunneth_check(C1, C2);
      } else {
        FilteredComplex<Rational> C1 = random_filtered_complex<Rational>(rng, d1);
        FilteredComplex<Rational> C2 = random_filtered_complex<Rational>(rng, d2);
        r = kunneth_check(C1, C2);
      }
      if (!r.pass) {
        pass = false;
        for (const KunnethPoint& pt : r.points) {
          if (pt.dim_product == pt.dim_span) continue;
          Json e;
          e["trial"] = t;
          e["at"] = scalar_to_json_short(pt.at);
          e["dim_product"] = pt.dim_product;
          e["dim_span"] = pt.dim_span;
          failures.push_back(std::move(e));
        }
      }
    }
    Json j;
    j["check"] = "kunneth";
    j["field"] = field_name;
    j["trials"] = random_n;
    j["max_dim"] = max_dim;
    j["seed"] = seed;
    j["pass"] = pass;
    j["failures"] = std::move(failures);
    emit(dump(j), out_path);
    return pass ? 0 : 1;
  }
  if (c_gap->parsed()) {
    EllipsoidParams params = parse_axes(axes_text);
    SelectorFamily f = resolve_selector(selector_name_opt, params.n());
    GapReport report = normalized_gap(f, params, horizon);
    Json j;
    Json axes = Json::array();
    for (const ExactScalar& a : params.axes()) axes.push_back(scalar_to_json_short(a));
    j["axes"] = std::move(axes);
    j["selector"] = selector_name(f.kind);
    j.update(gap_report_to_json(report));
    emit(dump(j), out_path);
    return 0;
  }
  if (c_weyl->parsed()) {
    EllipsoidParams params = parse_axes(axes_text);
    SelectorFamily f = resolve_selector(selector_name_opt, params.n());
    WeylReport report = weyl_check(f, params, parse_checkpoints(checkpoints_text));
    Json j;
    Json axes = Json::array();
    for (const ExactScalar& a : params.axes()) axes.push_back(scalar_to_json_short(a));
    j["axes"] = std::move(axes);
    j["selector"] = selector_name(f.kind);
    j.update(weyl_report_to_json(report));
    emit(dump(j), out_path);
    return 0;
  }
  if (c_dirichlet->parsed()) {
    EllipsoidParams params = parse_axes(axes_text);
    DirichletReport report = dirichlet_near_collisions(params, max_q);
    Json j;
    Json axes = Json::array();
    for (const ExactScalar& a : params.axes()) axes.push_back(scalar_to_json_short(a));
    j["axes"] = std::move(axes);
    j.update(dirichlet_report_to_json(report));
    emit(dump(j), out_path);
    return 0;
  }
  if (c_evidence->parsed()) {
    EllipsoidParams params = parse_axes(axes_text);
    SelectorFamily f = resolve_selector(selector_name_opt, params.n());
    EvidenceReport report = closing_evidence(f, params, horizon, max_q, threads);
    emit(dump(evidence_to_json(report)), out_path);
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const reebspec::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const reebspec::FieldMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
