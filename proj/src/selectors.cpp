#include "reebspec/selectors.hpp"

#include "reebspec/sampling.hpp"

#include <algorithm>
#include <sstream>

namespace reebspec {

const char* selector_name(SelectorKind kind) {
  return kind == SelectorKind::EchLattice ? "ech" : "ch";
}

SelectorKind selector_from_name(const std::string& name) {
  if (name == "ech") return SelectorKind::EchLattice;
  if (name == "ch") return SelectorKind::ChLattice;
  throw std::invalid_argument("unknown selector \"" + name + "\", want \"ech\" or \"ch\"");
}

namespace {

void check_kind(const SelectorFamily& f, const EllipsoidParams& params) {
  if (f.kind == SelectorKind::EchLattice && params.n() != 2) {
    throw std::invalid_argument("ech selector needs exactly 2 axes, got " +
                                std::to_string(params.n()));
  }
}

}  // namespace

std::vector<ExactScalar> capacity_table(const SelectorFamily& f, const EllipsoidParams& params,
                                        std::uint64_t K, unsigned threads) {
  check_kind(f, params);
  // Grow the cutoff until the window holds at least K+1 lattice values.
  ExactScalar cutoff = params.axes().back();
  while (lattice_count(params, cutoff) < K + 1) cutoff *= ExactScalar(2);
  SpectrumWindow window = spec_plus(params, cutoff, threads);
  std::vector<ExactScalar> table;
  table.reserve(K + 1);
  for (const auto& [action, mult] : window.entries) {
    for (std::uint64_t i = 0; i < mult && table.size() <= K; ++i) table.push_back(action);
    if (table.size() > K) break;
  }
  return table;
}

ExactScalar capacity(const SelectorFamily& f, const EllipsoidParams& params, std::uint64_t k) {
  return capacity_table(f, params, k).back();
}

std::vector<ExactScalar> shift_weights(const SelectorFamily& f, std::size_t n, std::uint64_t K) {
  EllipsoidParams sphere(std::vector<ExactScalar>(n, ExactScalar(1)));
  check_kind(f, sphere);
  std::vector<ExactScalar> table = capacity_table(f, sphere, K);
  return std::vector<ExactScalar>(table.begin() + 1, table.end());
}

VerifyResult verify_spectrality(const SelectorFamily& f, const EllipsoidParams& params,
                                std::uint64_t K) {
  std::vector<ExactScalar> table = capacity_table(f, params, K);
  ExactScalar cutoff = table.back().sign() > 0 ? table.back() : params.axes().front();
  SpectrumWindow window = spec_plus(params, cutoff);
  VerifyResult result;
  for (std::uint64_t k = 0; k < table.size(); ++k) {
    auto it = std::lower_bound(
        window.entries.begin(), window.entries.end(), table[k],
        [](const auto& entry, const ExactScalar& v) { return entry.first < v; });
    if (it == window.entries.end() || it->first != table[k]) {
      result.pass = false;
      result.failures.push_back(
          VerifyWitness{k, table[k], ExactScalar(0), "capacity not in the action spectrum"});
    }
  }
  return result;
}

VerifyResult verify_conformality(const SelectorFamily& f, const EllipsoidParams& params,
                                 const ExactScalar& scale, std::uint64_t K) {
  if (scale.sign() <= 0) {
    throw std::invalid_argument("conformality scale must be positive, got " +
                                scale.to_string());
  }
  std::vector<ExactScalar> scaled_axes;
  for (const ExactScalar& a : params.axes()) scaled_axes.push_back(a * scale);
  EllipsoidParams scaled(std::move(scaled_axes));
  std::vector<ExactScalar> lhs = capacity_table(f, scaled, K);
  std::vector<ExactScalar> rhs = capacity_table(f, params, K);
  VerifyResult result;
  for (std::uint64_t k = 0; k < lhs.size(); ++k) {
    ExactScalar want = rhs[k] * scale;
    if (lhs[k] != want) {
      result.pass = false;
      result.failures.push_back(VerifyWitness{k, lhs[k], want, "c_k(s*a) != s*c_k(a)"});
    }
  }
  return result;
}

VerifyResult verify_monotonicity(const SelectorFamily& f, const EllipsoidParams& smaller,
                                 const EllipsoidParams& larger, std::uint64_t K) {
  if (smaller.n() != larger.n()) {
    throw std::invalid_argument("monotonicity needs equal axis counts, got " +
                                std::to_string(smaller.n()) + " and " +
                                std::to_string(larger.n()));
  }
  for (std::size_t i = 0; i < smaller.n(); ++i) {
    if (smaller.axis(i) > larger.axis(i)) {
      throw std::invalid_argument("axis vectors are not componentwise comparable at index " +
                                  std::to_string(i));
    }
  }
  std::vector<ExactScalar> lo = capacity_table(f, smaller, K);
  std::vector<ExactScalar> hi = capacity_table(f, larger, K);
  VerifyResult result;
  for (std::uint64_t k = 0; k < lo.size(); ++k) {
    if (lo[k] > hi[k]) {
      result.pass = false;
      result.failures.push_back(VerifyWitness{k, lo[k], hi[k], "c_k(a) > c_k(b) with a <= b"});
    }
  }
  return result;
}

VerifyResult continuity_sandwich(const SelectorFamily& f, const EllipsoidParams& a,
                                 const EllipsoidParams& b, std::uint64_t K) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("continuity sandwich needs equal axis counts, got " +
                                std::to_string(a.n()) + " and " + std::to_string(b.n()));
  }
  ExactScalar m = b.axis(0) / a.axis(0);
  ExactScalar M = m;
  for (std::size_t i = 1; i < a.n(); ++i) {
    ExactScalar r = b.axis(i) / a.axis(i);
    if (r < m) m = r;
    if (r > M) M = r;
  }
  std::vector<ExactScalar> ca = capacity_table(f, a, K);
  std::vector<ExactScalar> cb = capacity_table(f, b, K);
  VerifyResult result;
  for (std::uint64_t k = 0; k < ca.size(); ++k) {
    if (m * ca[k] > cb[k]) {
      result.pass = false;
      result.failures.push_back(
          VerifyWitness{k, m * ca[k], cb[k], "lower sandwich bound fails"});
    }
    if (cb[k] > M * ca[k]) {
      result.pass = false;
      result.failures.push_back(
          VerifyWitness{k, cb[k], M * ca[k], "upper sandwich bound fails"});
    }
  }
  return result;
}

VerifyResult locality_check(const SelectorFamily& f, const EllipsoidParams& params,
                            const ExactScalar& x, const ExactScalar& y, std::uint64_t K) {
  if (x.sign() < 0 || y <= x) {
    throw std::invalid_argument("locality interval needs 0 <= x < y, got x=" + x.to_string() +
                                " y=" + y.to_string());
  }
  SpectrumWindow window = spec_plus(params, y);
  for (const auto& [action, mult] : window.entries) {
    if (action >= x && action <= y) {
      throw std::invalid_argument("locality interval [" + x.to_string() + ", " +
                                  y.to_string() + "] meets the spectrum at " +
                                  action.to_string());
    }
  }
  std::vector<ExactScalar> table = capacity_table(f, params, K);
  VerifyResult result;
  std::uint64_t at_x = 0;
  std::uint64_t below_y = 0;
  for (std::uint64_t k = 0; k < table.size(); ++k) {
    if (table[k] <= x) ++at_x;
    if (table[k] < y) ++below_y;
    if (table[k] > x && table[k] < y) {
      result.pass = false;
      result.failures.push_back(
          VerifyWitness{k, table[k], ExactScalar(0), "capacity inside a spectrum-free interval"});
    }
  }
  if (at_x != below_y) {
    result.pass = false;
    result.failures.push_back(VerifyWitness{K, ExactScalar(static_cast<long long>(at_x)),
                                            ExactScalar(static_cast<long long>(below_y)),
                                            "capacity counts differ across a spectrum-free interval"});
  }
  return result;
}

Json capacities_to_json(const SelectorFamily& f, const EllipsoidParams& params,
                        const std::vector<ExactScalar>& table) {
  Json j;
  j["selector"] = selector_name(f.kind);
  Json axes = Json::array();
  for (const ExactScalar& a : params.axes()) axes.push_back(scalar_to_json_short(a));
  j["axes"] = std::move(axes);
  j["count"] = table.empty() ? 0 : table.size() - 1;
  Json caps = Json::array();
  for (const ExactScalar& c : table) caps.push_back(scalar_to_json_with_decimal(c));
  j["capacities"] = std::move(caps);
  return j;
}

std::string capacities_to_csv(const std::vector<ExactScalar>& table) {
  std::ostringstream out;
  out << "k,value_num,value_quad_coeff,d\n";
  for (std::size_t k = 0; k < table.size(); ++k) {
    ExactScalar rat(table[k].rational_part());
    ExactScalar quad(table[k].quad_part());
    out << k << "," << rat.decimal(12) << "," << quad.decimal(12) << ","
        << table[k].radicand() << "\n";
  }
  return out.str();
}

AxiomTrialsReport run_axiom_trials(const std::string& axiom, std::uint64_t trials,
                                   std::uint64_t seed, std::uint64_t K,
                                   std::size_t max_axes) {
  if (K < 1) throw std::invalid_argument("trial capacity horizon must be >= 1");
  AxiomTrialsReport report;
  report.axiom = axiom;
  report.trials = trials;
  report.seed = seed;
  report.count = K;
  SelectorFamily f{SelectorKind::ChLattice};
  SplitMix64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    EllipsoidParams params = random_ellipsoid(rng, max_axes);
    VerifyResult result;
    std::vector<ExactScalar> input_b;
    if (axiom == "spectrality") {
      result = verify_spectrality(f, params, K);
    } else if (axiom == "conformality") {
      ExactScalar scale = ExactScalar(random_rational(rng, 8, 8));
      input_b.push_back(scale);
      result = verify_conformality(f, params, scale, K);
    } else if (axiom == "monotonicity") {
      EllipsoidParams larger = random_enlargement(rng, params);
      input_b = larger.axes();
      result = verify_monotonicity(f, params, larger, K);
    } else if (axiom == "continuity") {
      EllipsoidParams other = random_ellipsoid_with_n(rng, params.n());
      input_b = other.axes();
      result = continuity_sandwich(f, params, other, K);
    } else if (axiom == "locality") {
      std::vector<ExactScalar> table = capacity_table(f, params, K);
      SpectrumWindow window = spec_plus(params, table.back());
      std::size_t r = static_cast<std::size_t>(rng.below(window.entries.size() - 1));
      ExactScalar lo = window.entries[r].first;
      ExactScalar hi = window.entries[r + 1].first;
      ExactScalar quarter = (hi - lo) / ExactScalar(4);
      input_b = {lo + quarter, hi - quarter};
      result = locality_check(f, params, input_b[0], input_b[1], K);
    } else {
      throw std::invalid_argument(
          "unknown axiom \"" + axiom +
          "\", want spectrality|conformality|monotonicity|continuity|locality");
    }
    if (!result.pass) {
      report.pass = false;
      for (const VerifyWitness& w : result.failures) {
        report.failures.push_back(AxiomTrialFailure{t, params.axes(), input_b, w});
      }
    }
  }
  return report;
}

Json axiom_trials_to_json(const AxiomTrialsReport& report) {
  Json j;
  j["axiom"] = report.axiom;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["count"] = report.count;
  j["pass"] = report.pass;
  Json failures = Json::array();
  for (const AxiomTrialFailure& f : report.failures) {
    Json e;
    e["trial"] = f.trial;
    Json input = Json::array();
    for (const ExactScalar& a : f.input) input.push_back(scalar_to_json_short(a));
    e["input"] = std::move(input);
    Json input_b = Json::array();
    for (const ExactScalar& a : f.input_b) input_b.push_back(scalar_to_json_short(a));
    e["input_b"] = std::move(input_b);
    e["k"] = f.witness.k;
    e["lhs"] = scalar_to_json_short(f.witness.lhs);
    e["rhs"] = scalar_to_json_short(f.witness.rhs);
    e["note"] = f.witness.note;
    failures.push_back(std::move(e));
  }
  j["failures"] = std::move(failures);
  return j;
}

Json verify_result_to_json(const VerifyResult& result) {
  Json j;
  j["pass"] = result.pass;
  Json failures = Json::array();
  for (const VerifyWitness& w : result.failures) {
    Json e;
    e["k"] = w.k;
    e["lhs"] = scalar_to_json_short(w.lhs);
    e["rhs"] = scalar_to_json_short(w.rhs);
    e["note"] = w.note;
    failures.push_back(std::move(e));
  }
  j["failures"] = std::move(failures);
  return j;
}

}  // namespace reebspec
