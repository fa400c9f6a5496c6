#pragma once

// Deterministic, platform-independent sampling for property tests and the
// randomized verifier CLI.  The generator is splitmix64 and every derived
// draw uses arithmetic on its output only, so a seed produces the same
// stream on every platform and standard library (std::uniform_int_distribution
// is implementation-defined and would break byte-reproducible reports).

#include "reebspec/complexes.hpp"
#include "reebspec/spectrum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace reebspec {

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, n); n >= 1.  The modulo bias is irrelevant for
  // test-case generation and keeps the draw portable.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Draw in [lo, hi] inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }
};

// Positive rational with numerator in [1, max_num] and denominator in
// [1, max_den].
Rational random_rational(SplitMix64& rng, std::uint64_t max_num, std::uint64_t max_den);

// Rational-axis ellipsoid with 1..max_axes axes.
EllipsoidParams random_ellipsoid(SplitMix64& rng, std::size_t max_axes);

// Rational-axis ellipsoid with exactly n axes.
EllipsoidParams random_ellipsoid_with_n(SplitMix64& rng, std::size_t n);

// Componentwise enlargement of an ellipsoid (for monotonicity trials).
EllipsoidParams random_enlargement(SplitMix64& rng, const EllipsoidParams& params);

// Valid-by-construction random filtered complex with `dim` generators:
// cycle generators are drawn first, then killer generators whose boundary is
// a combination of earlier cycles of no larger level and flipped degree, so
// degree reversal, filtration preservation and boundary^2 = 0 hold by
// construction.  Levels are small rationals (field_d == 0) or small elements
// of Q(sqrt(field_d)).
template <class F>
FilteredComplex<F> random_filtered_complex(SplitMix64& rng, std::size_t dim,
                                           std::int64_t field_d = 0) {
  std::vector<Generator> gens;
  std::vector<std::size_t> cycle_indices;
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, F>>>> boundary;

  auto random_level = [&]() {
    Rational rat = random_rational(rng, 8, 4);
    if (field_d == 0 || rng.below(2) == 0) return ExactScalar(rat);
    return ExactScalar(rat, random_rational(rng, 3, 2), field_d);
  };
  auto random_coeff = [&]() {
    if constexpr (std::is_same_v<F, F2>) {
      return F2(1);
    } else {
      Rational r = random_rational(rng, 5, 3);
      return rng.below(2) == 0 ? r : -r;
    }
  };

  for (std::size_t i = 0; i < dim; ++i) {
    std::string label = "g" + std::to_string(i);
    ExactScalar lvl = random_level();
    bool make_killer = !cycle_indices.empty() && rng.below(3) > 0;
    if (!make_killer) {
      gens.push_back(Generator{label, lvl, static_cast<int>(rng.below(2))});
      cycle_indices.push_back(i);
      continue;
    }
    // Target cycles of level <= lvl, all of one degree.
    std::vector<std::size_t> eligible;
    for (std::size_t c : cycle_indices) {
      if (gens[c].level <= lvl) eligible.push_back(c);
    }
    if (eligible.empty()) {
      gens.push_back(Generator{label, lvl, static_cast<int>(rng.below(2))});
      cycle_indices.push_back(i);
      continue;
    }
    std::size_t first = eligible[rng.below(eligible.size())];
    int target_degree = gens[first].degree;
    std::vector<std::pair<std::string, F>> column;
    column.emplace_back(gens[first].label, random_coeff());
    for (std::size_t c : eligible) {
      if (c != first && gens[c].degree == target_degree && rng.below(3) == 0) {
        column.emplace_back(gens[c].label, random_coeff());
      }
    }
    gens.push_back(Generator{label, lvl, 1 - target_degree});
    boundary.emplace_back(label, std::move(column));
  }
  return make_complex(FilteredSpace<F>(std::move(gens)), boundary);
}

}  // namespace reebspec
