#pragma once

// Action selector families realized as lattice capacities.
//
// For an ellipsoid with axes a the k-th capacity c_k is the k-th smallest
// value (counted with multiplicity, starting at c_0 = 0) of the lattice set
// { sum_i m_i a_i : m_i >= 0 }.  EchLattice is the two-dimensional family;
// ChLattice uses the same unconstrained lattice order in any dimension.
// Every value is a spectrum point by construction; conformality, monotonicity
// and the continuity sandwich follow from the lattice description and are
// re-checked here by dedicated verifiers on concrete inputs.
//
// Shift weights |alpha_j| used to normalize gap quotients are the capacities
// of the round sphere (all axes 1) in the same dimension: |alpha_j| = c_j(1,...,1).

#include "reebspec/spectrum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace reebspec {

enum class SelectorKind { EchLattice, ChLattice };

const char* selector_name(SelectorKind kind);
SelectorKind selector_from_name(const std::string& name);  // "ech" | "ch"

struct SelectorFamily {
  SelectorKind kind = SelectorKind::ChLattice;
};

// c_0..c_K as a vector of K+1 exact values; EchLattice requires n == 2.
std::vector<ExactScalar> capacity_table(const SelectorFamily& f, const EllipsoidParams& params,
                                        std::uint64_t K, unsigned threads = 1);

ExactScalar capacity(const SelectorFamily& f, const EllipsoidParams& params, std::uint64_t k);

// |alpha_1|..|alpha_K| for ambient dimension n: round-sphere capacities
// c_1..c_K at axes (1,...,1).  All weights are positive integers.
std::vector<ExactScalar> shift_weights(const SelectorFamily& f, std::size_t n, std::uint64_t K);

struct VerifyWitness {
  std::uint64_t k = 0;
  ExactScalar lhs;
  ExactScalar rhs;
  std::string note;
};

struct VerifyResult {
  bool pass = true;
  std::vector<VerifyWitness> failures;
};

// Every c_k lies in the action spectrum (checked against an enumerated window).
VerifyResult verify_spectrality(const SelectorFamily& f, const EllipsoidParams& params,
                                std::uint64_t K);

// c_k(s * a) == s * c_k(a) for a positive scale s.
VerifyResult verify_conformality(const SelectorFamily& f, const EllipsoidParams& params,
                                 const ExactScalar& scale, std::uint64_t K);

// Componentwise a <= b implies c_k(a) <= c_k(b); throws if the sorted axis
// vectors are not comparable or differ in length.
VerifyResult verify_monotonicity(const SelectorFamily& f, const EllipsoidParams& smaller,
                                 const EllipsoidParams& larger, std::uint64_t K);

// With m = min_i b_i/a_i and M = max_i b_i/a_i:  m*c_k(a) <= c_k(b) <= M*c_k(a).
VerifyResult continuity_sandwich(const SelectorFamily& f, const EllipsoidParams& a,
                                 const EllipsoidParams& b, std::uint64_t K);

// If (x, y) misses the spectrum then no capacity lands in (x, y), and the
// counts #{k <= K : c_k <= x} and #{k <= K : c_k < y} agree; 0 <= x < y.
VerifyResult locality_check(const SelectorFamily& f, const EllipsoidParams& params,
                            const ExactScalar& x, const ExactScalar& y, std::uint64_t K);

Json capacities_to_json(const SelectorFamily& f, const EllipsoidParams& params,
                        const std::vector<ExactScalar>& table);
std::string capacities_to_csv(const std::vector<ExactScalar>& table);
Json verify_result_to_json(const VerifyResult& result);

struct AxiomTrialFailure {
  std::uint64_t trial = 0;
  std::vector<ExactScalar> input;    // axes of the trial ellipsoid
  std::vector<ExactScalar> input_b;  // second ellipsoid or parameters, if any
  VerifyWitness witness;
};

struct AxiomTrialsReport {
  std::string axiom;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;  // capacity horizon K per trial
  bool pass = true;
  std::vector<AxiomTrialFailure> failures;
};

// Runs `trials` seeded random rational ellipsoids (1..max_axes axes) through
// one axiom verifier: "spectrality", "conformality", "monotonicity",
// "continuity" or "locality".  Deterministic for a fixed seed.
AxiomTrialsReport run_axiom_trials(const std::string& axiom, std::uint64_t trials,
                                   std::uint64_t seed, std::uint64_t K,
                                   std::size_t max_axes = 3);

Json axiom_trials_to_json(const AxiomTrialsReport& report);

}  // namespace reebspec
