#pragma once

// Finite-horizon evidence for the strong-closing gap criterion.
//
// Given a capacity family c_0 <= c_1 <= ... on an ellipsoid, the unnormalized
// gap is min_k (c_{k+1} - c_k) and the normalized gap is
//     inf_{1 <= j <= k <= K} (c_k - c_{k-j}) / |alpha_j|
// with the round-sphere shift weights |alpha_j| of selectors.hpp.  Vanishing
// of the normalized gap over all horizons is the criterion's hypothesis; the
// reports here certify exact values at a fixed horizon, the decreasing record
// sequence as the horizon grows, growth diagnostics against the two-axis
// asymptotic constant 2*a1*a2 for c_k^2/k, and near-collision witnesses from
// continued-fraction convergents of the axis ratio.

#include "reebspec/selectors.hpp"

#include <cstdint>
#include <vector>

namespace reebspec {

struct UGap {
  ExactScalar value;     // min over k < K of c_{k+1} - c_k
  std::uint64_t k = 0;   // first k attaining the minimum
};

// Requires K >= 1.
UGap u_gap(const SelectorFamily& f, const EllipsoidParams& params, std::uint64_t K);

struct GapRecord {
  std::uint64_t horizon = 0;
  ExactScalar value;
  std::uint64_t k = 0;
  std::uint64_t j = 0;
};

struct GapReport {
  std::uint64_t horizon = 0;
  UGap unnormalized;
  ExactScalar normalized_inf;
  std::uint64_t witness_k = 0;  // argmin pair (first strictly-better scan order)
  std::uint64_t witness_j = 0;
  std::vector<GapRecord> records;  // strictly decreasing running infima
};

GapReport normalized_gap(const SelectorFamily& f, const EllipsoidParams& params,
                         std::uint64_t K);

struct WeylCheckpoint {
  std::uint64_t k = 0;
  ExactScalar capacity;
  ExactScalar deviation;  // |c_k^2/k - 2*a1*a2|
};

struct WeylReport {
  ExactScalar limit_constant;  // 2*a1*a2
  std::vector<WeylCheckpoint> checkpoints;
  ExactScalar max_deviation;
  bool deviation_decreasing = false;  // along the given checkpoint order
};

// Two axes only; checkpoints must be >= 1.
WeylReport weyl_check(const SelectorFamily& f, const EllipsoidParams& params,
                      const std::vector<std::uint64_t>& checkpoints);

struct DirichletWitness {
  Int p;
  Int q;
  ExactScalar residual;     // |q*a2 - p*a1|
  ExactScalar bound;        // a1/q; residual < bound for every convergent
  ExactScalar action_low;   // a1 * p
  ExactScalar action_high;  // a2 * q
};

struct DirichletReport {
  ExactScalar ratio;  // a2/a1
  std::uint64_t max_q = 0;
  std::vector<DirichletWitness> witnesses;  // convergents with q <= max_q
  bool exact_collision = false;             // some residual is exactly zero
  // The last witness satisfies residual < a1/max_q (the classical
  // approximation guarantee); always true, recorded for the report.
  bool dirichlet_bound_met = false;
};

// Two axes; max_q >= 1.  Witnesses are the continued-fraction convergents
// p/q of a2/a1 with q <= max_q, computed by exact floor in the axis field.
DirichletReport dirichlet_near_collisions(const EllipsoidParams& params, std::uint64_t max_q);

struct EvidenceReport {
  EllipsoidParams params;
  SelectorFamily family;
  GapReport gap;
  bool has_two_axes = false;
  WeylReport weyl;          // two-axis only
  DirichletReport dirichlet;  // two-axis only
};

// Bundles the gap trend with Weyl and Dirichlet diagnostics (the latter two
// when the ellipsoid has exactly two axes).  Weyl checkpoints are the decades
// horizon/100, horizon/10, horizon (deduplicated, >= 1).
EvidenceReport closing_evidence(const SelectorFamily& f, const EllipsoidParams& params,
                                std::uint64_t horizon, std::uint64_t max_q,
                                unsigned threads = 1);

Json gap_report_to_json(const GapReport& report);
Json weyl_report_to_json(const WeylReport& report);
Json dirichlet_report_to_json(const DirichletReport& report);
Json evidence_to_json(const EvidenceReport& report);

}  // namespace reebspec
