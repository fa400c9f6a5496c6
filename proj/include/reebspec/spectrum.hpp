#pragma once

// Action spectra of ellipsoid boundaries.
//
// For axes 0 < a_1 <= ... <= a_n the closed characteristics on the boundary
// are circles in the coordinate planes (and their iterates/combinations when
// axes are commensurate); the simple circle in the i-th plane has action a_i.
// The positive action spectrum up to a cutoff L is therefore the multiset of
// lattice values k_1 a_1 + ... + k_n a_n <= L over nonnegative integers k_i,
// with 0 contributed once by the empty orbit collection.  Multiplicities
// count lattice representations.
//
// Enumeration is depth-first over the exponents, sharded deterministically by
// the last exponent's residue when running with several worker threads; the
// merge is a commutative counter sum, so the resulting window is identical
// for every thread count.

#include "reebspec/exact.hpp"
#include "reebspec/jsonio.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace reebspec {

class EllipsoidParams {
 public:
  explicit EllipsoidParams(std::vector<ExactScalar> axes);

  std::size_t n() const { return axes_.size(); }
  const ExactScalar& axis(std::size_t i) const { return axes_.at(i); }
  const std::vector<ExactScalar>& axes() const { return axes_; }
  // True when some axis repeats (circle families instead of isolated circles).
  bool degenerate() const { return degenerate_; }
  // Radicand shared by the axes; 0 when all axes are rational.
  std::int64_t field_radicand() const { return d_; }

 private:
  std::vector<ExactScalar> axes_;  // sorted ascending
  bool degenerate_ = false;
  std::int64_t d_ = 0;
};

// Parses a comma-separated axis list such as "1,2", "1,3/2", "1,sqrt(2)",
// "1/2,1/2+1/3*sqrt(5)".  Parse errors carry the position within the full
// string; axes must be positive and lie in one common quadratic field.
EllipsoidParams parse_axes(const std::string& text);

struct SimplePeriods {
  std::vector<ExactScalar> periods;  // = the axes, ascending
  bool degenerate = false;
};

SimplePeriods simple_periods(const EllipsoidParams& params);

struct SpectrumWindow {
  ExactScalar cutoff;
  bool include_zero = true;
  // (action, multiplicity), strictly increasing in action; the leading entry
  // is (0, 1).
  std::vector<std::pair<ExactScalar, std::uint64_t>> entries;
};

// All spectrum values <= cutoff with lattice multiplicities; cutoff > 0.
SpectrumWindow spec_plus(const EllipsoidParams& params, const ExactScalar& cutoff,
                         unsigned threads = 1);

// Number of lattice values (with multiplicity) <= cutoff; counts the zero
// combination, so lattice_count(params, L) == sum of multiplicities in
// spec_plus(params, L).
std::uint64_t lattice_count(const EllipsoidParams& params, const ExactScalar& cutoff);

struct GapStatistics {
  std::vector<ExactScalar> gaps;  // consecutive differences of distinct actions
  ExactScalar min_gap;
  std::size_t min_index = 0;  // gap between entries min_index and min_index+1
};

// Requires at least two entries in the window.
GapStatistics gap_statistics(const SpectrumWindow& window);

// Total length of the union of (action - eps, action + eps) over the window's
// entries, intersected with [0, cutoff].  Shrinks to zero with eps: the
// spectrum is Lebesgue-null.
ExactScalar nullset_cover_length(const SpectrumWindow& window, const ExactScalar& eps);

Json window_to_json(const SpectrumWindow& window);
std::string window_to_csv(const SpectrumWindow& window);

// Worker-thread budget: the REEBSPEC_THREADS environment variable when set
// (clamped to [1, 64]), otherwise 1.
unsigned thread_budget();

}  // namespace reebspec
