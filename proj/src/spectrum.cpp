#include "reebspec/spectrum.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

namespace reebspec {

EllipsoidParams::EllipsoidParams(std::vector<ExactScalar> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw std::invalid_argument("ellipsoid needs at least one axis");
  for (const ExactScalar& a : axes_) {
    if (a.radicand() != 0) {
      if (d_ == 0) {
        d_ = a.radicand();
      } else if (d_ != a.radicand()) {
        throw FieldMismatchError("axes mix sqrt(" + std::to_string(d_) + ") and sqrt(" +
                                 std::to_string(a.radicand()) + ")");
      }
    }
  }
  std::sort(axes_.begin(), axes_.end());
  if (axes_.front().sign() <= 0) {
    throw std::invalid_argument("axes must be strictly positive, got " +
                                axes_.front().to_string());
  }
  for (std::size_t i = 0; i + 1 < axes_.size(); ++i) {
    if (axes_[i] == axes_[i + 1]) degenerate_ = true;
  }
}

EllipsoidParams parse_axes(const std::string& text) {
  std::vector<ExactScalar> axes;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      axes.push_back(parse_exact_scalar(token));
    } catch (const ParseError& e) {
      throw ParseError("axis " + std::to_string(axes.size() + 1) + ": " + e.what(),
                       start + e.position);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return EllipsoidParams(std::move(axes));
}

SimplePeriods simple_periods(const EllipsoidParams& params) {
  return SimplePeriods{params.axes(), params.degenerate()};
}

namespace {

// Depth-first enumeration of sum_{i<=idx} k_i a_i <= budget, accumulating the
// action so far; calls out(action) at idx < 0.
template <class Out>
void enumerate_prefix(const std::vector<ExactScalar>& axes, std::ptrdiff_t idx,
                      const ExactScalar& budget, const ExactScalar& acc, Out&& out) {
  if (idx < 0) {
    out(acc);
    return;
  }
  ExactScalar value = acc;
  while (value <= budget) {
    enumerate_prefix(axes, idx - 1, budget, value, out);
    value += axes[static_cast<std::size_t>(idx)];
  }
}

using Counter = std::map<ExactScalar, std::uint64_t>;

// Enumerates the shard of lattice points whose last exponent is congruent to
// `residue` modulo `step`.
void enumerate_shard(const std::vector<ExactScalar>& axes, const ExactScalar& cutoff,
                     unsigned residue, unsigned step, Counter& counts) {
  const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(axes.size()) - 1;
  ExactScalar stride = axes[static_cast<std::size_t>(last)] * ExactScalar(step);
  ExactScalar base = axes[static_cast<std::size_t>(last)] * ExactScalar(residue);
  while (base <= cutoff) {
    enumerate_prefix(axes, last - 1, cutoff, base,
                     [&](const ExactScalar& action) { ++counts[action]; });
    base += stride;
  }
}

}  // namespace

SpectrumWindow spec_plus(const EllipsoidParams& params, const ExactScalar& cutoff,
                         unsigned threads) {
  if (cutoff.sign() <= 0) {
    throw std::invalid_argument("spectrum cutoff must be positive, got " + cutoff.to_string());
  }
  if (threads < 1) threads = 1;
  const std::vector<ExactScalar>& axes = params.axes();

  std::vector<Counter> partial(threads);
  if (threads == 1) {
    enumerate_shard(axes, cutoff, 0, 1, partial[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back(
          [&, t] { enumerate_shard(axes, cutoff, t, threads, partial[t]); });
    }
    for (std::thread& w : workers) w.join();
  }

  Counter merged = std::move(partial[0]);
  for (unsigned t = 1; t < partial.size(); ++t) {
    for (const auto& [action, count] : partial[t]) merged[action] += count;
  }

  SpectrumWindow window;
  window.cutoff = cutoff;
  window.include_zero = true;
  window.entries.assign(merged.begin(), merged.end());
  return window;
}

std::uint64_t lattice_count(const EllipsoidParams& params, const ExactScalar& cutoff) {
  if (cutoff.sign() < 0) return 0;
  std::uint64_t n = 0;
  enumerate_prefix(params.axes(), static_cast<std::ptrdiff_t>(params.n()) - 1, cutoff,
                   ExactScalar(0), [&](const ExactScalar&) { ++n; });
  return n;
}

GapStatistics gap_statistics(const SpectrumWindow& window) {
  if (window.entries.size() < 2) {
    throw std::invalid_argument("gap statistics need at least two spectrum entries, got " +
                                std::to_string(window.entries.size()));
  }
  GapStatistics stats;
  for (std::size_t i = 0; i + 1 < window.entries.size(); ++i) {
    stats.gaps.push_back(window.entries[i + 1].first - window.entries[i].first);
  }
  stats.min_gap = stats.gaps[0];
  stats.min_index = 0;
  for (std::size_t i = 1; i < stats.gaps.size(); ++i) {
    if (stats.gaps[i] < stats.min_gap) {
      stats.min_gap = stats.gaps[i];
      stats.min_index = i;
    }
  }
  return stats;
}

ExactScalar nullset_cover_length(const SpectrumWindow& window, const ExactScalar& eps) {
  if (eps.sign() <= 0) {
    throw std::invalid_argument("cover radius must be positive, got " + eps.to_string());
  }
  ExactScalar total(0);
  ExactScalar covered_to(0);  // everything in [0, covered_to) is already counted
  for (const auto& [action, mult] : window.entries) {
    ExactScalar lo = action - eps;
    ExactScalar hi = action + eps;
    if (lo < covered_to) lo = covered_to;
    if (hi > window.cutoff) hi = window.cutoff;
    if (hi > lo) {
      total += hi - lo;
      covered_to = hi;
    }
  }
  return total;
}

Json window_to_json(const SpectrumWindow& window) {
  Json j;
  j["cutoff"] = scalar_to_json_short(window.cutoff);
  j["include_zero"] = window.include_zero;
  Json entries = Json::array();
  for (const auto& [action, mult] : window.entries) {
    Json e;
    e["action"] = scalar_to_json_with_decimal(action);
    e["multiplicity"] = mult;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string window_to_csv(const SpectrumWindow& window) {
  std::ostringstream out;
  out << "action_num,action_quad_coeff,d,multiplicity\n";
  for (const auto& [action, mult] : window.entries) {
    ExactScalar rat(action.rational_part());
    ExactScalar quad(action.quad_part());
    out << rat.decimal(12) << "," << quad.decimal(12) << "," << action.radicand() << ","
        << mult << "\n";
  }
  return out.str();
}

unsigned thread_budget() {
  const char* env = std::getenv("REEBSPEC_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) {
    throw std::invalid_argument("REEBSPEC_THREADS must be a positive integer, got \"" +
                                std::string(env) + "\"");
  }
  return static_cast<unsigned>(std::min(v, 64L));
}

}  // namespace reebspec
