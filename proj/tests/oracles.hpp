#pragma once

// Independent verification machinery for the test suite.  Everything here
// recomputes expected values by a different route from the library code under
// test: plain Gaussian elimination and truncation-rank formulas instead of
// the persistence-style reduction, naive nested-loop enumeration instead of
// the sharded recursion, and closed-form staircases for special axis pairs.

#include "reebspec/complexes.hpp"
#include "reebspec/spectrum.hpp"

#include <cassert>
#include <vector>

namespace oracles {

using reebspec::ExactScalar;
using reebspec::FilteredComplex;
using reebspec::FilteredSpace;
using reebspec::Rational;

// Row-echelon accumulator over a field; tracks the rank of the span of the
// inserted vectors.  Pivots are the first nonzero coordinate.
template <class F>
struct Echelon {
  std::vector<std::vector<F>> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }

  // Reduces v against the basis; if a nonzero remainder survives it joins the
  // basis and the rank grows.
  bool insert(std::vector<F> v) {
    using reebspec::is_zero;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::size_t p = pivots[r];
      if (is_zero(v[p])) continue;
      F factor = v[p] / rows[r][p];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] - factor * rows[r][i];
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!is_zero(v[i])) {
        pivots.push_back(i);
        rows.push_back(std::move(v));
        return true;
      }
    }
    return false;
  }

  bool contains(std::vector<F> v) {
    using reebspec::is_zero;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::size_t p = pivots[r];
      if (is_zero(v[p])) continue;
      F factor = v[p] / rows[r][p];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] - factor * rows[r][i];
    }
    for (const F& c : v) {
      if (!is_zero(c)) return false;
    }
    return true;
  }
};

template <class F>
std::size_t rank_of(const std::vector<std::vector<F>>& columns) {
  Echelon<F> ech;
  for (const auto& c : columns) ech.insert(c);
  return ech.rank();
}

template <class F>
std::vector<F> dense_column(const FilteredComplex<F>& C, std::size_t j) {
  std::vector<F> col(C.space.dim(), F(0));
  for (const auto& [i, c] : C.boundary[j]) col[i] = c;
  return col;
}

template <class F>
std::vector<F> unit_vector(std::size_t dim, std::size_t i) {
  std::vector<F> v(dim, F(0));
  v[i] = F(1);
  return v;
}

// dim F^a H of a filtered complex at each ascending query point, by the
// truncation-rank identity
//   dim F^a H = rank([D | I_S]) - rank(D|_S) - rank(D)
// with S = {generators of level < a} and D the boundary columns (restricted
// to degree d+1 resp. S intersected with degree d when degree >= 0).  The
// three ranks are maintained incrementally while S grows with a.
template <class F>
std::vector<std::size_t> homology_dims_at(const FilteredComplex<F>& C,
                                          const std::vector<ExactScalar>& ascending_queries,
                                          int degree = -1) {
  const std::size_t n = C.space.dim();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int c = C.space.gen(a).level.cmp(C.space.gen(b).level);
    if (c != 0) return c < 0;
    return a < b;
  });

  // rank(D) over the fixed column set: boundaries landing in degree `degree`
  // come from generators of the complementary degree.
  Echelon<F> fixed;
  Echelon<F> mixed;  // [D | I_S], identity columns added as S grows
  for (std::size_t j = 0; j < n; ++j) {
    if (degree >= 0 && C.space.gen(j).degree == degree) continue;
    fixed.insert(dense_column(C, j));
    mixed.insert(dense_column(C, j));
  }
  Echelon<F> restricted;  // D|_S, columns of generators in S (degree-matched)

  std::vector<std::size_t> dims;
  std::size_t next = 0;
  for (const ExactScalar& a : ascending_queries) {
    assert(dims.empty() || ascending_queries[dims.size() - 1] <= a);
    while (next < n && C.space.gen(order[next]).level < a) {
      std::size_t g = order[next];
      if (degree < 0 || C.space.gen(g).degree == degree) {
        restricted.insert(dense_column(C, g));
        mixed.insert(unit_vector<F>(n, g));
      }
      ++next;
    }
    dims.push_back(mixed.rank() - restricted.rank() - fixed.rank());
  }
  return dims;
}

// Naive nested-loop enumeration of the lattice multiset {sum k_i a_i <= L}
// for up to three axes; returns sorted (value, multiplicity) pairs.
inline std::vector<std::pair<ExactScalar, std::uint64_t>> brute_force_window(
    const std::vector<ExactScalar>& axes, const ExactScalar& L) {
  assert(!axes.empty() && axes.size() <= 3);
  std::vector<ExactScalar> values;
  ExactScalar x0(0);
  while (x0 <= L) {
    if (axes.size() == 1) {
      values.push_back(x0);
    } else {
      ExactScalar x1 = x0;
      while (x1 <= L) {
        if (axes.size() == 2) {
          values.push_back(x1);
        } else {
          ExactScalar x2 = x1;
          while (x2 <= L) {
            values.push_back(x2);
            x2 += axes[2];
          }
        }
        x1 += axes[1];
      }
    }
    x0 += axes[0];
  }
  std::sort(values.begin(), values.end());
  std::vector<std::pair<ExactScalar, std::uint64_t>> entries;
  for (const ExactScalar& v : values) {
    if (!entries.empty() && entries.back().first == v) {
      ++entries.back().second;
    } else {
      entries.emplace_back(v, 1);
    }
  }
  return entries;
}

// Closed-form capacity of the unit-axes pair (1,1): the k-th lattice value is
// the integer t with t(t+1)/2 <= k < (t+1)(t+2)/2.
inline std::uint64_t round_sphere_capacity_2d(std::uint64_t k) {
  std::uint64_t t = 0;
  while ((t + 1) * (t + 2) / 2 <= k) ++t;
  return t;
}

// Closed-form capacity for axes (1,2): the smallest t whose cumulative count
// #{(m,n) : m + 2n <= t} exceeds k.
inline std::uint64_t capacity_1_2(std::uint64_t k) {
  std::uint64_t t = 0;
  auto count = [](std::uint64_t t) {
    std::uint64_t total = 0;
    for (std::uint64_t n = 0; 2 * n <= t; ++n) total += t - 2 * n + 1;
    return total;
  };
  while (count(t) <= k) ++t;
  return t;
}

}  // namespace oracles
