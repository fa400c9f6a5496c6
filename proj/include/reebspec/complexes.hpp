#pragma once

// Filtered chain complexes over the filtered spaces of fvect.hpp and their
// homology with action-minimizing presentations.
//
// A complex stores one boundary column per generator.  Validity means: the
// boundary flips the Z/2 degree, never raises the filtration level, and
// squares to zero.  Homology is computed by left-to-right column reduction
// over the generators sorted by (level, label); because a column is only ever
// corrected by columns of generators that come no later in that order, the
// cycle representative attached to a surviving class has level exactly the
// birth generator's level, which makes the presentation action-minimizing:
// the i-th class level per degree equals inf{a : dim F^a H >= i}.

#include "reebspec/fvect.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace reebspec {

template <class F>
struct FilteredComplex {
  FilteredSpace<F> space;
  // boundary[j] is the coordinate column of the boundary of generator j.
  std::vector<std::map<std::uint32_t, F>> boundary;
};

template <class F>
FilteredComplex<F> make_complex(
    FilteredSpace<F> space,
    const std::vector<std::pair<std::string, std::vector<std::pair<std::string, F>>>>&
        boundary_by_label) {
  FilteredComplex<F> C;
  C.boundary.assign(space.dim(), {});
  for (const auto& [from, entries] : boundary_by_label) {
    std::size_t j = space.index_of(from);
    Vector<F> col = make_vector(space, entries);
    C.boundary[j] = std::move(col.coeffs);
  }
  C.space = std::move(space);
  return C;
}

struct ComplexDiagnostics {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const {
    std::string s;
    for (const std::string& v : violations) {
      if (!s.empty()) s += "; ";
      s += v;
    }
    return s;
  }
};

template <class F>
ComplexDiagnostics check_complex(const FilteredComplex<F>& C) {
  ComplexDiagnostics diag;
  const std::size_t n = C.space.dim();
  if (C.boundary.size() != n) {
    diag.violations.push_back("boundary has " + std::to_string(C.boundary.size()) +
                              " columns for " + std::to_string(n) + " generators");
    return diag;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Generator& g = C.space.gen(j);
    for (const auto& [i, c] : C.boundary[j]) {
      using reebspec::is_zero;
      if (is_zero(c)) {
        diag.violations.push_back("stored zero coefficient in boundary of \"" + g.label + "\"");
      }
      if (i >= n) {
        diag.violations.push_back("boundary of \"" + g.label + "\" hits index " +
                                  std::to_string(i) + " outside the space");
        continue;
      }
      const Generator& t = C.space.gen(i);
      if (t.degree == g.degree) {
        diag.violations.push_back("boundary of \"" + g.label + "\" keeps degree at \"" +
                                  t.label + "\"");
      }
      if (t.level > g.level) {
        diag.violations.push_back("boundary of \"" + g.label + "\" raises level at \"" +
                                  t.label + "\" (" + g.level.to_string() + " -> " +
                                  t.level.to_string() + ")");
      }
    }
  }
  if (!diag.ok()) return diag;
  // boundary^2 = 0, column by column.
  for (std::size_t j = 0; j < n; ++j) {
    std::map<std::uint32_t, F> sq;
    for (const auto& [i, c] : C.boundary[j]) {
      for (const auto& [k, e] : C.boundary[i]) {
        using reebspec::is_zero;
        F s = (sq.count(k) ? sq[k] : F(0)) + c * e;
        if (is_zero(s)) {
          sq.erase(k);
        } else {
          sq[k] = s;
        }
      }
    }
    if (!sq.empty()) {
      diag.violations.push_back("boundary squared is nonzero on \"" + C.space.gen(j).label +
                                "\"");
    }
  }
  return diag;
}

template <class F>
struct HomologyPresentation {
  // One generator per homology class, labelled "[g]" after the birth
  // generator g, listed in (level, label) order; cycle_reps[i] is a cycle in
  // the original complex representing class i, with level equal to the class
  // level.
  FilteredSpace<F> space;
  std::vector<Vector<F>> cycle_reps;
};

// Number of classes of level < a (optionally restricted to one degree):
// dim F^a H in the action-minimizing presentation.
template <class F>
std::size_t filtered_dim(const HomologyPresentation<F>& H, const Level& a, int degree = -1) {
  std::size_t n = 0;
  for (const Generator& g : H.space.generators()) {
    if (degree >= 0 && g.degree != degree) continue;
    if (Level(g.level) < a) ++n;
  }
  return n;
}

template <class F>
HomologyPresentation<F> homology(const FilteredComplex<F>& C) {
  ComplexDiagnostics diag = check_complex(C);
  if (!diag.ok()) {
    throw std::invalid_argument("invalid filtered complex: " + diag.summary());
  }
  const std::size_t n = C.space.dim();

  // Reduction order: by (level, label).  order[k] = original index.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int c = C.space.gen(a).level.cmp(C.space.gen(b).level);
    if (c != 0) return c < 0;
    return C.space.gen(a).label < C.space.gen(b).label;
  });
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;

  // Columns and representatives in reduction coordinates.
  std::vector<std::map<std::uint32_t, F>> col(n);
  std::vector<std::map<std::uint32_t, F>> rep(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [i, c] : C.boundary[order[k]]) {
      col[k][static_cast<std::uint32_t>(pos[i])] = c;
    }
    rep[k][static_cast<std::uint32_t>(k)] = F(1);
  }

  auto axpy = [](std::map<std::uint32_t, F>& dst, const std::map<std::uint32_t, F>& src,
                 const F& s) {
    using reebspec::is_zero;
    for (const auto& [i, c] : src) {
      F v = (dst.count(i) ? dst[i] : F(0)) + c * s;
      if (is_zero(v)) {
        dst.erase(i);
      } else {
        dst[i] = v;
      }
    }
  };

  std::vector<std::ptrdiff_t> pivot_owner(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    while (!col[j].empty()) {
      std::uint32_t p = col[j].rbegin()->first;
      std::ptrdiff_t k = pivot_owner[p];
      if (k < 0) break;
      F s = F(0) - col[j].rbegin()->second / col[k].rbegin()->second;
      axpy(col[j], col[k], s);
      axpy(rep[j], rep[k], s);
    }
    if (!col[j].empty()) pivot_owner[col[j].rbegin()->first] = static_cast<std::ptrdiff_t>(j);
  }

  HomologyPresentation<F> H;
  std::vector<Generator> class_gens;
  for (std::size_t j = 0; j < n; ++j) {
    if (!col[j].empty() || pivot_owner[j] >= 0) continue;  // not a surviving cycle
    const Generator& g = C.space.gen(order[j]);
    class_gens.push_back(Generator{"[" + g.label + "]", g.level, g.degree});
    Vector<F> v;
    for (const auto& [k, c] : rep[j]) {
      v.coeffs[static_cast<std::uint32_t>(order[k])] = c;
    }
    H.cycle_reps.push_back(std::move(v));
  }
  H.space = FilteredSpace<F>(std::move(class_gens));
  return H;
}

// Tensor product complex: boundary(v (x) w) = dv (x) w + (-1)^deg(v) v (x) dw.
template <class F>
FilteredComplex<F> tensor_complex(const FilteredComplex<F>& C1, const FilteredComplex<F>& C2) {
  for (const FilteredComplex<F>* C : {&C1, &C2}) {
    ComplexDiagnostics diag = check_complex(*C);
    if (!diag.ok()) {
      throw std::invalid_argument("invalid filtered complex: " + diag.summary());
    }
  }
  TensorSpace<F> T = tensor(C1.space, C2.space);
  FilteredComplex<F> C;
  C.boundary.assign(T.space.dim(), {});
  for (std::size_t i = 0; i < C1.space.dim(); ++i) {
    const F sign = C1.space.gen(i).degree == 0 ? F(1) : F(0) - F(1);
    for (std::size_t j = 0; j < C2.space.dim(); ++j) {
      std::map<std::uint32_t, F>& colv = C.boundary[T.index(i, j)];
      for (const auto& [k, c] : C1.boundary[i]) {
        colv[T.index(k, j)] = c;
      }
      using reebspec::is_zero;
      for (const auto& [k, c] : C2.boundary[j]) {
        std::uint32_t idx = T.index(i, k);
        F v = (colv.count(idx) ? colv[idx] : F(0)) + sign * c;
        if (is_zero(v)) {
          colv.erase(idx);
        } else {
          colv[idx] = v;
        }
      }
    }
  }
  C.space = std::move(T.space);
  return C;
}

struct KunnethPoint {
  ExactScalar at;
  std::size_t dim_product = 0;  // dim F^a H(C1 (x) C2)
  std::size_t dim_span = 0;     // #{(i,j) : class levels l_i + m_j < a}
};

struct KunnethReport {
  bool pass = false;
  std::vector<KunnethPoint> points;
};

// Comparison grid for a set of candidate jump values: one point below the
// minimum, the midpoints between consecutive distinct values, and one point
// beyond the maximum.  A filtration dimension function can only jump at the
// candidates, and strictness pins its value at a jump to the left limit, so
// equality on this grid is equality everywhere.
inline std::vector<ExactScalar> comparison_grid(std::vector<ExactScalar> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<ExactScalar> grid;
  if (candidates.empty()) {
    grid.push_back(ExactScalar(1));
    return grid;
  }
  grid.push_back(candidates.front() / ExactScalar(2));
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
    grid.push_back((candidates[i] + candidates[i + 1]) / ExactScalar(2));
  }
  grid.push_back(candidates.back() + ExactScalar(1));
  return grid;
}

// Filtered Kunneth comparison: at every grid point a, the dimension of
// F^a H(C1 (x) C2) must equal the number of pairs of factor classes whose
// level sum is < a.
template <class F>
KunnethReport kunneth_check(const FilteredComplex<F>& C1, const FilteredComplex<F>& C2) {
  HomologyPresentation<F> H1 = homology(C1);
  HomologyPresentation<F> H2 = homology(C2);
  FilteredComplex<F> T = tensor_complex(C1, C2);
  HomologyPresentation<F> HT = homology(T);

  std::vector<ExactScalar> sums;
  for (const Generator& g : C1.space.generators()) {
    for (const Generator& h : C2.space.generators()) {
      sums.push_back(g.level + h.level);
    }
  }
  KunnethReport report;
  report.pass = true;
  for (const ExactScalar& a : comparison_grid(std::move(sums))) {
    KunnethPoint pt;
    pt.at = a;
    pt.dim_product = filtered_dim(HT, Level(a));
    for (const Generator& g : H1.space.generators()) {
      for (const Generator& h : H2.space.generators()) {
        if (g.level + h.level < a) ++pt.dim_span;
      }
    }
    if (pt.dim_product != pt.dim_span) report.pass = false;
    report.points.push_back(std::move(pt));
  }
  return report;
}

template <class F>
Json complex_to_json(const FilteredComplex<F>& C) {
  Json j = space_to_json(C.space);
  Json b = Json::array();
  for (std::size_t col = 0; col < C.boundary.size(); ++col) {
    if (C.boundary[col].empty()) continue;
    Json e;
    e["from"] = C.space.gen(col).label;
    Json to = Json::array();
    for (const auto& [i, c] : C.boundary[col]) {
      Json t;
      t["label"] = C.space.gen(i).label;
      t["coeff"] = FieldInfo<F>::to_string(c);
      to.push_back(std::move(t));
    }
    e["to"] = std::move(to);
    b.push_back(std::move(e));
  }
  j["boundary"] = std::move(b);
  return j;
}

template <class F>
FilteredComplex<F> complex_from_json(const Json& j) {
  FilteredComplex<F> C;
  C.space = space_from_json<F>(j);
  C.boundary.assign(C.space.dim(), {});
  if (j.contains("boundary")) {
    for (const Json& e : j.at("boundary")) {
      std::size_t col = C.space.index_of(e.at("from").get<std::string>());
      for (const Json& t : e.at("to")) {
        std::size_t row = C.space.index_of(t.at("label").get<std::string>());
        F c = FieldInfo<F>::from_string(t.at("coeff").get<std::string>());
        using reebspec::is_zero;
        if (!is_zero(c)) C.boundary[col][static_cast<std::uint32_t>(row)] = c;
      }
    }
  }
  return C;
}

}  // namespace reebspec
