#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reebspec/complexes.hpp"
#include "reebspec/sampling.hpp"

#include "oracles.hpp"

#include <string>
#include <vector>

using namespace reebspec;

namespace {

Generator gen(const char* label, long long level, int degree) {
  return Generator{label, ExactScalar(level), degree};
}

// Boundary of a chain: sum of coefficient-scaled boundary columns.
template <class F>
Vector<F> apply_boundary(const FilteredComplex<F>& C, const Vector<F>& v) {
  Vector<F> out;
  for (const auto& [j, c] : v.coeffs) {
    for (const auto& [i, e] : C.boundary[j]) {
      out.set(i, out.get(i) + e * c);
    }
  }
  return out;
}

// The same complex with its generator list reversed; the label-based boundary
// description is re-applied, so only the internal index layout changes.
template <class F>
FilteredComplex<F> reversed_complex(const FilteredComplex<F>& C) {
  std::vector<Generator> gens(C.space.generators().rbegin(), C.space.generators().rend());
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, F>>>> by_label;
  for (std::size_t j = 0; j < C.boundary.size(); ++j) {
    if (C.boundary[j].empty()) continue;
    std::vector<std::pair<std::string, F>> entries;
    for (const auto& [i, c] : C.boundary[j]) {
      entries.emplace_back(C.space.gen(i).label, c);
    }
    by_label.emplace_back(C.space.gen(j).label, std::move(entries));
  }
  return make_complex(FilteredSpace<F>(std::move(gens)), by_label);
}

// Sorted (level, degree) pairs of the homology classes: the reorder-invariant
// content of a presentation.
template <class F>
std::vector<std::pair<std::string, int>> class_signature(const HomologyPresentation<F>& H) {
  std::vector<std::pair<std::string, int>> sig;
  for (const Generator& g : H.space.generators()) {
    sig.emplace_back(g.level.to_string(), g.degree);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

template <class F>
std::vector<ExactScalar> level_grid(const FilteredComplex<F>& C) {
  std::vector<ExactScalar> levels;
  for (const Generator& g : C.space.generators()) levels.push_back(g.level);
  return comparison_grid(std::move(levels));
}

}  // namespace

TEST_CASE("check_complex reports structural violations") {
  // Boundary keeping the degree.
  FilteredComplex<Rational> keep = make_complex<Rational>(
      FilteredSpace<Rational>({gen("a", 1, 0), gen("b", 2, 0)}),
      {{"b", {{"a", Rational(1)}}}});
  ComplexDiagnostics d1 = check_complex(keep);
  REQUIRE_FALSE(d1.ok());
  CHECK(d1.summary().find("keeps degree") != std::string::npos);

  // Boundary raising the level.
  FilteredComplex<Rational> raise = make_complex<Rational>(
      FilteredSpace<Rational>({gen("a", 2, 0), gen("b", 1, 1)}),
      {{"b", {{"a", Rational(1)}}}});
  ComplexDiagnostics d2 = check_complex(raise);
  REQUIRE_FALSE(d2.ok());
  CHECK(d2.summary().find("raises level") != std::string::npos);

  // Boundary squared nonzero: a <- b <- c chain.
  FilteredComplex<Rational> chain = make_complex<Rational>(
      FilteredSpace<Rational>({gen("a", 1, 0), gen("b", 2, 1), gen("c", 3, 0)}),
      {{"b", {{"a", Rational(1)}}}, {"c", {{"b", Rational(1)}}}});
  ComplexDiagnostics d3 = check_complex(chain);
  REQUIRE_FALSE(d3.ok());
  CHECK(d3.summary().find("squared") != std::string::npos);

  // Stored zero coefficient and out-of-range index (hand-built columns).
  FilteredComplex<Rational> manual;
  manual.space = FilteredSpace<Rational>({gen("a", 1, 0), gen("b", 2, 1)});
  manual.boundary.assign(2, {});
  manual.boundary[1][0] = Rational(0);
  CHECK(check_complex(manual).summary().find("stored zero") != std::string::npos);
  manual.boundary[1].clear();
  manual.boundary[1][9] = Rational(1);
  CHECK(check_complex(manual).summary().find("outside the space") != std::string::npos);

  // Column-count mismatch.
  FilteredComplex<Rational> short_cols;
  short_cols.space = FilteredSpace<Rational>({gen("a", 1, 0)});
  CHECK_FALSE(check_complex(short_cols).ok());

  // A valid complex passes.
  FilteredComplex<Rational> good = make_complex<Rational>(
      FilteredSpace<Rational>({gen("a", 1, 0), gen("b", 2, 1)}),
      {{"b", {{"a", Rational(1)}}}});
  CHECK(check_complex(good).ok());
}

TEST_CASE("homology of a pair-cancelling complex keeps the surviving class") {
  FilteredComplex<Rational> C = make_complex<Rational>(
      FilteredSpace<Rational>({gen("a", 1, 0), gen("b", 2, 0), gen("c", 3, 1)}),
      {{"c", {{"a", Rational(1)}, {"b", Rational(1)}}}});
  HomologyPresentation<Rational> H = homology(C);
  REQUIRE(H.space.dim() == 1);
  CHECK(H.space.gen(0).label == "[a]");
  CHECK(H.space.gen(0).level == ExactScalar(1));
  CHECK(H.space.gen(0).degree == 0);
  // The representative is the cycle `a` itself.
  REQUIRE(H.cycle_reps.size() == 1);
  CHECK(H.cycle_reps[0].get(0) == Rational(1));
  CHECK(H.cycle_reps[0].coeffs.size() == 1);
  CHECK(apply_boundary(C, H.cycle_reps[0]).is_zero());
  // Filtration dimensions across the jump.
  CHECK(filtered_dim(H, Level(ExactScalar(Rational(1, 2)))) == 0);
  CHECK(filtered_dim(H, Level(ExactScalar(1))) == 0);  // strict filtration
  CHECK(filtered_dim(H, Level(ExactScalar(Rational(3, 2)))) == 1);
  CHECK(filtered_dim(H, Level::top()) == 1);
  CHECK(filtered_dim(H, Level(ExactScalar(2)), 0) == 1);
  CHECK(filtered_dim(H, Level(ExactScalar(2)), 1) == 0);
}

TEST_CASE("homology of a zero-boundary complex is the complex itself") {
  FilteredSpace<Rational> V({gen("a", 1, 0), gen("b", 2, 1), gen("c", 2, 0)});
  FilteredComplex<Rational> C = make_complex<Rational>(V, {});
  HomologyPresentation<Rational> H = homology(C);
  REQUIRE(H.space.dim() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const Generator& g = H.space.gen(i);
    std::size_t src = C.space.index_of(g.label.substr(1, g.label.size() - 2));
    CHECK(g.level == C.space.gen(src).level);
    CHECK(g.degree == C.space.gen(src).degree);
    CHECK(H.cycle_reps[i].get(static_cast<std::uint32_t>(src)) == Rational(1));
  }
}

TEST_CASE("homology rejects invalid complexes") {
  FilteredComplex<Rational> bad = make_complex<Rational>(
      FilteredSpace<Rational>({gen("a", 2, 0), gen("b", 1, 1)}),
      {{"b", {{"a", Rational(1)}}}});
  CHECK_THROWS_AS(homology(bad), std::invalid_argument);
}

template <class F>
static void random_homology_roundtrip(std::uint64_t seed, std::int64_t field_d) {
  SplitMix64 rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    FilteredComplex<F> C = random_filtered_complex<F>(rng, 1 + rng.below(6), field_d);
    REQUIRE(check_complex(C).ok());
    HomologyPresentation<F> H = homology(C);
    std::vector<ExactScalar> grid = level_grid(C);

    // Filtration dimensions against the truncation-rank oracle, overall and
    // per degree.
    for (int degree : {-1, 0, 1}) {
      std::vector<std::size_t> expect = oracles::homology_dims_at(C, grid, degree);
      for (std::size_t q = 0; q < grid.size(); ++q) {
        CAPTURE(degree);
        CAPTURE(grid[q].to_string());
        CHECK(filtered_dim(H, Level(grid[q]), degree) == expect[q]);
      }
    }

    // Representatives: cycles, of exactly the class level, and jointly
    // independent modulo boundaries.
    std::vector<std::vector<F>> boundary_cols;
    for (std::size_t j = 0; j < C.space.dim(); ++j) {
      boundary_cols.push_back(oracles::dense_column(C, j));
    }
    std::size_t boundary_rank = oracles::rank_of(boundary_cols);
    std::vector<std::vector<F>> extended = boundary_cols;
    for (std::size_t i = 0; i < H.space.dim(); ++i) {
      CHECK(apply_boundary(C, H.cycle_reps[i]).is_zero());
      CHECK(level(C.space, H.cycle_reps[i]) == Level(H.space.gen(i).level));
      std::vector<F> dense(C.space.dim(), F(0));
      for (const auto& [k, c] : H.cycle_reps[i].coeffs) dense[k] = c;
      extended.push_back(std::move(dense));
    }
    CHECK(oracles::rank_of(extended) == boundary_rank + H.space.dim());

    // Generator order must not matter.
    HomologyPresentation<F> HR = homology(reversed_complex(C));
    CHECK(class_signature(H) == class_signature(HR));
  }
}

TEST_CASE("random complexes: presentation matches the truncation-rank oracle") {
  random_homology_roundtrip<Rational>(2024, 0);
  random_homology_roundtrip<Rational>(2025, 2);
  random_homology_roundtrip<F2>(2026, 0);
  random_homology_roundtrip<F2>(2027, 3);
}

TEST_CASE("tensor complex applies the sign rule on the right factor") {
  FilteredComplex<Rational> C1 = make_complex<Rational>(
      FilteredSpace<Rational>({gen("x", 1, 0), gen("y", 2, 1)}),
      {{"y", {{"x", Rational(1)}}}});
  FilteredComplex<Rational> C2 = make_complex<Rational>(
      FilteredSpace<Rational>({gen("u", 1, 0), gen("v", 3, 1)}),
      {{"v", {{"u", Rational(1)}}}});
  FilteredComplex<Rational> T = tensor_complex(C1, C2);
  REQUIRE(T.space.dim() == 4);
  CHECK(check_complex(T).ok());

  auto idx = [&](const char* label) {
    return static_cast<std::uint32_t>(T.space.index_of(label));
  };
  // d(y (x) v) = x (x) v - y (x) u: the right-factor term picks up the sign
  // of deg(y) = 1.
  const auto& col_yv = T.boundary[idx("(y,v)")];
  REQUIRE(col_yv.size() == 2);
  CHECK(col_yv.at(idx("(x,v)")) == Rational(1));
  CHECK(col_yv.at(idx("(y,u)")) == Rational(-1));
  // d(x (x) v) = x (x) u with no sign, deg(x) = 0.
  const auto& col_xv = T.boundary[idx("(x,v)")];
  REQUIRE(col_xv.size() == 1);
  CHECK(col_xv.at(idx("(x,u)")) == Rational(1));
  // d(y (x) u) = x (x) u.
  const auto& col_yu = T.boundary[idx("(y,u)")];
  REQUIRE(col_yu.size() == 1);
  CHECK(col_yu.at(idx("(x,u)")) == Rational(1));

  // Mismatched quadratic fields across factors are rejected.
  FilteredComplex<Rational> C3 = make_complex<Rational>(
      FilteredSpace<Rational>(
          {Generator{"w", ExactScalar(Rational(0), Rational(1), 5), 0}}),
      {});
  FilteredComplex<Rational> C4 = make_complex<Rational>(
      FilteredSpace<Rational>(
          {Generator{"z", ExactScalar(Rational(0), Rational(1), 7), 0}}),
      {});
  CHECK_THROWS_AS(tensor_complex(C3, C4), FieldMismatchError);
}

TEST_CASE("tensor of random valid complexes is a valid complex") {
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    FilteredComplex<Rational> A = random_filtered_complex<Rational>(rng, 1 + rng.below(5));
    FilteredComplex<Rational> B = random_filtered_complex<Rational>(rng, 1 + rng.below(5));
    CHECK(check_complex(tensor_complex(A, B)).ok());
    FilteredComplex<F2> A2 = random_filtered_complex<F2>(rng, 1 + rng.below(5));
    FilteredComplex<F2> B2 = random_filtered_complex<F2>(rng, 1 + rng.below(5));
    CHECK(check_complex(tensor_complex(A2, B2)).ok());
  }
}

TEST_CASE("kunneth comparison on a hand-checked pair") {
  FilteredComplex<Rational> C1 = make_complex<Rational>(
      FilteredSpace<Rational>({gen("x", 1, 0), gen("y", 2, 1), gen("z", 5, 0)}),
      {{"y", {{"x", Rational(1)}}}});
  FilteredComplex<Rational> C2 =
      make_complex<Rational>(FilteredSpace<Rational>({gen("u", 1, 0), gen("v", 3, 1)}), {});
  // H(C1) = <[z] at 5>, H(C2) = <[u] at 1, [v] at 3>, so the product homology
  // jumps at 6 and 8.
  KunnethReport report = kunneth_check(C1, C2);
  CHECK(report.pass);
  bool saw_seven = false;
  for (const KunnethPoint& pt : report.points) {
    CHECK(pt.dim_product == pt.dim_span);
    if (pt.at == ExactScalar(7)) {
      saw_seven = true;
      CHECK(pt.dim_product == 1);
    }
    if (pt.at == ExactScalar(9)) CHECK(pt.dim_product == 2);
  }
  CHECK(saw_seven);
}

template <class F>
static void random_kunneth(std::uint64_t seed, std::int64_t field_d) {
  SplitMix64 rng(seed);
  for (int trial = 0; trial < 30; ++trial) {
    FilteredComplex<F> A = random_filtered_complex<F>(rng, 1 + rng.below(5), field_d);
    FilteredComplex<F> B = random_filtered_complex<F>(rng, 1 + rng.below(5), field_d);
    KunnethReport report = kunneth_check(A, B);
    CHECK(report.pass);
  }
}

TEST_CASE("kunneth comparison passes on random pairs") {
  random_kunneth<Rational>(41, 0);
  random_kunneth<Rational>(43, 2);
  random_kunneth<F2>(47, 0);
  random_kunneth<F2>(53, 5);
}

TEST_CASE("complex json round trip") {
  FilteredComplex<Rational> C = make_complex<Rational>(
      FilteredSpace<Rational>(
          {gen("a", 1, 0), gen("b", 2, 0),
           Generator{"c", ExactScalar(Rational(3), Rational(1, 2), 2), 1}}),
      {{"c", {{"a", Rational(1)}, {"b", Rational(-3, 2)}}}});
  Json j = complex_to_json(C);
  FilteredComplex<Rational> back = complex_from_json<Rational>(j);
  CHECK(back.space.dim() == 3);
  CHECK(back.space.gen(2).level == C.space.gen(2).level);
  CHECK(back.boundary == C.boundary);
  CHECK(complex_to_json(back).dump(2) == j.dump(2));

  SplitMix64 rng(59);
  FilteredComplex<F2> C2 = random_filtered_complex<F2>(rng, 5);
  Json j2 = complex_to_json(C2);
  FilteredComplex<F2> back2 = complex_from_json<F2>(j2);
  CHECK(back2.boundary == C2.boundary);
  CHECK(complex_to_json(back2).dump(2) == j2.dump(2));
}
