#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reebspec/selectors.hpp"

#include "oracles.hpp"

#include <string>
#include <vector>

using namespace reebspec;

namespace {

const SelectorFamily kCh{SelectorKind::ChLattice};
const SelectorFamily kEch{SelectorKind::EchLattice};

std::vector<long long> as_ints(const std::vector<ExactScalar>& table) {
  std::vector<long long> out;
  for (const ExactScalar& v : table) {
    Rational r = v.rational_part();
    REQUIRE(v.radicand() == 0);
    REQUIRE(r.den() == 1);
    out.push_back(static_cast<long long>(r.num()));
  }
  return out;
}

}  // namespace

TEST_CASE("selector names round trip") {
  CHECK(std::string(selector_name(SelectorKind::EchLattice)) == "ech");
  CHECK(std::string(selector_name(SelectorKind::ChLattice)) == "ch");
  CHECK(selector_from_name("ech") == SelectorKind::EchLattice);
  CHECK(selector_from_name("ch") == SelectorKind::ChLattice);
  CHECK_THROWS_AS(selector_from_name("gromov"), std::invalid_argument);
}

TEST_CASE("capacity tables match hand counts") {
  CHECK(as_ints(capacity_table(kCh, parse_axes("1,1"), 6)) ==
        std::vector<long long>{0, 1, 1, 2, 2, 2, 3});
  CHECK(as_ints(capacity_table(kCh, parse_axes("1,2"), 8)) ==
        std::vector<long long>{0, 1, 2, 2, 3, 3, 4, 4, 4});
  CHECK(as_ints(capacity_table(kCh, parse_axes("1"), 5)) ==
        std::vector<long long>{0, 1, 2, 3, 4, 5});
  std::vector<ExactScalar> half = capacity_table(kCh, parse_axes("1/2"), 4);
  REQUIRE(half.size() == 5);
  for (std::size_t k = 0; k < half.size(); ++k) {
    CHECK(half[k] == ExactScalar(Rational(static_cast<long long>(k), 2)));
  }
  // K = 0 gives just c_0 = 0.
  std::vector<ExactScalar> zero = capacity_table(kCh, parse_axes("1,sqrt(2)"), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == ExactScalar(0));
  CHECK(capacity(kCh, parse_axes("1,2"), 5) == ExactScalar(3));
}

TEST_CASE("capacity tables match the closed-form staircases at depth") {
  std::vector<ExactScalar> sphere = capacity_table(kCh, parse_axes("1,1"), 5000);
  for (std::uint64_t k : {0ull, 1ull, 7ull, 50ull, 1234ull, 5000ull}) {
    CHECK(sphere[k] ==
          ExactScalar(static_cast<long long>(oracles::round_sphere_capacity_2d(k))));
  }
  std::vector<ExactScalar> table12 = capacity_table(kCh, parse_axes("1,2"), 999);
  for (std::uint64_t k : {1ull, 12ull, 100ull, 999ull}) {
    CHECK(table12[k] == ExactScalar(static_cast<long long>(oracles::capacity_1_2(k))));
  }
}

TEST_CASE("both selector families agree on two axes; ech rejects others") {
  for (const char* axes : {"1,1", "1,2", "1,sqrt(2)", "2/3,7/5"}) {
    std::vector<ExactScalar> ch = capacity_table(kCh, parse_axes(axes), 40);
    std::vector<ExactScalar> ech = capacity_table(kEch, parse_axes(axes), 40);
    REQUIRE(ch.size() == ech.size());
    for (std::size_t k = 0; k < ch.size(); ++k) CHECK(ch[k] == ech[k]);
  }
  CHECK_THROWS_AS(capacity_table(kEch, parse_axes("1,2,3"), 5), std::invalid_argument);
  CHECK_THROWS_AS(capacity_table(kEch, parse_axes("1"), 5), std::invalid_argument);
  CHECK_THROWS_AS(shift_weights(kEch, 3, 5), std::invalid_argument);
}

TEST_CASE("shift weights are the round-sphere capacities") {
  CHECK(as_ints(shift_weights(kCh, 2, 10)) ==
        std::vector<long long>{1, 1, 2, 2, 2, 3, 3, 3, 3, 4});
  CHECK(as_ints(shift_weights(kCh, 1, 6)) == std::vector<long long>{1, 2, 3, 4, 5, 6});
  CHECK(as_ints(shift_weights(kCh, 3, 5)) == std::vector<long long>{1, 1, 1, 2, 2});
  CHECK(as_ints(shift_weights(kEch, 2, 4)) == std::vector<long long>{1, 1, 2, 2});
  // Positive and nondecreasing, unboundedly.
  std::vector<ExactScalar> w = shift_weights(kCh, 2, 200);
  REQUIRE(w.size() == 200);
  CHECK(w[0].sign() > 0);
  for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i - 1] <= w[i]);
  CHECK(w.back() >= ExactScalar(19));  // c_200(1,1) = 19
}

TEST_CASE("capacity count below a cutoff equals the lattice count") {
  for (const char* axes : {"1,3/2", "1,sqrt(2)", "1,2,3"}) {
    EllipsoidParams p = parse_axes(axes);
    ExactScalar L(6);
    std::vector<ExactScalar> table = capacity_table(kCh, p, 80);
    REQUIRE(table.back() > L);  // horizon covers the cutoff
    std::uint64_t below = 0;
    for (const ExactScalar& c : table) {
      if (c <= L) ++below;
    }
    CAPTURE(axes);
    CHECK(below == lattice_count(p, L));
  }
}

TEST_CASE("spectrality verifier accepts lattice selectors") {
  for (const char* axes : {"1,1", "1,sqrt(2)", "1,3/2,2"}) {
    VerifyResult r = verify_spectrality(kCh, parse_axes(axes), 30);
    CAPTURE(axes);
    CHECK(r.pass);
    CHECK(r.failures.empty());
  }
}

TEST_CASE("conformality verifier accepts exact scaling") {
  CHECK(verify_conformality(kCh, parse_axes("1,3/2"), ExactScalar(Rational(5, 2)), 25).pass);
  // A quadratic scale moves rational axes into the quadratic field.
  CHECK(verify_conformality(kCh, parse_axes("1,2"),
                            ExactScalar(Rational(0), Rational(1), 2), 25)
            .pass);
  CHECK_THROWS_AS(verify_conformality(kCh, parse_axes("1,2"), ExactScalar(0), 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_conformality(kCh, parse_axes("1,2"), ExactScalar(-2), 5),
                  std::invalid_argument);
}

TEST_CASE("monotonicity verifier needs comparable axes") {
  CHECK(verify_monotonicity(kCh, parse_axes("1,2"), parse_axes("3/2,2"), 30).pass);
  CHECK(verify_monotonicity(kCh, parse_axes("1,2"), parse_axes("1,2"), 10).pass);
  CHECK_THROWS_AS(verify_monotonicity(kCh, parse_axes("1,3"), parse_axes("2,2"), 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_monotonicity(kCh, parse_axes("1,2"), parse_axes("1,2,3"), 10),
                  std::invalid_argument);
}

TEST_CASE("continuity sandwich holds with exact ratio bounds") {
  CHECK(continuity_sandwich(kCh, parse_axes("1,2"), parse_axes("1,3"), 25).pass);
  CHECK(continuity_sandwich(kCh, parse_axes("1,3"), parse_axes("1,2"), 25).pass);
  CHECK(continuity_sandwich(kCh, parse_axes("2,3"), parse_axes("2,3"), 10).pass);
  CHECK_THROWS_AS(continuity_sandwich(kCh, parse_axes("1"), parse_axes("1,2"), 5),
                  std::invalid_argument);
}

TEST_CASE("locality check works on spectrum-free intervals") {
  // (1,1): the spectrum is the integers; (5/4, 7/4) is spectrum free.
  VerifyResult r = locality_check(kCh, parse_axes("1,1"), ExactScalar(Rational(5, 4)),
                                  ExactScalar(Rational(7, 4)), 20);
  CHECK(r.pass);
  CHECK_THROWS_AS(locality_check(kCh, parse_axes("1,1"), ExactScalar(-1), ExactScalar(1), 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(locality_check(kCh, parse_axes("1,1"), ExactScalar(2), ExactScalar(1), 5),
                  std::invalid_argument);
  // Interval touching a spectrum point is rejected as a precondition.
  CHECK_THROWS_AS(locality_check(kCh, parse_axes("1,1"), ExactScalar(Rational(1, 2)),
                                 ExactScalar(Rational(3, 2)), 5),
                  std::invalid_argument);
}

TEST_CASE("verifier and capacity serialization shapes") {
  EllipsoidParams p = parse_axes("1,2");
  std::vector<ExactScalar> table = capacity_table(kCh, p, 5);
  Json j = capacities_to_json(kCh, p, table);
  CHECK(j["selector"] == "ch");
  CHECK(j["count"] == 5);
  REQUIRE(j["capacities"].size() == 6);
  CHECK(j["capacities"][5]["p"] == 3);
  CHECK(j["capacities"][5]["dec"] == "3.000000000000");

  std::string csv = capacities_to_csv(table);
  CHECK(csv.rfind("k,value_num,value_quad_coeff,d\n", 0) == 0);
  CHECK(csv.find("3,2.000000000000,0.000000000000,0") != std::string::npos);

  VerifyResult ok;
  Json jok = verify_result_to_json(ok);
  CHECK(jok["pass"] == true);
  CHECK(jok["failures"].empty());
  VerifyResult bad;
  bad.pass = false;
  bad.failures.push_back(VerifyWitness{3, ExactScalar(2), ExactScalar(1), "lhs exceeds rhs"});
  Json jbad = verify_result_to_json(bad);
  CHECK(jbad["pass"] == false);
  REQUIRE(jbad["failures"].size() == 1);
  CHECK(jbad["failures"][0]["k"] == 3);
  CHECK(jbad["failures"][0]["note"] == "lhs exceeds rhs");
}

TEST_CASE("randomized axiom trials pass and are reproducible") {
  for (const char* axiom :
       {"spectrality", "conformality", "monotonicity", "continuity", "locality"}) {
    AxiomTrialsReport report = run_axiom_trials(axiom, 40, 7, 12);
    CAPTURE(axiom);
    CHECK(report.pass);
    CHECK(report.failures.empty());
    CHECK(report.trials == 40);
    CHECK(report.axiom == axiom);
    AxiomTrialsReport again = run_axiom_trials(axiom, 40, 7, 12);
    CHECK(axiom_trials_to_json(report).dump(2) == axiom_trials_to_json(again).dump(2));
  }
  CHECK_THROWS_AS(run_axiom_trials("unknown", 1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(run_axiom_trials("spectrality", 1, 1, 0), std::invalid_argument);
}
