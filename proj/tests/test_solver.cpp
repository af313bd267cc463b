#include <doctest.h>

#include <random>
#include <set>

#include "rattrig/solver.hpp"
#include "test_support.hpp"

using namespace rattrig;
using rattrig::testing::random_element;
using rattrig::testing::random_triangle;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

FieldElement q(long long num, long long den = 1) { return FieldElement::ratio_of(kQ, num, den); }

// brute-force root scan over all of F_p, the completeness oracle
std::set<std::uint64_t> brute_cross_roots(const FieldSpec& f, const FieldElement& q2,
                                          const FieldElement& q3, const FieldElement& s1) {
  std::set<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < f.modulus; ++x) {
    FieldElement q1 = FieldElement::of(f, Integer(x));
    if (check_cross_law({q1, q2, q3}, s1).holds()) roots.insert(x);
  }
  return roots;
}

void check_candidate_laws(const TriangleCandidate& cand) {
  const auto& qv = cand.quadrances;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    if (cand.spreads[i])
      CHECK(check_cross_law({qv[i], qv[j], qv[k]}, *cand.spreads[i]).holds());
  }
  if (cand.spreads[0] && cand.spreads[1] && cand.spreads[2]) {
    CHECK(check_triple_spread({*cand.spreads[0], *cand.spreads[1], *cand.spreads[2]}).holds());
    if (!qv[0].is_zero() && !qv[1].is_zero() && !qv[2].is_zero())
      CHECK(check_spread_law({qv[0], qv[1], qv[2]},
                             {*cand.spreads[0], *cand.spreads[1], *cand.spreads[2]})
                .holds());
  }
  CHECK(cand.quadrea == quadrea({qv[0], qv[1], qv[2]}));
  CHECK(cand.area_sq == area_sq_from_quadrea({qv[0], qv[1], qv[2]}));
}

}  // namespace

TEST_CASE("cross law quadratic over the rationals") {
  SUBCASE("right angle forces the pythagorean double root") {
    SolutionSet s = solve_quadrance_from_cross_law(q(1), q(1), q(1));
    CHECK(s.discriminant == q(0));
    REQUIRE(s.roots.size() == 1);
    CHECK(s.roots[0].value == q(2));
    CHECK(s.roots[0].multiplicity == 2);
  }

  SUBCASE("the worked-example pair has two branches") {
    SolutionSet s = solve_quadrance_from_cross_law(q(68), q(74), q(529, 1258));
    CHECK(s.discriminant == q(11664));  // = 108^2
    REQUIRE(s.roots.size() == 2);
    CHECK(s.roots[0].value == q(34));
    CHECK(s.roots[1].value == q(250));
    for (const auto& r : s.roots)
      CHECK(check_cross_law({r.value, q(68), q(74)}, q(529, 1258)).holds());
    // quadrances that fail substitution are not roots
    CHECK_FALSE(check_cross_law({q(170), q(68), q(74)}, q(529, 1258)).holds());
  }

  SUBCASE("irrational radicand means no in-field roots") {
    SolutionSet s = solve_quadrance_from_cross_law(q(1), q(1), q(1, 2));
    CHECK(s.roots.empty());
    CHECK(s.discriminant == q(2));  // certificate: 2 is not a rational square
  }
}

TEST_CASE("cross law roots match brute force over prime fields") {
  std::mt19937_64 gen(59);
  for (std::uint64_t p : {13ull, 31ull}) {
    FieldSpec f = FieldSpec::prime(p);
    for (int i = 0; i < 50; ++i) {
      FieldElement q2 = random_element(gen, f);
      FieldElement q3 = random_element(gen, f);
      FieldElement s1 = random_element(gen, f);
      SolutionSet got = solve_quadrance_from_cross_law(q2, q3, s1);
      std::set<std::uint64_t> expected = brute_cross_roots(f, q2, q3, s1);
      std::set<std::uint64_t> values;
      for (const auto& r : got.roots) values.insert(r.value.residue_value());
      CHECK(values == expected);
    }
  }
}

TEST_CASE("triple spread quadratic") {
  SUBCASE("right isoceles double root") {
    SolutionSet s = solve_spread_from_triple_spread(q(1), q(1, 2));
    REQUIRE(s.roots.size() == 1);
    CHECK(s.roots[0].value == q(1, 2));
    CHECK(s.roots[0].multiplicity == 2);
  }
  SUBCASE("equilateral spread plus the collinear root") {
    SolutionSet s = solve_spread_from_triple_spread(q(3, 4), q(3, 4));
    REQUIRE(s.roots.size() == 2);
    CHECK(s.roots[0].value == q(0));
    CHECK(s.roots[1].value == q(3, 4));
    for (const auto& r : s.roots)
      CHECK(check_triple_spread({q(3, 4), q(3, 4), r.value}).holds());
  }
  SUBCASE("parallel configuration") {
    SolutionSet s = solve_spread_from_triple_spread(q(0), q(0));
    REQUIRE(s.roots.size() == 1);
    CHECK(s.roots[0].value == q(0));
  }
}

TEST_CASE("complete_triangle from three quadrances") {
  PartialTriangle known;
  known.quadrances = {q(34), q(68), q(74)};
  CompletionResult result = complete_triangle(known);
  CHECK(result.pattern == "three_quadrances");
  REQUIRE(result.candidates.size() == 1);
  const auto& cand = result.candidates[0];
  CHECK(*cand.spreads[0] == q(529, 1258));
  CHECK(*cand.spreads[1] == q(529, 629));
  CHECK(*cand.spreads[2] == q(529, 578));
  CHECK(cand.quadrea == q(8464));
  check_candidate_laws(cand);
}

TEST_CASE("complete_triangle from two quadrances and the included spread") {
  PartialTriangle known;
  known.quadrances = {std::nullopt, q(1), q(1)};
  known.spreads = {q(1), std::nullopt, std::nullopt};
  CompletionResult result = complete_triangle(known);
  CHECK(result.pattern == "cross_law");
  REQUIRE(result.candidates.size() == 1);
  CHECK(result.candidates[0].quadrances[0] == q(2));
  CHECK(*result.candidates[0].spreads[0] == q(1));
  CHECK(*result.candidates[0].spreads[1] == q(1, 2));
  CHECK(*result.candidates[0].spreads[2] == q(1, 2));

  PartialTriangle ambiguous;
  ambiguous.quadrances = {std::nullopt, q(68), q(74)};
  ambiguous.spreads = {q(529, 1258), std::nullopt, std::nullopt};
  CompletionResult both = complete_triangle(ambiguous);
  REQUIRE(both.candidates.size() == 2);
  CHECK(both.candidates[0].quadrances[0] == q(34));
  CHECK(both.candidates[1].quadrances[0] == q(250));
  for (const auto& cand : both.candidates) check_candidate_laws(cand);

  PartialTriangle unsolvable;
  unsolvable.quadrances = {std::nullopt, q(1), q(1)};
  unsolvable.spreads = {q(1, 2), std::nullopt, std::nullopt};
  CHECK_THROWS_AS(complete_triangle(unsolvable), NotInField);
}

TEST_CASE("complete_triangle from two quadrances and an opposite spread") {
  // the worked example reconstructed from Q1, Q2 and s1
  PartialTriangle known;
  known.quadrances = {q(34), q(68), std::nullopt};
  known.spreads = {q(529, 1258), std::nullopt, std::nullopt};
  CompletionResult result = complete_triangle(known);
  CHECK(result.pattern == "spread_law_tsf");
  REQUIRE(result.candidates.size() == 2);
  bool found_original = false;
  for (const auto& cand : result.candidates) {
    check_candidate_laws(cand);
    CHECK(*cand.spreads[1] == q(529, 629));
    if (cand.quadrances[2] == q(74)) {
      found_original = true;
      CHECK(*cand.spreads[2] == q(529, 578));
    }
  }
  CHECK(found_original);
}

TEST_CASE("complete_triangle with a zero opposite spread gives the collinear family") {
  // spacings 1 and 2 along one line: the third quadrance is 1 or 9
  PartialTriangle known;
  known.quadrances = {q(1), q(4), std::nullopt};
  known.spreads = {q(0), std::nullopt, std::nullopt};
  CompletionResult result = complete_triangle(known);
  CHECK(result.pattern == "spread_law_tsf");
  REQUIRE(result.candidates.size() == 2);
  CHECK(result.candidates[0].quadrances[2] == q(1));
  CHECK(result.candidates[1].quadrances[2] == q(9));
  for (const auto& cand : result.candidates) {
    CHECK(cand.quadrea == q(0));
    for (const auto& s : cand.spreads) {
      REQUIRE(s.has_value());
      CHECK(s->is_zero());
    }
    check_candidate_laws(cand);
  }

  // spacings 1 and sqrt(2): no rational completion
  PartialTriangle irrational;
  irrational.quadrances = {q(1), q(2), std::nullopt};
  irrational.spreads = {q(0), std::nullopt, std::nullopt};
  CHECK_THROWS_AS(complete_triangle(irrational), NotInField);
}

TEST_CASE("complete_triangle from three spreads gives the similarity class") {
  PartialTriangle known;
  known.spreads = {q(3, 4), q(3, 4), q(3, 4)};
  CompletionResult result = complete_triangle(known);
  CHECK(result.pattern == "three_spreads");
  REQUIRE(result.candidates.size() == 1);
  const auto& cand = result.candidates[0];
  CHECK(cand.similarity_only);
  CHECK(cand.quadrances[0] == cand.quadrances[1]);
  CHECK(cand.quadrances[1] == cand.quadrances[2]);
  check_candidate_laws(cand);

  PartialTriangle bad;
  bad.spreads = {q(1, 4), q(1, 4), q(1, 4)};
  CHECK_THROWS_AS(complete_triangle(bad), InconsistentData);
}

TEST_CASE("complete_triangle rejects unsupported or impossible data") {
  PartialTriangle two_q;
  two_q.quadrances = {q(1), q(2), std::nullopt};
  CHECK_THROWS_AS(complete_triangle(two_q), UnsupportedPattern);

  PartialTriangle mixed;
  mixed.quadrances = {q(1), std::nullopt, std::nullopt};
  mixed.spreads = {std::nullopt, q(1, 2), std::nullopt};
  CHECK_THROWS_AS(complete_triangle(mixed), UnsupportedPattern);

  PartialTriangle contradictory;
  contradictory.quadrances = {q(0), q(1), q(5)};
  CHECK_THROWS_AS(complete_triangle(contradictory), InconsistentData);

  PartialTriangle degenerate;
  degenerate.quadrances = {q(0), q(7), q(7)};
  CompletionResult result = complete_triangle(degenerate);
  REQUIRE(result.candidates.size() == 1);
  CHECK(result.candidates[0].quadrea == q(0));
  CHECK(result.candidates[0].spreads[0].has_value());
  CHECK(result.candidates[0].spreads[0]->is_zero());
  CHECK_FALSE(result.candidates[0].spreads[1].has_value());
}

TEST_CASE("round trip: completing the quadrances of random triangles recovers their spreads") {
  std::mt19937_64 gen(61);
  for (int i = 0; i < 1000; ++i) {
    auto tri = random_triangle(gen);
    TriangleReport r = analyze_triangle(tri[0], tri[1], tri[2]);
    PartialTriangle known;
    known.quadrances = {r.quadrances[0], r.quadrances[1], r.quadrances[2]};
    CompletionResult result = complete_triangle(known);
    REQUIRE(result.candidates.size() == 1);
    for (int v = 0; v < 3; ++v)
      CHECK(*result.candidates[0].spreads[v] == (*r.spreads)[v]);
  }
}

TEST_CASE("triple spread roots match brute force over prime fields") {
  std::mt19937_64 gen(67);
  FieldSpec f = FieldSpec::prime(31);
  for (int i = 0; i < 50; ++i) {
    FieldElement s1 = random_element(gen, f);
    FieldElement s2 = random_element(gen, f);
    SolutionSet got = solve_spread_from_triple_spread(s1, s2);
    std::set<std::uint64_t> expected;
    for (std::uint64_t x = 0; x < f.modulus; ++x) {
      FieldElement s3 = FieldElement::of(f, Integer(x));
      if (check_triple_spread({s1, s2, s3}).holds()) expected.insert(x);
    }
    std::set<std::uint64_t> values;
    for (const auto& r : got.roots) values.insert(r.value.residue_value());
    CHECK(values == expected);
  }
}
