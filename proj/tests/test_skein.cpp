#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "sl3web/skein.hpp"

#include <map>

using namespace sl3web;
using namespace fixtures;

namespace {

LaurentPoly two() { return quantum_integer(2); }
LaurentPoly three() { return quantum_integer(3); }

std::vector<Web> closed_corpus() {
  return {Web::empty(),
          Web::single_loop(),
          make_theta(),
          make_cube(),
          trace_close(make_cap(), make_cap()),
          trace_close(make_tripod(), make_tripod()),
          trace_close(make_aitch(), make_aitch()),
          trace_close(make_nested_caps(), make_nested_caps()),
          trace_close(make_nested_caps(), make_double_lambda()),
          trace_close(make_double_lambda(), make_double_lambda()),
          disjoint_union(make_theta(), make_theta()),
          disjoint_union(make_cube(), Web::single_loop())};
}

}  // namespace

TEST_CASE("base evaluations") {
  CHECK(bracket(Web::empty()) == LaurentPoly::one());
  CHECK(bracket(Web::single_loop()) == three());
  CHECK(bracket(Web::single_loop()).to_string() == "q^2 + 1 + q^-2");

  Web two_loops;
  two_loops.loops = 2;
  CHECK(bracket(two_loops) == three() * three());
}

TEST_CASE("theta evaluates to [2][3]") {
  const LaurentPoly v = bracket(make_theta());
  CHECK(v == two() * three());
  CHECK(v.coefficient_q(3) == 1);
  CHECK(v.coefficient_q(1) == 2);
  CHECK(v.coefficient_q(-1) == 2);
  CHECK(v.coefficient_q(-3) == 1);
  CHECK(eval_at_one(v) == 6);
}

TEST_CASE("webs with boundary are rejected") {
  CHECK_THROWS_AS(bracket(make_cap()), ParseError);
  CHECK_THROWS_AS(bracket_randomized(make_tripod(), 1), ParseError);
  CHECK_THROWS_AS(bracket_traced(make_aitch()), ParseError);
}

TEST_CASE("hand-reduced closures") {
  // Cap against cap closes to one circle.
  CHECK(bracket(trace_close(make_cap(), make_cap())) == three());
  // Tripod against tripod closes to a theta.
  CHECK(bracket(trace_close(make_tripod(), make_tripod())) == two() * three());
  // Nested caps against themselves give two circles.
  CHECK(bracket(trace_close(make_nested_caps(), make_nested_caps())) ==
        three() * three());
  // H against H: two digons collapse onto a theta.
  CHECK(bracket(trace_close(make_aitch(), make_aitch())) ==
        two() * two() * three());
  // Double lambda pairings, reduced by hand the same way.
  CHECK(bracket(trace_close(make_double_lambda(), make_double_lambda())) ==
        two() * two() * three());
  CHECK(bracket(trace_close(make_nested_caps(), make_double_lambda())) ==
        two() * three());
}

TEST_CASE("cube needs the square rule") {
  // Both square resolutions were chased by hand: each collapses through two
  // digons onto a theta, so the cube evaluates to 2[2]^2[3].
  const LaurentPoly expected =
      (two() * two() * three()) * LaurentPoly(Int(2));
  CHECK(bracket(make_cube()) == expected);
  CHECK(eval_at_one(bracket(make_cube())) == 24);

  const ReductionTrace tr = bracket_traced(make_cube());
  CHECK(tr.factor == expected);
  std::map<ReductionRule, int> rules;
  for (const TraceStep& s : tr.steps) rules[s.rule]++;
  CHECK(rules[ReductionRule::square_branch_a] == 1);
  CHECK(rules[ReductionRule::square_branch_b] == 1);
  CHECK(rules[ReductionRule::digon] == 4);
  CHECK(rules[ReductionRule::circle] == 2);
}

TEST_CASE("trace on the theta") {
  const ReductionTrace tr = bracket_traced(make_theta());
  REQUIRE(tr.steps.size() == 2);
  CHECK(tr.steps[0].rule == ReductionRule::digon);
  CHECK(tr.steps[0].vertices == 2);
  CHECK(tr.steps[1].rule == ReductionRule::circle);
  CHECK(tr.factor == two() * three());
}

TEST_CASE("multiplicative over disjoint union") {
  const LaurentPoly t = bracket(make_theta());
  CHECK(bracket(disjoint_union(make_theta(), make_theta())) == t * t);
  CHECK(bracket(disjoint_union(make_theta(), Web::single_loop())) ==
        t * three());
  const LaurentPoly c = bracket(make_cube());
  CHECK(bracket(disjoint_union(make_cube(), make_theta())) == c * t);
}

TEST_CASE("bracket properties on the closed corpus") {
  for (const Web& w : closed_corpus()) {
    const LaurentPoly v = bracket(w);
    CHECK(bar_involution(v) == v);   // symmetric in q <-> q^-1
    CHECK(v.nonnegative());          // products of quantum integers
    CHECK(v.even_q_powers());        // integral powers of q only
    CHECK(!v.is_zero());
  }
}

TEST_CASE("randomized reduction is confluent") {
  for (const Web& w : closed_corpus()) {
    const LaurentPoly expected = bracket(w);
    for (uint64_t seed = 1; seed <= 5; ++seed) {
      CHECK(bracket_randomized(w, seed) == expected);
    }
  }
}

TEST_CASE("traced agrees with memoized") {
  for (const Web& w : closed_corpus()) {
    CHECK(bracket_traced(w).factor == bracket(w));
  }
}
