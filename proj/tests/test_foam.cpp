#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl3web/errors.hpp"
#include "sl3web/foam.hpp"

#include <vector>

using namespace sl3web;

namespace {

FrobeniusElement fe(int c0, int c1, int c2) {
  FrobeniusElement e;
  e.coeff = {Rational(c0), Rational(c1), Rational(c2)};
  return e;
}

FrobeniusElement X(int k) { return FrobeniusElement::x_power(k); }

PreFoam closed_surface(int genus, int dots) {
  PreFoam f;
  f.facets.push_back(Facet{genus, dots, {}});
  return f;
}

// Three disks around one singular circle, seats in the order given.
PreFoam theta_foam(int d1, int d2, int d3) {
  PreFoam f;
  f.facets.push_back(Facet{0, d1, {0}});
  f.facets.push_back(Facet{0, d2, {0}});
  f.facets.push_back(Facet{0, d3, {0}});
  f.circles.push_back({SeatRef{0, 0}, SeatRef{1, 0}, SeatRef{2, 0}});
  return f;
}

// Three tubes suspended between two singular circles.
PreFoam dumbbell(int d1 = 0, int d2 = 0, int d3 = 0) {
  PreFoam f;
  f.facets.push_back(Facet{0, d1, {0, 1}});
  f.facets.push_back(Facet{0, d2, {0, 1}});
  f.facets.push_back(Facet{0, d3, {0, 1}});
  f.circles.push_back({SeatRef{0, 0}, SeatRef{1, 0}, SeatRef{2, 0}});
  f.circles.push_back({SeatRef{0, 1}, SeatRef{1, 1}, SeatRef{2, 1}});
  return f;
}

// One three-holed sphere whose boundary circles all land on the same
// singular circle.
PreFoam triple_slot(int dots) {
  PreFoam f;
  f.facets.push_back(Facet{0, dots, {0, 1, 2}});
  f.circles.push_back({SeatRef{0, 0}, SeatRef{0, 1}, SeatRef{0, 2}});
  return f;
}

// Two theta configurations sharing a tube.
PreFoam theta_chain() {
  PreFoam f;
  f.facets.push_back(Facet{0, 0, {0}});      // A on circle 0
  f.facets.push_back(Facet{0, 1, {0}});      // B on circle 0
  f.facets.push_back(Facet{0, 0, {0, 1}});   // tube between the circles
  f.facets.push_back(Facet{0, 1, {0}});      // C on circle 1
  f.facets.push_back(Facet{0, 2, {0}});      // D on circle 1
  f.circles.push_back({SeatRef{0, 0}, SeatRef{1, 0}, SeatRef{2, 0}});
  f.circles.push_back({SeatRef{2, 1}, SeatRef{3, 0}, SeatRef{4, 0}});
  return f;
}

PreFoam disjoint(PreFoam a, const PreFoam& b) {
  int shift = static_cast<int>(a.facets.size());
  for (const Facet& f : b.facets) a.facets.push_back(f);
  for (auto circle : b.circles) {
    for (SeatRef& seat : circle) seat.facet += shift;
    a.circles.push_back(circle);
  }
  return a;
}

std::vector<PreFoam> foam_corpus() {
  std::vector<PreFoam> corpus;
  for (int g = 0; g <= 2; ++g)
    for (int d = 0; d <= 3; ++d) corpus.push_back(closed_surface(g, d));
  for (int d1 = 0; d1 <= 2; ++d1)
    for (int d2 = 0; d2 <= 2; ++d2)
      for (int d3 = 0; d3 <= 2; ++d3) corpus.push_back(theta_foam(d1, d2, d3));
  corpus.push_back(dumbbell());
  corpus.push_back(dumbbell(1, 0, 0));
  corpus.push_back(dumbbell(1, 1, 1));
  corpus.push_back(dumbbell(2, 2, 2));
  corpus.push_back(triple_slot(0));
  corpus.push_back(triple_slot(1));
  corpus.push_back(theta_chain());
  corpus.push_back(disjoint(dumbbell(), theta_foam(0, 1, 2)));
  corpus.push_back(disjoint(closed_surface(1, 0), theta_chain()));
  return corpus;
}

}  // namespace

TEST_CASE("frobenius algebra structure") {
  CHECK(frob_mul(X(1), X(1)) == X(2));
  CHECK(frob_mul(X(1), X(2)).is_zero());
  CHECK(frob_mul(X(0), fe(2, -1, 5)) == fe(2, -1, 5));
  CHECK(frob_add(X(0), frob_scale(3, X(2))) == fe(1, 0, 3));
  CHECK(X(7).is_zero());

  CHECK(frob_trace(X(0)) == 0);
  CHECK(frob_trace(X(1)) == 0);
  CHECK(frob_trace(X(2)) == -1);
  CHECK(frob_trace(fe(4, 9, -7)) == 7);

  // Delta(1) = -1(x)X^2 - X(x)X - X^2(x)1, sign carried by the left leg.
  auto legs = frob_comul(X(0));
  REQUIRE(legs.size() == 3);
  CHECK(legs[0] == std::pair{fe(-1, 0, 0), X(2)});
  CHECK(legs[1] == std::pair{fe(0, -1, 0), X(1)});
  CHECK(legs[2] == std::pair{fe(0, 0, -1), X(0)});

  legs = frob_comul(X(2));
  REQUIRE(legs.size() == 1);
  CHECK(legs[0] == std::pair{fe(0, 0, -1), X(2)});

  // Handle element m(Delta(1)) = -3 X^2, and its square vanishes.
  FrobeniusElement handle = FrobeniusElement::zero();
  for (const auto& [l, r] : frob_comul(X(0)))
    handle = frob_add(handle, frob_mul(l, r));
  CHECK(handle == fe(0, 0, -3));
  CHECK(frob_mul(handle, handle).is_zero());
  CHECK(frob_mul(handle, X(1)).is_zero());
}

TEST_CASE("comultiplication counit identity") {
  // Capping one side of a neck cut is the identity:
  //   sum over legs of tau(left) * right == a.
  for (int k = 0; k < 3; ++k) {
    FrobeniusElement a = X(k);
    FrobeniusElement sum = FrobeniusElement::zero();
    for (const auto& [l, r] : frob_comul(a))
      sum = frob_add(sum, frob_scale(frob_trace(l), r));
    CHECK(sum == a);
  }
  // Delta is multiplicative over the module action.
  for (int k = 0; k < 3; ++k) {
    auto direct = frob_comul(X(k));
    std::vector<std::pair<FrobeniusElement, FrobeniusElement>> pushed;
    for (const auto& [l, r] : frob_comul(X(0))) {
      auto left = frob_mul(l, X(k));
      if (!left.is_zero()) pushed.emplace_back(left, r);
    }
    CHECK(direct == pushed);
  }
}

TEST_CASE("theta sign table") {
  CHECK(theta_sign(0, 1, 2) == 1);
  CHECK(theta_sign(1, 2, 0) == 1);
  CHECK(theta_sign(2, 0, 1) == 1);
  CHECK(theta_sign(2, 1, 0) == -1);
  CHECK(theta_sign(1, 0, 2) == -1);
  CHECK(theta_sign(0, 2, 1) == -1);
  int nonzero = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        // cyclic invariance and antisymmetry under reversal
        CHECK(theta_sign(i, j, k) == theta_sign(j, k, i));
        CHECK(theta_sign(i, j, k) == -theta_sign(k, j, i));
        if (i == j || j == k || i == k) CHECK(theta_sign(i, j, k) == 0);
        nonzero += theta_sign(i, j, k) != 0;
      }
  CHECK(nonzero == 6);

  CHECK(frob_theta(X(0), X(1), X(2)) == 1);
  CHECK(frob_theta(X(2), X(1), X(0)) == -1);
  CHECK(frob_theta(X(0), X(0), X(2)) == 0);
  CHECK(frob_theta(fe(1, 1, 0), X(1), X(2)) == 1);   // only the 1-part hits
  CHECK(frob_theta(frob_scale(5, X(0)), X(2), X(1)) == -5);
}

TEST_CASE("closed surface evaluations") {
  CHECK(evaluate(closed_surface(0, 0)) == 0);
  CHECK(evaluate(closed_surface(0, 1)) == 0);
  CHECK(evaluate(closed_surface(0, 2)) == -1);
  CHECK(evaluate(closed_surface(0, 3)) == 0);
  CHECK(evaluate(closed_surface(1, 0)) == 3);
  CHECK(evaluate(closed_surface(1, 1)) == 0);
  CHECK(evaluate(closed_surface(2, 0)) == 0);

  // Disjoint closed surfaces multiply.
  CHECK(evaluate(disjoint(closed_surface(0, 2), closed_surface(1, 0))) == -3);
}

TEST_CASE("theta foam evaluations") {
  CHECK(evaluate(theta_foam(0, 1, 2)) == 1);
  CHECK(evaluate(theta_foam(1, 2, 0)) == 1);
  CHECK(evaluate(theta_foam(2, 0, 1)) == 1);
  CHECK(evaluate(theta_foam(0, 2, 1)) == -1);
  CHECK(evaluate(theta_foam(2, 1, 0)) == -1);
  CHECK(evaluate(theta_foam(0, 0, 0)) == 0);
  CHECK(evaluate(theta_foam(1, 1, 1)) == 0);
  CHECK(evaluate(theta_foam(0, 1, 1)) == 0);
  CHECK(evaluate(theta_foam(1, 2, 3)) == 0);

  // A handle acts like -3 dots-squared on its facet.
  PreFoam with_genus = theta_foam(0, 1, 0);
  with_genus.facets[0].genus = 1;
  CHECK(foam_degree(with_genus) == 0);
  CHECK(evaluate(with_genus) == 3);
  CHECK(evaluate(with_genus) == -3 * evaluate(theta_foam(2, 1, 0)));
}

TEST_CASE("neck-cutting configurations") {
  CHECK(evaluate(dumbbell()) == 6);
  CHECK(evaluate(triple_slot(0)) == 0);
  CHECK(evaluate(triple_slot(1)) == 0);
  CHECK(evaluate(theta_chain()) == -1);

  // Multiplicativity across disjoint unions with singular circles.
  CHECK(evaluate(disjoint(dumbbell(), dumbbell())) == 36);
  CHECK(evaluate(disjoint(dumbbell(), theta_foam(0, 1, 2))) == 6);
  CHECK(evaluate(disjoint(theta_chain(), closed_surface(0, 2))) == 1);
}

TEST_CASE("degree") {
  CHECK(foam_degree(theta_foam(0, 0, 0)) == -6);
  CHECK(foam_degree(theta_foam(0, 1, 2)) == 0);
  CHECK(foam_degree(closed_surface(0, 0)) == -4);
  CHECK(foam_degree(closed_surface(0, 2)) == 0);
  CHECK(foam_degree(closed_surface(1, 0)) == 0);
  CHECK(foam_degree(dumbbell()) == 0);
  CHECK(foam_degree(triple_slot(0)) == 2);
  CHECK(foam_degree(theta_chain()) == 0);

  // Homogeneity obstruction: inhomogeneous degree forces value zero.
  for (const PreFoam& f : foam_corpus()) {
    if (foam_degree(f) != 0) CHECK(evaluate(f) == 0);
  }
}

TEST_CASE("neck-cutting order confluence") {
  for (const PreFoam& f : foam_corpus()) {
    Rational reference = evaluate(f);
    for (uint64_t seed = 1; seed <= 6; ++seed)
      CHECK(evaluate_randomized(f, seed) == reference);
  }
}

TEST_CASE("foam text format") {
  std::string text = render_foam(dumbbell(1, 0, 2));
  PreFoam back = parse_foam(text);
  CHECK(back == dumbbell(1, 0, 2));
  CHECK(render_foam(back) == text);

  PreFoam chain = parse_foam(render_foam(theta_chain()));
  CHECK(chain == theta_chain());
  CHECK(evaluate(chain) == -1);

  PreFoam f = parse_foam(
      "# a theta with one handle\n"
      "facet 0 genus=1 dots=0 slots=0\n"
      "\n"
      "facet 2 genus=0 dots=0 slots=7\n"
      "facet 1 genus=0 dots=1 slots=3\n"
      "circle 0.0,1.3,2.7   # seats in cyclic order\n");
  CHECK(f.facets.size() == 3);
  CHECK(f.facets[1].dots == 1);
  CHECK(f.facets[2].slots == std::vector<int>{7});
  CHECK(evaluate(f) == 3);

  CHECK_THROWS_AS(parse_foam("widget 0"), ParseError);
  CHECK_THROWS_AS(parse_foam("facet 0 genus=0 dots=0\n"), ParseError);
  CHECK_THROWS_AS(parse_foam("facet 0 genus=x dots=0 slots=\n"), ParseError);
  CHECK_THROWS_AS(parse_foam("facet 0 dots=0 genus=0 slots=\n"), ParseError);
  CHECK_THROWS_AS(
      parse_foam("facet 0 genus=0 dots=0 slots=\n"
                 "facet 0 genus=0 dots=0 slots=\n"),
      ParseError);
  CHECK_THROWS_AS(parse_foam("facet 1 genus=0 dots=0 slots=\n"), ParseError);
  CHECK_THROWS_AS(parse_foam("facet 0 genus=0 dots=0 slots= junk\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_foam("circle 0.0,0.1\n"), ParseError);
  CHECK_THROWS_AS(parse_foam("circle 0.0,0.1,0x2\n"), ParseError);
  // not closed: slot never attached
  CHECK_THROWS_AS(parse_foam("facet 0 genus=0 dots=0 slots=0\n"), ParseError);
  // seat pointing at a slot the facet does not declare
  CHECK_THROWS_AS(parse_foam("facet 0 genus=0 dots=0 slots=0,1,2\n"
                             "circle 0.0,0.1,0.9\n"),
                  ParseError);
}

TEST_CASE("validation rejects broken pre-foams") {
  PreFoam f = theta_foam(0, 1, 2);
  f.circles[0][2].facet = 9;
  CHECK_THROWS_AS(evaluate(f), ParseError);

  f = theta_foam(0, 1, 2);
  f.facets[0].slots.push_back(8);  // dangling slot
  CHECK_THROWS_AS(evaluate(f), ParseError);

  f = theta_foam(0, 1, 2);
  f.facets[0].slots = {0, 0};
  CHECK_THROWS_AS(evaluate(f), ParseError);

  f = dumbbell();
  f.circles[1][0] = SeatRef{0, 0};  // same seat on two circles
  CHECK_THROWS_AS(evaluate(f), ParseError);

  f = closed_surface(0, 0);
  f.facets[0].genus = -1;
  CHECK_THROWS_AS(evaluate(f), ParseError);
}
