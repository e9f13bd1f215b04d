#pragma once

#include "sl3web/qpoly.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sl3web {

// Element of the rank-3 Frobenius algebra A = Q[X]/(X^3) that the closed
// pre-foam evaluation is built on.  Basis 1, X, X^2 in degrees -2, 0, 2.
struct FrobeniusElement {
  std::array<Rational, 3> coeff{};  // coeff[k] multiplies X^k

  static FrobeniusElement zero() { return {}; }
  static FrobeniusElement unit() { return x_power(0); }
  static FrobeniusElement x_power(int k);  // X^k, zero once k >= 3

  bool is_zero() const;
  bool operator==(const FrobeniusElement&) const = default;
};

FrobeniusElement frob_add(const FrobeniusElement& a, const FrobeniusElement& b);
FrobeniusElement frob_scale(const Rational& c, const FrobeniusElement& a);
FrobeniusElement frob_mul(const FrobeniusElement& a, const FrobeniusElement& b);

// Counit:  tau(X^2) = -1,  tau(1) = tau(X) = 0.
Rational frob_trace(const FrobeniusElement& a);

// Coproduct as a list of tensor legs:
//   Delta(a) = -sum_k (a X^k) (x) X^{2-k},
// so Delta(1) = -1(x)X^2 - X(x)X - X^2(x)1 and Delta(X^2) = -X^2(x)X^2.
// The sign is folded into the left leg; zero terms are dropped.
std::vector<std::pair<FrobeniusElement, FrobeniusElement>> frob_comul(
    const FrobeniusElement& a);

// Sign attached to a singular circle whose three disks carry i, j, k dots
// (in the cyclic order of the circle): +1 on the cyclic class of (0,1,2),
// -1 on the cyclic class of (2,1,0), 0 otherwise.  Every evaluation sign
// convention of the theory funnels through this one table.
int theta_sign(int i, int j, int k);

// Trilinear extension of theta_sign to algebra elements.
Rational frob_theta(const FrobeniusElement& a1, const FrobeniusElement& a2,
                    const FrobeniusElement& a3);

// One facet of a pre-foam: a compact oriented surface of the given genus
// carrying some number of dots, with one boundary circle per listed slot.
// Slot ids are arbitrary but unique within the facet.
struct Facet {
  int genus = 0;
  int dots = 0;
  std::vector<int> slots;

  bool operator==(const Facet&) const = default;
};

// One seat on a singular circle: boundary slot `slot` of facet `facet`
// (facet is an index into PreFoam::facets, slot is a slot id).
struct SeatRef {
  int facet = -1;
  int slot = -1;

  bool operator==(const SeatRef&) const = default;
};

// Closed pre-foam: facets glued in threes along singular circles.  Each
// circle lists its three seats in cyclic order.  Closedness means every
// (facet, slot) pair sits on exactly one circle.
struct PreFoam {
  std::vector<Facet> facets;
  std::vector<std::array<SeatRef, 3>> circles;

  bool operator==(const PreFoam&) const = default;

  // Structural checks: slot lists duplicate-free, seats resolvable, every
  // slot on exactly one circle.  Throws ParseError otherwise.
  void validate() const;
};

// degree = -2 chi + 2 dots  with  chi = sum over facets of (2 - 2g - b).
int foam_degree(const PreFoam& f);

// Closed evaluation: facet contents X^dots (-3 X^2)^genus, neck-cutting of
// multi-slot facets through the coproduct, tau on the closed pieces and
// theta on each singular circle.  Throws ParseError on invalid input.
Rational evaluate(const PreFoam& f);

// Same value; the facet to neck-cut at each step is chosen pseudo-randomly
// from the seed.  Confluence harness.
Rational evaluate_randomized(const PreFoam& f, uint64_t seed);

// Text format, one declaration per line:
//   facet <id> genus=<g> dots=<d> slots=<s1,s2,...>
//   circle <fid>.<slot>,<fid>.<slot>,<fid>.<slot>
// Facet ids must be 0..n-1 in some order; slots= may be empty.  Blank
// lines and '#' comments are skipped.  parse_foam validates.
PreFoam parse_foam(const std::string& text);
std::string render_foam(const PreFoam& f);

}  // namespace sl3web
