#pragma once

#include "sl3web/coloring.hpp"
#include "sl3web/foam.hpp"
#include "sl3web/qpoly.hpp"
#include "sl3web/web.hpp"

#include <array>
#include <map>
#include <vector>

namespace sl3web {

// Exact element of Q(j), j a primitive cube root of unity: j^2 + j + 1 = 0.
struct EisensteinRational {
  Rational re;  // coefficient of 1
  Rational jm;  // coefficient of j

  EisensteinRational() = default;
  EisensteinRational(Rational a) : re(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  EisensteinRational(Rational a, Rational b) : re(std::move(a)), jm(std::move(b)) {}
  EisensteinRational(int a) : re(a) {}  // NOLINT(google-explicit-constructor)

  static EisensteinRational j() { return {0, 1}; }
  static EisensteinRational j_squared() { return {-1, -1}; }

  bool is_zero() const { return re == 0 && jm == 0; }
  bool operator==(const EisensteinRational&) const = default;
};

EisensteinRational operator+(const EisensteinRational& x, const EisensteinRational& y);
EisensteinRational operator-(const EisensteinRational& x, const EisensteinRational& y);
EisensteinRational operator-(const EisensteinRational& x);
EisensteinRational operator*(const EisensteinRational& x, const EisensteinRational& y);

// Field conjugation j -> j^2.
EisensteinRational eisenstein_conj(const EisensteinRational& x);

// Element of Q(j)[X]/(X^3 - 1), the deformed facet algebra: multiplication
// is cyclic convolution of the coefficients of 1, X, X^2.
struct GornikElement {
  std::array<EisensteinRational, 3> coeff{};

  static GornikElement zero() { return {}; }
  static GornikElement one() { return x_power(0); }
  static GornikElement x_power(int k);  // X^(k mod 3)

  bool operator==(const GornikElement&) const = default;
};

GornikElement gornik_add(const GornikElement& x, const GornikElement& y);
GornikElement gornik_scale(const EisensteinRational& c, const GornikElement& x);
GornikElement gornik_mul(const GornikElement& x, const GornikElement& y);

// The three mutually orthogonal idempotents splitting X^3 - 1:
//   a = (1 + X + X^2)/3,  b = (1 + jX + j^2 X^2)/3,  c = (1 + j^2 X + j X^2)/3,
// eigenvectors of multiplication by X with eigenvalues 1, j^2, j.  The
// color dictionary is a -> -1, b -> 0, c -> 1.
struct GornikIdempotents {
  GornikElement a, b, c;
};
GornikIdempotents idempotents();

// facet_colors assigns each facet one of -1, 0, 1 (standing for a, b, c).
// True iff every singular circle sees three pairwise distinct colors.
// Throws ParseError on invalid foams, missing colors, or colors outside
// the palette.
bool well_colored(const PreFoam& f, const std::vector<int>& facet_colors);

// The block dimensions of the deformed algebra on boundary epsilon:
// n(c) counts colorings of non-elliptic basis webs restricting to the
// boundary coloring c.  counts holds all 3^l boundary colorings,
// including the zero blocks.
struct BlockDecomposition {
  SignSequence epsilon;
  std::map<BoundaryColoring, Int> counts;

  Int total() const;           // sum of n(c)
  Int sum_of_squares() const;  // sum of n(c)^2
};

BlockDecomposition block_counts(const SignSequence& epsilon);

// Matrix-algebra dimension count: sum of n(c)^2 over boundary colorings
// must equal the total coloring count of all pairwise trace closures of
// the non-elliptic basis.
bool verify_block_identity(const SignSequence& epsilon);

}  // namespace sl3web
