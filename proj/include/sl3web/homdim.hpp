#pragma once

#include "sl3web/enumeration.hpp"
#include "sl3web/qpoly.hpp"
#include "sl3web/web.hpp"

#include <vector>

namespace sl3web {

// Graded dimension of the hom space between the modules attached to two
// webs with the same boundary: bracket of the trace closure, shifted by
// q^l where l is the boundary length.  Throws ParseError on a boundary
// mismatch.
LaurentPoly graded_homdim(const Web& w1, const Web& w2);

// Pairing table of the non-elliptic basis: entry (i,j) is the bracket of
// trace_close(w_i, w_j) evaluated at q = 1.
struct GramMatrix {
  SignSequence epsilon;
  WebBasis basis;
  std::vector<std::vector<Int>> entries;
};

GramMatrix gram_matrix(const SignSequence& epsilon);

// Exact determinant by fraction-free (Bareiss) elimination.
Int integer_determinant(std::vector<std::vector<Int>> m);

// Determinant of gram_matrix(epsilon).  The pairing is nondegenerate, so
// a zero determinant signals an internal inconsistency: CheckError.
Int gram_determinant(const SignSequence& epsilon);

// Rank of the decategorified projective module lattice: the size of the
// non-elliptic basis.
Int k0_rank(const SignSequence& epsilon);

}  // namespace sl3web
