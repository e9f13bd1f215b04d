#pragma once

#include "sl3web/qpoly.hpp"
#include "sl3web/reptheory.hpp"
#include "sl3web/web.hpp"

#include <cstdint>
#include <vector>

namespace sl3web {

// Coordinates in the fundamental weight basis of sl3; dominant means both
// coordinates nonnegative.
struct DominantWeight {
  long m1 = 0, m2 = 0;
  auto operator<=>(const DominantWeight&) const = default;
};

struct WebBasis {
  SignSequence epsilon;
  std::vector<Web> webs;            // pairwise non-isomorphic, non-elliptic
  std::vector<SliceScript> scripts;  // scripts[i] builds webs[i]
};

// Number of lattice paths of dominant weights from (0,0) to (0,0) whose ith
// step is a weight of V^{ε_i}: (1,0), (-1,1), (0,-1) for '+' and their
// negatives for '-'.  Both fundamentals are minuscule, so this equals the
// dimension of the invariant space of V^ε; 0 for non-admissible ε.
Int count_invariants(const SignSequence& epsilon);

// The non-elliptic basis over ε, grown bottom-up by inserting caps, lambda
// vertices and H bars over shorter boundaries.  The basis cardinality is
// checked against count_invariants and any mismatch throws CheckError.
// Results are memoized in memory and cached on disk (see SL3WEB_CACHE_DIR).
WebBasis enumerate_NE(const SignSequence& epsilon);

// Reference generator: every loopless web over ε with at most max_vertices
// internal vertices that is non-elliptic, found by exhaustive search over
// disk-planar attachments of the leftmost strand.  Exponential; meant for
// cross-validating enumerate_NE on small boundaries.
std::vector<Web> enumerate_webs_exhaustive(const SignSequence& epsilon, int max_vertices);

// Trace closure of two pseudo-randomly chosen basis webs over ε, and the
// closed script tracing out an isomorphic web.
Web random_closed_web(const SignSequence& epsilon, uint64_t seed);
SliceScript random_closed_script(const SignSequence& epsilon, uint64_t seed);

namespace detail {
// Drops the in-process enumeration memo so disk-cache paths can be tested.
void clear_enumeration_memory_cache();
}  // namespace detail

}  // namespace sl3web
