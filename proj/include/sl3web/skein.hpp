#pragma once

#include "sl3web/qpoly.hpp"
#include "sl3web/web.hpp"

#include <cstdint>
#include <vector>

namespace sl3web {

enum class ReductionRule { circle, digon, square_branch_a, square_branch_b };
const char* rule_name(ReductionRule r);

struct TraceStep {
  ReductionRule rule;
  int face = -1;      // index into faces(w) at the time of the step; -1 for circles
  int vertices = 0;   // vertex count of the web the step fired on
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
  LaurentPoly factor;
};

// Kuperberg bracket of a closed web: each circle contributes [3], a digon
// face contributes [2] and collapses to a single strand, a square face
// branches into the sum of its two resolutions, the empty web evaluates
// to 1.  Deterministic reduction order, memoized on canonical form.
// Throws ParseError on webs with boundary; throws CheckError if a nonempty
// closed web without circle, digon, or square is ever reached (which the
// reduction theory rules out).
LaurentPoly bracket(const Web& w);

// Same value; among all faces reducible at each step one is chosen
// pseudo-randomly from the seed.  Confluence harness.
LaurentPoly bracket_randomized(const Web& w, uint64_t seed);

// Unmemoized deterministic reduction that logs every step, branches in
// depth-first order.
ReductionTrace bracket_traced(const Web& w);

}  // namespace sl3web
