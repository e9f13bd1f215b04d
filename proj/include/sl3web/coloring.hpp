#pragma once

#include "sl3web/qpoly.hpp"
#include "sl3web/web.hpp"

#include <vector>

namespace sl3web {

// An edge coloring with colors in {-1, 0, 1}; the three colors at every
// internal vertex are pairwise distinct.  Vertex-less loops each carry an
// unconstrained color of their own.
struct Coloring {
  std::vector<int> edge_colors;  // per edge id
  std::vector<int> loop_colors;  // per vertex-less loop
  bool operator==(const Coloring&) const = default;
};

// One color per boundary position: the color of the incident edge, taken
// unmodified regardless of the edge's direction.
using BoundaryColoring = std::vector<int>;

bool is_valid_coloring(const Web& w, const Coloring& c);

// All colorings, loop colors materialized.  Deterministic order (colors
// tried -1, 0, 1 along a fixed edge order).
std::vector<Coloring> enumerate_colorings(const Web& w);

// |enumerate_colorings(w)| with the 3-per-loop factor applied symbolically.
Int count_colorings(const Web& w);

// The boundary coloring induced by c.  ParseError if c is not a valid
// coloring of w.
BoundaryColoring restrict_coloring(const Web& w, const Coloring& c);

// The colorings of w restricting to c0.  ParseError on length mismatch or
// colors outside {-1,0,1}.
std::vector<Coloring> colorings_restricting(const Web& w,
                                            const BoundaryColoring& c0);
Int count_colorings_restricting(const Web& w, const BoundaryColoring& c0);

struct UniqueColoringWitness {
  BoundaryColoring boundary;
  int web_index = -1;
  Coloring coloring;
};

// Searches all boundary colorings of the common boundary of `webs` for one
// realized by exactly one coloring of exactly one of the webs.  Throws
// CheckError if the exhaustive search finds none.
UniqueColoringWitness unique_coloring_witness(const std::vector<Web>& webs);

}  // namespace sl3web
