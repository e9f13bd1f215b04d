#pragma once

#include "sl3web/errors.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sl3web {

enum class Sign : int8_t { minus = -1, plus = 1 };
using SignSequence = std::vector<Sign>;

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline int sign_value(Sign s) { return static_cast<int>(s); }
char sign_char(Sign s);
SignSequence parse_signs(const std::string& text);  // "+-+"; ParseError on junk
std::string render_signs(const SignSequence& signs);
int signed_sum(const SignSequence& signs);
bool is_admissible(const SignSequence& signs);  // signed sum divisible by 3

// sink: all incident edges point into the vertex; source: all point out.
enum class Polarity : uint8_t { sink, source };
inline Polarity flipped(Polarity p) {
  return p == Polarity::sink ? Polarity::source : Polarity::sink;
}

struct Endpoint {
  bool on_boundary = false;
  int index = -1;

  static Endpoint vertex(int v) { return {false, v}; }
  static Endpoint boundary(int b) { return {true, b}; }
  auto operator<=>(const Endpoint&) const = default;
};

struct EdgeRec {
  Endpoint tail, head;  // orientation tail -> head
  bool operator==(const EdgeRec&) const = default;
};

// One end of an edge; at_head selects which endpoint it sits at.
struct Dart {
  int edge = -1;
  bool at_head = false;
  auto operator<=>(const Dart&) const = default;
};

// A closed web or ε-web as a combinatorial map: an oriented trivalent
// sink/source graph with a counterclockwise rotation at each internal vertex,
// ordered univalent boundary points along the bottom of the diagram, and a
// count of vertex-less loops (their nesting is deliberately not recorded).
//
// Boundary sign convention: '+' at a boundary point means the incident edge
// is oriented into the diagram, i.e. the point is the edge's tail.
struct Web {
  SignSequence boundary;
  std::vector<Polarity> polarity;             // per internal vertex
  std::vector<EdgeRec> edges;
  std::vector<std::array<Dart, 3>> rotation;  // per internal vertex, CCW
  int loops = 0;

  int vertex_count() const { return static_cast<int>(polarity.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int boundary_count() const { return static_cast<int>(boundary.size()); }
  bool is_closed() const { return boundary.empty(); }
  bool is_empty() const {
    return boundary.empty() && polarity.empty() && edges.empty() && loops == 0;
  }

  Endpoint endpoint_of(Dart d) const {
    return d.at_head ? edges[d.edge].head : edges[d.edge].tail;
  }
  Dart other_end(Dart d) const { return {d.edge, !d.at_head}; }
  Dart boundary_dart(int b) const;  // the unique edge end at boundary point b

  // Boundary points count as 0-cells; vertex-less loops contribute 0.
  int euler_characteristic() const;

  // Structural soundness: trivalence, orientation/polarity coherence,
  // boundary univalence and sign consistency, and planarity of the rotation
  // system (genus 0 per closed component and for the boundary part glued to
  // a framing of the disk).  Throws ParseError.
  void validate() const;

  bool operator==(const Web&) const = default;

  static Web empty() { return Web{}; }
  static Web single_loop();
};

// A directed traversal of an edge: forward = tail -> head.
struct Arc {
  int edge = -1;
  bool forward = true;
  auto operator<=>(const Arc&) const = default;
};

struct Face {
  std::vector<Arc> arcs;          // web arcs in walk order
  bool touches_boundary = false;  // orbit crossed the boundary framing
};

struct FaceData {
  std::vector<Face> faces;
  int components = 0;        // connected components, vertex-less loops included
  int plane_face_count = 0;  // faces of a plane drawing, outer region included
};

// Face decomposition of the underlying surface.  For closed webs every face
// is internal; for ε-webs the regions touching the boundary line are flagged.
// Vertex-less loops contribute one bounded face each to plane_face_count but
// produce no Face entries.
FaceData faces(const Web& w);

// No vertex-less loop and no internal face bounded by 2 or 4 edges.
bool is_non_elliptic(const Web& w);

enum class PatternKind { cap, lambda, aitch };
struct LocalPattern {
  PatternKind kind;
  int position;  // 1-based index of the left boundary point of the pattern
};
// Scans boundary positions left to right for a cap, a lambda vertex, or an
// H bar sitting directly on two adjacent boundary points.
std::optional<LocalPattern> find_local_pattern(const Web& w);

// Certificate deciding isomorphism of webs: orientation preserving,
// boundary-order preserving, nesting-agnostic for closed components.
std::string canonical_encoding(const Web& w);
bool isomorphic(const Web& a, const Web& b);

// Reflection across the boundary line with all orientations reversed:
// polarities flip, edges reverse, rotations reverse, boundary signs negate
// (order kept).  Involution.  The mirror hangs below the line with its
// boundary on top, so for webs with boundary the result is a gluing partner
// for trace_close rather than a standard bottom-boundary web; validate()
// applies to it only when the mirrored map happens to re-embed above the
// line.  Closed webs mirror to valid closed webs.
Web conjugate(const Web& w);

// The closed web conjugate(w1) glued below w2 along their common boundary.
Web trace_close(const Web& w1, const Web& w2);

// Surgery helper: delete the listed vertices/edges (and optionally the whole
// boundary), then fuse the given pairs of surviving edge ends.  Every listed
// dart must have lost its anchor to the deleted part, and each pair must fuse
// one inbound with one outbound end.  Chains of fused edges merge into single
// edges; chains that close up increment the loop count.
Web splice(const Web& w, const std::vector<int>& drop_vertices,
           const std::vector<int>& drop_edges,
           const std::vector<std::pair<Dart, Dart>>& sew, bool drop_boundary);

std::string render_web(const Web& w);
Web parse_web(const std::string& text);

}  // namespace sl3web
