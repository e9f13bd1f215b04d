#pragma once

// Hand-built webs shared across test binaries.  Rotation systems follow the
// drawings described next to each builder; all of them pass Web::validate.

#include "sl3web/web.hpp"

namespace fixtures {

using namespace sl3web;

// Cap over (+,-): one edge from boundary point 0 to boundary point 1.
inline Web make_cap() {
  Web w;
  w.boundary = parse_signs("+-");
  w.edges = {{Endpoint::boundary(0), Endpoint::boundary(1)}};
  return w;
}

// Tripod over (+,+,+): all three strands run into a sink.
inline Web make_tripod() {
  Web w;
  w.boundary = parse_signs("+++");
  w.polarity = {Polarity::sink};
  w.edges = {{Endpoint::boundary(0), Endpoint::vertex(0)},
             {Endpoint::boundary(1), Endpoint::vertex(0)},
             {Endpoint::boundary(2), Endpoint::vertex(0)}};
  w.rotation = {{Dart{0, true}, Dart{1, true}, Dart{2, true}}};
  return w;
}

// Closed theta: source 0 and sink 1 joined by three parallel edges.
inline Web make_theta() {
  Web w;
  w.polarity = {Polarity::source, Polarity::sink};
  w.edges = {{Endpoint::vertex(0), Endpoint::vertex(1)},
             {Endpoint::vertex(0), Endpoint::vertex(1)},
             {Endpoint::vertex(0), Endpoint::vertex(1)}};
  w.rotation = {{Dart{2, false}, Dart{1, false}, Dart{0, false}},
                {Dart{0, true}, Dart{1, true}, Dart{2, true}}};
  return w;
}

// H over (+,-,-,+): bar between a sink over point 0 and a source over
// point 1; the outer strands arc across the top.
inline Web make_aitch() {
  Web w;
  w.boundary = parse_signs("+--+");
  w.polarity = {Polarity::sink, Polarity::source};
  w.edges = {{Endpoint::boundary(0), Endpoint::vertex(0)},   // left leg
             {Endpoint::vertex(1), Endpoint::vertex(0)},     // bar
             {Endpoint::vertex(1), Endpoint::boundary(1)},   // right leg
             {Endpoint::vertex(1), Endpoint::boundary(2)},
             {Endpoint::boundary(3), Endpoint::vertex(0)}};
  w.rotation = {{Dart{0, true}, Dart{1, true}, Dart{4, true}},
                {Dart{1, false}, Dart{2, false}, Dart{3, false}}};
  return w;
}

// Nested caps over (+,+,-,-): inner cap 1-2 under outer cap 0-3.
inline Web make_nested_caps() {
  Web w;
  w.boundary = parse_signs("++--");
  w.edges = {{Endpoint::boundary(0), Endpoint::boundary(3)},
             {Endpoint::boundary(1), Endpoint::boundary(2)}};
  return w;
}

// Double lambda over (+,+,-,-): points 0,1 run into a sink, a bridge leads
// to a source feeding points 2,3.
inline Web make_double_lambda() {
  Web w;
  w.boundary = parse_signs("++--");
  w.polarity = {Polarity::sink, Polarity::source};
  w.edges = {{Endpoint::boundary(0), Endpoint::vertex(0)},
             {Endpoint::boundary(1), Endpoint::vertex(0)},
             {Endpoint::vertex(1), Endpoint::vertex(0)},     // bridge
             {Endpoint::vertex(1), Endpoint::boundary(2)},
             {Endpoint::vertex(1), Endpoint::boundary(3)}};
  w.rotation = {{Dart{2, true}, Dart{0, true}, Dart{1, true}},
                {Dart{2, false}, Dart{3, false}, Dart{4, false}}};
  return w;
}

// Closed cube web: inner square 0..3 joined by spokes to outer square 4..7.
// Bipartite orientation; every face is a square, so the reducer must branch.
inline Web make_cube() {
  Web w;
  w.polarity = {Polarity::source, Polarity::sink, Polarity::source,
                Polarity::sink,  Polarity::sink, Polarity::source,
                Polarity::sink,  Polarity::source};
  auto V = [](int v) { return Endpoint::vertex(v); };
  w.edges = {{V(0), V(1)},   // 0: inner top
             {V(2), V(1)},   // 1: inner right
             {V(2), V(3)},   // 2: inner bottom
             {V(0), V(3)},   // 3: inner left
             {V(5), V(4)},   // 4: outer top
             {V(5), V(6)},   // 5: outer right
             {V(7), V(6)},   // 6: outer bottom
             {V(7), V(4)},   // 7: outer left
             {V(0), V(4)},   // 8: spoke NW
             {V(5), V(1)},   // 9: spoke NE
             {V(2), V(6)},   // 10: spoke SE
             {V(7), V(3)}};  // 11: spoke SW
  w.rotation = {{Dart{0, false}, Dart{8, false}, Dart{3, false}},
                {Dart{9, true}, Dart{0, true}, Dart{1, true}},
                {Dart{1, false}, Dart{2, false}, Dart{10, false}},
                {Dart{2, true}, Dart{3, true}, Dart{11, true}},
                {Dart{4, true}, Dart{7, true}, Dart{8, true}},
                {Dart{4, false}, Dart{9, false}, Dart{5, false}},
                {Dart{5, true}, Dart{10, true}, Dart{6, true}},
                {Dart{6, false}, Dart{11, false}, Dart{7, false}}};
  return w;
}

// Side-by-side union; boundary rows concatenate, nothing is glued.
inline Web disjoint_union(const Web& a, const Web& b) {
  Web w = a;
  const int V = a.vertex_count();
  const int E = a.edge_count();
  const int l = a.boundary_count();
  w.boundary.insert(w.boundary.end(), b.boundary.begin(), b.boundary.end());
  w.polarity.insert(w.polarity.end(), b.polarity.begin(), b.polarity.end());
  for (const EdgeRec& e : b.edges) {
    auto shift = [&](Endpoint ep) {
      return ep.on_boundary ? Endpoint::boundary(ep.index + l)
                            : Endpoint::vertex(ep.index + V);
    };
    w.edges.push_back({shift(e.tail), shift(e.head)});
  }
  for (const auto& rot : b.rotation) {
    std::array<Dart, 3> r;
    for (int k = 0; k < 3; ++k) r[k] = {rot[k].edge + E, rot[k].at_head};
    w.rotation.push_back(r);
  }
  w.loops += b.loops;
  return w;
}

}  // namespace fixtures
