#include "sl3web/coloring.hpp"

#include <algorithm>
#include <deque>

namespace sl3web {

namespace {

constexpr int kUnset = -2;

bool color_ok(int c) { return c == -1 || c == 0 || c == 1; }

// Edges ordered breadth-first across shared vertices so the vertex
// constraint prunes early; pinned (already colored) edges seed the queue.
std::vector<int> edge_order(const Web& w, const std::vector<int>& color) {
  std::vector<std::vector<int>> at_vertex(w.vertex_count());
  for (int e = 0; e < w.edge_count(); ++e) {
    for (const Endpoint ep : {w.edges[e].tail, w.edges[e].head})
      if (!ep.on_boundary) at_vertex[ep.index].push_back(e);
  }
  std::vector<int> order;
  std::vector<bool> seen(w.edge_count(), false);
  std::deque<int> queue;
  auto push = [&](int e) {
    if (!seen[e]) {
      seen[e] = true;
      queue.push_back(e);
    }
  };
  for (int e = 0; e < w.edge_count(); ++e)
    if (color[e] != kUnset) push(e);
  for (int start = 0; start < w.edge_count(); ++start) {
    push(start);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      order.push_back(e);
      for (const Endpoint ep : {w.edges[e].tail, w.edges[e].head})
        if (!ep.on_boundary)
          for (int n : at_vertex[ep.index]) push(n);
    }
  }
  return order;
}

struct Search {
  const Web& w;
  std::vector<int> color;                    // per edge
  std::vector<std::array<bool, 3>> used;     // per vertex, index color+1
  std::vector<Coloring>* out = nullptr;      // null: count only
  Int count = 0;

  explicit Search(const Web& w_) : w(w_) {
    color.assign(w.edge_count(), kUnset);
    used.assign(w.vertex_count(), {false, false, false});
  }

  bool place(int e, int c) {
    for (const Endpoint ep : {w.edges[e].tail, w.edges[e].head}) {
      if (ep.on_boundary) continue;
      if (used[ep.index][c + 1]) return false;
    }
    for (const Endpoint ep : {w.edges[e].tail, w.edges[e].head})
      if (!ep.on_boundary) used[ep.index][c + 1] = true;
    color[e] = c;
    return true;
  }

  void remove(int e) {
    const int c = color[e];
    color[e] = kUnset;
    for (const Endpoint ep : {w.edges[e].tail, w.edges[e].head})
      if (!ep.on_boundary) used[ep.index][c + 1] = false;
  }

  void run(const std::vector<int>& order, size_t k) {
    while (k < order.size() && color[order[k]] != kUnset) ++k;
    if (k == order.size()) {
      leaf();
      return;
    }
    const int e = order[k];
    for (int c : {-1, 0, 1}) {
      if (!place(e, c)) continue;
      run(order, k + 1);
      remove(e);
    }
  }

  void leaf() {
    if (!out) {
      ++count;
      return;
    }
    Coloring base{color, std::vector<int>(w.loops, -1)};
    // Cross with every assignment of loop colors.
    std::vector<int>& lc = base.loop_colors;
    for (;;) {
      out->push_back(base);
      int i = 0;
      while (i < w.loops && lc[i] == 1) lc[i++] = -1;
      if (i == w.loops) break;
      ++lc[i];
    }
  }
};

Int pow3(int n) {
  Int r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

// Pins boundary-incident edges to the boundary coloring; returns false if
// two boundary points share an edge and disagree.
bool pin_boundary(const Web& w, const BoundaryColoring& c0, Search& s) {
  for (int b = 0; b < w.boundary_count(); ++b) {
    const Dart d = w.boundary_dart(b);
    if (s.color[d.edge] == kUnset) {
      if (!s.place(d.edge, c0[b])) return false;
    } else if (s.color[d.edge] != c0[b]) {
      return false;
    }
  }
  return true;
}

void check_boundary_coloring(const Web& w, const BoundaryColoring& c0) {
  if (static_cast<int>(c0.size()) != w.boundary_count())
    throw ParseError("boundary coloring: length " + std::to_string(c0.size()) +
                     " does not match " + std::to_string(w.boundary_count()) +
                     " boundary points");
  for (int c : c0)
    if (!color_ok(c))
      throw ParseError("boundary coloring: colors must be -1, 0 or 1");
}

}  // namespace

bool is_valid_coloring(const Web& w, const Coloring& c) {
  if (static_cast<int>(c.edge_colors.size()) != w.edge_count()) return false;
  if (static_cast<int>(c.loop_colors.size()) != w.loops) return false;
  for (int x : c.edge_colors)
    if (!color_ok(x)) return false;
  for (int x : c.loop_colors)
    if (!color_ok(x)) return false;
  for (int v = 0; v < w.vertex_count(); ++v) {
    std::array<bool, 3> seen{false, false, false};
    for (const Dart& d : w.rotation[v]) {
      const int idx = c.edge_colors[d.edge] + 1;
      if (seen[idx]) return false;
      seen[idx] = true;
    }
  }
  return true;
}

std::vector<Coloring> enumerate_colorings(const Web& w) {
  std::vector<Coloring> out;
  Search s(w);
  s.out = &out;
  s.run(edge_order(w, s.color), 0);
  return out;
}

Int count_colorings(const Web& w) {
  Search s(w);
  s.run(edge_order(w, s.color), 0);
  return s.count * pow3(w.loops);
}

BoundaryColoring restrict_coloring(const Web& w, const Coloring& c) {
  if (!is_valid_coloring(w, c))
    throw ParseError("restrict: not a valid coloring of the web");
  BoundaryColoring out(w.boundary_count());
  for (int b = 0; b < w.boundary_count(); ++b)
    out[b] = c.edge_colors[w.boundary_dart(b).edge];
  return out;
}

std::vector<Coloring> colorings_restricting(const Web& w,
                                            const BoundaryColoring& c0) {
  check_boundary_coloring(w, c0);
  std::vector<Coloring> out;
  Search s(w);
  s.out = &out;
  if (!pin_boundary(w, c0, s)) return out;
  s.run(edge_order(w, s.color), 0);
  return out;
}

Int count_colorings_restricting(const Web& w, const BoundaryColoring& c0) {
  check_boundary_coloring(w, c0);
  Search s(w);
  if (!pin_boundary(w, c0, s)) return 0;
  s.run(edge_order(w, s.color), 0);
  return s.count * pow3(w.loops);
}

UniqueColoringWitness unique_coloring_witness(const std::vector<Web>& webs) {
  if (webs.empty())
    throw CheckError("unique coloring witness: no webs given");
  const int l = webs.front().boundary_count();
  for (const Web& w : webs)
    if (w.boundary_count() != l)
      throw ParseError("unique coloring witness: webs disagree on boundary");

  BoundaryColoring c0(l, -1);
  for (;;) {
    Int total = 0;
    int hit = -1;
    for (size_t i = 0; i < webs.size() && total <= 1; ++i) {
      const Int n = count_colorings_restricting(webs[i], c0);
      if (n > 0) hit = static_cast<int>(i);
      total += n;
    }
    if (total == 1) {
      UniqueColoringWitness wit;
      wit.boundary = c0;
      wit.web_index = hit;
      wit.coloring = colorings_restricting(webs[hit], c0).front();
      return wit;
    }
    int i = 0;
    while (i < l && c0[i] == 1) c0[i++] = -1;
    if (i == l) break;
    ++c0[i];
  }
  throw CheckError("unique coloring witness: exhaustive search found no "
                   "boundary coloring with a unique lift");
}

}  // namespace sl3web
