#include "sl3web/web.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sl3web {

char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

SignSequence parse_signs(const std::string& text) {
  SignSequence out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '+': out.push_back(Sign::plus); break;
      case '-': out.push_back(Sign::minus); break;
      default:
        throw ParseError("sign string: unexpected character '" +
                         std::string(1, text[i]) + "' at position " +
                         std::to_string(i + 1));
    }
  }
  return out;
}

std::string render_signs(const SignSequence& signs) {
  std::string out;
  out.reserve(signs.size());
  for (Sign s : signs) out.push_back(sign_char(s));
  return out;
}

int signed_sum(const SignSequence& signs) {
  int sum = 0;
  for (Sign s : signs) sum += sign_value(s);
  return sum;
}

bool is_admissible(const SignSequence& signs) {
  return signed_sum(signs) % 3 == 0;
}

Dart Web::boundary_dart(int b) const {
  for (int e = 0; e < edge_count(); ++e) {
    if (edges[e].tail == Endpoint::boundary(b)) return {e, false};
    if (edges[e].head == Endpoint::boundary(b)) return {e, true};
  }
  throw ParseError("boundary point " + std::to_string(b) + " has no edge");
}

int Web::euler_characteristic() const {
  return vertex_count() + boundary_count() - edge_count();
}

Web Web::single_loop() {
  Web w;
  w.loops = 1;
  return w;
}

namespace {

constexpr int kNoFace = -1;

inline int dart_id(Dart d) { return 2 * d.edge + (d.at_head ? 1 : 0); }

// Face walk over the map, with the boundary closed off by a frame: a cycle of
// virtual edges through the boundary points (edge i joins point i to i+1 mod
// l).  Arc ids: web edge e forward = 2e, backward = 2e+1; frame edge i
// forward = 2E+2i, backward = 2E+2i+1.  The next arc leaves the arrival
// endpoint along the rotation predecessor of the arrival dart.
class Walker {
 public:
  explicit Walker(const Web& w)
      : w_(w), E_(w.edge_count()), l_(w.boundary_count()) {
    dart_vertex_.assign(2 * E_, -1);
    dart_slot_.assign(2 * E_, -1);
    for (int v = 0; v < w.vertex_count(); ++v) {
      for (int k = 0; k < 3; ++k) {
        const int id = dart_id(w.rotation[v][k]);
        dart_vertex_[id] = v;
        dart_slot_[id] = k;
      }
    }
    boundary_darts_.resize(l_);
    for (int b = 0; b < l_; ++b) boundary_darts_[b] = w.boundary_dart(b);

    const int arcs = 2 * E_ + (l_ > 0 ? 2 * l_ : 0);
    face_of_.assign(arcs, kNoFace);
    for (int a = 0; a < arcs; ++a) {
      if (face_of_[a] != kNoFace) continue;
      const int f = static_cast<int>(orbits_.size());
      orbits_.emplace_back();
      int cur = a;
      do {
        face_of_[cur] = f;
        orbits_[f].push_back(cur);
        cur = next(cur);
      } while (cur != a);
    }
  }

  int arc_count() const { return static_cast<int>(face_of_.size()); }
  int face_count() const { return static_cast<int>(orbits_.size()); }
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  int face_of(int arc) const { return face_of_[arc]; }

  bool is_web_arc(int a) const { return a < 2 * E_; }
  Arc web_arc(int a) const { return {a / 2, a % 2 == 0}; }
  int arc_of(Arc a) const { return 2 * a.edge + (a.forward ? 0 : 1); }
  int frame_forward_arc(int i) const { return 2 * E_ + 2 * i; }

  // Arrival endpoint of a web arc.
  Endpoint web_arrival(int a) const {
    const Arc arc = web_arc(a);
    return arc.forward ? w_.edges[arc.edge].head : w_.edges[arc.edge].tail;
  }

  int next(int a) const {
    if (a < 2 * E_) {
      const Arc arc = web_arc(a);
      const Dart arrival{arc.edge, arc.forward};
      const Endpoint ep = w_.endpoint_of(arrival);
      if (!ep.on_boundary) {
        const int v = dart_vertex_[dart_id(arrival)];
        const int slot = dart_slot_[dart_id(arrival)];
        if (v < 0) throw ParseError("edge end missing from rotation system");
        const Dart depart = w_.rotation[v][(slot + 2) % 3];
        return outward(depart);
      }
      // Arrived at boundary point ep.index: leave along its frame edge.
      return 2 * E_ + 2 * ep.index;
    }
    const int rel = a - 2 * E_;
    const int i = rel / 2;
    if (rel % 2 == 0) {
      // Frame edge i forward arrives at point i+1, leaves along its web dart.
      const int j = (i + 1) % l_;
      return outward(boundary_darts_[j]);
    }
    // Frame edge i backward arrives at point i (walking behind the diagram).
    const int prev = (i - 1 + l_) % l_;
    return 2 * E_ + 2 * prev + 1;
  }

 private:
  int outward(Dart d) const { return 2 * d.edge + (d.at_head ? 1 : 0); }

  const Web& w_;
  int E_;
  int l_;
  std::vector<int> dart_vertex_;
  std::vector<int> dart_slot_;
  std::vector<Dart> boundary_darts_;
  std::vector<int> face_of_;
  std::vector<std::vector<int>> orbits_;
};

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Node ids: internal vertices 0..V-1, boundary points V..V+l-1.
int node_of(const Web& w, Endpoint ep) {
  return ep.on_boundary ? w.vertex_count() + ep.index : ep.index;
}

// Components of the web itself (frame not included).
Dsu web_components(const Web& w) {
  Dsu dsu(w.vertex_count() + w.boundary_count());
  for (const EdgeRec& e : w.edges)
    dsu.unite(node_of(w, e.tail), node_of(w, e.head));
  return dsu;
}

// Components of the frame-augmented map (all boundary points joined).
Dsu augmented_components(const Web& w) {
  Dsu dsu = web_components(w);
  for (int b = 1; b < w.boundary_count(); ++b)
    dsu.unite(w.vertex_count() + b - 1, w.vertex_count() + b);
  return dsu;
}

int face_component(const Web& w, const Walker& walk, const std::vector<int>& orbit,
                   Dsu& dsu) {
  for (int a : orbit) {
    if (walk.is_web_arc(a))
      return dsu.find(node_of(w, w.edges[walk.web_arc(a).edge].tail));
    const int i = (a - 2 * w.edge_count()) / 2;
    return dsu.find(w.vertex_count() + i);
  }
  throw ParseError("empty face orbit");
}

}  // namespace

void Web::validate() const {
  const int V = vertex_count();
  const int E = edge_count();
  const int l = boundary_count();
  if (static_cast<int>(rotation.size()) != V)
    throw ParseError("web: rotation table size differs from vertex count");
  if (loops < 0) throw ParseError("web: negative loop count");

  for (int e = 0; e < E; ++e) {
    for (const Endpoint ep : {edges[e].tail, edges[e].head}) {
      const int limit = ep.on_boundary ? l : V;
      if (ep.index < 0 || ep.index >= limit)
        throw ParseError("web: edge " + std::to_string(e) +
                         " references a missing endpoint");
    }
  }

  std::vector<int> vdeg(V, 0), bdeg(l, 0);
  for (const EdgeRec& e : edges) {
    for (const Endpoint ep : {e.tail, e.head}) {
      if (ep.on_boundary)
        ++bdeg[ep.index];
      else
        ++vdeg[ep.index];
    }
  }
  for (int v = 0; v < V; ++v)
    if (vdeg[v] != 3)
      throw ParseError("web: vertex " + std::to_string(v) + " has degree " +
                       std::to_string(vdeg[v]) + ", expected 3");
  for (int b = 0; b < l; ++b)
    if (bdeg[b] != 1)
      throw ParseError("web: boundary point " + std::to_string(b) +
                       " has degree " + std::to_string(bdeg[b]) +
                       ", expected 1");

  for (int v = 0; v < V; ++v) {
    std::set<Dart> seen;
    for (const Dart& d : rotation[v]) {
      if (d.edge < 0 || d.edge >= E)
        throw ParseError("web: rotation of vertex " + std::to_string(v) +
                         " references a missing edge");
      if (endpoint_of(d) != Endpoint::vertex(v))
        throw ParseError("web: rotation of vertex " + std::to_string(v) +
                         " lists an edge end not incident to it");
      if (!seen.insert(d).second)
        throw ParseError("web: rotation of vertex " + std::to_string(v) +
                         " repeats an edge end");
      const bool inward = d.at_head;
      if ((polarity[v] == Polarity::sink) != inward)
        throw ParseError("web: vertex " + std::to_string(v) +
                         " violates its sink/source polarity");
    }
  }

  for (int b = 0; b < l; ++b) {
    const Dart d = boundary_dart(b);
    const bool is_tail = !d.at_head;
    if ((boundary[b] == Sign::plus) != is_tail)
      throw ParseError("web: boundary point " + std::to_string(b) +
                       " sign disagrees with its edge orientation");
  }

  // Planarity: every closed component and the frame-augmented boundary part
  // must walk out to a sphere.  Boundary points and frame edges cancel in the
  // count, so the check is uniform in web vertices/edges/faces.
  Walker walk(*this);
  Dsu dsu = augmented_components(*this);
  std::map<int, std::array<int, 3>> tally;  // root -> (V, E, F)
  for (int v = 0; v < V; ++v) tally[dsu.find(v)][0]++;
  for (const EdgeRec& e : edges) tally[dsu.find(node_of(*this, e.tail))][1]++;
  for (const auto& orbit : walk.orbits())
    tally[face_component(*this, walk, orbit, dsu)][2]++;
  for (const auto& [root, vef] : tally) {
    if (vef[0] - vef[1] + vef[2] != 2)
      throw ParseError("web: rotation system is not planar");
  }
}

FaceData faces(const Web& w) {
  Walker walk(w);
  FaceData out;
  for (const auto& orbit : walk.orbits()) {
    Face f;
    for (int a : orbit) {
      if (walk.is_web_arc(a))
        f.arcs.push_back(walk.web_arc(a));
      else
        f.touches_boundary = true;
    }
    out.faces.push_back(std::move(f));
  }

  Dsu dsu = web_components(w);
  std::set<int> roots;
  for (int v = 0; v < w.vertex_count(); ++v) roots.insert(dsu.find(v));
  for (int b = 0; b < w.boundary_count(); ++b)
    roots.insert(dsu.find(w.vertex_count() + b));
  out.components = static_cast<int>(roots.size()) + w.loops;

  // Faces of a plane drawing: glue the per-component spheres along one shared
  // outer region; each vertex-less loop adds one bounded face.
  Dsu aug = augmented_components(w);
  std::map<int, int> faces_per;
  for (const auto& orbit : walk.orbits())
    faces_per[face_component(w, walk, orbit, aug)]++;
  int count = 1 + w.loops;
  for (const auto& [root, n] : faces_per) count += n - 1;
  out.plane_face_count = count;
  return out;
}

bool is_non_elliptic(const Web& w) {
  if (w.loops > 0) return false;
  for (const Face& f : faces(w).faces) {
    if (f.touches_boundary) continue;
    const size_t n = f.arcs.size();
    if (n == 2 || n == 4) return false;
  }
  return true;
}

std::optional<LocalPattern> find_local_pattern(const Web& w) {
  const int l = w.boundary_count();
  if (l < 2) return std::nullopt;
  Walker walk(w);
  for (int i = 0; i + 1 < l; ++i) {
    // The face on the inner side of the boundary segment between points
    // i and i+1.
    const int face = walk.face_of(walk.frame_forward_arc(i));
    const auto& orbit = walk.orbits()[face];
    std::vector<Arc> web_arcs;
    int frame_arcs = 0;
    for (int a : orbit) {
      if (walk.is_web_arc(a))
        web_arcs.push_back(walk.web_arc(a));
      else
        ++frame_arcs;
    }
    if (frame_arcs != 1) continue;  // pattern faces hug one boundary segment

    const Endpoint left = Endpoint::boundary(i);
    const Endpoint right = Endpoint::boundary(i + 1);
    auto ends = [&](const Arc& a) {
      return std::pair<Endpoint, Endpoint>(w.edges[a.edge].tail,
                                           w.edges[a.edge].head);
    };
    auto joins = [&](const Arc& a, Endpoint x, Endpoint y) {
      auto [t, h] = ends(a);
      return (t == x && h == y) || (t == y && h == x);
    };
    auto vertex_end = [&](const Arc& a, Endpoint bp) -> std::optional<int> {
      auto [t, h] = ends(a);
      if (t == bp && !h.on_boundary) return h.index;
      if (h == bp && !t.on_boundary) return t.index;
      return std::nullopt;
    };

    if (web_arcs.size() == 1 && joins(web_arcs[0], left, right))
      return LocalPattern{PatternKind::cap, i + 1};

    if (web_arcs.size() == 2) {
      // Two legs meeting at one internal vertex.
      for (int k = 0; k < 2; ++k) {
        auto v1 = vertex_end(web_arcs[k], left);
        auto v2 = vertex_end(web_arcs[1 - k], right);
        if (v1 && v2 && *v1 == *v2)
          return LocalPattern{PatternKind::lambda, i + 1};
      }
    }

    if (web_arcs.size() == 3) {
      // Two legs to distinct vertices joined by a bar.
      for (const Arc& bar : web_arcs) {
        auto [t, h] = ends(bar);
        if (t.on_boundary || h.on_boundary) continue;
        for (const Arc& la : web_arcs) {
          if (la == bar) continue;
          for (const Arc& ra : web_arcs) {
            if (ra == bar || ra == la) continue;
            auto v1 = vertex_end(la, left);
            auto v2 = vertex_end(ra, right);
            if (v1 && v2 && *v1 != *v2 &&
                ((t.index == *v1 && h.index == *v2) ||
                 (t.index == *v2 && h.index == *v1)))
              return LocalPattern{PatternKind::aitch, i + 1};
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

Dart cert_sigma(const Web& w, const std::vector<int>& dart_vertex,
                const std::vector<int>& dart_slot, Dart d) {
  const Endpoint ep = w.endpoint_of(d);
  if (ep.on_boundary) return d;
  const int v = dart_vertex[dart_id(d)];
  const int slot = dart_slot[dart_id(d)];
  return w.rotation[v][(slot + 1) % 3];
}

// Canonical traversal certificate of the component containing `root`,
// determined by the map structure alone: darts are numbered in first-visit
// order (edge partner first, then rotation successor) and each row records
// the dart's base (polarity or boundary anchor), its end, and the numbers of
// its partner and successor.
std::string encode_from(const Web& w, const std::vector<int>& dart_vertex,
                        const std::vector<int>& dart_slot, Dart root) {
  std::map<Dart, int> index;
  std::vector<Dart> order;
  auto assign = [&](Dart d) {
    auto [it, inserted] = index.emplace(d, static_cast<int>(order.size()));
    if (inserted) order.push_back(d);
    return it->second;
  };
  assign(root);
  std::ostringstream os;
  for (size_t k = 0; k < order.size(); ++k) {
    const Dart d = order[k];
    const int ai = assign(w.other_end(d));
    const int si = assign(cert_sigma(w, dart_vertex, dart_slot, d));
    const Endpoint ep = w.endpoint_of(d);
    if (ep.on_boundary)
      os << 'b' << ep.index << sign_char(w.boundary[ep.index]);
    else
      os << (w.polarity[ep.index] == Polarity::sink ? 'k' : 'o');
    os << (d.at_head ? 'h' : 't') << ',' << ai << ',' << si << ';';
  }
  return os.str();
}

}  // namespace

std::string canonical_encoding(const Web& w) {
  std::vector<int> dart_vertex(2 * w.edge_count(), -1);
  std::vector<int> dart_slot(2 * w.edge_count(), -1);
  for (int v = 0; v < w.vertex_count(); ++v) {
    for (int k = 0; k < 3; ++k) {
      dart_vertex[dart_id(w.rotation[v][k])] = v;
      dart_slot[dart_id(w.rotation[v][k])] = k;
    }
  }

  Dsu dsu = web_components(w);
  // component root node -> smallest boundary point, if any
  std::map<int, int> min_bp;
  for (int b = w.boundary_count() - 1; b >= 0; --b)
    min_bp[dsu.find(w.vertex_count() + b)] = b;
  std::map<int, std::vector<Dart>> comp_darts;
  for (int e = 0; e < w.edge_count(); ++e) {
    const int root = dsu.find(node_of(w, w.edges[e].tail));
    comp_darts[root].push_back({e, false});
    comp_darts[root].push_back({e, true});
  }

  std::map<int, std::string> anchored;  // min boundary point -> certificate
  std::vector<std::string> closed;
  for (const auto& [root, darts] : comp_darts) {
    auto it = min_bp.find(root);
    if (it != min_bp.end()) {
      anchored[it->second] =
          encode_from(w, dart_vertex, dart_slot, w.boundary_dart(it->second));
    } else {
      std::string best;
      for (const Dart& d : darts) {
        std::string cert = encode_from(w, dart_vertex, dart_slot, d);
        if (best.empty() || cert < best) best = std::move(cert);
      }
      closed.push_back(std::move(best));
    }
  }
  std::sort(closed.begin(), closed.end());

  std::ostringstream os;
  os << "B[" << render_signs(w.boundary) << "]";
  for (const auto& [bp, cert] : anchored) os << cert << '|';
  os << "C[";
  for (const auto& cert : closed) os << cert << '|';
  os << "]L" << w.loops;
  return os.str();
}

bool isomorphic(const Web& a, const Web& b) {
  if (a.boundary != b.boundary || a.loops != b.loops) return false;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return canonical_encoding(a) == canonical_encoding(b);
}

Web conjugate(const Web& w) {
  Web out;
  out.boundary.reserve(w.boundary.size());
  for (Sign s : w.boundary) out.boundary.push_back(opposite(s));
  out.polarity.reserve(w.polarity.size());
  for (Polarity p : w.polarity) out.polarity.push_back(flipped(p));
  out.edges.reserve(w.edges.size());
  for (const EdgeRec& e : w.edges) out.edges.push_back({e.head, e.tail});
  out.rotation.reserve(w.rotation.size());
  for (const auto& rot : w.rotation) {
    std::array<Dart, 3> r;
    for (int k = 0; k < 3; ++k) {
      const Dart d = rot[2 - k];
      r[k] = {d.edge, !d.at_head};
    }
    out.rotation.push_back(r);
  }
  out.loops = w.loops;
  return out;
}

Web splice(const Web& w, const std::vector<int>& drop_vertices,
           const std::vector<int>& drop_edges,
           const std::vector<std::pair<Dart, Dart>>& sew, bool drop_boundary) {
  const std::set<int> dropV(drop_vertices.begin(), drop_vertices.end());
  const std::set<int> dropE(drop_edges.begin(), drop_edges.end());

  auto anchored = [&](Endpoint ep) {
    if (ep.on_boundary) return !drop_boundary;
    return !dropV.count(ep.index);
  };

  std::map<Dart, Dart> partner;
  for (const auto& [x, y] : sew) {
    for (const Dart& d : {x, y}) {
      if (dropE.count(d.edge))
        throw CheckError("splice: sewing an end of a deleted edge");
      if (anchored(w.endpoint_of(d)))
        throw CheckError("splice: sewing an end that is still attached");
      if (partner.count(d)) throw CheckError("splice: edge end sewn twice");
    }
    // One inbound end fused with one outbound end keeps orientations flowing.
    if (x.at_head == y.at_head)
      throw CheckError("splice: fused ends must have opposite directions");
    partner[x] = y;
    partner[y] = x;
  }

  // Every dangling end must be accounted for by a sew instruction.
  for (int e = 0; e < w.edge_count(); ++e) {
    if (dropE.count(e)) continue;
    for (const bool at_head : {false, true}) {
      const Dart d{e, at_head};
      if (!anchored(w.endpoint_of(d)) && !partner.count(d))
        throw CheckError("splice: edge end left dangling");
    }
  }

  Web out;
  out.boundary = drop_boundary ? SignSequence{} : w.boundary;
  std::vector<int> vmap(w.vertex_count(), -1);
  for (int v = 0; v < w.vertex_count(); ++v) {
    if (dropV.count(v)) continue;
    vmap[v] = out.vertex_count();
    out.polarity.push_back(w.polarity[v]);
  }
  auto remap = [&](Endpoint ep) {
    if (ep.on_boundary) return ep;
    return Endpoint::vertex(vmap[ep.index]);
  };

  std::map<Dart, Dart> redirect;  // old anchored end -> new edge end
  std::vector<bool> used(w.edge_count(), false);
  int cycles = 0;

  auto head_soldered = [&](int e) { return partner.count({e, true}); };
  auto tail_soldered = [&](int e) { return partner.count({e, false}); };

  for (int e = 0; e < w.edge_count(); ++e) {
    if (dropE.count(e) || used[e]) continue;
    if (!tail_soldered(e) && !head_soldered(e)) {
      // Untouched edge.
      used[e] = true;
      const int id = out.edge_count();
      out.edges.push_back({remap(w.edges[e].tail), remap(w.edges[e].head)});
      redirect[{e, false}] = {id, false};
      redirect[{e, true}] = {id, true};
      continue;
    }
    if (tail_soldered(e)) continue;  // chain middle or end; handled below
    // Walk the chain downstream from its anchored tail.
    used[e] = true;
    int cur = e;
    while (head_soldered(cur)) {
      const Dart next = partner.at({cur, true});
      if (next.at_head)
        throw CheckError("splice: inconsistent flow along fused chain");
      cur = next.edge;
      if (used[cur]) throw CheckError("splice: fused chain crosses itself");
      used[cur] = true;
    }
    const int id = out.edge_count();
    out.edges.push_back({remap(w.edges[e].tail), remap(w.edges[cur].head)});
    redirect[{e, false}] = {id, false};
    redirect[{cur, true}] = {id, true};
  }

  // Remaining unvisited edges sit on closed chains.
  for (int e = 0; e < w.edge_count(); ++e) {
    if (dropE.count(e) || used[e]) continue;
    ++cycles;
    int cur = e;
    do {
      used[cur] = true;
      const Dart next = partner.at({cur, true});
      if (next.at_head)
        throw CheckError("splice: inconsistent flow along fused cycle");
      cur = next.edge;
    } while (cur != e);
  }

  for (int v = 0; v < w.vertex_count(); ++v) {
    if (dropV.count(v)) continue;
    std::array<Dart, 3> rot;
    for (int k = 0; k < 3; ++k) {
      const Dart d = w.rotation[v][k];
      auto it = redirect.find(d);
      if (it == redirect.end())
        throw CheckError("splice: surviving vertex lost an edge");
      rot[k] = it->second;
    }
    out.rotation.push_back(rot);
  }

  out.loops = w.loops + cycles;
  return out;
}

Web trace_close(const Web& w1, const Web& w2) {
  if (w1.boundary != w2.boundary)
    throw ParseError("trace_close: webs have different boundaries");
  const Web c = conjugate(w1);
  const int l = w1.boundary_count();
  const int V1 = c.vertex_count();
  const int E1 = c.edge_count();

  Web combined;
  combined.boundary = c.boundary;
  combined.boundary.insert(combined.boundary.end(), w2.boundary.begin(),
                           w2.boundary.end());
  combined.polarity = c.polarity;
  combined.polarity.insert(combined.polarity.end(), w2.polarity.begin(),
                           w2.polarity.end());
  combined.edges = c.edges;
  for (const EdgeRec& e : w2.edges) {
    auto shift = [&](Endpoint ep) {
      return ep.on_boundary ? Endpoint::boundary(ep.index + l)
                            : Endpoint::vertex(ep.index + V1);
    };
    combined.edges.push_back({shift(e.tail), shift(e.head)});
  }
  combined.rotation = c.rotation;
  for (const auto& rot : w2.rotation) {
    std::array<Dart, 3> r;
    for (int k = 0; k < 3; ++k) r[k] = {rot[k].edge + E1, rot[k].at_head};
    combined.rotation.push_back(r);
  }
  combined.loops = c.loops + w2.loops;

  std::vector<std::pair<Dart, Dart>> sew;
  sew.reserve(l);
  for (int b = 0; b < l; ++b) {
    const Dart lower = c.boundary_dart(b);
    Dart upper = w2.boundary_dart(b);
    upper.edge += E1;
    sew.emplace_back(lower, upper);
  }
  return splice(combined, {}, {}, sew, /*drop_boundary=*/true);
}

namespace {

using Json = nlohmann::ordered_json;

std::string endpoint_string(Endpoint ep) {
  return (ep.on_boundary ? "b" : "v") + std::to_string(ep.index);
}

Endpoint parse_endpoint(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'b' && s[0] != 'v'))
    throw ParseError("web json: bad endpoint '" + s + "'");
  int idx;
  try {
    size_t pos;
    idx = std::stoi(s.substr(1), &pos);
    if (pos + 1 != s.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("web json: bad endpoint '" + s + "'");
  }
  return {s[0] == 'b', idx};
}

std::string dart_string(Dart d) {
  return std::to_string(d.edge) + (d.at_head ? 'h' : 't');
}

Dart parse_dart(const std::string& s) {
  if (s.size() < 2 || (s.back() != 't' && s.back() != 'h'))
    throw ParseError("web json: bad rotation entry '" + s + "'");
  int e;
  try {
    size_t pos;
    e = std::stoi(s, &pos);
    if (pos + 1 != s.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("web json: bad rotation entry '" + s + "'");
  }
  return {e, s.back() == 'h'};
}

}  // namespace

std::string render_web(const Web& w) {
  Json j;
  j["boundary"] = Json::array();
  for (Sign s : w.boundary) j["boundary"].push_back(std::string(1, sign_char(s)));
  j["vertices"] = Json::array();
  for (int v = 0; v < w.vertex_count(); ++v)
    j["vertices"].push_back(
        {{"id", v},
         {"polarity", w.polarity[v] == Polarity::sink ? "sink" : "source"}});
  j["edges"] = Json::array();
  for (int e = 0; e < w.edge_count(); ++e)
    j["edges"].push_back({{"id", e},
                          {"tail", endpoint_string(w.edges[e].tail)},
                          {"head", endpoint_string(w.edges[e].head)}});
  j["rotation"] = Json::object();
  for (int v = 0; v < w.vertex_count(); ++v) {
    Json r = Json::array();
    for (const Dart& d : w.rotation[v]) r.push_back(dart_string(d));
    j["rotation"][std::to_string(v)] = r;
  }
  j["loops"] = w.loops;
  return j.dump();
}

Web parse_web(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("web json: ") + e.what());
  }
  try {
    Web w;
    if (!j.is_object()) throw ParseError("web json: top level must be an object");
    for (const auto& key :
         {"boundary", "vertices", "edges", "rotation", "loops"})
      if (!j.contains(key))
        throw ParseError(std::string("web json: missing field '") + key + "'");

    for (const auto& s : j.at("boundary")) {
      const std::string str = s.get<std::string>();
      const SignSequence one = parse_signs(str);
      if (one.size() != 1) throw ParseError("web json: bad boundary sign '" + str + "'");
      w.boundary.push_back(one[0]);
    }

    const auto& verts = j.at("vertices");
    w.polarity.resize(verts.size());
    for (const auto& v : verts) {
      const int id = v.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(verts.size()))
        throw ParseError("web json: vertex ids must be 0..n-1");
      const std::string p = v.at("polarity").get<std::string>();
      if (p != "sink" && p != "source")
        throw ParseError("web json: vertex polarity must be sink or source");
      w.polarity[id] = p == "sink" ? Polarity::sink : Polarity::source;
    }

    const auto& edges = j.at("edges");
    w.edges.resize(edges.size());
    std::vector<bool> seen(edges.size(), false);
    for (const auto& e : edges) {
      const int id = e.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(edges.size()) || seen[id])
        throw ParseError("web json: edge ids must be 0..n-1 without repeats");
      seen[id] = true;
      w.edges[id] = {parse_endpoint(e.at("tail").get<std::string>()),
                     parse_endpoint(e.at("head").get<std::string>())};
    }

    const auto& rot = j.at("rotation");
    if (rot.size() != w.polarity.size())
      throw ParseError("web json: rotation must list every vertex exactly once");
    w.rotation.resize(w.polarity.size());
    for (const auto& [key, darts] : rot.items()) {
      int v;
      try {
        v = std::stoi(key);
      } catch (const std::exception&) {
        throw ParseError("web json: bad rotation key '" + key + "'");
      }
      if (v < 0 || v >= w.vertex_count())
        throw ParseError("web json: rotation key '" + key +
                         "' is not a vertex id");
      if (darts.size() != 3)
        throw ParseError("web json: rotation of vertex " + key +
                         " must list 3 edge ends");
      for (int k = 0; k < 3; ++k)
        w.rotation[v][k] = parse_dart(darts[k].get<std::string>());
    }

    w.loops = j.at("loops").get<int>();
    w.validate();
    return w;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("web json: ") + e.what());
  }
}

}  // namespace sl3web
