#include "sl3web/skein.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <variant>

namespace sl3web {

const char* rule_name(ReductionRule r) {
  switch (r) {
    case ReductionRule::circle: return "circle";
    case ReductionRule::digon: return "digon";
    case ReductionRule::square_branch_a: return "square-branch-A";
    case ReductionRule::square_branch_b: return "square-branch-B";
  }
  return "?";
}

namespace {

struct DigonMove {
  int face;
  int u, v;            // source and sink of the digon
  int a, b;            // the parallel edges
  Dart third_u, third_v;
};

struct SquareMove {
  int face;
  std::array<int, 4> corner;
  std::array<int, 4> edge;
  std::array<Dart, 4> ext;  // the edge end at each corner pointing away
};

using Move = std::variant<DigonMove, SquareMove>;

Dart remaining_dart(const Web& w, int v, Dart skip1, Dart skip2) {
  for (const Dart& d : w.rotation[v])
    if (d != skip1 && d != skip2) return d;
  throw CheckError("skein: vertex has no third edge end");
}

std::optional<DigonMove> as_digon(const Web& w, const Face& f, int face_id) {
  if (f.touches_boundary || f.arcs.size() != 2) return std::nullopt;
  const int a = f.arcs[0].edge;
  const int b = f.arcs[1].edge;
  if (a == b) throw CheckError("skein: degenerate digon face");
  const EdgeRec& ea = w.edges[a];
  const EdgeRec& eb = w.edges[b];
  if (ea.tail != eb.tail || ea.head != eb.head)
    throw CheckError("skein: digon strands are not parallel");
  if (ea.tail.on_boundary || ea.head.on_boundary) return std::nullopt;
  DigonMove m;
  m.face = face_id;
  m.u = ea.tail.index;
  m.v = ea.head.index;
  m.a = a;
  m.b = b;
  if (w.polarity[m.u] != Polarity::source || w.polarity[m.v] != Polarity::sink)
    throw CheckError("skein: digon polarity mismatch");
  m.third_u = remaining_dart(w, m.u, {a, false}, {b, false});
  m.third_v = remaining_dart(w, m.v, {a, true}, {b, true});
  return m;
}

std::optional<SquareMove> as_square(const Web& w, const Face& f, int face_id) {
  if (f.touches_boundary || f.arcs.size() != 4) return std::nullopt;
  SquareMove m;
  m.face = face_id;
  for (int i = 0; i < 4; ++i) {
    const Arc& arrive = f.arcs[i];
    const Arc& depart = f.arcs[(i + 1) % 4];
    m.edge[i] = arrive.edge;
    const Endpoint ep = w.endpoint_of({arrive.edge, arrive.forward});
    if (ep.on_boundary) return std::nullopt;
    m.corner[i] = ep.index;
    m.ext[i] = remaining_dart(w, ep.index, {arrive.edge, arrive.forward},
                              {depart.edge, !depart.forward});
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (m.corner[i] == m.corner[j])
        throw CheckError("skein: square face with repeated corner");
      if (m.edge[i] == m.edge[j])
        throw CheckError("skein: square face with repeated edge");
    }
    if (w.polarity[m.corner[i]] == w.polarity[m.corner[(i + 1) % 4]])
      throw CheckError("skein: square corners do not alternate");
  }
  return m;
}

Web apply_digon(const Web& w, const DigonMove& m) {
  return splice(w, {m.u, m.v}, {m.a, m.b}, {{m.third_v, m.third_u}}, false);
}

Web apply_square(const Web& w, const SquareMove& m, bool branch_a) {
  const std::vector<int> verts(m.corner.begin(), m.corner.end());
  const std::vector<int> edges(m.edge.begin(), m.edge.end());
  std::vector<std::pair<Dart, Dart>> sew;
  if (branch_a)
    sew = {{m.ext[0], m.ext[1]}, {m.ext[2], m.ext[3]}};
  else
    sew = {{m.ext[1], m.ext[2]}, {m.ext[3], m.ext[0]}};
  return splice(w, verts, edges, sew, false);
}

std::vector<Move> reducible_moves(const Web& w, const FaceData& fd) {
  std::vector<Move> moves;
  for (size_t i = 0; i < fd.faces.size(); ++i) {
    if (auto d = as_digon(w, fd.faces[i], static_cast<int>(i)))
      moves.emplace_back(*d);
    else if (auto s = as_square(w, fd.faces[i], static_cast<int>(i)))
      moves.emplace_back(*s);
  }
  return moves;
}

[[noreturn]] void no_move() {
  throw CheckError("skein: closed web admits no circle, digon, or square");
}

using Memo = std::map<std::string, LaurentPoly>;

// w must have loops == 0 and at least one edge.
LaurentPoly eval_loopless(const Web& w, Memo& memo, std::mutex* mu);

LaurentPoly eval_closed(Web w, Memo& memo, std::mutex* mu) {
  LaurentPoly scalar = quantum_integer(3).pow(w.loops);
  w.loops = 0;
  if (w.edge_count() == 0) return scalar;
  return scalar * eval_loopless(w, memo, mu);
}

LaurentPoly eval_loopless(const Web& w, Memo& memo, std::mutex* mu) {
  const std::string key = canonical_encoding(w);
  {
    std::unique_lock<std::mutex> lock;
    if (mu) lock = std::unique_lock<std::mutex>(*mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  const FaceData fd = faces(w);
  LaurentPoly value;
  bool found = false;
  for (size_t i = 0; i < fd.faces.size() && !found; ++i) {
    if (auto d = as_digon(w, fd.faces[i], static_cast<int>(i))) {
      value = quantum_integer(2) * eval_closed(apply_digon(w, *d), memo, mu);
      found = true;
    }
  }
  for (size_t i = 0; i < fd.faces.size() && !found; ++i) {
    if (auto s = as_square(w, fd.faces[i], static_cast<int>(i))) {
      value = eval_closed(apply_square(w, *s, true), memo, mu) +
              eval_closed(apply_square(w, *s, false), memo, mu);
      found = true;
    }
  }
  if (!found) no_move();

  std::unique_lock<std::mutex> lock;
  if (mu) lock = std::unique_lock<std::mutex>(*mu);
  return memo.emplace(key, std::move(value)).first->second;
}

LaurentPoly eval_random(Web w, std::mt19937_64& rng, Memo& memo) {
  LaurentPoly scalar = quantum_integer(3).pow(w.loops);
  w.loops = 0;
  if (w.edge_count() == 0) return scalar;

  const std::string key = canonical_encoding(w);
  if (auto it = memo.find(key); it != memo.end()) return scalar * it->second;

  const FaceData fd = faces(w);
  const std::vector<Move> moves = reducible_moves(w, fd);
  if (moves.empty()) no_move();
  const Move& pick = moves[rng() % moves.size()];

  LaurentPoly value;
  if (const auto* d = std::get_if<DigonMove>(&pick))
    value = quantum_integer(2) * eval_random(apply_digon(w, *d), rng, memo);
  else {
    const auto& s = std::get<SquareMove>(pick);
    value = eval_random(apply_square(w, s, true), rng, memo) +
            eval_random(apply_square(w, s, false), rng, memo);
  }
  memo.emplace(key, value);
  return scalar * value;
}

LaurentPoly eval_traced(Web w, ReductionTrace& tr) {
  const int vertices = w.vertex_count();
  for (int i = 0; i < w.loops; ++i)
    tr.steps.push_back({ReductionRule::circle, -1, vertices});
  LaurentPoly scalar = quantum_integer(3).pow(w.loops);
  w.loops = 0;
  if (w.edge_count() == 0) return scalar;

  const FaceData fd = faces(w);
  for (size_t i = 0; i < fd.faces.size(); ++i) {
    if (auto d = as_digon(w, fd.faces[i], static_cast<int>(i))) {
      tr.steps.push_back({ReductionRule::digon, d->face, vertices});
      return scalar * quantum_integer(2) * eval_traced(apply_digon(w, *d), tr);
    }
  }
  for (size_t i = 0; i < fd.faces.size(); ++i) {
    if (auto s = as_square(w, fd.faces[i], static_cast<int>(i))) {
      tr.steps.push_back({ReductionRule::square_branch_a, s->face, vertices});
      const LaurentPoly va = eval_traced(apply_square(w, *s, true), tr);
      tr.steps.push_back({ReductionRule::square_branch_b, s->face, vertices});
      const LaurentPoly vb = eval_traced(apply_square(w, *s, false), tr);
      return scalar * (va + vb);
    }
  }
  no_move();
}

void require_closed(const Web& w) {
  if (!w.is_closed())
    throw ParseError("bracket: web has boundary points; only closed webs "
                     "can be evaluated");
}

}  // namespace

LaurentPoly bracket(const Web& w) {
  require_closed(w);
  static Memo memo;
  static std::mutex mu;
  return eval_closed(w, memo, &mu);
}

LaurentPoly bracket_randomized(const Web& w, uint64_t seed) {
  require_closed(w);
  std::mt19937_64 rng(seed);
  Memo memo;
  return eval_random(w, rng, memo);
}

ReductionTrace bracket_traced(const Web& w) {
  require_closed(w);
  ReductionTrace tr;
  tr.factor = eval_traced(w, tr);
  return tr;
}

}  // namespace sl3web
