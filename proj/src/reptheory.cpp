#include "sl3web/reptheory.hpp"

#include "sl3web/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace sl3web {

namespace {

struct GenInfo {
  const char* token;
  Gen conj;
  SignSequence dom, cod;
};

constexpr int kGenCount = 14;

const std::array<GenInfo, kGenCount>& gen_infos() {
  static const std::array<GenInfo, kGenCount> infos = {{
      {"id+", Gen::id_p, {Sign::plus}, {Sign::plus}},
      {"id-", Gen::id_m, {Sign::minus}, {Sign::minus}},
      {"bpm", Gen::s_pm, {}, {Sign::plus, Sign::minus}},
      {"bmp", Gen::s_mp, {}, {Sign::minus, Sign::plus}},
      {"spm", Gen::b_pm, {Sign::plus, Sign::minus}, {}},
      {"smp", Gen::b_mp, {Sign::minus, Sign::plus}, {}},
      {"tppp", Gen::t_dn_ppp, {}, {Sign::plus, Sign::plus, Sign::plus}},
      {"tmmm", Gen::t_dn_mmm, {}, {Sign::minus, Sign::minus, Sign::minus}},
      {"tpp_m", Gen::t_m_pp, {Sign::minus}, {Sign::plus, Sign::plus}},
      {"tmm_p", Gen::t_p_mm, {Sign::plus}, {Sign::minus, Sign::minus}},
      {"tp_mm", Gen::t_mm_p, {Sign::minus, Sign::minus}, {Sign::plus}},
      {"tm_pp", Gen::t_pp_m, {Sign::plus, Sign::plus}, {Sign::minus}},
      {"t_ppp", Gen::t_up_ppp, {Sign::plus, Sign::plus, Sign::plus}, {}},
      {"t_mmm", Gen::t_up_mmm, {Sign::minus, Sign::minus, Sign::minus}, {}},
  }};
  return infos;
}

const GenInfo& info(Gen g) { return gen_infos()[static_cast<size_t>(g)]; }

// Sparse rows of a generator, keyed by the multi-index consumed above.
struct GenData {
  SignSequence dom, cod;
  std::map<MultiIndex, std::vector<std::pair<MultiIndex, LaurentPoly>>> rows;
};

using GenTable = std::map<Gen, GenData>;

void check_slice(const SignSequence& have, size_t offset, const SignSequence& want) {
  if (offset + want.size() > have.size() ||
      !std::equal(want.begin(), want.end(), have.begin() + offset))
    throw CheckError("script level does not compose with the boundary above it");
}

// Push one token through a state tensor, replacing the consumed factors at
// `offset` with the produced ones.
QTensor push_token(const QTensor& state, size_t offset, Gen g, const GenTable& table) {
  const GenData& gd = table.at(g);
  check_slice(state.shape, offset, gd.dom);

  QTensor out;
  out.shape.assign(state.shape.begin(), state.shape.begin() + offset);
  out.shape.insert(out.shape.end(), gd.cod.begin(), gd.cod.end());
  out.shape.insert(out.shape.end(), state.shape.begin() + offset + gd.dom.size(),
                   state.shape.end());

  for (const auto& [idx, coeff] : state.entries) {
    MultiIndex mid(idx.begin() + offset, idx.begin() + offset + gd.dom.size());
    auto it = gd.rows.find(mid);
    if (it == gd.rows.end()) continue;
    for (const auto& [produced, gcoeff] : it->second) {
      MultiIndex next(idx.begin(), idx.begin() + offset);
      next.insert(next.end(), produced.begin(), produced.end());
      next.insert(next.end(), idx.begin() + offset + gd.dom.size(), idx.end());
      out.entries[next] += coeff * gcoeff;
    }
  }
  std::erase_if(out.entries, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

QTensor push_level(QTensor state, const Level& level, const GenTable& table) {
  size_t offset = 0;
  for (Gen g : level.tokens) {
    state = push_token(state, offset, g, table);
    offset += table.at(g).cod.size();
  }
  if (offset != state.shape.size())
    throw CheckError("script level leaves unconsumed strands");
  return state;
}

std::vector<MultiIndex> all_indices(size_t rank) {
  std::vector<MultiIndex> out;
  MultiIndex idx(rank, -1);
  for (;;) {
    out.push_back(idx);
    size_t p = 0;
    while (p < rank && idx[p] == 1) idx[p++] = -1;
    if (p == rank) break;
    ++idx[p];
  }
  return out;
}

int inversions(const MultiIndex& v) {
  int n = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++n;
  return n;
}

GenData make_identity_data(Gen g) {
  GenData gd{info(g).dom, info(g).cod, {}};
  for (int i : {-1, 0, 1}) gd.rows[{i}].emplace_back(MultiIndex{i}, LaurentPoly::one());
  return gd;
}

// Births carry q^{-i} on e_i (x) e_{-i}; evaluations pair e_i with e_{-i}
// under the same weight, which is exactly what makes every zigzag the
// identity and both circle orientations the third quantum integer.
GenData make_birth_data(Gen g) {
  GenData gd{info(g).dom, info(g).cod, {}};
  for (int i : {-1, 0, 1})
    gd.rows[{}].emplace_back(MultiIndex{i, -i}, LaurentPoly::q(-i));
  return gd;
}

GenData make_eval_data(Gen g) {
  GenData gd{info(g).dom, info(g).cod, {}};
  for (int i : {-1, 0, 1})
    gd.rows[{i, -i}].emplace_back(MultiIndex{}, LaurentPoly::q(-i));
  return gd;
}

// The triple birth spreads over the six arrangements of (-1,0,1) with
// weight s^(3 - 2 inv); the reversed arrangement carries s^-3 = q^(-3/2).
GenData make_triple_birth_data(Gen g) {
  GenData gd{info(g).dom, info(g).cod, {}};
  MultiIndex perm{-1, 0, 1};
  do {
    gd.rows[{}].emplace_back(perm, LaurentPoly::s(3 - 2 * inversions(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return gd;
}

TensorMap evaluate_map_with(const SliceScript& s, const GenTable& table);

GenData derive(const SliceScript& mini, Gen g, const GenTable& table) {
  TensorMap m = evaluate_map_with(mini, table);
  if (m.domain != info(g).dom || m.codomain != info(g).cod)
    throw CheckError("derived generator has the wrong signature");
  GenData gd{m.domain, m.codomain, {}};
  for (const auto& [key, coeff] : m.entries)
    gd.rows[key.first].emplace_back(key.second, coeff);
  return gd;
}

GenTable build_gen_table() {
  using G = Gen;
  GenTable t;
  t.emplace(G::id_p, make_identity_data(G::id_p));
  t.emplace(G::id_m, make_identity_data(G::id_m));
  t.emplace(G::b_pm, make_birth_data(G::b_pm));
  t.emplace(G::b_mp, make_birth_data(G::b_mp));
  t.emplace(G::s_pm, make_eval_data(G::s_pm));
  t.emplace(G::s_mp, make_eval_data(G::s_mp));
  t.emplace(G::t_up_ppp, make_triple_birth_data(G::t_up_ppp));
  t.emplace(G::t_up_mmm, make_triple_birth_data(G::t_up_mmm));

  auto add = [&](Gen g, std::vector<Level> levels) {
    t.emplace(g, derive(SliceScript{std::move(levels)}, g, t));
  };
  // Each remaining vertex is a triple birth with the unwanted legs bent
  // around by zigzags.
  add(G::t_pp_m, {{{G::t_up_ppp, G::id_m}}, {{G::id_p, G::id_p, G::s_pm}}});
  add(G::t_mm_p, {{{G::t_up_mmm, G::id_p}}, {{G::id_m, G::id_m, G::s_mp}}});
  add(G::t_p_mm, {{{G::id_m, G::id_m, G::t_up_ppp}},
                  {{G::id_m, G::s_mp, G::id_p, G::id_p}},
                  {{G::s_mp, G::id_p}}});
  add(G::t_m_pp, {{{G::id_p, G::id_p, G::t_up_mmm}},
                  {{G::id_p, G::s_pm, G::id_m, G::id_m}},
                  {{G::s_pm, G::id_m}}});
  add(G::t_dn_ppp, {{{G::id_p, G::id_p, G::id_p, G::t_up_mmm}},
                    {{G::id_p, G::id_p, G::s_pm, G::id_m, G::id_m}},
                    {{G::id_p, G::s_pm, G::id_m}},
                    {{G::s_pm}}});
  add(G::t_dn_mmm, {{{G::id_m, G::id_m, G::id_m, G::t_up_ppp}},
                    {{G::id_m, G::id_m, G::s_mp, G::id_p, G::id_p}},
                    {{G::id_m, G::s_mp, G::id_p}},
                    {{G::s_mp}}});
  return t;
}

const GenTable& gen_table() {
  static const GenTable table = build_gen_table();
  return table;
}

TensorMap evaluate_map_with(const SliceScript& s, const GenTable& table) {
  TensorMap out;
  out.domain = script_domain(s);
  out.codomain = script_codomain(s);
  for (const MultiIndex& in : all_indices(out.domain.size())) {
    QTensor state{out.domain, {{in, LaurentPoly::one()}}};
    for (const Level& level : s.levels) state = push_level(std::move(state), level, table);
    for (auto& [idx, coeff] : state.entries)
      out.entries.emplace(std::make_pair(in, idx), std::move(coeff));
  }
  return out;
}

}  // namespace

const char* gen_token(Gen g) { return info(g).token; }

std::optional<Gen> gen_from_token(std::string_view token) {
  for (int i = 0; i < kGenCount; ++i)
    if (token == gen_infos()[i].token) return static_cast<Gen>(i);
  return std::nullopt;
}

Gen conjugate_gen(Gen g) { return info(g).conj; }
const SignSequence& gen_domain(Gen g) { return info(g).dom; }
const SignSequence& gen_codomain(Gen g) { return info(g).cod; }

SignSequence level_domain(const Level& level) {
  SignSequence out;
  for (Gen g : level.tokens) {
    const SignSequence& d = gen_domain(g);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

SignSequence level_codomain(const Level& level) {
  SignSequence out;
  for (Gen g : level.tokens) {
    const SignSequence& c = gen_codomain(g);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

void validate_script(const SliceScript& s) {
  for (size_t i = 0; i + 1 < s.levels.size(); ++i) {
    if (level_codomain(s.levels[i]) != level_domain(s.levels[i + 1])) {
      std::ostringstream msg;
      msg << "script levels " << i + 1 << " and " << i + 2 << " do not compose: "
          << render_signs(level_codomain(s.levels[i])) << " vs "
          << render_signs(level_domain(s.levels[i + 1]));
      throw ParseError(msg.str());
    }
  }
}

SignSequence script_domain(const SliceScript& s) {
  return s.levels.empty() ? SignSequence{} : level_domain(s.levels.front());
}

SignSequence script_codomain(const SliceScript& s) {
  return s.levels.empty() ? SignSequence{} : level_codomain(s.levels.back());
}

SliceScript parse_script(const std::string& text) {
  SliceScript s;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    Level level;
    std::string word;
    while (words >> word) {
      auto g = gen_from_token(word);
      if (!g) {
        std::ostringstream msg;
        msg << "line " << lineno << ": unknown generator token '" << word << "'";
        throw ParseError(msg.str());
      }
      level.tokens.push_back(*g);
    }
    if (!level.tokens.empty()) s.levels.push_back(std::move(level));
  }
  validate_script(s);
  return s;
}

std::string render_script(const SliceScript& s) {
  std::ostringstream out;
  for (const Level& level : s.levels) {
    for (size_t i = 0; i < level.tokens.size(); ++i)
      out << (i ? " " : "") << gen_token(level.tokens[i]);
    out << '\n';
  }
  return out.str();
}

SliceScript conjugate_script(const SliceScript& s) {
  SliceScript out;
  out.levels.reserve(s.levels.size());
  for (auto it = s.levels.rbegin(); it != s.levels.rend(); ++it) {
    Level level;
    level.tokens.reserve(it->tokens.size());
    for (Gen g : it->tokens) level.tokens.push_back(conjugate_gen(g));
    out.levels.push_back(std::move(level));
  }
  return out;
}

SliceScript concat_scripts(const SliceScript& top, const SliceScript& bottom) {
  SliceScript out = top;
  out.levels.insert(out.levels.end(), bottom.levels.begin(), bottom.levels.end());
  validate_script(out);
  return out;
}

QTensor generator_tensor(const std::string& name) {
  auto g = gen_from_token(name);
  if (!g || (*g != Gen::b_pm && *g != Gen::b_mp && *g != Gen::s_pm &&
             *g != Gen::s_mp && *g != Gen::t_up_ppp && *g != Gen::t_up_mmm))
    throw ParseError("unknown generator name: " + name);
  const GenData& gd = gen_table().at(*g);
  QTensor out;
  out.shape = gd.dom;
  out.shape.insert(out.shape.end(), gd.cod.begin(), gd.cod.end());
  for (const auto& [in, produced] : gd.rows)
    for (const auto& [cod_idx, coeff] : produced) {
      MultiIndex idx = in;
      idx.insert(idx.end(), cod_idx.begin(), cod_idx.end());
      out.entries.emplace(std::move(idx), coeff);
    }
  return out;
}

QTensor evaluate_script(const SliceScript& s) {
  validate_script(s);
  if (!script_domain(s).empty())
    throw ParseError("script does not start from the empty boundary");
  QTensor state{{}, {{MultiIndex{}, LaurentPoly::one()}}};
  for (const Level& level : s.levels) state = push_level(std::move(state), level, gen_table());
  return state;
}

LaurentPoly evaluate_closed(const SliceScript& s) {
  QTensor v = evaluate_script(s);
  if (!v.shape.empty())
    throw ParseError("script is not closed: ends at " + render_signs(v.shape));
  auto it = v.entries.find(MultiIndex{});
  return it == v.entries.end() ? LaurentPoly::zero() : it->second;
}

TensorMap evaluate_map(const SliceScript& s) {
  validate_script(s);
  return evaluate_map_with(s, gen_table());
}

TensorMap identity_map(const SignSequence& signs) {
  TensorMap out{signs, signs, {}};
  for (const MultiIndex& idx : all_indices(signs.size()))
    out.entries.emplace(std::make_pair(idx, idx), LaurentPoly::one());
  return out;
}

namespace {

// script_to_web grows strand segments level by level.  Each open strand on
// the current cut is a segment end: the tail end for an upward (+) strand,
// the head end for a downward (-) one.  Evaluations solder a tail end to a
// head end; the final pass chains soldered segments into single edges and
// counts the all-soldered cycles as free loops.
struct Attachment {
  enum Kind { open, vertex, boundary, soldered } kind = open;
  int a = 0, b = 0;  // vertex: (vertex, slot); boundary: (point); soldered: (end id)
};

struct WebBuilder {
  std::vector<Polarity> polarity;
  std::vector<std::array<int, 3>> slots;  // segment-end id per rotation slot
  std::vector<Attachment> att;            // per segment end; end id = 2*seg + head
  struct CutEntry { int end; Sign sign; };
  std::vector<CutEntry> cut;

  static int end_id(int seg, bool head) { return 2 * seg + (head ? 1 : 0); }

  int new_segment() {
    att.emplace_back();
    att.emplace_back();
    return static_cast<int>(att.size() / 2) - 1;
  }

  void solder(int tail_end, int head_end) {
    att[tail_end] = {Attachment::soldered, head_end, 0};
    att[head_end] = {Attachment::soldered, tail_end, 0};
  }

  // Consumed strands attach right to left, produced strands left to right:
  // that is the counterclockwise order around a vertex drawn with its
  // consumed legs above and produced legs below.
  void add_vertex(Polarity pol, const std::vector<int>& consumed_ends,
                  std::vector<Sign> produced, std::vector<CutEntry>& next) {
    int v = static_cast<int>(polarity.size());
    polarity.push_back(pol);
    slots.push_back({-1, -1, -1});
    int slot = 0;
    for (auto it = consumed_ends.rbegin(); it != consumed_ends.rend(); ++it) {
      att[*it] = {Attachment::vertex, v, slot};
      slots[v][slot++] = *it;
    }
    for (Sign sign : produced) {
      int seg = new_segment();
      bool vertex_end_is_head = (sign == Sign::plus);
      int vend = end_id(seg, vertex_end_is_head);
      att[vend] = {Attachment::vertex, v, slot};
      slots[v][slot++] = vend;
      next.push_back({end_id(seg, !vertex_end_is_head), sign});
    }
  }
};

}  // namespace

Web script_to_web(const SliceScript& s) {
  validate_script(s);
  if (!script_domain(s).empty())
    throw ParseError("script does not start from the empty boundary");

  WebBuilder b;
  for (const Level& level : s.levels) {
    std::vector<WebBuilder::CutEntry> next;
    size_t pos = 0;
    auto take = [&](Sign want) {
      const auto& entry = b.cut[pos++];
      if (entry.sign != want) throw CheckError("script strand sign mismatch");
      return entry.end;
    };
    for (Gen g : level.tokens) {
      switch (g) {
        case Gen::id_p:
        case Gen::id_m:
          next.push_back(b.cut[pos++]);
          break;
        case Gen::b_pm: {
          int seg = b.new_segment();
          next.push_back({WebBuilder::end_id(seg, false), Sign::plus});
          next.push_back({WebBuilder::end_id(seg, true), Sign::minus});
          break;
        }
        case Gen::b_mp: {
          int seg = b.new_segment();
          next.push_back({WebBuilder::end_id(seg, true), Sign::minus});
          next.push_back({WebBuilder::end_id(seg, false), Sign::plus});
          break;
        }
        case Gen::s_pm: {
          int tail = take(Sign::plus), head = take(Sign::minus);
          b.solder(tail, head);
          break;
        }
        case Gen::s_mp: {
          int head = take(Sign::minus), tail = take(Sign::plus);
          b.solder(tail, head);
          break;
        }
        case Gen::t_up_ppp:
          b.add_vertex(Polarity::sink, {}, {Sign::plus, Sign::plus, Sign::plus}, next);
          break;
        case Gen::t_up_mmm:
          b.add_vertex(Polarity::source, {}, {Sign::minus, Sign::minus, Sign::minus}, next);
          break;
        case Gen::t_pp_m:
          b.add_vertex(Polarity::sink, {take(Sign::minus)}, {Sign::plus, Sign::plus}, next);
          break;
        case Gen::t_mm_p:
          b.add_vertex(Polarity::source, {take(Sign::plus)}, {Sign::minus, Sign::minus}, next);
          break;
        case Gen::t_p_mm: {
          int c0 = take(Sign::minus), c1 = take(Sign::minus);
          b.add_vertex(Polarity::sink, {c0, c1}, {Sign::plus}, next);
          break;
        }
        case Gen::t_m_pp: {
          int c0 = take(Sign::plus), c1 = take(Sign::plus);
          b.add_vertex(Polarity::source, {c0, c1}, {Sign::minus}, next);
          break;
        }
        case Gen::t_dn_ppp: {
          int c0 = take(Sign::plus), c1 = take(Sign::plus), c2 = take(Sign::plus);
          b.add_vertex(Polarity::source, {c0, c1, c2}, {}, next);
          break;
        }
        case Gen::t_dn_mmm: {
          int c0 = take(Sign::minus), c1 = take(Sign::minus), c2 = take(Sign::minus);
          b.add_vertex(Polarity::sink, {c0, c1, c2}, {}, next);
          break;
        }
      }
    }
    if (pos != b.cut.size()) throw CheckError("script level leaves unconsumed strands");
    b.cut = std::move(next);
  }

  Web w;
  w.polarity = b.polarity;
  for (size_t i = 0; i < b.cut.size(); ++i) {
    w.boundary.push_back(b.cut[i].sign);
    b.att[b.cut[i].end] = {Attachment::boundary, static_cast<int>(i), 0};
  }

  auto endpoint = [](const Attachment& a) {
    return a.kind == Attachment::vertex ? Endpoint::vertex(a.a) : Endpoint::boundary(a.a);
  };

  // Chain soldered segments into edges, walking downstream from every
  // anchored tail end; whatever remains soldered on both sides is a cycle
  // of caps and cups, i.e. a free loop.
  int nsegs = static_cast<int>(b.att.size() / 2);
  std::vector<char> seen(nsegs, 0);
  std::map<int, std::pair<int, bool>> end_to_edge;  // anchored end -> (edge, at head)
  for (int seg = 0; seg < nsegs; ++seg) {
    const Attachment& tail = b.att[WebBuilder::end_id(seg, false)];
    if (tail.kind == Attachment::soldered) continue;
    if (tail.kind == Attachment::open) throw CheckError("script leaves a dangling strand");
    int e = static_cast<int>(w.edges.size());
    end_to_edge[WebBuilder::end_id(seg, false)] = {e, false};
    int cur = seg;
    seen[cur] = 1;
    while (b.att[WebBuilder::end_id(cur, true)].kind == Attachment::soldered) {
      cur = b.att[WebBuilder::end_id(cur, true)].a / 2;
      seen[cur] = 1;
    }
    end_to_edge[WebBuilder::end_id(cur, true)] = {e, true};
    w.edges.push_back({endpoint(b.att[WebBuilder::end_id(seg, false)]),
                       endpoint(b.att[WebBuilder::end_id(cur, true)])});
  }
  for (int seg = 0; seg < nsegs; ++seg) {
    if (seen[seg]) continue;
    ++w.loops;
    for (int cur = seg; !seen[cur];) {
      seen[cur] = 1;
      cur = b.att[WebBuilder::end_id(cur, true)].a / 2;
    }
  }

  for (size_t v = 0; v < b.slots.size(); ++v) {
    std::array<Dart, 3> rot;
    for (int slot = 0; slot < 3; ++slot) {
      auto [edge, at_head] = end_to_edge.at(b.slots[v][slot]);
      rot[slot] = Dart{edge, at_head};
    }
    w.rotation.push_back(rot);
  }

  w.validate();
  return w;
}

}  // namespace sl3web
