#include "sl3web/enumeration.hpp"

#include "sl3web/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <utility>

namespace sl3web {

Int count_invariants(const SignSequence& epsilon) {
  static const std::array<DominantWeight, 3> plus_steps = {{{1, 0}, {-1, 1}, {0, -1}}};
  static const std::array<DominantWeight, 3> minus_steps = {{{0, 1}, {1, -1}, {-1, 0}}};
  std::map<DominantWeight, Int> at{{DominantWeight{0, 0}, Int(1)}};
  for (Sign s : epsilon) {
    const auto& steps = (s == Sign::plus) ? plus_steps : minus_steps;
    std::map<DominantWeight, Int> next;
    for (const auto& [w, n] : at)
      for (const auto& step : steps) {
        DominantWeight t{w.m1 + step.m1, w.m2 + step.m2};
        if (t.m1 >= 0 && t.m2 >= 0) next[t] += n;
      }
    at = std::move(next);
  }
  auto it = at.find(DominantWeight{0, 0});
  return it == at.end() ? Int(0) : it->second;
}

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct BasisEntry {
  SliceScript script;
  Web web;
  std::string key;
};

struct EnumState {
  std::map<SignSequence, std::vector<BasisEntry>> memo;
  std::set<std::pair<int, int>> class_done;  // (#plus, #minus) fully grown
};

std::mutex& enum_mutex() {
  static std::mutex m;
  return m;
}

EnumState& enum_state() {
  static EnumState s;
  return s;
}

Gen id_for(Sign s) { return s == Sign::plus ? Gen::id_p : Gen::id_m; }

void append_ids(Level& level, const SignSequence& signs, size_t from, size_t to) {
  for (size_t i = from; i < to; ++i) level.tokens.push_back(id_for(signs[i]));
}

// One grown candidate: the base script with extra levels attached under it.
SliceScript grow_cap(const SliceScript& base, const SignSequence& out, size_t p, Sign left) {
  SliceScript s = base;
  Level level;
  append_ids(level, out, 0, p);
  level.tokens.push_back(left == Sign::plus ? Gen::b_pm : Gen::b_mp);
  append_ids(level, out, p, out.size());
  s.levels.push_back(std::move(level));
  return s;
}

SliceScript grow_lambda(const SliceScript& base, const SignSequence& out, size_t p) {
  SliceScript s = base;
  Level level;
  append_ids(level, out, 0, p);
  level.tokens.push_back(out[p] == Sign::minus ? Gen::t_pp_m : Gen::t_mm_p);
  append_ids(level, out, p + 1, out.size());
  s.levels.push_back(std::move(level));
  return s;
}

SliceScript grow_aitch(const SliceScript& base, const SignSequence& out, size_t p) {
  SliceScript s = base;
  bool from_mp = out[p] == Sign::minus;  // (-,+) -> (+,-), else (+,-) -> (-,+)
  Level split, merge;
  append_ids(split, out, 0, p);
  split.tokens.push_back(from_mp ? Gen::t_pp_m : Gen::t_mm_p);
  split.tokens.push_back(from_mp ? Gen::id_p : Gen::id_m);
  append_ids(split, out, p + 2, out.size());
  append_ids(merge, out, 0, p);
  merge.tokens.push_back(from_mp ? Gen::id_p : Gen::id_m);
  merge.tokens.push_back(from_mp ? Gen::t_m_pp : Gen::t_p_mm);
  append_ids(merge, out, p + 2, out.size());
  s.levels.push_back(std::move(split));
  s.levels.push_back(std::move(merge));
  return s;
}

std::vector<SignSequence> strings_of_class(int nplus, int nminus) {
  SignSequence base(nplus, Sign::plus);
  base.insert(base.end(), nminus, Sign::minus);
  std::sort(base.begin(), base.end());
  std::vector<SignSequence> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

using CandidateMap = std::map<std::string, BasisEntry>;

bool add_candidate(CandidateMap& cand, const SignSequence& sigma, SliceScript script) {
  Web w = script_to_web(script);
  if (w.boundary != sigma)
    throw CheckError("grown script has the wrong boundary: " + render_signs(w.boundary));
  if (!is_non_elliptic(w)) return false;
  std::string key = canonical_encoding(w);
  auto [it, inserted] = cand.try_emplace(std::move(key));
  if (!inserted) return false;
  it->second = {std::move(script), std::move(w), it->first};
  return true;
}

void ensure_class(int nplus, int nminus, EnumState& st);

const std::vector<BasisEntry>& grown_basis(const SignSequence& sigma, EnumState& st) {
  int np = static_cast<int>(std::count(sigma.begin(), sigma.end(), Sign::plus));
  ensure_class(np, static_cast<int>(sigma.size()) - np, st);
  return st.memo.at(sigma);
}

// Grows every string of the class at once: caps and lambdas seed candidates
// from strictly shorter boundaries, then H bars are attached across the
// class until nothing new appears.  H attachments raise the vertex count,
// so the matching reductions terminate and the fixpoint reaches everything
// the count oracle expects.
void ensure_class(int nplus, int nminus, EnumState& st) {
  auto key = std::make_pair(nplus, nminus);
  if (st.class_done.count(key)) return;
  int l = nplus + nminus;

  if (l == 0) {
    st.memo[{}] = {BasisEntry{SliceScript{}, Web::empty(), canonical_encoding(Web::empty())}};
    st.class_done.insert(key);
    return;
  }
  if (nplus >= 1 && nminus >= 1) ensure_class(nplus - 1, nminus - 1, st);
  if (nplus >= 2) ensure_class(nplus - 2, nminus + 1, st);
  if (nminus >= 2) ensure_class(nplus + 1, nminus - 2, st);

  std::vector<SignSequence> sigmas = strings_of_class(nplus, nminus);
  std::map<SignSequence, CandidateMap> cand;
  for (const SignSequence& sigma : sigmas) {
    CandidateMap& cm = cand[sigma];
    for (size_t p = 0; p + 1 < sigma.size(); ++p) {
      if (sigma[p] != sigma[p + 1]) {
        SignSequence shorter = sigma;
        shorter.erase(shorter.begin() + p, shorter.begin() + p + 2);
        for (const BasisEntry& e : st.memo.at(shorter))
          add_candidate(cm, sigma, grow_cap(e.script, shorter, p, sigma[p]));
      } else {
        SignSequence shorter = sigma;
        shorter[p] = (sigma[p] == Sign::plus) ? Sign::minus : Sign::plus;
        shorter.erase(shorter.begin() + p + 1);
        for (const BasisEntry& e : st.memo.at(shorter))
          add_candidate(cm, sigma, grow_lambda(e.script, shorter, p));
      }
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (const SignSequence& sigma : sigmas) {
      for (size_t p = 0; p + 1 < sigma.size(); ++p) {
        if (sigma[p] == sigma[p + 1]) continue;
        SignSequence flipped = sigma;
        std::swap(flipped[p], flipped[p + 1]);
        // Snapshot: additions to cand[flipped] reappear on the next pass.
        std::vector<const BasisEntry*> sources;
        for (const auto& [k, e] : cand.at(flipped)) sources.push_back(&e);
        for (const BasisEntry* e : sources)
          changed |= add_candidate(cand[sigma], sigma, grow_aitch(e->script, flipped, p));
      }
    }
  }

  for (const SignSequence& sigma : sigmas) {
    std::vector<BasisEntry> entries;
    for (auto& [k, e] : cand[sigma]) entries.push_back(std::move(e));
    Int expected = count_invariants(sigma);
    if (Int(static_cast<long>(entries.size())) != expected) {
      std::ostringstream msg;
      msg << "basis enumeration mismatch over " << render_signs(sigma) << ": grew "
          << entries.size() << " webs, path count says " << expected;
      throw CheckError(msg.str());
    }
    st.memo[sigma] = std::move(entries);
  }
  st.class_done.insert(key);
}

// ---------------------------------------------------------------------------
// Disk cache

std::optional<fs::path> cache_dir() {
  if (const char* d = std::getenv("SL3WEB_CACHE_DIR")) return fs::path(d);
  if (const char* d = std::getenv("XDG_CACHE_HOME")) return fs::path(d) / "sl3web";
  if (const char* d = std::getenv("HOME")) return fs::path(d) / ".cache" / "sl3web";
  return std::nullopt;
}

std::optional<fs::path> cache_path(const SignSequence& epsilon) {
  auto dir = cache_dir();
  if (!dir) return std::nullopt;
  std::string name = "ne_";
  for (Sign s : epsilon) name += (s == Sign::plus) ? 'p' : 'm';
  return *dir / (name + ".json");
}

std::vector<BasisEntry> load_cache(const fs::path& path, const SignSequence& epsilon) {
  auto fail = [&](const std::string& why) -> CheckError {
    return CheckError("enumeration cache " + path.string() + " is invalid: " + why);
  };
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    Json j = Json::parse(buf.str());
    if (j.at("epsilon").get<std::string>() != render_signs(epsilon))
      throw fail("boundary mismatch");
    const Json& scripts = j.at("scripts");
    const Json& webs = j.at("webs");
    if (scripts.size() != webs.size()) throw fail("scripts and webs differ in length");
    std::vector<BasisEntry> entries;
    std::set<std::string> keys;
    for (size_t i = 0; i < scripts.size(); ++i) {
      SliceScript s = parse_script(scripts[i].get<std::string>());
      Web built = script_to_web(s);
      Web stored = parse_web(webs[i].dump());
      if (!isomorphic(built, stored)) throw fail("script and web disagree");
      if (built.boundary != epsilon) throw fail("web has the wrong boundary");
      if (!is_non_elliptic(built)) throw fail("web is not non-elliptic");
      std::string key = canonical_encoding(built);
      if (!keys.insert(key).second) throw fail("duplicate web");
      entries.push_back({std::move(s), std::move(built), std::move(key)});
    }
    if (Int(static_cast<long>(entries.size())) != count_invariants(epsilon))
      throw fail("cardinality disagrees with the path count");
    std::sort(entries.begin(), entries.end(),
              [](const BasisEntry& a, const BasisEntry& b) { return a.key < b.key; });
    return entries;
  } catch (const CheckError&) {
    throw;
  } catch (const std::exception& e) {
    throw fail(e.what());
  }
}

void write_cache(const fs::path& path, const SignSequence& epsilon,
                 const std::vector<BasisEntry>& entries) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) return;  // caching is best effort
  Json j;
  j["epsilon"] = render_signs(epsilon);
  j["scripts"] = Json::array();
  j["webs"] = Json::array();
  for (const BasisEntry& e : entries) {
    j["scripts"].push_back(render_script(e.script));
    j["webs"].push_back(Json::parse(render_web(e.web)));
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump(1) << '\n';
  }
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
}

WebBasis to_basis(const SignSequence& epsilon, const std::vector<BasisEntry>& entries) {
  WebBasis b;
  b.epsilon = epsilon;
  for (const BasisEntry& e : entries) {
    b.webs.push_back(e.web);
    b.scripts.push_back(e.script);
  }
  return b;
}

}  // namespace

WebBasis enumerate_NE(const SignSequence& epsilon) {
  if (!is_admissible(epsilon))
    throw ParseError("boundary signs are not admissible: " + render_signs(epsilon));
  std::lock_guard<std::mutex> lock(enum_mutex());
  EnumState& st = enum_state();
  if (auto it = st.memo.find(epsilon); it != st.memo.end())
    return to_basis(epsilon, it->second);

  auto path = cache_path(epsilon);
  if (path && fs::exists(*path)) {
    st.memo[epsilon] = load_cache(*path, epsilon);
    return to_basis(epsilon, st.memo.at(epsilon));
  }

  const std::vector<BasisEntry>& entries = grown_basis(epsilon, st);
  if (path) write_cache(*path, epsilon, entries);
  return to_basis(epsilon, entries);
}

namespace detail {
void clear_enumeration_memory_cache() {
  std::lock_guard<std::mutex> lock(enum_mutex());
  enum_state().memo.clear();
  enum_state().class_done.clear();
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive reference generator

namespace {

// A dangling strand end inside the search region.  origin_is_tail says which
// end of the future edge is already placed at origin; legs of sink vertices
// and '-' boundary points hold heads, the rest hold tails.
struct ExLeg {
  Endpoint origin;
  int slot = -1;  // rotation slot when origin is a vertex
  bool origin_is_tail = false;
};

struct ExState {
  std::vector<Polarity> polarity;
  std::vector<std::array<Dart, 3>> rotation;
  std::vector<EdgeRec> edges;
  std::vector<std::vector<ExLeg>> intervals;
  int budget = 0;
};

void ex_anchor(ExState& s, const ExLeg& leg, int edge) {
  if (!leg.origin.on_boundary)
    s.rotation[leg.origin.index][leg.slot] = Dart{edge, !leg.origin_is_tail};
}

void ex_collect(const SignSequence& epsilon, ExState s, std::map<std::string, Web>& out) {
  while (!s.intervals.empty() && s.intervals.back().empty()) s.intervals.pop_back();
  if (s.intervals.empty()) {
    Web w;
    w.boundary = epsilon;
    w.polarity = s.polarity;
    w.edges = s.edges;
    w.rotation = s.rotation;
    w.validate();
    if (is_non_elliptic(w)) out.emplace(canonical_encoding(w), std::move(w));
    return;
  }

  std::vector<ExLeg> legs = std::move(s.intervals.back());
  s.intervals.pop_back();
  const ExLeg first = legs[0];

  // Close the strand onto a later leg; the legs strictly between them split
  // off as an independent sub-disk, which keeps every attachment planar.
  for (size_t k = 1; k < legs.size(); ++k) {
    if (legs[k].origin_is_tail == first.origin_is_tail) continue;
    ExState next = s;
    const ExLeg& tail = first.origin_is_tail ? first : legs[k];
    const ExLeg& head = first.origin_is_tail ? legs[k] : first;
    int e = static_cast<int>(next.edges.size());
    next.edges.push_back({tail.origin, head.origin});
    ex_anchor(next, tail, e);
    ex_anchor(next, head, e);
    next.intervals.emplace_back(legs.begin() + k + 1, legs.end());
    next.intervals.emplace_back(legs.begin() + 1, legs.begin() + k);
    ex_collect(epsilon, std::move(next), out);
  }

  // Or feed it into a fresh vertex whose remaining legs re-enter the region.
  if (s.budget > 0) {
    ExState next = s;
    --next.budget;
    int v = static_cast<int>(next.polarity.size());
    bool into = first.origin_is_tail;  // strand oriented into the new vertex
    next.polarity.push_back(into ? Polarity::sink : Polarity::source);
    next.rotation.push_back({Dart{}, Dart{}, Dart{}});
    int e = static_cast<int>(next.edges.size());
    next.edges.push_back(into ? EdgeRec{first.origin, Endpoint::vertex(v)}
                              : EdgeRec{Endpoint::vertex(v), first.origin});
    next.rotation[v][0] = Dart{e, into};
    ex_anchor(next, first, e);
    std::vector<ExLeg> replaced;
    replaced.push_back({Endpoint::vertex(v), 2, !into});  // left leg
    replaced.push_back({Endpoint::vertex(v), 1, !into});  // right leg
    replaced.insert(replaced.end(), legs.begin() + 1, legs.end());
    next.intervals.push_back(std::move(replaced));
    ex_collect(epsilon, std::move(next), out);
  }
}

}  // namespace

std::vector<Web> enumerate_webs_exhaustive(const SignSequence& epsilon, int max_vertices) {
  ExState s;
  s.budget = max_vertices;
  std::vector<ExLeg> legs;
  for (size_t i = 0; i < epsilon.size(); ++i)
    legs.push_back({Endpoint::boundary(static_cast<int>(i)), -1, epsilon[i] == Sign::plus});
  s.intervals.push_back(std::move(legs));
  std::map<std::string, Web> found;
  ex_collect(epsilon, std::move(s), found);
  std::vector<Web> out;
  for (auto& [key, w] : found) out.push_back(std::move(w));
  return out;
}

// ---------------------------------------------------------------------------
// Random closures

namespace {
std::pair<size_t, size_t> pick_pair(size_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  size_t i = static_cast<size_t>(rng() % n);
  size_t j = static_cast<size_t>(rng() % n);
  return {i, j};
}
}  // namespace

Web random_closed_web(const SignSequence& epsilon, uint64_t seed) {
  WebBasis basis = enumerate_NE(epsilon);
  if (basis.webs.empty()) throw CheckError("no basis webs over " + render_signs(epsilon));
  auto [i, j] = pick_pair(basis.webs.size(), seed);
  return trace_close(basis.webs[i], basis.webs[j]);
}

SliceScript random_closed_script(const SignSequence& epsilon, uint64_t seed) {
  WebBasis basis = enumerate_NE(epsilon);
  if (basis.webs.empty()) throw CheckError("no basis webs over " + render_signs(epsilon));
  auto [i, j] = pick_pair(basis.webs.size(), seed);
  return concat_scripts(basis.scripts[j], conjugate_script(basis.scripts[i]));
}

}  // namespace sl3web
