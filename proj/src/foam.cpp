#include "sl3web/foam.hpp"

#include "sl3web/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <sstream>

namespace sl3web {

FrobeniusElement FrobeniusElement::x_power(int k) {
  if (k < 0) throw ParseError("negative dot count");
  FrobeniusElement e;
  if (k < 3) e.coeff[static_cast<size_t>(k)] = 1;
  return e;
}

bool FrobeniusElement::is_zero() const {
  return coeff[0] == 0 && coeff[1] == 0 && coeff[2] == 0;
}

FrobeniusElement frob_add(const FrobeniusElement& a, const FrobeniusElement& b) {
  FrobeniusElement r;
  for (size_t k = 0; k < 3; ++k) r.coeff[k] = a.coeff[k] + b.coeff[k];
  return r;
}

FrobeniusElement frob_scale(const Rational& c, const FrobeniusElement& a) {
  FrobeniusElement r;
  for (size_t k = 0; k < 3; ++k) r.coeff[k] = c * a.coeff[k];
  return r;
}

FrobeniusElement frob_mul(const FrobeniusElement& a, const FrobeniusElement& b) {
  FrobeniusElement r;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; i + j < 3; ++j) r.coeff[i + j] += a.coeff[i] * b.coeff[j];
  return r;
}

Rational frob_trace(const FrobeniusElement& a) { return -a.coeff[2]; }

std::vector<std::pair<FrobeniusElement, FrobeniusElement>> frob_comul(
    const FrobeniusElement& a) {
  std::vector<std::pair<FrobeniusElement, FrobeniusElement>> legs;
  for (int k = 0; k < 3; ++k) {
    FrobeniusElement left =
        frob_scale(-1, frob_mul(a, FrobeniusElement::x_power(k)));
    if (!left.is_zero()) legs.emplace_back(left, FrobeniusElement::x_power(2 - k));
  }
  return legs;
}

// The single sign table of the theory.  A singular circle whose three disks
// carry (i, j, k) dots in the circle's cyclic order contributes +1 when
// (i, j, k) is a cyclic rotation of (0, 1, 2), -1 when it is a rotation of
// (2, 1, 0), and 0 otherwise (the three dot counts must be distinct and
// X^3 = 0 kills anything above two dots).  Flipping the orientation
// convention for singular circles means negating this table, and nothing
// else; the degree obstruction, confluence, and the deformation block
// counts downstream all pin the relative signs.
int theta_sign(int i, int j, int k) {
  if (i == 0 && j == 1 && k == 2) return 1;
  if (i == 1 && j == 2 && k == 0) return 1;
  if (i == 2 && j == 0 && k == 1) return 1;
  if (i == 2 && j == 1 && k == 0) return -1;
  if (i == 1 && j == 0 && k == 2) return -1;
  if (i == 0 && j == 2 && k == 1) return -1;
  return 0;
}

Rational frob_theta(const FrobeniusElement& a1, const FrobeniusElement& a2,
                    const FrobeniusElement& a3) {
  Rational total = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        int sign = theta_sign(i, j, k);
        if (sign == 0) continue;
        Rational term = a1.coeff[static_cast<size_t>(i)] *
                        a2.coeff[static_cast<size_t>(j)] *
                        a3.coeff[static_cast<size_t>(k)];
        total += sign > 0 ? term : -term;
      }
  return total;
}

void PreFoam::validate() const {
  // (facet index, slot id) -> number of circle seats using it
  std::map<std::pair<int, int>, int> uses;
  for (size_t fi = 0; fi < facets.size(); ++fi) {
    const Facet& f = facets[fi];
    if (f.genus < 0) throw ParseError("facet with negative genus");
    if (f.dots < 0) throw ParseError("facet with negative dot count");
    for (int s : f.slots) {
      auto [it, fresh] = uses.emplace(std::pair{static_cast<int>(fi), s}, 0);
      (void)it;
      if (!fresh) throw ParseError("facet lists a slot id twice");
    }
  }
  for (const auto& circle : circles) {
    for (const SeatRef& seat : circle) {
      if (seat.facet < 0 || seat.facet >= static_cast<int>(facets.size()))
        throw ParseError("circle references a facet that does not exist");
      auto it = uses.find({seat.facet, seat.slot});
      if (it == uses.end())
        throw ParseError("circle references a slot the facet does not have");
      ++it->second;
    }
  }
  for (const auto& [key, n] : uses) {
    if (n == 0) throw ParseError("pre-foam is not closed: unattached slot");
    if (n > 1) throw ParseError("slot sits on more than one circle seat");
  }
}

int foam_degree(const PreFoam& f) {
  int chi = 0, dots = 0;
  for (const Facet& facet : f.facets) {
    chi += 2 - 2 * facet.genus - static_cast<int>(facet.slots.size());
    dots += facet.dots;
  }
  return -2 * chi + 2 * dots;
}

namespace {

struct Piece {
  FrobeniusElement content;
  std::vector<std::pair<int, int>> seats;  // (circle index, position)
};

struct EvalState {
  std::vector<Piece> pieces;
  std::vector<std::array<int, 3>> circle_piece;  // piece index per seat
};

Rational eval_state(const EvalState& st, std::mt19937_64* rng) {
  std::vector<int> cuttable;
  for (size_t i = 0; i < st.pieces.size(); ++i)
    if (st.pieces[i].seats.size() >= 2) cuttable.push_back(static_cast<int>(i));

  if (cuttable.empty()) {
    Rational value = 1;
    for (const Piece& p : st.pieces)
      if (p.seats.empty()) value *= frob_trace(p.content);
    for (const auto& circle : st.circle_piece)
      value *= frob_theta(st.pieces[static_cast<size_t>(circle[0])].content,
                          st.pieces[static_cast<size_t>(circle[1])].content,
                          st.pieces[static_cast<size_t>(circle[2])].content);
    return value;
  }

  size_t pick = 0, split = 0;
  if (rng) {
    pick = (*rng)() % cuttable.size();
    split = (*rng)() %
            st.pieces[static_cast<size_t>(cuttable[pick])].seats.size();
  }
  auto target = static_cast<size_t>(cuttable[pick]);

  // Neck-cut: the chosen seat moves onto a fresh disk, the two sides pick
  // up the legs of the coproduct of the old content.
  Rational total = 0;
  for (const auto& [left, right] : frob_comul(st.pieces[target].content)) {
    EvalState next = st;
    Piece& rest = next.pieces[target];
    auto seat = rest.seats[split];
    rest.seats.erase(rest.seats.begin() + static_cast<ptrdiff_t>(split));
    rest.content = right;
    int fresh = static_cast<int>(next.pieces.size());
    next.pieces.push_back(Piece{left, {seat}});
    next.circle_piece[static_cast<size_t>(seat.first)]
                     [static_cast<size_t>(seat.second)] = fresh;
    total += eval_state(next, rng);
  }
  return total;
}

Rational evaluate_impl(const PreFoam& f, std::mt19937_64* rng) {
  f.validate();
  EvalState st;
  st.pieces.reserve(f.facets.size());
  for (const Facet& facet : f.facets) {
    FrobeniusElement content = FrobeniusElement::x_power(facet.dots);
    FrobeniusElement handle = frob_scale(-3, FrobeniusElement::x_power(2));
    for (int g = 0; g < facet.genus; ++g) content = frob_mul(content, handle);
    st.pieces.push_back(Piece{content, {}});
  }
  st.circle_piece.resize(f.circles.size());
  for (size_t ci = 0; ci < f.circles.size(); ++ci)
    for (size_t pos = 0; pos < 3; ++pos) {
      int fi = f.circles[ci][pos].facet;
      st.circle_piece[ci][pos] = fi;
      st.pieces[static_cast<size_t>(fi)].seats.emplace_back(
          static_cast<int>(ci), static_cast<int>(pos));
    }
  return eval_state(st, rng);
}

int parse_int_token(const std::string& tok, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(std::string("bad ") + what + " '" + tok + "' in foam file");
  return value;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// strip "key=" from a token of the form key=value
std::string expect_key(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0)
    throw ParseError("expected '" + key + "=...' in foam file, got '" + tok + "'");
  return tok.substr(key.size() + 1);
}

}  // namespace

Rational evaluate(const PreFoam& f) { return evaluate_impl(f, nullptr); }

Rational evaluate_randomized(const PreFoam& f, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return evaluate_impl(f, &rng);
}

PreFoam parse_foam(const std::string& text) {
  std::map<int, Facet> facets_by_id;
  std::vector<std::array<SeatRef, 3>> circles;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;

    if (kind == "facet") {
      std::string id_tok, genus_tok, dots_tok, slots_tok;
      if (!(ls >> id_tok >> genus_tok >> dots_tok >> slots_tok))
        throw ParseError("malformed facet line: " + line);
      Facet f;
      int id = parse_int_token(id_tok, "facet id");
      f.genus = parse_int_token(expect_key(genus_tok, "genus"), "genus");
      f.dots = parse_int_token(expect_key(dots_tok, "dots"), "dot count");
      std::string slots = expect_key(slots_tok, "slots");
      if (!slots.empty())
        for (const std::string& s : split_on(slots, ','))
          f.slots.push_back(parse_int_token(s, "slot id"));
      if (!facets_by_id.emplace(id, std::move(f)).second)
        throw ParseError("duplicate facet id in foam file");
    } else if (kind == "circle") {
      std::string seats_tok;
      if (!(ls >> seats_tok)) throw ParseError("malformed circle line: " + line);
      auto seats = split_on(seats_tok, ',');
      if (seats.size() != 3)
        throw ParseError("circle must list exactly three seats: " + line);
      std::array<SeatRef, 3> circle;
      for (size_t i = 0; i < 3; ++i) {
        auto dot = seats[i].find('.');
        if (dot == std::string::npos)
          throw ParseError("seat must look like <facet>.<slot>: " + seats[i]);
        circle[i].facet = parse_int_token(seats[i].substr(0, dot), "facet id");
        circle[i].slot = parse_int_token(seats[i].substr(dot + 1), "slot id");
      }
      circles.push_back(circle);
    } else {
      throw ParseError("unknown foam declaration '" + kind + "'");
    }
    std::string extra;
    if (ls >> extra)
      throw ParseError("trailing junk '" + extra + "' on foam line: " + line);
  }

  PreFoam foam;
  foam.facets.reserve(facets_by_id.size());
  int expect = 0;
  for (auto& [id, facet] : facets_by_id) {
    if (id != expect++)
      throw ParseError("facet ids must cover 0..n-1 with no gaps");
    foam.facets.push_back(std::move(facet));
  }
  foam.circles = std::move(circles);
  foam.validate();
  return foam;
}

std::string render_foam(const PreFoam& f) {
  std::ostringstream out;
  for (size_t fi = 0; fi < f.facets.size(); ++fi) {
    const Facet& facet = f.facets[fi];
    out << "facet " << fi << " genus=" << facet.genus << " dots=" << facet.dots
        << " slots=";
    for (size_t i = 0; i < facet.slots.size(); ++i)
      out << (i ? "," : "") << facet.slots[i];
    out << '\n';
  }
  for (const auto& circle : f.circles) {
    out << "circle ";
    for (size_t i = 0; i < 3; ++i)
      out << (i ? "," : "") << circle[i].facet << '.' << circle[i].slot;
    out << '\n';
  }
  return out.str();
}

}  // namespace sl3web
