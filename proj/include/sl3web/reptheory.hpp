#pragma once

#include "sl3web/qpoly.hpp"
#include "sl3web/web.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sl3web {

// Generators of slice scripts.  A script reads top to bottom: each level is
// a parallel row of tokens, each token mapping the strands above it to the
// strands below it.  b* are births (cups), s* are evaluations (caps), t**
// are trivalent vertices named superscript-then-subscript: letters before
// the underscore are the strands produced below, letters after it the
// strands consumed above (tppp/tmmm produce three strands from nothing,
// t_ppp/t_mmm consume three).
enum class Gen {
  id_p, id_m,
  b_pm, b_mp,      // () -> (+,-) and () -> (-,+)
  s_pm, s_mp,      // (+,-) -> () and (-,+) -> ()
  t_up_ppp, t_up_mmm,  // () -> (+,+,+) and () -> (-,-,-)
  t_pp_m, t_mm_p,      // (-) -> (+,+) and (+) -> (-,-)
  t_p_mm, t_m_pp,      // (-,-) -> (+) and (+,+) -> (-)
  t_dn_ppp, t_dn_mmm,  // (+,+,+) -> () and (-,-,-) -> ()
};

const char* gen_token(Gen g);
std::optional<Gen> gen_from_token(std::string_view token);
Gen conjugate_gen(Gen g);
const SignSequence& gen_domain(Gen g);
const SignSequence& gen_codomain(Gen g);

struct Level {
  std::vector<Gen> tokens;
  bool operator==(const Level&) const = default;
};

struct SliceScript {
  std::vector<Level> levels;  // top to bottom
  bool operator==(const SliceScript&) const = default;
};

SignSequence level_domain(const Level& level);
SignSequence level_codomain(const Level& level);

// Boundaries of consecutive levels must compose; ParseError otherwise.
void validate_script(const SliceScript& s);
SignSequence script_domain(const SliceScript& s);
SignSequence script_codomain(const SliceScript& s);

// One level per line, tokens separated by spaces; blank lines and #-comments
// skipped.  Parsing validates composability.
SliceScript parse_script(const std::string& text);
std::string render_script(const SliceScript& s);

// The mirror script: level order reversed, each token replaced by its
// adjoint in place.  Domain and codomain swap.
SliceScript conjugate_script(const SliceScript& s);
SliceScript concat_scripts(const SliceScript& top, const SliceScript& bottom);

using MultiIndex = std::vector<int>;  // basis indices, values in {-1,0,1}

struct QTensor {
  SignSequence shape;
  std::map<MultiIndex, LaurentPoly> entries;  // omitted entries are zero
  bool operator==(const QTensor&) const = default;
};

struct TensorMap {
  SignSequence domain, codomain;
  std::map<std::pair<MultiIndex, MultiIndex>, LaurentPoly> entries;
  bool operator==(const TensorMap&) const = default;
};

// Coefficient tensor of one of the six primitive intertwiners, shape =
// domain followed by codomain.  Accepts bpm, bmp, spm, smp, tppp, tmmm;
// ParseError otherwise.
QTensor generator_tensor(const std::string& name);

// The vector a script with empty domain produces, as a tensor over its
// codomain; scalar (rank 0) for closed scripts.
QTensor evaluate_script(const SliceScript& s);
LaurentPoly evaluate_closed(const SliceScript& s);

// The full coefficient tensor of the composite map, basis by basis.
TensorMap evaluate_map(const SliceScript& s);
TensorMap identity_map(const SignSequence& signs);

// The web a script with empty domain traces out (validated).
Web script_to_web(const SliceScript& s);

}  // namespace sl3web
