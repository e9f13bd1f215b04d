#include "CLI11.hpp"

#include "sl3web/coloring.hpp"
#include "sl3web/enumeration.hpp"
#include "sl3web/errors.hpp"
#include "sl3web/foam.hpp"
#include "sl3web/gornik.hpp"
#include "sl3web/homdim.hpp"
#include "sl3web/report.hpp"
#include "sl3web/reptheory.hpp"
#include "sl3web/skein.hpp"
#include "sl3web/web.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace sl3web;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

RunReport run_bracket(const std::string& file, bool trace, const uint64_t* seed) {
  RunReport rep;
  rep.command = "bracket";
  rep.inputs["file"] = file;
  Web w = parse_web(slurp(file));
  LaurentPoly value = seed ? bracket_randomized(w, *seed) : bracket(w);
  rep.results["bracket"] = value.to_string();
  rep.results["value_at_one"] = eval_at_one(value).str();
  if (trace) {
    ReductionTrace tr = bracket_traced(w);
    Json steps = Json::array();
    for (const TraceStep& st : tr.steps)
      steps.push_back({{"rule", rule_name(st.rule)},
                       {"face", st.face},
                       {"vertices", st.vertices}});
    rep.results["trace"] = steps;
    rep.checks.push_back({"traced reduction agrees", tr.factor == value,
                          tr.factor.to_string()});
  }
  return rep;
}

RunReport run_colorings(const std::string& file, bool count_only) {
  RunReport rep;
  rep.command = "colorings";
  rep.inputs["file"] = file;
  Web w = parse_web(slurp(file));
  rep.inputs["boundary"] = render_signs(w.boundary);
  Int n = count_colorings(w);
  rep.results["count"] = n.str();
  if (!count_only) {
    Json arr = Json::array();
    for (const Coloring& c : enumerate_colorings(w))
      arr.push_back({{"edges", c.edge_colors}, {"loops", c.loop_colors}});
    rep.results["colorings"] = arr;
    rep.checks.push_back({"enumeration matches count", Int(arr.size()) == n,
                          std::to_string(arr.size()) + " enumerated"});
  }
  if (w.boundary.empty()) {
    Int at_one = eval_at_one(bracket(w));
    rep.checks.push_back({"count equals bracket at q=1", n == at_one,
                          n.str() + " vs " + at_one.str()});
  }
  return rep;
}

RunReport run_enumerate(const std::string& signs, bool count_only) {
  RunReport rep;
  rep.command = "enumerate";
  SignSequence eps = parse_signs(signs);
  rep.inputs["signs"] = render_signs(eps);
  Int path_count = count_invariants(eps);
  rep.results["path_count"] = path_count.str();
  if (count_only) return rep;

  WebBasis basis = enumerate_NE(eps);
  rep.results["count"] = basis.webs.size();
  Json webs = Json::array();
  for (const Web& w : basis.webs) webs.push_back(Json::parse(render_web(w)));
  rep.results["webs"] = webs;
  Json scripts = Json::array();
  for (const SliceScript& s : basis.scripts) scripts.push_back(render_script(s));
  rep.results["scripts"] = scripts;
  rep.checks.push_back({"basis size matches path oracle",
                        Int(basis.webs.size()) == path_count,
                        std::to_string(basis.webs.size()) + " webs, oracle " +
                            path_count.str()});
  return rep;
}

RunReport run_homdim(const std::string& file1, const std::string& file2) {
  RunReport rep;
  rep.command = "homdim";
  rep.inputs["file1"] = file1;
  rep.inputs["file2"] = file2;
  Web w1 = parse_web(slurp(file1));
  Web w2 = parse_web(slurp(file2));
  rep.inputs["boundary"] = render_signs(w1.boundary);
  LaurentPoly h = graded_homdim(w1, w2);
  rep.results["graded_homdim"] = h.to_string();
  rep.results["value_at_one"] = eval_at_one(h).str();
  return rep;
}

RunReport run_foam_eval(const std::string& file, const uint64_t* seed) {
  RunReport rep;
  rep.command = "foam-eval";
  rep.inputs["file"] = file;
  PreFoam f = parse_foam(slurp(file));
  int degree = foam_degree(f);
  Rational value = seed ? evaluate_randomized(f, *seed) : evaluate(f);
  rep.results["value"] = value.str();
  rep.results["degree"] = degree;
  rep.checks.push_back({"degree obstruction", degree == 0 || value == 0,
                        "degree " + std::to_string(degree) + ", value " +
                            value.str()});
  return rep;
}

RunReport run_gornik_blocks(const std::string& signs) {
  RunReport rep;
  rep.command = "gornik-blocks";
  SignSequence eps = parse_signs(signs);
  rep.inputs["signs"] = render_signs(eps);
  BlockDecomposition dec = block_counts(eps);

  Json blocks = Json::array();
  int zero_blocks = 0;
  for (const auto& [coloring, n] : dec.counts) {
    if (n == 0) {
      ++zero_blocks;
      continue;
    }
    blocks.push_back({{"coloring", join_ints(coloring)}, {"n", n.str()}});
  }
  rep.results["blocks"] = blocks;
  rep.results["zero_blocks"] = zero_blocks;
  rep.results["total"] = dec.total().str();
  rep.results["sum_of_squares"] = dec.sum_of_squares().str();

  WebBasis basis = enumerate_NE(eps);
  Int closures = 0;
  for (const Web& w1 : basis.webs)
    for (const Web& w2 : basis.webs)
      closures += count_colorings(trace_close(w1, w2));
  rep.checks.push_back({"matrix block identity",
                        dec.sum_of_squares() == closures,
                        "sum n(c)^2 = " + dec.sum_of_squares().str() +
                            ", closure colorings = " + closures.str()});
  return rep;
}

RunReport run_oracle(const std::string& file) {
  RunReport rep;
  rep.command = "oracle";
  rep.inputs["file"] = file;
  SliceScript script = parse_script(slurp(file));
  rep.inputs["levels"] = script.levels.size();
  SignSequence cod = script_codomain(script);
  rep.results["codomain"] = render_signs(cod);
  Web w = script_to_web(script);
  rep.results["web"] = Json::parse(render_web(w));
  if (cod.empty()) {
    LaurentPoly value = evaluate_closed(script);
    rep.results["value"] = value.to_string();
    LaurentPoly reduced = bracket(w);
    rep.checks.push_back({"tensor oracle agrees with bracket",
                          value == reduced, value.to_string() + " vs " +
                              reduced.to_string()});
  } else {
    QTensor t = evaluate_script(script);
    Json entries = Json::object();
    for (const auto& [index, coeff] : t.entries)
      entries[join_ints(index)] = coeff.to_string();
    rep.results["entries"] = entries;
    rep.checks.push_back({"built web matches codomain", w.boundary == cod,
                          render_signs(w.boundary)});
  }
  return rep;
}

RunReport run_check(const std::string& signs) {
  RunReport rep;
  rep.command = "check";
  SignSequence eps = parse_signs(signs);
  rep.inputs["signs"] = render_signs(eps);

  WebBasis basis = enumerate_NE(eps);
  Int path_count = count_invariants(eps);
  rep.results["count"] = basis.webs.size();
  rep.checks.push_back({"basis size matches path oracle",
                        Int(basis.webs.size()) == path_count,
                        std::to_string(basis.webs.size()) + " webs, oracle " +
                            path_count.str()});

  bool gram_ok = false;
  std::string gram_detail;
  try {
    Int det = gram_determinant(eps);
    gram_ok = det != 0;
    gram_detail = "det = " + det.str();
    rep.results["gram_determinant"] = det.str();
  } catch (const CheckError& e) {
    gram_detail = e.what();
  }
  rep.checks.push_back({"gram determinant nonzero", gram_ok, gram_detail});

  BlockDecomposition dec = block_counts(eps);
  rep.results["sum_of_squares"] = dec.sum_of_squares().str();
  rep.checks.push_back({"matrix block identity", verify_block_identity(eps),
                        "sum n(c)^2 = " + dec.sum_of_squares().str()});

  bool witness_ok = false;
  std::string witness_detail;
  try {
    UniqueColoringWitness wit = unique_coloring_witness(basis.webs);
    witness_ok = true;
    witness_detail = "boundary coloring (" + join_ints(wit.boundary) +
                     ") picks web " + std::to_string(wit.web_index);
  } catch (const CheckError& e) {
    witness_detail = e.what();
  }
  rep.checks.push_back({"unique coloring witness", witness_ok, witness_detail});
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial invariants of sl3 webs"};
  app.require_subcommand(1);

  std::string format = "human";
  bool trace = false;
  bool count_only = false;
  uint64_t seed_value = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--trace", trace, "log every reduction step (bracket)");
  app.add_flag("--count", count_only, "report counts without materializing");
  auto* seed_opt =
      app.add_option("--seed", seed_value, "randomize reduction order");

  std::string bracket_file, colorings_file, enum_signs, homdim_file1,
      homdim_file2, foam_file, gornik_signs, oracle_file, check_signs;

  auto* cmd_bracket =
      app.add_subcommand("bracket", "Kuperberg bracket of a closed web");
  cmd_bracket->add_option("file", bracket_file, "web JSON file")->required();
  auto* cmd_colorings =
      app.add_subcommand("colorings", "edge colorings of a web");
  cmd_colorings->add_option("file", colorings_file, "web JSON file")->required();
  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "non-elliptic basis of a boundary");
  cmd_enumerate->add_option("signs", enum_signs, "boundary sign string")
      ->required();
  auto* cmd_homdim =
      app.add_subcommand("homdim", "graded hom dimension of two webs");
  cmd_homdim->add_option("file1", homdim_file1, "web JSON file")->required();
  cmd_homdim->add_option("file2", homdim_file2, "web JSON file")->required();
  auto* cmd_foam =
      app.add_subcommand("foam-eval", "evaluate a closed pre-foam");
  cmd_foam->add_option("file", foam_file, "foam description file")->required();
  auto* cmd_gornik =
      app.add_subcommand("gornik-blocks", "deformation block counts");
  cmd_gornik->add_option("signs", gornik_signs, "boundary sign string")
      ->required();
  auto* cmd_oracle =
      app.add_subcommand("oracle", "evaluate a slice script as a tensor");
  cmd_oracle->add_option("file", oracle_file, "slice script file")->required();
  auto* cmd_check =
      app.add_subcommand("check", "run the invariant suite for a boundary");
  cmd_check->add_option("signs", check_signs, "boundary sign string")
      ->required();

  for (CLI::App* sub : app.get_subcommands({}))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const uint64_t* seed = seed_opt->count() > 0 ? &seed_value : nullptr;
    auto start = std::chrono::steady_clock::now();
    RunReport rep;
    if (cmd_bracket->parsed())
      rep = run_bracket(bracket_file, trace, seed);
    else if (cmd_colorings->parsed())
      rep = run_colorings(colorings_file, count_only);
    else if (cmd_enumerate->parsed())
      rep = run_enumerate(enum_signs, count_only);
    else if (cmd_homdim->parsed())
      rep = run_homdim(homdim_file1, homdim_file2);
    else if (cmd_foam->parsed())
      rep = run_foam_eval(foam_file, seed);
    else if (cmd_gornik->parsed())
      rep = run_gornik_blocks(gornik_signs);
    else if (cmd_oracle->parsed())
      rep = run_oracle(oracle_file);
    else
      rep = run_check(check_signs);
    auto stop = std::chrono::steady_clock::now();
    rep.timing_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();

    if (format == "machine")
      std::cout << rep.to_json().dump(2) << '\n';
    else
      std::cout << rep.human();
    return rep.all_passed() ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const CheckError& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  }
}
