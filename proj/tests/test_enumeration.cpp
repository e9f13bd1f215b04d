#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl3web/enumeration.hpp"

#include "sl3web/errors.hpp"
#include "sl3web/skein.hpp"

#include "fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace sl3web;
namespace fs = std::filesystem;

namespace {

fs::path& cache_sandbox() {
  static fs::path p;
  return p;
}

std::vector<SignSequence> admissible_strings(int max_len) {
  std::vector<SignSequence> out;
  for (int l = 0; l <= max_len; ++l)
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      SignSequence s;
      for (int i = 0; i < l; ++i)
        s.push_back((mask >> i) & 1 ? Sign::plus : Sign::minus);
      if (is_admissible(s)) out.push_back(s);
    }
  return out;
}

std::set<std::string> key_set(const std::vector<Web>& webs) {
  std::set<std::string> keys;
  for (const Web& w : webs) keys.insert(canonical_encoding(w));
  return keys;
}

}  // namespace

TEST_CASE("cache sandbox setup") {
  std::mt19937_64 rng(std::random_device{}());
  fs::path dir = fs::temp_directory_path() / ("sl3web_test_" + std::to_string(rng()));
  fs::create_directories(dir);
  setenv("SL3WEB_CACHE_DIR", dir.c_str(), 1);
  cache_sandbox() = dir;
  detail::clear_enumeration_memory_cache();
  CHECK(fs::exists(dir));
}

TEST_CASE("count_invariants matches the path oracle") {
  CHECK(count_invariants({}) == 1);
  CHECK(count_invariants(parse_signs("+-")) == 1);
  CHECK(count_invariants(parse_signs("-+")) == 1);
  CHECK(count_invariants(parse_signs("+++")) == 1);
  CHECK(count_invariants(parse_signs("---")) == 1);
  CHECK(count_invariants(parse_signs("++--")) == 2);
  CHECK(count_invariants(parse_signs("+-+-")) == 2);
  CHECK(count_invariants(parse_signs("+-+-+-")) == 6);
  // Invariants of V^(x)6 and V^(x)9 count standard tableaux of rectangular
  // shape: 5 and 42 by the hook length formula.
  CHECK(count_invariants(SignSequence(6, Sign::plus)) == 5);
  CHECK(count_invariants(SignSequence(9, Sign::plus)) == 42);

  CHECK(count_invariants(parse_signs("+")) == 0);
  CHECK(count_invariants(parse_signs("++")) == 0);
  CHECK(count_invariants(parse_signs("++-")) == 0);

  // Reversing the string and flipping every sign dualizes the invariant
  // space, so the count is unchanged.
  for (const SignSequence& s : admissible_strings(6)) {
    SignSequence dual(s.rbegin(), s.rend());
    for (Sign& x : dual) x = opposite(x);
    CHECK(count_invariants(s) == count_invariants(dual));
  }
}

TEST_CASE("enumerate_NE small bases") {
  WebBasis cap = enumerate_NE(parse_signs("+-"));
  REQUIRE(cap.webs.size() == 1);
  CHECK(isomorphic(cap.webs[0], fixtures::make_cap()));

  WebBasis tripod = enumerate_NE(parse_signs("+++"));
  REQUIRE(tripod.webs.size() == 1);
  CHECK(isomorphic(tripod.webs[0], fixtures::make_tripod()));

  WebBasis four = enumerate_NE(parse_signs("++--"));
  REQUIRE(four.webs.size() == 2);
  std::set<std::string> expected{canonical_encoding(fixtures::make_nested_caps()),
                                 canonical_encoding(fixtures::make_double_lambda())};
  CHECK(key_set(four.webs) == expected);

  WebBasis six = enumerate_NE(parse_signs("+-+-+-"));
  REQUIRE(six.webs.size() == 6);
  std::vector<int> vertex_counts;
  for (const Web& w : six.webs) vertex_counts.push_back(w.vertex_count());
  std::sort(vertex_counts.begin(), vertex_counts.end());
  CHECK(vertex_counts == std::vector<int>{0, 0, 0, 0, 0, 6});

  CHECK_THROWS_AS(enumerate_NE(parse_signs("++")), ParseError);
}

TEST_CASE("enumerate_NE invariants over all small admissible boundaries") {
  for (const SignSequence& sigma : admissible_strings(6)) {
    CAPTURE(render_signs(sigma));
    WebBasis basis = enumerate_NE(sigma);
    CHECK(Int(static_cast<long>(basis.webs.size())) == count_invariants(sigma));
    REQUIRE(basis.scripts.size() == basis.webs.size());
    std::set<std::string> keys;
    for (size_t i = 0; i < basis.webs.size(); ++i) {
      const Web& w = basis.webs[i];
      w.validate();
      CHECK(w.boundary == sigma);
      CHECK(is_non_elliptic(w));
      CHECK(keys.insert(canonical_encoding(w)).second);
      CHECK(isomorphic(script_to_web(basis.scripts[i]), w));
      if (!sigma.empty()) CHECK(find_local_pattern(w).has_value());
    }
  }
}

TEST_CASE("growth agrees with exhaustive search on small boundaries") {
  std::vector<SignSequence> corpus = admissible_strings(5);
  corpus.push_back(parse_signs("+-+-+-"));
  for (const SignSequence& sigma : corpus) {
    CAPTURE(render_signs(sigma));
    WebBasis basis = enumerate_NE(sigma);
    int max_v = 0;
    for (const Web& w : basis.webs) max_v = std::max(max_v, w.vertex_count());
    std::vector<Web> brute = enumerate_webs_exhaustive(sigma, max_v + 2);
    CHECK(key_set(brute) == key_set(basis.webs));
  }
}

TEST_CASE("random closures") {
  for (uint64_t seed : {0u, 1u, 7u})
    CHECK(isomorphic(random_closed_web(parse_signs("+-"), seed), Web::single_loop()));
  for (uint64_t seed : {0u, 3u})
    CHECK(isomorphic(random_closed_web(parse_signs("+++"), seed), fixtures::make_theta()));

  std::set<std::string> seen;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Web w = random_closed_web(parse_signs("+-+-+-"), seed);
    w.validate();
    CHECK(w.is_closed());
    seen.insert(canonical_encoding(w));
    CHECK(canonical_encoding(random_closed_web(parse_signs("+-+-+-"), seed)) ==
          canonical_encoding(w));
  }
  CHECK(seen.size() >= 2);

  for (const char* text : {"+-", "+++", "++--", "+-+-+-"})
    for (uint64_t seed : {1u, 2u, 3u}) {
      SignSequence sigma = parse_signs(text);
      Web w = random_closed_web(sigma, seed);
      SliceScript s = random_closed_script(sigma, seed);
      CHECK(isomorphic(script_to_web(s), w));
      CHECK(evaluate_closed(s) == bracket(w));
    }
}

TEST_CASE("disk cache round trip and corruption handling") {
  SignSequence sigma = parse_signs("++--");
  fs::path file = cache_sandbox() / "ne_ppmm.json";

  detail::clear_enumeration_memory_cache();
  WebBasis fresh = enumerate_NE(sigma);
  REQUIRE(fs::exists(file));

  detail::clear_enumeration_memory_cache();
  WebBasis reloaded = enumerate_NE(sigma);
  REQUIRE(reloaded.webs.size() == fresh.webs.size());
  for (size_t i = 0; i < fresh.webs.size(); ++i) {
    CHECK(reloaded.webs[i] == fresh.webs[i]);
    CHECK(reloaded.scripts[i] == fresh.scripts[i]);
  }

  {
    std::ofstream out(file);
    out << "not json";
  }
  detail::clear_enumeration_memory_cache();
  CHECK_THROWS_AS(enumerate_NE(sigma), CheckError);

  // Well-formed but mislabeled entries are rejected too.
  {
    std::ofstream out(file);
    out << R"({"epsilon": "+-", "scripts": [], "webs": []})";
  }
  detail::clear_enumeration_memory_cache();
  CHECK_THROWS_AS(enumerate_NE(sigma), CheckError);

  fs::remove(file);
  detail::clear_enumeration_memory_cache();
  WebBasis regrown = enumerate_NE(sigma);
  CHECK(regrown.webs.size() == fresh.webs.size());
  CHECK(fs::exists(file));
}

TEST_CASE("cache sandbox teardown") {
  std::error_code ec;
  fs::remove_all(cache_sandbox(), ec);
  unsetenv("SL3WEB_CACHE_DIR");
  detail::clear_enumeration_memory_cache();
  CHECK(!ec);
}
