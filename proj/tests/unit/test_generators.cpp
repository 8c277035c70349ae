// Deterministic generators: shape guarantees, language membership of
// sampled words, oracle pairs and the hard baseline family.

#include <doctest.h>

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rxmeet/gen.hpp"
#include "rxmeet/intersect.hpp"
#include "rxmeet/nfa.hpp"
#include "rxmeet/parse.hpp"
#include "rxmeet/scaling.hpp"

using namespace rxmeet;

namespace {

const std::map<std::string, std::string>& expected_type_names() {
  static const std::map<std::string, std::string> m = {
      {"letter", "letter"},    {"string", "∘"},      {"set", "|"},
      {"plus_letter", "+"},    {"star_letter", "*"}, {"concat_alt", "∘|"},
      {"concat_plus", "∘+"},   {"concat_star", "∘*"}, {"alt_concat", "|∘"},
      {"plus_concat", "+∘"},   {"star_concat", "*∘"}, {"alt_plus", "|+"},
      {"alt_star", "|*"},      {"plus_alt", "+|"},    {"star_alt", "*|"},
      {"plus_star", "+*"},     {"star_plus", "*+"}};
  return m;
}

}  // namespace

TEST_CASE("seventeen generator type names") {
  const auto& names = gen_type_names();
  CHECK(names.size() == 17);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == 17);
  for (const std::string& name : names)
    CHECK(expected_type_names().count(name) == 1);
}

TEST_CASE("generated regexps classify as requested") {
  for (const std::string& name : gen_type_names()) {
    const std::string& want = expected_type_names().at(name);
    for (std::size_t size : {std::size_t{1}, std::size_t{3}, std::size_t{8},
                             std::size_t{20}, std::size_t{40}}) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const int alphabet = 2 + static_cast<int>(seed % 3);
        NodePtr t = gen_random_regex(name, size, alphabet, seed);
        CAPTURE(name);
        CAPTURE(size);
        CAPTURE(seed);
        CHECK(type_name(classify(t)) == want);
        // Rendered text must parse back to the same tree.
        CHECK(ast_equal(parse(render(t)), t));
      }
    }
  }
}

TEST_CASE("generated regexps are deterministic and sized") {
  for (const std::string& name : gen_type_names()) {
    NodePtr once = gen_random_regex(name, 25, 3, 42);
    NodePtr twice = gen_random_regex(name, 25, 3, 42);
    CHECK(render(once) == render(twice));
  }
  // Unbounded shapes land near the requested leaf count.
  for (const char* name :
       {"string", "concat_alt", "concat_plus", "concat_star", "alt_concat",
        "plus_concat", "star_concat"}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      std::size_t leaves = ast_size(gen_random_regex(name, 40, 3, seed));
      CAPTURE(name);
      CHECK(leaves >= 30);
      CHECK(leaves <= 50);
    }
  }
  // Wide alphabets spill into uppercase and #id letters and still render.
  NodePtr wide = gen_random_regex("string", 40, 60, 7);
  CHECK(ast_equal(parse(render(wide)), wide));

  CHECK_THROWS_AS(gen_random_regex("no_such_shape", 5, 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_random_regex("string", 0, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_regex("string", 5, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_regex("set", 5, 1, 1), std::invalid_argument);
}

TEST_CASE("sampled words belong to the language") {
  for (const std::string& name : gen_type_names()) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      NodePtr t = gen_random_regex(name, 12, 3, seed);
      Nfa nfa = glushkov(t);
      for (std::uint64_t draw = 0; draw < 4; ++draw) {
        Word w = sample_word(t, seed * 10 + draw);
        CAPTURE(name);
        CAPTURE(word_display(w));
        CHECK(nfa_member(w, nfa));
        CHECK(w == sample_word(t, seed * 10 + draw));  // deterministic
      }
    }
  }
}

TEST_CASE("arbitrary trees round trip") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    NodePtr t = gen_arbitrary_ast(1 + seed % 25, 3, seed);
    CHECK(ast_equal(parse(render(t)), t));
  }
  CHECK_THROWS_AS(gen_arbitrary_ast(0, 3, 1), std::invalid_argument);
}

TEST_CASE("ov instance generator") {
  OvInstance inst = gen_ov_instance(4, 6, 5, 11, false);
  CHECK(inst.dim == 5);
  CHECK(inst.a_rows.size() == 4);
  CHECK(inst.b_rows.size() == 6);
  for (const auto& rows : {inst.a_rows, inst.b_rows})
    for (const auto& row : rows) {
      CHECK(row.size() == 5);
      for (auto b : row) CHECK(b <= 1);
    }

  OvInstance again = gen_ov_instance(4, 6, 5, 11, false);
  CHECK(again.a_rows == inst.a_rows);
  CHECK(again.b_rows == inst.b_rows);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    OvInstance planted = gen_ov_instance(3, 4, 6, seed, true);
    CAPTURE(seed);
    CHECK(ov_bruteforce(planted).has_value());
  }
  CHECK_THROWS_AS(gen_ov_instance(0, 1, 1, 1, false), std::invalid_argument);
}

TEST_CASE("oracle pairs cycle through all type combinations") {
  std::set<std::pair<std::string, std::string>> seen;
  for (std::uint64_t index = 0; index < 17 * 17; ++index) {
    OraclePair p = gen_oracle_pair(index, 5);
    OraclePair q = gen_oracle_pair(index, 5);
    REQUIRE(render(p.a) == render(q.a));  // deterministic in (index, seed)
    REQUIRE(render(p.b) == render(q.b));
    seen.insert({p.a_type, p.b_type});
  }
  CHECK(seen.size() == 17 * 17);
}

TEST_CASE("oracle pairs agree with the product baseline") {
  int nonempty = 0;
  for (std::uint64_t index = 0; index < 200; ++index) {
    OraclePair p = gen_oracle_pair(index, 77);
    Answer fast = dispatch(p.a, p.b);
    Answer base = dispatch(p.a, p.b, /*force_baseline=*/true);
    CAPTURE(index);
    CAPTURE(render(p.a));
    CAPTURE(render(p.b));
    CHECK(fast.verdict == base.verdict);
    if (fast.nonempty()) {
      ++nonempty;
      REQUIRE(fast.witness.has_value());
      CHECK(nfa_member(*fast.witness, p.a));
      CHECK(nfa_member(*fast.witness, p.b));
    }
  }
  // Planting on even indices keeps the suite from collapsing to all-empty.
  CHECK(nonempty > 40);
}

TEST_CASE("hard family pins the quadratic baseline") {
  auto [a100, b100] = gen_hard_family(100, 1);
  CHECK(type_name(classify(a100)) == "∘+");
  CHECK(type_name(classify(b100)) == "∘|");
  CHECK(plan_route(coercible_types(a100), coercible_types(b100)).kind ==
        RouteKind::Baseline);

  Answer ans = dispatch(a100, b100);
  CHECK(ans.algo == "baseline");
  CHECK_FALSE(ans.nonempty());

  // Deterministic regardless of seed, and growing with the size request.
  auto [a2, b2] = gen_hard_family(100, 999);
  CHECK(render(a2) == render(a100));
  CHECK(render(b2) == render(b100));
  auto [a4, b4] = gen_hard_family(400, 1);
  CHECK(ast_size(a4) > ast_size(a100));
  CHECK(ast_size(b4) > ast_size(b100));
}

TEST_CASE("scaling harness structure") {
  CHECK(scaling_route_ids().size() == 15);
  CHECK(is_baseline_route("baseline_hard"));
  for (const std::string& id : scaling_route_ids())
    if (id != "baseline_hard") CHECK_FALSE(is_baseline_route(id));
  CHECK(default_linear_sizes().size() == 5);
  CHECK(default_baseline_sizes().size() == 5);
  CHECK_THROWS_AS(run_scaling("no_such_route", {100}, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_scaling("baseline_hard", {}, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_scaling("baseline_hard", {100}, 0, 1),
                  std::invalid_argument);

  std::ostringstream csv;
  write_csv_header(csv);
  ScalingReport rep = run_scaling("baseline_hard", {100, 200}, 2, 1, &csv);
  CHECK(rep.route == "baseline_hard");
  CHECK(rep.records.size() == 4);  // one row per timed trial
  for (const BenchRecord& r : rep.records) {
    CHECK(r.verdict == Verdict::Empty);
    CHECK(r.seconds >= 0.0);
  }
  std::istringstream in(csv.str());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 5);  // header + four rows
}
