#include <doctest.h>

#include "rxmeet/intersect.hpp"
#include "rxmeet/nfa.hpp"
#include "rxmeet/parse.hpp"

using namespace rxmeet;

namespace {

Answer run(const std::string& a, const std::string& b) {
  return dispatch(parse(a), parse(b));
}

// Witnesses must lie in both languages; checked against the automata.
void expect_nonempty(const std::string& a, const std::string& b,
                     const std::string& algo, const std::string& witness) {
  CAPTURE(a);
  CAPTURE(b);
  Answer ans = run(a, b);
  CHECK(ans.nonempty());
  CHECK(ans.algo == algo);
  REQUIRE(ans.witness.has_value());
  CHECK(word_display(*ans.witness) == witness);
  CHECK(nfa_member(*ans.witness, parse(a)));
  CHECK(nfa_member(*ans.witness, parse(b)));
}

void expect_empty(const std::string& a, const std::string& b,
                  const std::string& algo) {
  CAPTURE(a);
  CAPTURE(b);
  Answer ans = run(a, b);
  CHECK_FALSE(ans.nonempty());
  CHECK(ans.algo == algo);
  CHECK_FALSE(ans.witness.has_value());
  // Confirmed against the baseline.
  CHECK_FALSE(dispatch(parse(a), parse(b), true).nonempty());
}

}  // namespace

TEST_CASE("position sets against position sets") {
  expect_nonempty("[a|b][b|c]", "[b|x][b|x]", "possets_possets", "bb");
  expect_empty("[a|b][b|c]", "[x|y][b|c]", "possets_possets");
  // length mismatch (bare letter sets would route through runalt instead)
  expect_empty("[a|b][b|c]", "[a|b][b|c][c|d]", "possets_possets");
  expect_nonempty("ab", "ab", "possets_possets", "ab");    // strings coerce
  expect_empty("ab", "ba", "possets_possets");
}

TEST_CASE("run sequences against run sequences") {
  expect_nonempty("a+b", "ab+", "runseq_runseq", "ab");
  expect_nonempty("a+b+", "a3+b", "runseq_runseq", "aaab");
  expect_empty("aa+b", "ab+", "runseq_runseq");  // closed 1 below open min 2
  expect_empty("a+b", "a+c", "runseq_runseq");
  expect_empty("a+b", "a+ba+", "runseq_runseq");
}

TEST_CASE("position sets against dictionaries") {
  expect_nonempty("[a|b]c", "[bd|ac]", "possets_dict", "ac");
  expect_empty("[a|b]c", "[bd|ca]", "possets_dict");
  expect_empty("[a|b]c", "[acc|b]", "possets_dict");  // no length match
}

TEST_CASE("position sets against powers") {
  expect_nonempty("[x|a][b|x][a|y][b|z]", "(ab)+", "possets_power", "abab");
  expect_empty("[a|b][a|b][a|b]", "(ab)+", "possets_power");  // 3 not a multiple
  expect_empty("[a|b][c|d]", "(ab)+", "possets_power");
}

TEST_CASE("run sequences against dictionaries") {
  expect_nonempty("a+b+", "[ba|ab|aabb]", "runseq_dict", "ab");
  expect_empty("a+b+", "[ba|bb]", "runseq_dict");
  expect_nonempty("a2+b", "[ab|aab]", "runseq_dict", "aab");
}

TEST_CASE("run sequences against powers") {
  // abbabb has runs a b2 a b2, so the claim "empty" would be wrong here.
  expect_nonempty("a+b2a+b2", "(abb)+", "runseq_power", "abbabb");
  expect_empty("a+b2a+b2", "(aab)+", "runseq_power");
  // Wrapping base word: copies merge their boundary a-runs.
  expect_nonempty("a+b+a+b+a+", "(aba)+", "runseq_power", "abaaba");
  expect_empty("a+b+a+b+", "(aba)+", "runseq_power");
  // Single-run base word.
  expect_nonempty("a3+", "(aa)+", "runseq_power", "aaaa");
  expect_empty("a3b+", "(aa)+", "runseq_power");
}

TEST_CASE("dictionaries against dictionaries") {
  expect_nonempty("[abc|bd]", "[bd|xyz]", "dict_dict", "bd");
  expect_nonempty("[ba|ab]", "[ab|ba]", "dict_dict", "ab");  // lex tie-break
  expect_nonempty("[aaa|bc]", "[bc|aaa]", "dict_dict", "bc");  // shortest wins
  expect_empty("[ab|cd]", "[ba|dc]", "dict_dict");
}

TEST_CASE("powers against dictionaries") {
  expect_nonempty("(ab)+", "[ba|abab]", "power_dict", "abab");
  expect_empty("(ab)+", "[aba|b]", "power_dict");
}

TEST_CASE("powers against powers") {
  expect_nonempty("(ab)+", "(abab)+", "power_power", "abab");
  expect_nonempty("(aa)+", "(aaa)+", "power_power", "aaaaaa");  // lcm(2,3)
  expect_empty("(ab)+", "(ba)+", "power_power");
  expect_empty("(ab)+", "(aab)+", "power_power");
}

TEST_CASE("two starred powers meet in the empty word") {
  Answer ans = run("(ab)*", "(cd)*");
  CHECK(ans.nonempty());
  CHECK(ans.algo == "trivial_epsilon");
  REQUIRE(ans.witness.has_value());
  CHECK(ans.witness->empty());
}

TEST_CASE("starred power reduces to plus against solid forms") {
  expect_nonempty("(ab)*", "[abab|ba]", "star_reduce+power_dict", "abab");
  expect_nonempty("[x|a][b|x][a|y][b|z]", "(ab)*", "star_reduce+possets_power",
                  "abab");
  expect_nonempty("a+b2a+b2", "(abb)*", "star_reduce+runseq_power", "abbabb");
  expect_nonempty("(abab)+", "(ab)*", "star_reduce+power_power", "abab");
  expect_empty("(ab)*", "[aba|b]", "star_reduce+power_dict");
}

TEST_CASE("alphabet closures meet anything in linear time") {
  expect_nonempty("[a|b]+", "[ab|bb|cb]", "closure", "ab");
  expect_nonempty("[a|b]+", "[b|c][b|c]", "closure", "bb");
  expect_nonempty("[a|b]+", "b+ab", "closure", "bab");
  expect_nonempty("[a|b]+", "(ba)+", "closure", "ba");
  expect_empty("[a|b]+", "c+", "closure");
  expect_nonempty("[a|b]+", "c*a*", "closure", "a");
  expect_nonempty("[a|b]*", "c*", "closure", "<epsilon>");
  expect_nonempty("[a|b]+", "[c+|b]", "closure", "b");
  expect_empty("[a|b]+", "[c|d]*", "closure");  // epsilon is only on one side
  expect_nonempty("[a|b]*", "[c|d]*", "closure", "<epsilon>");
}

TEST_CASE("single-letter star sequences flatten before routing") {
  // c*c has the language c+, which is an alphabet closure over {c}; that
  // coercion outranks the run-sequence one in the routing order.
  expect_empty("c*c", "b+c", "closure");
  expect_nonempty("c*c", "cc+", "closure", "cc");
  expect_nonempty("a*a", "[b|a]", "closure", "a");
}

TEST_CASE("run alternations meet anything in linear time") {
  expect_nonempty("[a+|b]", "[b|a][a|b]", "runalt", "aa");
  expect_empty("[a+|b]", "[b|c][a|b]", "runalt");
  expect_nonempty("[a+|b]", "a3", "runalt", "aaa");
  expect_empty("[a+|b]", "bb+", "runalt");
  expect_nonempty("[a+|b]", "b", "runalt", "b");
  expect_nonempty("[a+|b]", "a+a", "runalt", "aa");
  // b+ is also an alphabet closure over {b}; that reading wins the routing.
  expect_nonempty("[a+|b]", "b+", "closure", "b");
  expect_nonempty("[a+|b]", "[bb|aa]", "runalt", "aa");
  expect_nonempty("[a+|b]", "(aa)+", "runalt", "aa");
  expect_nonempty("[a+|b]", "c*b*", "runalt", "b");
  expect_empty("[a+|b]", "c+d", "runalt");
  expect_nonempty("[a+|b]", "[c|b+]", "runalt", "b");
  expect_empty("[a+|b]", "[c|d]*", "closure");  // the closure side wins routing
  expect_nonempty("[a*|b]", "(cc)*", "runalt", "<epsilon>");
}

TEST_CASE("red cells and deep trees fall back to the baseline") {
  CHECK(run("ab*a*b", "aabb").algo == "baseline");
  CHECK_FALSE(run("ab*a*b", "aabb").nonempty());  // no member matches
  CHECK(run("ab*a*b", "abab").nonempty());
  CHECK(run("a*ab*", "[ab|b]").algo == "baseline");   // ∘* vs |∘ is a red cell
  CHECK(run("([a|c]d)+", "ad").algo == "baseline");   // depth 3
  CHECK(run("a+b[c|a]", "abc").algo == "baseline");   // non-homogeneous
  CHECK(run("(ab)*", "a*b*").algo == "baseline");     // *∘ vs ∘* stays quadratic
}

TEST_CASE("force baseline overrides the routing table") {
  Answer ans = dispatch(parse("ab"), parse("ab"), true);
  CHECK(ans.algo == "baseline");
  CHECK(ans.nonempty());
}

TEST_CASE("commutation equals sharing a common divisor") {
  Word ab = {'a', 'b'};
  Word abab = {'a', 'b', 'a', 'b'};
  Word ba = {'b', 'a'};
  CHECK(words_commute(ab, abab));
  CHECK_FALSE(words_commute(ab, ba));
  CHECK(words_commute({}, ba));
  CHECK(primitive_root(abab) == ab);
  CHECK(primitive_root(ab) == ab);
  CHECK(primitive_root(Word{'a', 'a', 'a'}) == Word{'a'});
}

TEST_CASE("plan_route is pinned per form pair") {
  auto route = [](const std::string& a, const std::string& b) {
    return plan_route(coercible_types(parse(a)), coercible_types(parse(b)));
  };
  CHECK(route("[a|b][b|c]", "[b|x][b|x]").case_id == "possets_possets");
  CHECK_FALSE(route("[a|b][b|c]", "[b|x][b|x]").swapped);
  CHECK(route("[ab|c]", "[a|b]c").case_id == "possets_dict");
  CHECK(route("[ab|c]", "[a|b]c").swapped);  // dict side arrived first
  CHECK(route("(ab)+", "a+b+").case_id == "runseq_power");
  CHECK(route("(ab)+", "a+b+").swapped);
  CHECK(route("ab*a*b", "aabb").kind == RouteKind::Baseline);
  CHECK(route("(ab)*", "(cd)*").kind == RouteKind::TriviallyNonEmpty);
  CHECK(route("[a|b]+", "a+b+").case_id == "closure");
  CHECK(route("a+b+", "[a|b]+").swapped);
}
