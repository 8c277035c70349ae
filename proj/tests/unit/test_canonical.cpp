#include <doctest.h>

#include "rxmeet/canonical.hpp"
#include "rxmeet/parse.hpp"

using namespace rxmeet;

namespace {

const CanonicalForm& native(const NodePtr& n,
                            std::vector<Coercion>& storage) {
  storage = coercible_types(n);
  REQUIRE(!storage.empty());
  return storage[0].form;
}

}  // namespace

TEST_CASE("position sets are sorted and deduplicated") {
  std::vector<Coercion> cs;
  const auto& f = native(parse("[b|a][c|b|c]"), cs);
  const auto& p = std::get<PosSets>(f);
  REQUIRE(p.sets.size() == 2);
  CHECK(p.sets[0] == std::vector<LetterId>{'a', 'b'});
  CHECK(p.sets[1] == std::vector<LetterId>{'b', 'c'});
}

TEST_CASE("run sequences merge adjacent blocks of one letter") {
  std::vector<Coercion> cs;
  const auto& f = native(parse("b+bc+c+a"), cs);
  const auto& r = std::get<RunSeq>(f);
  REQUIRE(r.runs.size() == 3);
  CHECK(r.runs[0] == Run{'b', 2, true});
  CHECK(r.runs[1] == Run{'c', 2, true});
  CHECK(r.runs[2] == Run{'a', 1, false});
  // The canonical rendering of that sequence.
  CHECK(render(to_ast(f)) == "b2+c2+a");
}

TEST_CASE("open runs absorb neighboring pluses of the same letter") {
  std::vector<Coercion> cs;
  const auto& f = native(parse("a+a+b"), cs);
  const auto& r = std::get<RunSeq>(f);
  REQUIRE(r.runs.size() == 2);
  CHECK(r.runs[0] == Run{'a', 2, true});
  CHECK(r.runs[1] == Run{'b', 1, false});
}

TEST_CASE("dictionaries keep input order and drop duplicate words") {
  std::vector<Coercion> cs;
  const auto& f = native(parse("[bd|ab|bd]"), cs);
  const auto& d = std::get<StrDict>(f);
  REQUIRE(d.words.size() == 2);
  CHECK(d.words[0] == Word{'b', 'd'});
  CHECK(d.words[1] == Word{'a', 'b'});
}

TEST_CASE("power strings keep the base word") {
  std::vector<Coercion> cs;
  {
    const auto& f = native(parse("(abc)+"), cs);
    const auto& p = std::get<PowerStr>(f);
    CHECK(p.word == Word{'a', 'b', 'c'});
    CHECK_FALSE(p.star);
  }
  {
    const auto& f = native(parse("(abc)*"), cs);
    CHECK(std::get<PowerStr>(f).star);
  }
}

TEST_CASE("star sequences record per-letter stars") {
  std::vector<Coercion> cs;
  const auto& f = native(parse("a*ab*"), cs);
  const auto& s = std::get<StarSeq>(f);
  REQUIRE(s.items.size() == 3);
  CHECK(s.items[0].letter == 'a');
  CHECK(s.items[0].starred);
  CHECK_FALSE(s.items[1].starred);
  CHECK(s.items[2].letter == 'b');
}

TEST_CASE("run alternations collapse duplicate letters") {
  std::vector<Coercion> cs;
  const auto& f = native(parse("[b|a+|a]"), cs);
  const auto& r = std::get<RunAlt>(f);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].letter == 'a');
  CHECK(r.entries[0].open);  // a+ subsumes a
  CHECK(r.entries[1].letter == 'b');
  CHECK_FALSE(r.entries[1].open);
  CHECK_FALSE(r.epsilon_allowed);
  CHECK(std::get<RunAlt>(native(parse("[b*|a]"), cs)).epsilon_allowed);
}

TEST_CASE("alphabet closures") {
  std::vector<Coercion> cs;
  const auto& f = native(parse("[b|a|c]+"), cs);
  const auto& a = std::get<AlphaClosure>(f);
  CHECK(a.alphabet == std::vector<LetterId>{'a', 'b', 'c'});
  CHECK_FALSE(a.epsilon_allowed);
  CHECK(std::get<AlphaClosure>(native(parse("[a|b]*"), cs)).epsilon_allowed);
}

TEST_CASE("to_ast inverts extraction") {
  const char* samples[] = {"[a|b][b|c]", "b+bc+c+a", "[ab|ba]", "(ab)+",
                           "a*b*a",      "[a+|c]",   "[a|b]*",  "(ab)*"};
  for (const char* s : samples) {
    std::vector<Coercion> cs = coercible_types(parse(s));
    REQUIRE(!cs.empty());
    std::vector<Coercion> back = coercible_types(to_ast(cs[0].form));
    REQUIRE(!back.empty());
    CHECK(back[0].form.index() == cs[0].form.index());
  }
}

TEST_CASE("to_ast shares equal position sets for compact rendering") {
  PosSets p;
  p.sets = {{'y'}, {'x', 'y'}, {'x', 'y'}, {'x', 'y'}};
  CHECK(render(to_ast(CanonicalForm{p})) == "y[x|y]3");
}

TEST_CASE("form_nullable") {
  CHECK(form_nullable(CanonicalForm{PowerStr{{'a'}, true}}));
  CHECK_FALSE(form_nullable(CanonicalForm{PowerStr{{'a'}, false}}));
  CHECK(form_nullable(CanonicalForm{StarSeq{{{'a', true}, {'b', true}}}}));
  CHECK_FALSE(form_nullable(CanonicalForm{StarSeq{{{'a', true}, {'b', false}}}}));
  CHECK(form_nullable(CanonicalForm{RunAlt{{{'a', false}}, true}}));
  CHECK_FALSE(form_nullable(CanonicalForm{PosSets{{{'a'}}}}));
}

TEST_CASE("word_runs") {
  std::vector<Run> rs = word_runs(Word{'a', 'a', 'b', 'b', 'a'});
  REQUIRE(rs.size() == 3);
  CHECK(rs[0] == Run{'a', 2, false});
  CHECK(rs[1] == Run{'b', 2, false});
  CHECK(rs[2] == Run{'a', 1, false});
  CHECK(word_runs(Word{}).empty());
}

TEST_CASE("minimal words") {
  CHECK(minimal_word(CanonicalForm{PosSets{{{'b', 'c'}, {'a', 'd'}}}}) ==
        Word{'b', 'a'});
  CHECK(minimal_word(CanonicalForm{RunSeq{{Run{'b', 2, true}, Run{'a', 1, false}}}}) ==
        Word{'b', 'b', 'a'});
  CHECK(minimal_word(CanonicalForm{StrDict{{Word{'b', 'a'}, Word{'a', 'b'},
                                            Word{'a', 'b', 'c'}}}}) ==
        Word{'a', 'b'});
  CHECK(minimal_word(CanonicalForm{PowerStr{{'a', 'b'}, true}}).empty());
  CHECK(minimal_word(CanonicalForm{AlphaClosure{{'b', 'c'}, false}}) == Word{'b'});
}

TEST_CASE("extract_canonical honors the requested target type") {
  NodePtr n = parse("ab");
  auto dict = extract_canonical(n, make_type({Op::Alt, Op::Concat}));
  REQUIRE(dict.has_value());
  CHECK(std::get<StrDict>(*dict).words == std::vector<Word>{Word{'a', 'b'}});
  auto missing = extract_canonical(n, make_type({Op::Star, Op::Concat}));
  CHECK_FALSE(missing.has_value());
}
