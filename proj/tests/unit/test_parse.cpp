#include <doctest.h>

#include "rxmeet/gen.hpp"
#include "rxmeet/parse.hpp"

using namespace rxmeet;

namespace {
NodePtr rt(const std::string& s) { return parse(s); }
}  // namespace

TEST_CASE("single letters and strings") {
  NodePtr a = rt("a");
  CHECK(a->kind == NodeKind::Leaf);
  CHECK(render(a) == "a");

  NodePtr ab = rt("ab");
  CHECK(ab->kind == NodeKind::Concat);
  CHECK(ab->kids.size() == 2);
  CHECK(render(ab) == "ab");

  CHECK(render(rt("a b\tc")) == "abc");  // whitespace is ignored
  CHECK(render(rt("$a")) == "$a");
  CHECK(rt("$")->letter == kDollar);
}

TEST_CASE("escaped letter ids") {
  NodePtr n = rt("#200");
  CHECK(n->kind == NodeKind::Leaf);
  CHECK(n->letter == 200);
  CHECK(render(n) == "#200");
  CHECK(render(rt("#5#5")) == "#5#5");  // ids never compress into counts
}

TEST_CASE("postfix operators") {
  NodePtr p = rt("a+");
  CHECK(p->kind == NodeKind::Plus);
  CHECK(render(p) == "a+");

  NodePtr s = rt("a*");
  CHECK(s->kind == NodeKind::Star);
  CHECK(render(s) == "a*");

  NodePtr sp = rt("a+*");
  CHECK(sp->kind == NodeKind::Star);
  CHECK(sp->kids[0]->kind == NodeKind::Plus);
  CHECK(render(sp) == "a+*");

  // Plus(Plus(x)) and Star(Star(x)) collapse.
  CHECK(ast_equal(rt("a++"), rt("a+")));
  CHECK(ast_equal(rt("a**"), rt("a*")));
}

TEST_CASE("alternation needs brackets; parens are interchangeable") {
  NodePtr alt2 = rt("[a|b]");
  CHECK(alt2->kind == NodeKind::Alt);
  CHECK(alt2->kids.size() == 2);
  CHECK(render(alt2) == "[a|b]");
  CHECK(ast_equal(rt("(a|b)"), alt2));
  CHECK(render(rt("[ab|c]d")) == "[ab|c]d");
  CHECK(render(rt("(ab)+")) == "(ab)+");
  CHECK(ast_equal(rt("[a]"), rt("a")));  // single branch is just the branch
}

TEST_CASE("run counts expand and re-compress") {
  CHECK(ast_equal(rt("y3"), rt("yyy")));
  CHECK(render(rt("yyy")) == "y3");
  CHECK(render(rt("yy")) == "y2");

  NodePtr open = rt("y3+");
  REQUIRE(open->kind == NodeKind::Concat);
  REQUIRE(open->kids.size() == 3);
  CHECK(open->kids[0]->kind == NodeKind::Leaf);
  CHECK(open->kids[1]->kind == NodeKind::Leaf);
  CHECK(open->kids[2]->kind == NodeKind::Plus);
  CHECK(render(open) == "y3+");
  CHECK(ast_equal(open, rt("yy(y+)")));
  CHECK(ast_equal(rt("y1"), rt("y")));
  CHECK(ast_equal(rt("y1+"), rt("y+")));

  // A count applies to the atom just parsed; postfix then wraps the group.
  CHECK(render(rt("(a2)+")) == "(a2)+");
  CHECK(render(rt("a3*")) == "(a3)*");
  CHECK(render(rt("[x|y]3")) == "[x|y]3");
  CHECK(ast_equal(rt("[x|y]2"), rt("[x|y][x|y]")));

  // Compression only joins a trailing plus of the same letter.
  CHECK(render(rt("aaa+a")) == "a3+a");
  CHECK(render(rt("a+a")) == "a+a");
  CHECK(render(rt("ab2+c")) == "ab2+c");
}

TEST_CASE("parse errors carry an offset") {
  auto bad = [](const std::string& s) {
    CHECK_THROWS_AS((void)parse(s), ParseError);
  };
  bad("");
  bad("a|b");  // top-level alternation
  bad("[a|b");
  bad("(a");
  bad("a)");
  bad("[a|]");
  bad("3a");      // count without an atom
  bad("a0");      // zero count
  bad("a2000000");  // count over the cap
  bad("#");
  bad("a-b");
}

TEST_CASE("render/parse round trip is structural identity") {
  const char* samples[] = {
      "a",          "ab",        "[a|b]",      "a+b",     "ab*a*b",
      "y3+x+y+x3+y3+", "(ab)+",  "[ab|ba|aabb]", "a+*",   "[x|y]3y3",
      "b2+c2+a",    "[a+|b]",    "(a|b)*",     "$a$",     "#7#7b2",
      "y6xyxy6",    "aaa+a",     "[ab+|c*]d",
  };
  for (const char* s : samples) {
    NodePtr t = parse(s);
    CHECK(ast_equal(parse(render(t)), t));
  }
}

TEST_CASE("round trip holds on random trees") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    NodePtr t = gen_arbitrary_ast(1 + seed % 30, 3, seed);
    NodePtr back = parse(render(t));
    CHECK(ast_equal(back, t));
  }
}

TEST_CASE("words: display and parse") {
  CHECK(word_display(Word{'a', 'b'}) == "ab");
  CHECK(word_from_text("ab") == Word{'a', 'b'});
  CHECK(word_from_text("#200b") == Word{200, 'b'});
  CHECK(word_from_text("$") == Word{kDollar});
  CHECK_THROWS_AS((void)word_from_text("a1"), std::invalid_argument);
  CHECK(word_display(Word{200, 'b'}) == "#200b");
}
