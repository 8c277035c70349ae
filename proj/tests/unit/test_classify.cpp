#include <doctest.h>

#include "rxmeet/canonical.hpp"
#include "rxmeet/parse.hpp"
#include "rxmeet/types.hpp"

using namespace rxmeet;

namespace {

std::string type_of(const std::string& s) { return type_name(classify(parse(s))); }

std::string coercion_names(const std::string& s) {
  std::string out;
  for (const Coercion& c : coercible_types(parse(s))) {
    if (!out.empty()) out += ',';
    out += type_name(c.type);
  }
  return out;
}

}  // namespace

TEST_CASE("types read the operator per level") {
  CHECK(type_of("a") == "letter");
  CHECK(type_of("ab") == "∘");
  CHECK(type_of("[a|b]") == "|");
  CHECK(type_of("a+") == "+");
  CHECK(type_of("a*") == "*");
  CHECK(type_of("b+bc+c+a") == "∘+");
  CHECK(type_of("[a|b][b|c]") == "∘|");
  CHECK(type_of("a*ab*") == "∘*");
  CHECK(type_of("[ab|c]") == "|∘");
  CHECK(type_of("(ab)+") == "+∘");
  CHECK(type_of("(ab)*") == "*∘");
  CHECK(type_of("[a+|b]") == "|+");
  CHECK(type_of("[a*|b]") == "|*");
  CHECK(type_of("[a|b]+") == "+|");
  CHECK(type_of("[a|b]*") == "*|");
  CHECK(type_of("a+*") == "*+");
  CHECK(type_of("a*+") == "+*");
}

TEST_CASE("depth counts operator levels") {
  CHECK(classify(parse("a")).depth == 0);
  CHECK(classify(parse("ab")).depth == 1);
  CHECK(classify(parse("b+bc+c+a")).depth == 2);
  CHECK(classify(parse("([a|c]d)+")).depth == 3);
  CHECK(classify(parse("([a|c]d)+")).homogeneous);
  CHECK(type_of("([a|c]d)+") == "+∘|");
  CHECK(classify(parse("([ab|c]d)+")).depth == 4);  // the branch "ab" nests once more
}

TEST_CASE("mixed levels are not homogeneous") {
  TypeDescriptor t = classify(parse("a+b[c|a]"));
  CHECK_FALSE(t.homogeneous);
  CHECK(type_name(t) == "non-homogeneous");
  CHECK(coercible_types(parse("a+b[c|a]")).empty());
}

TEST_CASE("depth over two has no canonical form") {
  CHECK(coercible_types(parse("([a|c]d)+")).empty());
}

TEST_CASE("coercion lists, native form first") {
  CHECK(coercion_names("a") == "∘|,∘+,|∘,|+");
  CHECK(coercion_names("ab") == "∘|,∘+,|∘");
  CHECK(coercion_names("[a|b]") == "∘|,|∘,|+");
  CHECK(coercion_names("a+") == "∘+,+∘,|+,+|");
  CHECK(coercion_names("a*") == "*|,∘*,*∘,|*");
  CHECK(coercion_names("[a|b][b|c]") == "∘|");
  CHECK(coercion_names("b+bc+c+a") == "∘+");
  CHECK(coercion_names("[ab|c]") == "|∘");
  CHECK(coercion_names("(ab)+") == "+∘");
  CHECK(coercion_names("[a+|b]") == "|+");
  CHECK(coercion_names("[a|b]+") == "+|");
  // Shapes that denote a simpler language fall back to its whole family.
  CHECK(coercion_names("[a|a]b") == "∘|,∘+,|∘");   // just the string "ab"
  CHECK(coercion_names("a*a") == "∘*,∘+,+∘,|+,+|");  // the language a+
  CHECK(coercion_names("a+*") == "*|,∘*,*∘,|*");     // the language a*
  CHECK(coercion_names("[ab]") == "∘|,∘+,|∘");       // one-word dictionary
}

TEST_CASE("op symbols") {
  CHECK(op_symbol(Op::Concat) == "∘");
  CHECK(op_symbol(Op::Alt) == "|");
  CHECK(op_symbol(Op::Plus) == "+");
  CHECK(op_symbol(Op::Star) == "*");
}

TEST_CASE("alphabet info splits letters by enclosing operator") {
  AlphabetInfo info = alphabet_info(parse("a+b[c|a]*"));
  CHECK(info.alph == std::vector<LetterId>{'a', 'b', 'c'});
  CHECK(info.plus_letters == std::vector<LetterId>{'a'});
  CHECK(info.star_letters == std::vector<LetterId>{'a', 'c'});
  CHECK(info.bare_letters == std::vector<LetterId>{'b'});
  CHECK_FALSE(info.nullable);
  CHECK(alphabet_info(parse("a*")).nullable);
}
