#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rxmeet/ast.hpp"

namespace rxmeet {

// Grammar (whitespace is ignored between tokens):
//
//   regex  := factor+
//   factor := atom count? ('+' | '*')*
//   atom   := letter | '[' regex ('|' regex)* ']' | '(' regex ('|' regex)* ')'
//   letter := [A-Za-z] | '$' | '#' [0-9]+
//   count  := [0-9]+ '+'?
//
// Alternation exists only inside brackets/parens; '[' and '(' are
// interchangeable. A count repeats its atom: "y3" is yyy, and with the
// attached '+' it is an open run, "y3+" = yy(y+), at least three copies.
// parse() returns a normalized tree (see ast.hpp) and render() is its
// inverse: parse(render(t)) is structurally equal to t for every
// normalized t.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

NodePtr parse(std::string_view text);
std::string render(const NodePtr& n);

}  // namespace rxmeet
