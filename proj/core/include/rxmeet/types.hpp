#pragma once

#include <string>
#include <vector>

#include "rxmeet/ast.hpp"

namespace rxmeet {

enum class Op : std::uint8_t { Concat, Alt, Plus, Star };

std::string op_symbol(Op op);  // "∘", "|", "+", "*"

// Type of a regexp: whether one operator rules each tree level, how many
// operator levels there are, and which operators they carry (root first).
// A normalized homogeneous tree has the same operator sequence on every
// maximal root-to-leaf path, so `ops` is well defined. depth 0 means a
// single letter.
struct TypeDescriptor {
  bool homogeneous = false;
  int depth = 0;
  std::vector<Op> ops;  // meaningful (size == depth) iff homogeneous

  bool operator==(const TypeDescriptor& other) const = default;
};

TypeDescriptor classify(const NodePtr& n);

// "letter" for depth 0, the operator symbols otherwise ("∘+", "|", ...),
// "non-homogeneous" when no single operator rules some level.
std::string type_name(const TypeDescriptor& t);

TypeDescriptor make_type(std::initializer_list<Op> ops);

// Which letters occur under which unary operators. A letter occurring
// several times may land in several sets; alph is always the union.
struct AlphabetInfo {
  std::vector<LetterId> alph;          // sorted, distinct
  std::vector<LetterId> plus_letters;  // occur below some '+'
  std::vector<LetterId> star_letters;  // occur below some '*'
  std::vector<LetterId> bare_letters;  // occur with no unary operator above
  bool nullable = false;
};

AlphabetInfo alphabet_info(const NodePtr& n);

}  // namespace rxmeet
