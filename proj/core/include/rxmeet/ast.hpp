#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "rxmeet/letters.hpp"

namespace rxmeet {

// ── Regexp syntax trees ─────────────────────────────────────────────────────
//
// Nodes are immutable once built, so subtrees may be shared freely; builders
// below keep trees normalized:
//   * Concat/Alt have >= 2 children and never nest the same operator,
//   * Plus(Plus(x)) and Star(Star(x)) collapse to one level,
//   * mixed chains such as Star(Plus(x)) are preserved (they carry type
//     information even though the language equals Star(x)).
// "size" of a regexp always means its number of leaf occurrences.

enum class NodeKind : std::uint8_t { Leaf, Concat, Alt, Plus, Star };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind;
  LetterId letter = -1;       // Leaf only
  std::vector<NodePtr> kids;  // Concat/Alt: >=2, Plus/Star: exactly 1
};

NodePtr leaf(LetterId id);
NodePtr concat(std::vector<NodePtr> kids);
NodePtr alt(std::vector<NodePtr> kids);
NodePtr plus(NodePtr kid);
NodePtr star(NodePtr kid);

// Number of leaf occurrences (shared subtrees count once per occurrence).
std::size_t ast_size(const NodePtr& n);

bool ast_nullable(const NodePtr& n);

bool ast_equal(const NodePtr& a, const NodePtr& b);

}  // namespace rxmeet
