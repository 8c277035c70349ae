#include "rxmeet/types.hpp"

#include <algorithm>
#include <optional>

namespace rxmeet {

namespace {

std::optional<Op> op_of(NodeKind kind) {
  switch (kind) {
    case NodeKind::Concat:
      return Op::Concat;
    case NodeKind::Alt:
      return Op::Alt;
    case NodeKind::Plus:
      return Op::Plus;
    case NodeKind::Star:
      return Op::Star;
    case NodeKind::Leaf:
      return std::nullopt;
  }
  return std::nullopt;
}

void sort_unique(std::vector<LetterId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void collect_letters(const NodePtr& n, bool under_plus, bool under_star,
                     AlphabetInfo& info) {
  if (n->kind == NodeKind::Leaf) {
    info.alph.push_back(n->letter);
    if (under_plus) info.plus_letters.push_back(n->letter);
    if (under_star) info.star_letters.push_back(n->letter);
    if (!under_plus && !under_star) info.bare_letters.push_back(n->letter);
    return;
  }
  bool p = under_plus || n->kind == NodeKind::Plus;
  bool s = under_star || n->kind == NodeKind::Star;
  for (const NodePtr& k : n->kids) collect_letters(k, p, s, info);
}

}  // namespace

std::string op_symbol(Op op) {
  switch (op) {
    case Op::Concat:
      return "∘";
    case Op::Alt:
      return "|";
    case Op::Plus:
      return "+";
    case Op::Star:
      return "*";
  }
  return "?";
}

namespace {

// One operator per level; leaves may sit on any level and are ignored.
// Records the first operator seen per level and flags a mismatch, walking
// on so the depth still counts every operator level.
void classify_walk(const Node* node, std::size_t depth, TypeDescriptor& t) {
  auto op = op_of(node->kind);
  if (!op) return;
  if (depth == t.ops.size())
    t.ops.push_back(*op);
  else if (t.ops[depth] != *op)
    t.homogeneous = false;
  for (const NodePtr& k : node->kids) classify_walk(k.get(), depth + 1, t);
}

}  // namespace

TypeDescriptor classify(const NodePtr& n) {
  TypeDescriptor t;
  t.homogeneous = true;
  classify_walk(n.get(), 0, t);
  t.depth = static_cast<int>(t.ops.size());
  if (!t.homogeneous) t.ops.clear();
  return t;
}

std::string type_name(const TypeDescriptor& t) {
  if (!t.homogeneous) return "non-homogeneous";
  if (t.depth == 0) return "letter";
  std::string out;
  for (Op op : t.ops) out += op_symbol(op);
  return out;
}

TypeDescriptor make_type(std::initializer_list<Op> ops) {
  TypeDescriptor t;
  t.homogeneous = true;
  t.depth = static_cast<int>(ops.size());
  t.ops.assign(ops);
  return t;
}

AlphabetInfo alphabet_info(const NodePtr& n) {
  AlphabetInfo info;
  collect_letters(n, false, false, info);
  sort_unique(info.alph);
  sort_unique(info.plus_letters);
  sort_unique(info.star_letters);
  sort_unique(info.bare_letters);
  info.nullable = ast_nullable(n);
  return info;
}

}  // namespace rxmeet
