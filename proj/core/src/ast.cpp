#include "rxmeet/ast.hpp"

#include <cassert>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace rxmeet {

namespace {

NodePtr make(NodeKind kind, LetterId letter, std::vector<NodePtr> kids) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->letter = letter;
  n->kids = std::move(kids);
  return n;
}

// Nodes are immutable, so every occurrence of a letter (run counts expand
// to one child per repetition) can share a single heap node. Large trees
// then cost one pointer per occurrence instead of one allocation, and tree
// walks stay cache-resident. Keyed by letter; ids are small and dense.
NodePtr cached(NodeKind kind, LetterId id) {
  static std::mutex mu;
  static std::vector<NodePtr> cache[3];  // Leaf, Plus-of-leaf, Star-of-leaf
  const int which =
      kind == NodeKind::Leaf ? 0 : (kind == NodeKind::Plus ? 1 : 2);
  std::scoped_lock lock(mu);
  for (auto& slots : cache)
    if (static_cast<std::size_t>(id) >= slots.size())
      slots.resize(static_cast<std::size_t>(id) + 1);
  NodePtr& base = cache[0][static_cast<std::size_t>(id)];
  if (!base) base = make(NodeKind::Leaf, id, {});
  if (which == 0) return base;
  NodePtr& slot = cache[which][static_cast<std::size_t>(id)];
  if (!slot) slot = make(kind, -1, {base});
  return slot;
}

// Splices children that repeat the parent operator, so Concat never holds a
// Concat and Alt never holds an Alt.
std::vector<NodePtr> splice(NodeKind kind, std::vector<NodePtr> kids) {
  bool flat = true;
  for (const NodePtr& k : kids)
    if (k->kind == kind) flat = false;
  if (flat) return kids;
  std::vector<NodePtr> out;
  out.reserve(kids.size());
  for (NodePtr& k : kids) {
    if (k->kind == kind)
      out.insert(out.end(), k->kids.begin(), k->kids.end());
    else
      out.push_back(std::move(k));
  }
  return out;
}

}  // namespace

NodePtr leaf(LetterId id) {
  if (id < 0) throw std::invalid_argument("letter ids must be nonnegative");
  return cached(NodeKind::Leaf, id);
}

NodePtr concat(std::vector<NodePtr> kids) {
  if (kids.empty()) throw std::invalid_argument("concat of zero regexps");
  kids = splice(NodeKind::Concat, std::move(kids));
  if (kids.size() == 1) return kids[0];
  return make(NodeKind::Concat, -1, std::move(kids));
}

NodePtr alt(std::vector<NodePtr> kids) {
  if (kids.empty()) throw std::invalid_argument("alternation of zero regexps");
  kids = splice(NodeKind::Alt, std::move(kids));
  if (kids.size() == 1) return kids[0];
  return make(NodeKind::Alt, -1, std::move(kids));
}

NodePtr plus(NodePtr kid) {
  if (kid->kind == NodeKind::Plus) return kid;  // (x+)+ == x+
  if (kid->kind == NodeKind::Leaf) return cached(NodeKind::Plus, kid->letter);
  return make(NodeKind::Plus, -1, {std::move(kid)});
}

NodePtr star(NodePtr kid) {
  if (kid->kind == NodeKind::Star) return kid;  // (x*)* == x*
  if (kid->kind == NodeKind::Leaf) return cached(NodeKind::Star, kid->letter);
  return make(NodeKind::Star, -1, {std::move(kid)});
}

std::size_t ast_size(const NodePtr& n) {
  if (n->kind == NodeKind::Leaf) return 1;
  std::size_t total = 0;
  for (const NodePtr& k : n->kids) total += ast_size(k);
  return total;
}

bool ast_nullable(const NodePtr& n) {
  switch (n->kind) {
    case NodeKind::Leaf:
      return false;
    case NodeKind::Star:
      return true;
    case NodeKind::Plus:
      return ast_nullable(n->kids[0]);
    case NodeKind::Concat: {
      for (const NodePtr& k : n->kids)
        if (!ast_nullable(k)) return false;
      return true;
    }
    case NodeKind::Alt: {
      for (const NodePtr& k : n->kids)
        if (ast_nullable(k)) return true;
      return false;
    }
  }
  return false;
}

bool ast_equal(const NodePtr& a, const NodePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->letter != b->letter ||
      a->kids.size() != b->kids.size())
    return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!ast_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

}  // namespace rxmeet
