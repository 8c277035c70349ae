#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "rxmeet/answer.hpp"
#include "rxmeet/ast.hpp"

namespace rxmeet {

// Thrown when a configurable resource limit is hit. Deciders never trade
// the limit for a wrong answer; they give up loudly instead.
class BudgetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Position automaton: one state per leaf occurrence plus the start state 0.
// It is epsilon-free and homogeneous (every transition into state s carries
// letter_of[s]), so edges are stored as bare target lists. Per-state edges
// are sorted by (letter, target), which keeps iteration deterministic and
// joint stepping in products a linear merge.
struct Nfa {
  std::int32_t num_states = 0;
  std::vector<std::uint8_t> accepting;   // indexed by state
  std::vector<LetterId> letter_of;       // letter_of[0] unused
  std::vector<std::int32_t> edge_begin;  // size num_states + 1
  std::vector<std::int32_t> edge_to;     // targets, see ordering above

  std::size_t edge_count() const { return edge_to.size(); }
};

Nfa glushkov(const NodePtr& n);

bool nfa_member(const Word& w, const Nfa& nfa);
bool nfa_member(const Word& w, const NodePtr& n);

struct ProductLimits {
  std::uint64_t max_pairs = 10'000'000;  // visited product states
};

struct ProductStats {
  std::uint64_t pairs_visited = 0;
};

// Breadth-first emptiness check of L(a) ∩ L(b) over the product of the two
// position automata. NonEmpty answers carry a shortest witness (ties broken
// towards smaller letters). Throws BudgetError when more than
// limits.max_pairs product states would be visited.
Answer product_nonempty(const NodePtr& a, const NodePtr& b,
                        const ProductLimits& limits = {},
                        ProductStats* stats = nullptr);

// Exactly { w in L(n) : |w| <= max_len }. Throws BudgetError when the
// exploration would touch more than max_nodes distinct prefixes.
std::set<Word> enumerate_language(const NodePtr& n, int max_len,
                                  std::size_t max_nodes = 1'000'000);

}  // namespace rxmeet
