#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "rxmeet/ov.hpp"

namespace rxmeet {

// Deterministic generators (same arguments -> same output) used by the
// tests, the benchmark harness and the self test.

// A regexp of the requested type whose leaf count lands within ±10% of
// `size` whenever the shape allows it. Shapes with a bounded leaf count
// (letter sets, single-letter unaries, alternations of runs) are capped by
// the alphabet instead. Throws std::invalid_argument for size < 1,
// alphabet_size < 1 or an unknown type name.
//
// Type names: "letter", "string", "set", "plus_letter", "star_letter", and
// the twelve depth-2 shapes "concat_alt", "concat_plus", "concat_star",
// "alt_concat", "plus_concat", "star_concat", "alt_plus", "alt_star",
// "plus_alt", "star_alt", "plus_star", "star_plus".
NodePtr gen_random_regex(const std::string& type, std::size_t size,
                         int alphabet_size, std::uint64_t seed);

const std::vector<std::string>& gen_type_names();

// Random 0/1 instance; with plant=true one orthogonal pair is forced.
OvInstance gen_ov_instance(int m, int n, int d, std::uint64_t seed,
                           bool plant);

// A hard pair (∘+ against ∘|) built from powers of the reduction's padding
// gadgets, scaled so each side has roughly n leaves. The pair is always
// empty, routes to the product baseline, and the explored state count grows
// quadratically because both factors grow with n.
std::pair<NodePtr, NodePtr> gen_hard_family(std::size_t n, std::uint64_t seed);

// Random draw from L(n): alternatives picked uniformly, repetitions
// geometrically. Deterministic in seed.
Word sample_word(const NodePtr& n, std::uint64_t seed);

// An unconstrained random tree (may be non-homogeneous or deep).
NodePtr gen_arbitrary_ast(std::size_t size, int alphabet_size,
                          std::uint64_t seed);

// One pair for the oracle-equivalence suite. Pair `index` cycles through
// all ordered combinations of the seventeen generator types; half of the
// pairs share a planted common word so that NonEmpty paths get exercised.
struct OraclePair {
  NodePtr a;
  NodePtr b;
  std::string a_type;
  std::string b_type;
};
OraclePair gen_oracle_pair(std::uint64_t index, std::uint64_t seed);

}  // namespace rxmeet
