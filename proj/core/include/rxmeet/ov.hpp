#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <variant>

#include "rxmeet/intersect.hpp"

namespace rxmeet {

// ── Orthogonal-vectors reduction ────────────────────────────────────────────
//
// An OV instance asks whether some row of A is orthogonal to some row of B
// (0/1 vectors, dot product zero). build_reduction() turns a normalized
// instance into one ∘+ regexp and one ∘| regexp whose intersection is
// nonempty exactly when an orthogonal pair exists; verify_reduction()
// checks that equivalence against brute force.

struct OvInstance {
  int dim = 0;
  std::vector<std::vector<std::uint8_t>> a_rows;
  std::vector<std::vector<std::uint8_t>> b_rows;
};

// Lexicographically first orthogonal pair (a-index, b-index), if any.
std::optional<std::pair<int, int>> ov_bruteforce(const OvInstance& inst);

// Outcome of normalization when the answer is already forced.
struct TriviallyDecided {
  bool nonempty = false;
  std::optional<std::pair<int, int>> pair;  // indices into the original rows
};

struct NormalizedOv {
  OvInstance inst;
  int sentinel_coord = -1;    // coordinate where every alpha has 0, beta 1
  std::vector<int> a_origin;  // original row index, -1 for sentinel rows
  std::vector<int> b_origin;  // original row index (duplicates repeat it)
};

using NormalizeResult = std::variant<TriviallyDecided, NormalizedOv>;

// Establishes, in order: no zero/all-ones rows, a sentinel coordinate, odd
// dimension, 1..1 / 0..0 boundary padding, never-orthogonal sentinel rows
// at both ends of A, every beta present at both index parities, N divisible
// by four with N > M, and M odd. Each step preserves whether an orthogonal
// pair exists. Throws std::invalid_argument for dim < 1 or empty row sets.
NormalizeResult normalize_instance(const OvInstance& inst);

// Per-coordinate gadgets (k is 1-based; the letter is y for odd k, x for
// even k). The A side is a run, the B side a word.
struct CoordGadgets {
  Run a_run;
  Word b_word;
};
CoordGadgets coord_gadgets(int bit, int k);

RunSeq vector_gadget_a(const std::vector<std::uint8_t>& row);
// j is the row's 1-based position in B; even positions get a yyy...yyy wrap.
Word vector_gadget_b(const std::vector<std::uint8_t>& row, int j);

// Fixed gadgets that depend only on the (odd, >= 5) dimension. The _dollar
// variants append an optional-dollar position [y|$].
struct GadgetSet {
  RunSeq a0;
  RunSeq a_even;
  PosSets b0;
  Word b_even;
  Word b_odd;
  PosSets b0_dollar;
  PosSets b_even_dollar;
  PosSets b_odd_dollar;
};
GadgetSet special_gadgets(int d);

struct Reduction {
  NodePtr a;  // type ∘+
  NodePtr b;  // type ∘|
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::int64_t dollars_a = 0;      // every word of L(a) has exactly this many
  std::int64_t dollars_b_min = 0;  // words of L(b) stay within these bounds
  std::int64_t dollars_b_max = 0;
};
Reduction build_reduction(const NormalizedOv& norm);

struct VerifyReport {
  enum class Status : std::uint8_t { Pass, Fail, Inconclusive };
  Status status = Status::Fail;
  bool trivial = false;
  bool product_nonempty = false;
  std::optional<std::pair<int, int>> bruteforce_pair;
  std::optional<Word> witness;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::uint64_t pairs_visited = 0;
};

// Normalizes, builds, decides the intersection with the product automaton,
// and compares against ov_bruteforce. Inconclusive when the pair budget is
// exhausted; never a wrong PASS/FAIL.
VerifyReport verify_reduction(const OvInstance& inst,
                              const ProductLimits& limits = {});

// Structural health checks of the gadget languages for one normalized
// instance: alignment with the flexible gadget, padding neutrality,
// orthogonality equivalence, parity separation, and the one-row alignment
// limit. k and h range over 0..k_max copies of the padding block.
struct GadgetRelationReport {
  struct Item {
    int id = 0;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass = false;
};
GadgetRelationReport check_gadget_relations(const NormalizedOv& norm,
                                            int k_max);

// Text format: optional '#' comment lines, then "M N d", then M+N rows of
// d characters from {0,1}.
OvInstance parse_ov_text(const std::string& text);
OvInstance read_ov_file(const std::string& path);
std::string write_ov_text(const OvInstance& inst);

}  // namespace rxmeet
