#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rxmeet/types.hpp"

namespace rxmeet {

// ── Canonical forms ─────────────────────────────────────────────────────────
//
// Each depth-<=2 homogeneous type has a flat canonical form that the linear
// intersection routines operate on. A single regexp may admit several forms
// with exactly the same language (for example a plain string is both a
// sequence of singleton position sets and a single-word dictionary);
// coercible_types() enumerates all of them.

// Concatenation of position sets: L = A_1 A_2 ... A_k, each A_i a letter set.
struct PosSets {
  std::vector<std::vector<LetterId>> sets;  // each sorted + deduplicated
};

// One maximal block of equal letters. Closed runs match exactly `len`
// repetitions; open runs match any count >= len (c^{len+} == c^{len-1} c+).
struct Run {
  LetterId letter = -1;
  std::int64_t len = 0;
  bool open = false;

  bool operator==(const Run&) const = default;
};

// Concatenation of runs over pairwise distinct adjacent letters.
struct RunSeq {
  std::vector<Run> runs;
};

// Finite union of nonempty words, kept in input order (witness selection
// depends on it).
struct StrDict {
  std::vector<Word> words;
};

// (T)+ or (T)* for a fixed word T.
struct PowerStr {
  Word word;
  bool star = false;  // false: plus
};

// Concatenation of letters that each carry an optional star.
struct StarSeqItem {
  LetterId letter = -1;
  bool starred = false;
};
struct StarSeq {
  std::vector<StarSeqItem> items;
};

// Union of single-letter runs: each entry contributes c (closed) or c+
// (open); epsilon_allowed adds the empty word.
struct RunAltEntry {
  LetterId letter = -1;
  bool open = false;
};
struct RunAlt {
  std::vector<RunAltEntry> entries;  // sorted by letter, one entry per letter
  bool epsilon_allowed = false;
};

// Sigma+ or Sigma* over a letter set.
struct AlphaClosure {
  std::vector<LetterId> alphabet;  // sorted, distinct
  bool epsilon_allowed = false;    // true: Sigma*, false: Sigma+
};

using CanonicalForm = std::variant<PosSets, RunSeq, StrDict, PowerStr, StarSeq,
                                   RunAlt, AlphaClosure>;

struct Coercion {
  TypeDescriptor type;  // the nominal type of `form`
  CanonicalForm form;
};

// Every depth-<=2 homogeneous type whose canonical form has exactly the
// language of `n`, the native reading first. Empty for non-homogeneous or
// deeper regexps.
std::vector<Coercion> coercible_types(const NodePtr& n);

std::optional<CanonicalForm> extract_canonical(const NodePtr& n,
                                               const TypeDescriptor& target);

// A regexp with exactly the form's language (used by tests and witnesses).
NodePtr to_ast(const CanonicalForm& form);

bool form_nullable(const CanonicalForm& form);
std::string form_kind_name(const CanonicalForm& form);

// Maximal equal-letter blocks of a word, left to right (all runs closed).
std::vector<Run> word_runs(const Word& w);

// Shortest member of the form's language (ties broken towards smaller
// letter ids).
Word minimal_word(const CanonicalForm& form);

}  // namespace rxmeet
