#pragma once

#include <string>
#include <vector>

#include "rxmeet/answer.hpp"
#include "rxmeet/nfa.hpp"

namespace rxmeet {

// ── Linear intersection routes ──────────────────────────────────────────────
//
// One routine per tractable pair of canonical forms. Every routine runs in
// time linear in the sizes of its two forms (direct-address letter tables,
// no hashing) and fills a sound witness for NonEmpty answers. dispatch()
// picks the routine from the coercible types of both sides and falls back
// to the product automaton when no linear pairing exists.

Answer intersect_possets_possets(const PosSets& a, const PosSets& b);
Answer intersect_possets_dict(const PosSets& a, const StrDict& b);
Answer intersect_possets_power(const PosSets& a, const PowerStr& b);
Answer intersect_runseq_runseq(const RunSeq& a, const RunSeq& b);
Answer intersect_runseq_dict(const RunSeq& a, const StrDict& b);
Answer intersect_runseq_power(const RunSeq& a, const PowerStr& b);
Answer intersect_dict_dict(const StrDict& a, const StrDict& b);
Answer intersect_power_dict(const PowerStr& a, const StrDict& b);
Answer intersect_power_power(const PowerStr& a, const PowerStr& b);

// Sigma+/Sigma* against any canonical form.
Answer intersect_closure_any(const AlphaClosure& a, const CanonicalForm& b);

// Union of single-letter runs against any canonical form.
Answer intersect_runalt_any(const RunAlt& a, const CanonicalForm& b);

// True iff a b == b a, i.e. iff both words are powers of one common word.
bool words_commute(const Word& a, const Word& b);

// Shortest word whose repetition yields w.
Word primitive_root(const Word& w);

enum class RouteKind : std::uint8_t { Linear, Baseline, TriviallyNonEmpty };

// The routing decision for a pair, before any work happens. `case_id` names
// the concrete routine ("possets_dict", "closure", ...); `swapped` records
// that the routine sees the arguments in reverse order.
struct PairRoute {
  RouteKind kind = RouteKind::Baseline;
  std::string case_id = "baseline";
  int a_form = -1;  // index into the respective coercion lists, -1 = unused
  int b_form = -1;
  bool swapped = false;
};

PairRoute plan_route(const std::vector<Coercion>& a,
                     const std::vector<Coercion>& b);

Answer dispatch(const NodePtr& a, const NodePtr& b, bool force_baseline = false,
                const ProductLimits& limits = {});

}  // namespace rxmeet
