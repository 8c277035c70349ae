#include "rxmeet/intersect.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace rxmeet {

namespace {

Answer empty_answer(const char* algo) {
  Answer a;
  a.verdict = Verdict::Empty;
  a.algo = algo;
  return a;
}

Answer word_answer(const char* algo, Word w) {
  Answer a;
  a.verdict = Verdict::NonEmpty;
  a.witness = std::move(w);
  a.algo = algo;
  return a;
}

// Does the run admit a block of exactly `len` equal letters `c`?
bool run_admits(const Run& r, LetterId c, std::int64_t len) {
  if (r.letter != c) return false;
  return r.open ? len >= r.len : len == r.len;
}

}  // namespace

Answer intersect_possets_possets(const PosSets& a, const PosSets& b) {
  const char* algo = "possets_possets";
  if (a.sets.size() != b.sets.size()) return empty_answer(algo);
  PosSets meet;
  meet.sets.reserve(a.sets.size());
  Word witness;
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    std::vector<LetterId> inter;
    std::set_intersection(a.sets[i].begin(), a.sets[i].end(),
                          b.sets[i].begin(), b.sets[i].end(),
                          std::back_inserter(inter));
    if (inter.empty()) return empty_answer(algo);
    witness.push_back(inter.front());
    meet.sets.push_back(std::move(inter));
  }
  Answer ans = word_answer(algo, std::move(witness));
  ans.intersection = std::move(meet);
  return ans;
}

Answer intersect_possets_dict(const PosSets& a, const StrDict& b) {
  const char* algo = "possets_dict";
  const std::size_t k = a.sets.size();
  std::vector<std::size_t> alive;
  for (std::size_t i = 0; i < b.words.size(); ++i)
    if (b.words[i].size() == k) alive.push_back(i);
  StampSet stamp;
  for (std::size_t j = 0; j < k && !alive.empty(); ++j) {
    stamp.begin_round();
    for (LetterId c : a.sets[j]) stamp.add(c);
    std::vector<std::size_t> next;
    for (std::size_t i : alive)
      if (stamp.contains(b.words[i][j])) next.push_back(i);
    alive = std::move(next);
  }
  if (alive.empty()) return empty_answer(algo);
  return word_answer(algo, b.words[alive.front()]);  // first word in input order
}

Answer intersect_possets_power(const PosSets& a, const PowerStr& b) {
  const char* algo = "possets_power";
  const std::size_t k = a.sets.size();
  const std::size_t t = b.word.size();
  if (t == 0 || k % t != 0) return empty_answer(algo);
  StampSet stamp;
  for (std::size_t j = 0; j < k; ++j) {
    stamp.begin_round();
    for (LetterId c : a.sets[j]) stamp.add(c);
    if (!stamp.contains(b.word[j % t])) return empty_answer(algo);
  }
  Word witness;
  witness.reserve(k);
  for (std::size_t j = 0; j < k; ++j) witness.push_back(b.word[j % t]);
  return word_answer(algo, std::move(witness));
}

Answer intersect_runseq_runseq(const RunSeq& a, const RunSeq& b) {
  const char* algo = "runseq_runseq";
  if (a.runs.size() != b.runs.size()) return empty_answer(algo);
  RunSeq meet;
  meet.runs.reserve(a.runs.size());
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    const Run& x = a.runs[i];
    const Run& y = b.runs[i];
    if (x.letter != y.letter) return empty_answer(algo);
    if (!x.open && !y.open) {
      if (x.len != y.len) return empty_answer(algo);
      meet.runs.push_back(x);
    } else if (x.open != y.open) {
      // open c^{u+} meets closed c^v iff v >= u
      const Run& open = x.open ? x : y;
      const Run& closed = x.open ? y : x;
      if (closed.len < open.len) return empty_answer(algo);
      meet.runs.push_back(closed);
    } else {
      meet.runs.push_back(Run{x.letter, std::max(x.len, y.len), true});
    }
  }
  Answer ans = word_answer(algo, minimal_word(CanonicalForm{meet}));
  ans.intersection = std::move(meet);
  return ans;
}

Answer intersect_runseq_dict(const RunSeq& a, const StrDict& b) {
  const char* algo = "runseq_dict";
  for (const Word& w : b.words) {
    std::vector<Run> rs = word_runs(w);
    if (rs.size() != a.runs.size()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < rs.size() && ok; ++i)
      ok = run_admits(a.runs[i], rs[i].letter, rs[i].len);
    if (ok) return word_answer(algo, w);  // first word in input order
  }
  return empty_answer(algo);
}

Answer intersect_runseq_power(const RunSeq& a, const PowerStr& b) {
  const char* algo = "runseq_power";
  assert(!b.word.empty());
  const std::vector<Run> tr = word_runs(b.word);
  const std::size_t h = tr.size();
  const std::size_t k = a.runs.size();

  if (h == 1) {
    // T = c^l: words of T+ are c^{l}, c^{2l}, ... — a single run.
    if (k != 1) return empty_answer(algo);
    const Run& ar = a.runs[0];
    const Run& t = tr[0];
    if (ar.letter != t.letter) return empty_answer(algo);
    std::int64_t copies;
    if (ar.open) {
      copies = (ar.len + t.len - 1) / t.len;  // least multiple >= minimum
    } else {
      if (ar.len % t.len != 0) return empty_answer(algo);
      copies = ar.len / t.len;
    }
    Word witness(static_cast<std::size_t>(copies * t.len), t.letter);
    return word_answer(algo, std::move(witness));
  }

  // In T^c adjacent copies merge their boundary runs exactly when T starts
  // and ends with the same letter; then the merged run has the combined
  // length and the scan resumes at the second run of T.
  const bool wrap = tr.front().letter == tr.back().letter;
  std::size_t r = 0;
  std::int64_t copies = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (r == h) {  // copy finished cleanly (non-wrapping T)
      r = 0;
      ++copies;
    }
    if (wrap && r == h - 1 && j + 1 < k) {
      if (!run_admits(a.runs[j], tr.back().letter, tr.back().len + tr.front().len))
        return empty_answer(algo);
      r = 1;
      ++copies;
    } else {
      if (!run_admits(a.runs[j], tr[r].letter, tr[r].len))
        return empty_answer(algo);
      ++r;
    }
  }
  if (r != h) return empty_answer(algo);  // stopped mid-copy

  constexpr std::int64_t kWitnessCap = 100'000'000;
  if (copies > kWitnessCap / static_cast<std::int64_t>(b.word.size()))
    throw BudgetError("intersection witness would exceed " +
                      std::to_string(kWitnessCap) + " letters");
  Word witness;
  witness.reserve(b.word.size() * static_cast<std::size_t>(copies));
  for (std::int64_t i = 0; i < copies; ++i)
    witness.insert(witness.end(), b.word.begin(), b.word.end());
  return word_answer(algo, std::move(witness));
}

Answer intersect_dict_dict(const StrDict& a, const StrDict& b) {
  const char* algo = "dict_dict";
  // MSD character grouping over the joint list with origin tags; buckets per
  // group are visited in letter order, so the first shared word found is the
  // shortest one (breadth first), lexicographically smallest among ties.
  struct Item {
    const Word* w;
    bool from_b;
  };
  std::vector<Item> all;
  all.reserve(a.words.size() + b.words.size());
  for (const Word& w : a.words) all.push_back({&w, false});
  for (const Word& w : b.words) all.push_back({&w, true});

  std::vector<std::vector<Item>> groups{std::move(all)};
  std::vector<std::size_t> depths{0};
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::size_t d = depths[g];
    bool end_a = false, end_b = false;
    const Word* ended = nullptr;
    // Bucket by the letter at position d; words ending here are checked for
    // a cross-origin match (equal prefixes make them identical words).
    std::vector<std::pair<LetterId, Item>> rest;
    for (const Item& it : groups[g]) {
      if (it.w->size() == d) {
        (it.from_b ? end_b : end_a) = true;
        ended = it.w;
      } else {
        rest.push_back({(*it.w)[d], it});
      }
    }
    if (end_a && end_b) return word_answer(algo, *ended);
    std::stable_sort(rest.begin(), rest.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    std::size_t i = 0;
    while (i < rest.size()) {
      std::size_t j = i;
      bool has_a = false, has_b = false;
      while (j < rest.size() && rest[j].first == rest[i].first) {
        (rest[j].second.from_b ? has_b : has_a) = true;
        ++j;
      }
      if (has_a && has_b) {  // single-origin buckets cannot yield a match
        std::vector<Item> bucket;
        bucket.reserve(j - i);
        for (std::size_t x = i; x < j; ++x) bucket.push_back(rest[x].second);
        groups.push_back(std::move(bucket));
        depths.push_back(d + 1);
      }
      i = j;
    }
  }
  return empty_answer(algo);
}

Answer intersect_power_dict(const PowerStr& a, const StrDict& b) {
  const char* algo = "power_dict";
  const std::size_t t = a.word.size();
  for (const Word& w : b.words) {
    if (w.empty() || t == 0 || w.size() % t != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i)
      ok = w[i] == a.word[i % t];
    if (ok) return word_answer(algo, w);  // first word in input order
  }
  return empty_answer(algo);
}

bool words_commute(const Word& a, const Word& b) {
  if (a.empty() || b.empty()) return true;
  Word ab = a, ba = b;
  ab.insert(ab.end(), b.begin(), b.end());
  ba.insert(ba.end(), a.begin(), a.end());
  return ab == ba;
}

Word primitive_root(const Word& w) {
  if (w.empty()) return w;
  // Classic border computation; the shortest period divides |w| exactly when
  // w is a proper power.
  std::vector<std::size_t> pi(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  std::size_t period = w.size() - pi.back();
  if (w.size() % period != 0) return w;
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(period));
}

Answer intersect_power_power(const PowerStr& a, const PowerStr& b) {
  const char* algo = "power_power";
  if (a.star && b.star) return word_answer("trivial_epsilon", {});
  // T1T2 == T2T1 iff both are powers of one word; otherwise the repetition
  // languages are disjoint.
  if (!words_commute(a.word, b.word)) return empty_answer(algo);
  Word d = primitive_root(a.word);
  const std::int64_t i = static_cast<std::int64_t>(a.word.size() / d.size());
  const std::int64_t j = static_cast<std::int64_t>(b.word.size() / d.size());
  const std::int64_t reps = std::lcm(i, j);
  constexpr std::int64_t kWitnessCap = 100'000'000;
  if (reps > kWitnessCap / static_cast<std::int64_t>(d.size()))
    throw BudgetError("intersection witness would exceed " +
                      std::to_string(kWitnessCap) + " letters");
  Word shared;
  shared.reserve(d.size() * static_cast<std::size_t>(reps));
  for (std::int64_t r = 0; r < reps; ++r)
    shared.insert(shared.end(), d.begin(), d.end());
  Answer ans = word_answer(algo, shared);
  // D^{lcm(i,j)} generates exactly the common repetitions.
  ans.intersection = PowerStr{std::move(shared), false};
  return ans;
}

Answer intersect_closure_any(const AlphaClosure& a, const CanonicalForm& b) {
  const char* algo = "closure";
  if (a.epsilon_allowed && form_nullable(b))
    return word_answer(algo, {});  // empty word in both

  StampSet sigma;
  sigma.begin_round();
  for (LetterId c : a.alphabet) sigma.add(c);

  struct Visitor {
    const AlphaClosure& a;
    const StampSet& sigma;
    const char* algo;

    Answer operator()(const PosSets& p) const {
      Word witness;
      for (const auto& set : p.sets) {
        LetterId pick = -1;
        for (LetterId c : set) {
          if (sigma.contains(c)) {
            pick = c;  // sets are sorted: first hit is the smallest
            break;
          }
        }
        if (pick < 0) return empty_answer(algo);
        witness.push_back(pick);
      }
      return word_answer(algo, std::move(witness));
    }
    Answer operator()(const RunSeq& r) const {
      for (const Run& run : r.runs)
        if (!sigma.contains(run.letter)) return empty_answer(algo);
      return word_answer(algo, minimal_word(CanonicalForm{r}));
    }
    Answer operator()(const StrDict& d) const {
      for (const Word& w : d.words) {
        bool ok = true;
        for (LetterId c : w)
          if (!sigma.contains(c)) {
            ok = false;
            break;
          }
        if (ok) return word_answer(algo, w);  // first word in input order
      }
      return empty_answer(algo);
    }
    Answer operator()(const PowerStr& p) const {
      for (LetterId c : p.word)
        if (!sigma.contains(c)) return empty_answer(algo);
      return word_answer(algo, p.word);
    }
    Answer operator()(const StarSeq& s) const {
      // Every word of B carries all bare letters; stars only add letters
      // that B already offers, so one shared letter rescues the bare-free
      // case (the epsilon case was handled before the visit).
      Word bare;
      LetterId shared_star = -1;
      for (const StarSeqItem& i : s.items) {
        if (!i.starred) {
          if (!sigma.contains(i.letter)) return empty_answer(algo);
          bare.push_back(i.letter);
        } else if (sigma.contains(i.letter)) {
          if (shared_star < 0 || i.letter < shared_star) shared_star = i.letter;
        }
      }
      if (!bare.empty()) return word_answer(algo, std::move(bare));
      if (shared_star >= 0) return word_answer(algo, {shared_star});
      return empty_answer(algo);
    }
    Answer operator()(const RunAlt& r) const {
      for (const RunAltEntry& e : r.entries)  // sorted by letter
        if (sigma.contains(e.letter)) return word_answer(algo, {e.letter});
      return empty_answer(algo);
    }
    Answer operator()(const AlphaClosure& other) const {
      for (LetterId c : other.alphabet)
        if (sigma.contains(c)) return word_answer(algo, {c});
      return empty_answer(algo);
    }
  };
  return std::visit(Visitor{a, sigma, algo}, b);
}

Answer intersect_runalt_any(const RunAlt& a, const CanonicalForm& b) {
  const char* algo = "runalt";
  if (a.epsilon_allowed && form_nullable(b)) return word_answer(algo, {});

  StampSet present, open;
  present.begin_round();
  open.begin_round();
  for (const RunAltEntry& e : a.entries) {
    present.add(e.letter);
    if (e.open) open.add(e.letter);
  }

  struct Visitor {
    const RunAlt& a;
    const StampSet& present;
    const StampSet& open;
    const char* algo;

    Answer operator()(const PosSets& p) const {
      // A word of B is a run only if one letter sits in all h sets; closed
      // entries additionally need h == 1.
      const std::int64_t h = static_cast<std::int64_t>(p.sets.size());
      StampCounter counter;
      counter.begin_round();
      for (const auto& set : p.sets)
        for (LetterId c : set) counter.increment(c);  // sets hold distinct letters
      for (const RunAltEntry& e : a.entries) {        // sorted by letter
        if (counter.count(e.letter) != h) continue;
        if (e.open || h == 1)
          return word_answer(algo,
                             Word(static_cast<std::size_t>(h), e.letter));
      }
      return empty_answer(algo);
    }
    Answer operator()(const RunSeq& r) const {
      if (r.runs.size() != 1) return empty_answer(algo);
      const Run& run = r.runs[0];
      if (!present.contains(run.letter)) return empty_answer(algo);
      if (open.contains(run.letter))
        return word_answer(algo,
                           Word(static_cast<std::size_t>(run.len), run.letter));
      // closed entry: only the length-1 run qualifies
      if (run.len == 1) return word_answer(algo, {run.letter});
      return empty_answer(algo);
    }
    Answer operator()(const StrDict& d) const {
      for (const Word& w : d.words) {
        LetterId c = w[0];
        if (std::all_of(w.begin(), w.end(), [c](LetterId x) { return x == c; }) &&
            present.contains(c) && (open.contains(c) || w.size() == 1))
          return word_answer(algo, w);  // first word in input order
      }
      return empty_answer(algo);
    }
    Answer operator()(const PowerStr& p) const {
      const std::vector<Run> tr = word_runs(p.word);
      if (tr.size() != 1) return empty_answer(algo);
      const Run& t = tr[0];
      if (!present.contains(t.letter)) return empty_answer(algo);
      if (open.contains(t.letter))
        return word_answer(algo,
                           Word(static_cast<std::size_t>(t.len), t.letter));
      if (t.len == 1) return word_answer(algo, {t.letter});
      return empty_answer(algo);
    }
    Answer operator()(const StarSeq& s) const {
      // Bare positions are mandatory, so a run needs at most one distinct
      // bare letter; with none, any shared starred letter gives a run.
      LetterId bare_letter = -1;
      std::int64_t mu = 0;
      for (const StarSeqItem& i : s.items) {
        if (i.starred) continue;
        if (bare_letter >= 0 && i.letter != bare_letter)
          return empty_answer(algo);
        bare_letter = i.letter;
        ++mu;
      }
      if (bare_letter >= 0) {
        if (!present.contains(bare_letter)) return empty_answer(algo);
        if (open.contains(bare_letter))
          return word_answer(algo,
                             Word(static_cast<std::size_t>(mu), bare_letter));
        if (mu == 1) return word_answer(algo, {bare_letter});
        return empty_answer(algo);
      }
      LetterId best = -1;
      for (const StarSeqItem& i : s.items)
        if (i.starred && present.contains(i.letter) &&
            (best < 0 || i.letter < best))
          best = i.letter;
      if (best >= 0) return word_answer(algo, {best});
      return empty_answer(algo);
    }
    Answer operator()(const RunAlt& other) const {
      for (const RunAltEntry& e : other.entries)  // sorted by letter
        if (present.contains(e.letter)) return word_answer(algo, {e.letter});
      return empty_answer(algo);
    }
    Answer operator()(const AlphaClosure& other) const {
      for (const RunAltEntry& e : a.entries)
        if (std::binary_search(other.alphabet.begin(), other.alphabet.end(),
                               e.letter))
          return word_answer(algo, {e.letter});
      return empty_answer(algo);
    }
  };
  return std::visit(Visitor{a, present, open, algo}, b);
}

namespace {

template <class Pred>
int find_form(const std::vector<Coercion>& v, Pred pred) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (pred(v[i].form)) return static_cast<int>(i);
  return -1;
}

bool is_possets(const CanonicalForm& f) {
  return std::holds_alternative<PosSets>(f);
}
bool is_runseq(const CanonicalForm& f) {
  return std::holds_alternative<RunSeq>(f);
}
bool is_dict(const CanonicalForm& f) {
  return std::holds_alternative<StrDict>(f);
}
bool is_runalt(const CanonicalForm& f) {
  return std::holds_alternative<RunAlt>(f);
}
bool is_closure(const CanonicalForm& f) {
  return std::holds_alternative<AlphaClosure>(f);
}
bool is_power_plus(const CanonicalForm& f) {
  const PowerStr* p = std::get_if<PowerStr>(&f);
  return p && !p->star;
}
bool is_power_star(const CanonicalForm& f) {
  const PowerStr* p = std::get_if<PowerStr>(&f);
  return p && p->star;
}

PairRoute linear(const char* id, int a_form, int b_form, bool swapped) {
  return PairRoute{RouteKind::Linear, id, a_form, b_form, swapped};
}

}  // namespace

PairRoute plan_route(const std::vector<Coercion>& a,
                     const std::vector<Coercion>& b) {
  if (a.empty() || b.empty()) return PairRoute{};  // no form, no shortcut

  // Alphabet closures and run alternations pair with every form.
  if (int i = find_form(a, is_closure); i >= 0) return linear("closure", i, 0, false);
  if (int i = find_form(b, is_closure); i >= 0) return linear("closure", 0, i, true);
  if (int i = find_form(a, is_runalt); i >= 0) return linear("runalt", i, 0, false);
  if (int i = find_form(b, is_runalt); i >= 0) return linear("runalt", 0, i, true);

  // (T)* against a never-nullable form reduces to (T)+; two stars meet in
  // the empty word.
  if (int i = find_form(a, is_power_star); i >= 0) {
    if (int j = find_form(b, is_power_star); j >= 0)
      return PairRoute{RouteKind::TriviallyNonEmpty, "trivial_epsilon", i, j,
                       false};
    if (int j = find_form(b, is_possets); j >= 0)
      return linear("star_reduce+possets_power", i, j, true);
    if (int j = find_form(b, is_runseq); j >= 0)
      return linear("star_reduce+runseq_power", i, j, true);
    if (int j = find_form(b, is_dict); j >= 0)
      return linear("star_reduce+power_dict", i, j, false);
    if (int j = find_form(b, is_power_plus); j >= 0)
      return linear("star_reduce+power_power", i, j, false);
    return PairRoute{};  // star sequences stay with the baseline
  }
  if (int i = find_form(b, is_power_star); i >= 0) {
    if (int j = find_form(a, is_possets); j >= 0)
      return linear("star_reduce+possets_power", j, i, false);
    if (int j = find_form(a, is_runseq); j >= 0)
      return linear("star_reduce+runseq_power", j, i, false);
    if (int j = find_form(a, is_dict); j >= 0)
      return linear("star_reduce+power_dict", j, i, true);
    if (int j = find_form(a, is_power_plus); j >= 0)
      return linear("star_reduce+power_power", j, i, true);
    return PairRoute{};
  }

  struct TableEntry {
    const char* id;
    bool (*fa)(const CanonicalForm&);
    bool (*fb)(const CanonicalForm&);
    bool symmetric;
  };
  static const TableEntry table[] = {
      {"possets_possets", is_possets, is_possets, true},
      {"runseq_runseq", is_runseq, is_runseq, true},
      {"possets_dict", is_possets, is_dict, false},
      {"possets_power", is_possets, is_power_plus, false},
      {"runseq_dict", is_runseq, is_dict, false},
      {"runseq_power", is_runseq, is_power_plus, false},
      {"dict_dict", is_dict, is_dict, true},
      {"power_dict", is_power_plus, is_dict, false},
      {"power_power", is_power_plus, is_power_plus, true},
  };
  for (const TableEntry& e : table) {
    int ia = find_form(a, e.fa), ib = find_form(b, e.fb);
    if (ia >= 0 && ib >= 0) return linear(e.id, ia, ib, false);
    if (!e.symmetric) {
      ia = find_form(b, e.fa);
      ib = find_form(a, e.fb);
      if (ia >= 0 && ib >= 0) return linear(e.id, ib, ia, true);
    }
  }
  return PairRoute{};  // red cell: no linear pairing exists
}

Answer dispatch(const NodePtr& a, const NodePtr& b, bool force_baseline,
                const ProductLimits& limits) {
  if (force_baseline) return product_nonempty(a, b, limits);

  std::vector<Coercion> ca = coercible_types(a);
  std::vector<Coercion> cb = coercible_types(b);
  PairRoute route = plan_route(ca, cb);

  if (route.kind == RouteKind::Baseline) return product_nonempty(a, b, limits);
  if (route.kind == RouteKind::TriviallyNonEmpty) {
    Answer ans = word_answer("trivial_epsilon", {});
    return ans;
  }

  // The routine's first argument comes from `b` when swapped; intersection
  // is symmetric, so the answer carries over unchanged.
  const CanonicalForm& fa =
      route.swapped ? cb[route.b_form].form : ca[route.a_form].form;
  const CanonicalForm& fb =
      route.swapped ? ca[route.a_form].form : cb[route.b_form].form;
  const std::string& id = route.case_id;

  auto as_plus = [](const CanonicalForm& f) {
    PowerStr p = std::get<PowerStr>(f);
    p.star = false;
    return p;
  };

  Answer ans;
  if (id == "closure") {
    ans = intersect_closure_any(std::get<AlphaClosure>(fa), fb);
  } else if (id == "runalt") {
    ans = intersect_runalt_any(std::get<RunAlt>(fa), fb);
  } else if (id == "possets_possets") {
    ans = intersect_possets_possets(std::get<PosSets>(fa), std::get<PosSets>(fb));
  } else if (id == "runseq_runseq") {
    ans = intersect_runseq_runseq(std::get<RunSeq>(fa), std::get<RunSeq>(fb));
  } else if (id == "possets_dict") {
    ans = intersect_possets_dict(std::get<PosSets>(fa), std::get<StrDict>(fb));
  } else if (id == "possets_power") {
    ans = intersect_possets_power(std::get<PosSets>(fa), std::get<PowerStr>(fb));
  } else if (id == "runseq_dict") {
    ans = intersect_runseq_dict(std::get<RunSeq>(fa), std::get<StrDict>(fb));
  } else if (id == "runseq_power") {
    ans = intersect_runseq_power(std::get<RunSeq>(fa), std::get<PowerStr>(fb));
  } else if (id == "dict_dict") {
    ans = intersect_dict_dict(std::get<StrDict>(fa), std::get<StrDict>(fb));
  } else if (id == "power_dict") {
    ans = intersect_power_dict(std::get<PowerStr>(fa), std::get<StrDict>(fb));
  } else if (id == "power_power") {
    ans = intersect_power_power(std::get<PowerStr>(fa), std::get<PowerStr>(fb));
  } else if (id == "star_reduce+possets_power") {
    ans = intersect_possets_power(std::get<PosSets>(fa), as_plus(fb));
  } else if (id == "star_reduce+runseq_power") {
    ans = intersect_runseq_power(std::get<RunSeq>(fa), as_plus(fb));
  } else if (id == "star_reduce+power_dict") {
    ans = intersect_power_dict(as_plus(fa), std::get<StrDict>(fb));
  } else if (id == "star_reduce+power_power") {
    // Exactly one side is starred here (star/star is the trivial case), so
    // dropping the star changes nothing: the other side is never nullable.
    ans = intersect_power_power(as_plus(fa), as_plus(fb));
  } else {
    assert(false && "unknown route id");
    return product_nonempty(a, b, limits);
  }
  ans.algo = id;
  return ans;
}

}  // namespace rxmeet
