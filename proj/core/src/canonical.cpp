#include "rxmeet/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace rxmeet {

namespace {

void sort_unique(std::vector<LetterId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (LetterId c : w) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(c));
      h *= 1099511628211ull;
    }
    return h;
  }
};

TypeDescriptor type_of_form(const CanonicalForm& form) {
  struct Visitor {
    TypeDescriptor operator()(const PosSets&) const {
      return make_type({Op::Concat, Op::Alt});
    }
    TypeDescriptor operator()(const RunSeq&) const {
      return make_type({Op::Concat, Op::Plus});
    }
    TypeDescriptor operator()(const StrDict&) const {
      return make_type({Op::Alt, Op::Concat});
    }
    TypeDescriptor operator()(const PowerStr& p) const {
      return make_type({p.star ? Op::Star : Op::Plus, Op::Concat});
    }
    TypeDescriptor operator()(const StarSeq&) const {
      return make_type({Op::Concat, Op::Star});
    }
    TypeDescriptor operator()(const RunAlt& r) const {
      return make_type({Op::Alt, r.epsilon_allowed ? Op::Star : Op::Plus});
    }
    TypeDescriptor operator()(const AlphaClosure& a) const {
      return make_type({a.epsilon_allowed ? Op::Star : Op::Plus, Op::Alt});
    }
  };
  return std::visit(Visitor{}, form);
}

void emit(std::vector<Coercion>& out, CanonicalForm form) {
  out.push_back({type_of_form(form), std::move(form)});
}

// The word spelled by a leaf-only subtree (a string or one dictionary word).
Word leaf_word(const NodePtr& n) {
  if (n->kind == NodeKind::Leaf) return {n->letter};
  assert(n->kind == NodeKind::Concat);
  Word w;
  w.reserve(n->kids.size());
  for (const NodePtr& k : n->kids) {
    assert(k->kind == NodeKind::Leaf);
    w.push_back(k->letter);
  }
  return w;
}

std::vector<LetterId> alt_letters(const NodePtr& n) {
  assert(n->kind == NodeKind::Alt);
  std::vector<LetterId> out;
  out.reserve(n->kids.size());
  for (const NodePtr& k : n->kids) {
    assert(k->kind == NodeKind::Leaf);
    out.push_back(k->letter);
  }
  sort_unique(out);
  return out;
}

RunSeq closed_runs(const Word& w) {
  RunSeq rs;
  rs.runs = word_runs(w);
  return rs;
}

PosSets singleton_sets(const Word& w) {
  PosSets p;
  p.sets.reserve(w.size());
  for (LetterId c : w) p.sets.push_back({c});
  return p;
}

// All forms with language {c}.
void letter_family(std::vector<Coercion>& out, LetterId c) {
  emit(out, PosSets{{{c}}});
  emit(out, RunSeq{{Run{c, 1, false}}});
  emit(out, StrDict{{{c}}});
  emit(out, RunAlt{{{c, false}}, false});
}

// All forms with language {w}, |w| >= 2.
void string_family(std::vector<Coercion>& out, const Word& w) {
  emit(out, singleton_sets(w));
  emit(out, closed_runs(w));
  emit(out, StrDict{{w}});
}

// All forms with language S (a set of single letters, |S| >= 2).
void letterset_family(std::vector<Coercion>& out,
                      const std::vector<LetterId>& s) {
  PosSets p;
  p.sets.push_back(s);
  emit(out, std::move(p));
  StrDict d;
  for (LetterId c : s) d.words.push_back({c});
  emit(out, std::move(d));
  RunAlt r;
  for (LetterId c : s) r.entries.push_back({c, false});
  emit(out, std::move(r));
}

// All forms with language c+.
void plus_family(std::vector<Coercion>& out, LetterId c) {
  emit(out, RunSeq{{Run{c, 1, true}}});
  emit(out, PowerStr{{c}, false});
  emit(out, RunAlt{{{c, true}}, false});
  emit(out, AlphaClosure{{c}, false});
}

// All forms with language c*.
void star_family(std::vector<Coercion>& out, LetterId c) {
  emit(out, AlphaClosure{{c}, true});
  emit(out, StarSeq{{{c, true}}});
  emit(out, PowerStr{{c}, true});
  emit(out, RunAlt{{{c, true}}, true});
}

PosSets possets_native(const NodePtr& n) {
  PosSets p;
  p.sets.reserve(n->kids.size());
  for (const NodePtr& k : n->kids) {
    if (k->kind == NodeKind::Leaf)
      p.sets.push_back({k->letter});
    else
      p.sets.push_back(alt_letters(k));
  }
  return p;
}

RunSeq runseq_native(const NodePtr& n) {
  RunSeq rs;
  for (const NodePtr& k : n->kids) {
    LetterId c;
    bool open;
    if (k->kind == NodeKind::Leaf) {
      c = k->letter;
      open = false;
    } else {
      assert(k->kind == NodeKind::Plus);
      c = k->kids[0]->letter;
      open = true;
    }
    // c^x c^{y+} == c^{(x+y)+} in either order, so adjacent equal letters
    // merge into one run.
    if (!rs.runs.empty() && rs.runs.back().letter == c) {
      rs.runs.back().len += 1;
      rs.runs.back().open |= open;
    } else {
      rs.runs.push_back(Run{c, 1, open});
    }
  }
  return rs;
}

StarSeq starseq_native(const NodePtr& n) {
  StarSeq s;
  s.items.reserve(n->kids.size());
  for (const NodePtr& k : n->kids) {
    if (k->kind == NodeKind::Leaf)
      s.items.push_back({k->letter, false});
    else
      s.items.push_back({k->kids[0]->letter, true});
  }
  return s;
}

StrDict dict_native(const NodePtr& n) {
  StrDict d;
  d.words.reserve(n->kids.size());
  std::unordered_set<Word, WordHash> seen;
  seen.reserve(n->kids.size());
  for (const NodePtr& k : n->kids) {
    Word w = leaf_word(k);
    if (seen.insert(w).second) d.words.push_back(std::move(w));
  }
  return d;
}

RunAlt runalt_native(const NodePtr& n) {
  RunAlt r;
  for (const NodePtr& k : n->kids) {
    LetterId c;
    bool open;
    if (k->kind == NodeKind::Leaf) {
      c = k->letter;
      open = false;
    } else {
      c = k->kids[0]->letter;
      open = true;
      if (k->kind == NodeKind::Star) r.epsilon_allowed = true;
    }
    auto it = std::find_if(r.entries.begin(), r.entries.end(),
                           [c](const RunAltEntry& e) { return e.letter == c; });
    if (it == r.entries.end())
      r.entries.push_back({c, open});
    else
      it->open |= open;  // a length-1 run is already covered by c+
  }
  std::sort(r.entries.begin(), r.entries.end(),
            [](const RunAltEntry& a, const RunAltEntry& b) {
              return a.letter < b.letter;
            });
  return r;
}

}  // namespace

std::vector<Run> word_runs(const Word& w) {
  std::vector<Run> runs;
  for (LetterId c : w) {
    if (!runs.empty() && runs.back().letter == c)
      runs.back().len += 1;
    else
      runs.push_back(Run{c, 1, false});
  }
  return runs;
}

std::vector<Coercion> coercible_types(const NodePtr& n) {
  TypeDescriptor t = classify(n);
  std::vector<Coercion> out;
  if (!t.homogeneous || t.depth > 2) return out;

  if (t.depth == 0) {
    letter_family(out, n->letter);
    return out;
  }

  if (t.depth == 1) {
    switch (t.ops[0]) {
      case Op::Concat:
        string_family(out, leaf_word(n));
        break;
      case Op::Alt: {
        std::vector<LetterId> s = alt_letters(n);
        if (s.size() == 1)
          letter_family(out, s[0]);
        else
          letterset_family(out, s);
        break;
      }
      case Op::Plus:
        plus_family(out, n->kids[0]->letter);
        break;
      case Op::Star:
        star_family(out, n->kids[0]->letter);
        break;
    }
    return out;
  }

  Op root = t.ops[0], inner = t.ops[1];
  if (root == Op::Concat && inner == Op::Alt) {
    PosSets p = possets_native(n);
    bool all_single = std::all_of(p.sets.begin(), p.sets.end(),
                                  [](const auto& s) { return s.size() == 1; });
    Word w;
    if (all_single)
      for (const auto& s : p.sets) w.push_back(s[0]);
    emit(out, std::move(p));
    if (all_single) string_family(out, w);  // e.g. [a|a]b denotes just "ab"
  } else if (root == Op::Concat && inner == Op::Plus) {
    emit(out, runseq_native(n));
  } else if (root == Op::Concat && inner == Op::Star) {
    StarSeq s = starseq_native(n);
    bool single_letter = std::all_of(
        s.items.begin(), s.items.end(),
        [&](const StarSeqItem& i) { return i.letter == s.items[0].letter; });
    LetterId c = s.items[0].letter;
    std::int64_t bare =
        std::count_if(s.items.begin(), s.items.end(),
                      [](const StarSeqItem& i) { return !i.starred; });
    emit(out, std::move(s));
    if (single_letter) {
      // One-letter star sequences flatten: the language is c^{bare+}.
      if (bare >= 2)
        emit(out, RunSeq{{Run{c, bare, true}}});
      else if (bare == 1)
        plus_family(out, c);
      else
        star_family(out, c);
    }
  } else if (root == Op::Alt && inner == Op::Concat) {
    StrDict d = dict_native(n);
    bool single = d.words.size() == 1;
    Word w = single ? d.words[0] : Word{};
    emit(out, std::move(d));
    if (single) string_family(out, w);
  } else if ((root == Op::Plus || root == Op::Star) && inner == Op::Concat) {
    emit(out, PowerStr{leaf_word(n->kids[0]), root == Op::Star});
  } else if (root == Op::Alt) {  // inner is Plus or Star
    RunAlt r = runalt_native(n);
    bool single = r.entries.size() == 1;
    RunAltEntry e = r.entries.empty() ? RunAltEntry{} : r.entries[0];
    bool eps = r.epsilon_allowed;
    emit(out, std::move(r));
    if (single && e.open) {
      if (eps)
        star_family(out, e.letter);
      else
        plus_family(out, e.letter);
    } else if (single) {
      letter_family(out, e.letter);
    }
  } else if (inner == Op::Alt) {  // root is Plus or Star
    AlphaClosure a;
    a.alphabet = alt_letters(n->kids[0]);
    a.epsilon_allowed = root == Op::Star;
    bool single = a.alphabet.size() == 1;
    LetterId c = single ? a.alphabet[0] : -1;
    bool eps = a.epsilon_allowed;
    emit(out, std::move(a));
    if (single) {
      if (eps)
        star_family(out, c);
      else
        plus_family(out, c);
    }
  } else {
    // (c+)* and (c*)+ both denote c*.
    assert((root == Op::Plus && inner == Op::Star) ||
           (root == Op::Star && inner == Op::Plus));
    star_family(out, n->kids[0]->kids[0]->letter);
  }

  // A kind can be reached twice (native plus family); languages coincide,
  // keep the first occurrence.
  std::vector<Coercion> deduped;
  bool seen[7] = {};
  for (Coercion& c : out) {
    std::size_t k = c.form.index();
    if (seen[k]) continue;
    seen[k] = true;
    deduped.push_back(std::move(c));
  }
  return deduped;
}

std::optional<CanonicalForm> extract_canonical(const NodePtr& n,
                                               const TypeDescriptor& target) {
  for (Coercion& c : coercible_types(n))
    if (c.type == target) return std::move(c.form);
  return std::nullopt;
}

NodePtr to_ast(const CanonicalForm& form) {
  struct Visitor {
    NodePtr operator()(const PosSets& p) const {
      assert(!p.sets.empty());
      // Equal sets share one subtree, so repeated positions render with a
      // group count ([x|y]3) and the tree stays small.
      std::map<std::vector<LetterId>, NodePtr> cache;
      std::vector<NodePtr> kids;
      for (const auto& s : p.sets) {
        assert(!s.empty());
        NodePtr& node = cache[s];
        if (!node) {
          if (s.size() == 1) {
            node = leaf(s[0]);
          } else {
            std::vector<NodePtr> branches;
            for (LetterId c : s) branches.push_back(leaf(c));
            node = alt(std::move(branches));
          }
        }
        kids.push_back(node);
      }
      return concat(std::move(kids));
    }
    NodePtr operator()(const RunSeq& rs) const {
      assert(!rs.runs.empty());
      std::vector<NodePtr> kids;
      for (const Run& r : rs.runs) {
        assert(r.len >= 1);
        for (std::int64_t i = 0; i + 1 < r.len; ++i) kids.push_back(leaf(r.letter));
        kids.push_back(r.open ? plus(leaf(r.letter)) : leaf(r.letter));
      }
      return concat(std::move(kids));
    }
    NodePtr operator()(const StrDict& d) const {
      assert(!d.words.empty());
      std::vector<NodePtr> branches;
      for (const Word& w : d.words) {
        assert(!w.empty());
        std::vector<NodePtr> kids;
        for (LetterId c : w) kids.push_back(leaf(c));
        branches.push_back(concat(std::move(kids)));
      }
      return alt(std::move(branches));
    }
    NodePtr operator()(const PowerStr& p) const {
      assert(!p.word.empty());
      std::vector<NodePtr> kids;
      for (LetterId c : p.word) kids.push_back(leaf(c));
      NodePtr body = concat(std::move(kids));
      return p.star ? star(std::move(body)) : plus(std::move(body));
    }
    NodePtr operator()(const StarSeq& s) const {
      assert(!s.items.empty());
      std::vector<NodePtr> kids;
      for (const StarSeqItem& i : s.items)
        kids.push_back(i.starred ? star(leaf(i.letter)) : leaf(i.letter));
      return concat(std::move(kids));
    }
    NodePtr operator()(const RunAlt& r) const {
      assert(!r.entries.empty());
      std::vector<NodePtr> branches;
      bool eps_covered = false;
      for (const RunAltEntry& e : r.entries) {
        if (!e.open) {
          branches.push_back(leaf(e.letter));
        } else if (r.epsilon_allowed) {
          branches.push_back(star(leaf(e.letter)));
          eps_covered = true;
        } else {
          branches.push_back(plus(leaf(e.letter)));
        }
      }
      assert(!r.epsilon_allowed || eps_covered);
      (void)eps_covered;
      return alt(std::move(branches));
    }
    NodePtr operator()(const AlphaClosure& a) const {
      assert(!a.alphabet.empty());
      NodePtr body;
      if (a.alphabet.size() == 1) {
        body = leaf(a.alphabet[0]);
      } else {
        std::vector<NodePtr> branches;
        for (LetterId c : a.alphabet) branches.push_back(leaf(c));
        body = alt(std::move(branches));
      }
      return a.epsilon_allowed ? star(std::move(body)) : plus(std::move(body));
    }
  };
  return std::visit(Visitor{}, form);
}

bool form_nullable(const CanonicalForm& form) {
  struct Visitor {
    bool operator()(const PosSets&) const { return false; }
    bool operator()(const RunSeq& r) const { return r.runs.empty(); }
    bool operator()(const StrDict&) const { return false; }
    bool operator()(const PowerStr& p) const { return p.star; }
    bool operator()(const StarSeq& s) const {
      return std::all_of(s.items.begin(), s.items.end(),
                         [](const StarSeqItem& i) { return i.starred; });
    }
    bool operator()(const RunAlt& r) const { return r.epsilon_allowed; }
    bool operator()(const AlphaClosure& a) const { return a.epsilon_allowed; }
  };
  return std::visit(Visitor{}, form);
}

std::string form_kind_name(const CanonicalForm& form) {
  static const char* names[] = {"possets",  "runseq", "dict",   "power",
                                "starseq",  "runalt", "closure"};
  return names[form.index()];
}

Word minimal_word(const CanonicalForm& form) {
  struct Visitor {
    Word operator()(const PosSets& p) const {
      Word w;
      for (const auto& s : p.sets) w.push_back(s.front());
      return w;
    }
    Word operator()(const RunSeq& r) const {
      Word w;
      for (const Run& run : r.runs)
        w.insert(w.end(), run.len, run.letter);
      return w;
    }
    Word operator()(const StrDict& d) const {
      const Word* best = &d.words.front();
      for (const Word& w : d.words)
        if (w.size() < best->size() || (w.size() == best->size() && w < *best))
          best = &w;
      return *best;
    }
    Word operator()(const PowerStr& p) const {
      return p.star ? Word{} : p.word;
    }
    Word operator()(const StarSeq& s) const {
      Word w;
      for (const StarSeqItem& i : s.items)
        if (!i.starred) w.push_back(i.letter);
      return w;
    }
    Word operator()(const RunAlt& r) const {
      if (r.epsilon_allowed) return {};
      return {r.entries.front().letter};
    }
    Word operator()(const AlphaClosure& a) const {
      if (a.epsilon_allowed) return {};
      return {a.alphabet.front()};
    }
  };
  return std::visit(Visitor{}, form);
}

}  // namespace rxmeet
