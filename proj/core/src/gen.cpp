#include "rxmeet/gen.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <random>
#include <stdexcept>

#include "rxmeet/intersect.hpp"

namespace rxmeet {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t salt = 0) {
  std::seed_seq seq{seed, salt, std::uint64_t{0x9e3779b97f4a7c15ULL}};
  return std::mt19937_64(seq);
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

LetterId nth_letter(int i) {
  if (i < 26) return static_cast<LetterId>('a' + i);
  if (i < 52) return static_cast<LetterId>('A' + (i - 26));
  return 200 + i;  // spills into the #id range
}

LetterId pick_letter(std::mt19937_64& rng, int alphabet_size) {
  return nth_letter(static_cast<int>(
      uniform(rng, 0, static_cast<std::size_t>(alphabet_size) - 1)));
}

// Uniform draw from [0.9 * size, 1.1 * size], at least `floor`.
std::size_t jitter(std::mt19937_64& rng, std::size_t size, std::size_t floor) {
  std::size_t lo = std::max(floor, size - std::min(size, size / 10));
  std::size_t hi = std::max(floor, size + size / 10);
  return uniform(rng, lo, hi);
}

NodePtr random_word_ast(std::mt19937_64& rng, std::size_t len,
                        int alphabet_size) {
  std::vector<NodePtr> kids;
  kids.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    kids.push_back(leaf(pick_letter(rng, alphabet_size)));
  return concat(std::move(kids));
}

// concat_{alt,plus,star}: a concatenation of positions, each a bare letter
// or a unary/set position; at least one position carries the level-2 op.
NodePtr gen_concat_of(std::mt19937_64& rng, Op inner, std::size_t size,
                      int alphabet_size) {
  const std::size_t target = jitter(rng, size, 2);
  std::vector<NodePtr> kids;
  bool has_inner = false;
  std::size_t leaves = 0;
  while (leaves < target || kids.size() < 2) {
    const std::size_t remaining = target > leaves ? target - leaves : 1;
    const bool decorate = uniform(rng, 0, 1) == 0;
    if (inner == Op::Alt && decorate) {
      const std::size_t k = uniform(
          rng, 2,
          std::max<std::size_t>(2, std::min<std::size_t>(3, remaining)));
      std::vector<NodePtr> branches;
      for (std::size_t i = 0; i < k; ++i)
        branches.push_back(leaf(pick_letter(rng, alphabet_size)));
      kids.push_back(alt(std::move(branches)));
      leaves += k;
      has_inner = true;
    } else if (inner != Op::Alt && decorate) {
      NodePtr l = leaf(pick_letter(rng, alphabet_size));
      kids.push_back(inner == Op::Plus ? plus(std::move(l))
                                       : star(std::move(l)));
      leaves += 1;
      has_inner = true;
    } else {
      kids.push_back(leaf(pick_letter(rng, alphabet_size)));
      leaves += 1;
    }
  }
  if (!has_inner) {  // force the level-2 operator on the final position
    NodePtr l = leaf(pick_letter(rng, alphabet_size));
    switch (inner) {
      case Op::Alt:
        kids.push_back(alt({l, leaf(pick_letter(rng, alphabet_size))}));
        break;
      case Op::Plus:
        kids.push_back(plus(std::move(l)));
        break;
      default:
        kids.push_back(star(std::move(l)));
        break;
    }
  }
  return concat(std::move(kids));
}

// alt_{concat,plus,star}: an alternation of branches; at least one branch
// carries the level-2 op, and there are always two or more branches.
NodePtr gen_alt_of(std::mt19937_64& rng, Op inner, std::size_t size,
                   int alphabet_size) {
  std::size_t target = jitter(rng, size, 2);
  if (inner != Op::Concat)  // run alternations grow with the alphabet only
    target = std::min(target,
                      std::max<std::size_t>(
                          2, 2 * static_cast<std::size_t>(alphabet_size)));
  std::vector<NodePtr> branches;
  bool has_inner = false;
  std::size_t leaves = 0;
  while (leaves < target || branches.size() < 2) {
    const std::size_t remaining = target > leaves ? target - leaves : 1;
    const bool decorate = uniform(rng, 0, 1) == 0;
    if (inner == Op::Concat && decorate) {
      const std::size_t len = uniform(
          rng, 2,
          std::max<std::size_t>(2, std::min<std::size_t>(6, remaining)));
      branches.push_back(random_word_ast(rng, len, alphabet_size));
      leaves += len;
      has_inner = true;
    } else if (inner != Op::Concat && decorate) {
      NodePtr l = leaf(pick_letter(rng, alphabet_size));
      branches.push_back(inner == Op::Plus ? plus(std::move(l))
                                           : star(std::move(l)));
      leaves += 1;
      has_inner = true;
    } else {
      branches.push_back(leaf(pick_letter(rng, alphabet_size)));
      leaves += 1;
    }
  }
  if (!has_inner) {
    NodePtr l = leaf(pick_letter(rng, alphabet_size));
    switch (inner) {
      case Op::Concat:
        branches.push_back(
            concat({l, leaf(pick_letter(rng, alphabet_size))}));
        break;
      case Op::Plus:
        branches.push_back(plus(std::move(l)));
        break;
      default:
        branches.push_back(star(std::move(l)));
        break;
    }
  }
  return alt(std::move(branches));
}

}  // namespace

NodePtr gen_random_regex(const std::string& type, std::size_t size,
                         int alphabet_size, std::uint64_t seed) {
  if (size < 1) throw std::invalid_argument("size must be positive");
  if (alphabet_size < 1)
    throw std::invalid_argument("alphabet size must be positive");
  std::mt19937_64 rng =
      make_rng(seed, std::hash<std::string>{}(type) ^ (size * 1315423911ULL));

  if (type == "letter") return leaf(pick_letter(rng, alphabet_size));
  if (type == "string")
    return random_word_ast(rng, jitter(rng, size, 2), alphabet_size);
  if (type == "set") {
    if (alphabet_size < 2)
      throw std::invalid_argument("type 'set' needs at least two letters");
    const std::size_t k = std::min<std::size_t>(
        static_cast<std::size_t>(alphabet_size), jitter(rng, size, 2));
    std::vector<int> ids(static_cast<std::size_t>(alphabet_size));
    for (int i = 0; i < alphabet_size; ++i) ids[static_cast<std::size_t>(i)] = i;
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<NodePtr> branches;
    for (std::size_t i = 0; i < k; ++i)
      branches.push_back(leaf(nth_letter(ids[i])));
    return alt(std::move(branches));
  }
  if (type == "plus_letter") return plus(leaf(pick_letter(rng, alphabet_size)));
  if (type == "star_letter") return star(leaf(pick_letter(rng, alphabet_size)));

  if (type == "concat_alt") return gen_concat_of(rng, Op::Alt, size, alphabet_size);
  if (type == "concat_plus")
    return gen_concat_of(rng, Op::Plus, size, alphabet_size);
  if (type == "concat_star")
    return gen_concat_of(rng, Op::Star, size, alphabet_size);
  if (type == "alt_concat") return gen_alt_of(rng, Op::Concat, size, alphabet_size);
  if (type == "alt_plus") return gen_alt_of(rng, Op::Plus, size, alphabet_size);
  if (type == "alt_star") return gen_alt_of(rng, Op::Star, size, alphabet_size);
  if (type == "plus_concat")
    return plus(random_word_ast(rng, jitter(rng, std::max<std::size_t>(size, 2), 2),
                                alphabet_size));
  if (type == "star_concat")
    return star(random_word_ast(rng, jitter(rng, std::max<std::size_t>(size, 2), 2),
                                alphabet_size));
  if (type == "plus_alt" || type == "star_alt") {
    const std::size_t k = std::min<std::size_t>(
        std::max<std::size_t>(2, 2 * static_cast<std::size_t>(alphabet_size)),
        jitter(rng, size, 2));
    std::vector<NodePtr> branches;
    for (std::size_t i = 0; i < k; ++i)
      branches.push_back(leaf(pick_letter(rng, alphabet_size)));
    NodePtr body = alt(std::move(branches));
    return type == "plus_alt" ? plus(std::move(body)) : star(std::move(body));
  }
  if (type == "plus_star")
    return plus(star(leaf(pick_letter(rng, alphabet_size))));
  if (type == "star_plus")
    return star(plus(leaf(pick_letter(rng, alphabet_size))));

  throw std::invalid_argument("unknown regexp type name: " + type);
}

const std::vector<std::string>& gen_type_names() {
  static const std::vector<std::string> names = {
      "letter",      "string",      "set",        "plus_letter",
      "star_letter", "concat_alt",  "concat_plus", "concat_star",
      "alt_concat",  "plus_concat", "star_concat", "alt_plus",
      "alt_star",    "plus_alt",    "star_alt",    "plus_star",
      "star_plus"};
  return names;
}

OvInstance gen_ov_instance(int m, int n, int d, std::uint64_t seed,
                           bool plant) {
  if (m < 1 || n < 1 || d < 1)
    throw std::invalid_argument("OV instance needs m, n, d >= 1");
  std::mt19937_64 rng = make_rng(seed, 0x0507);
  OvInstance inst;
  inst.dim = d;
  auto random_row = [&] {
    std::vector<std::uint8_t> row(static_cast<std::size_t>(d));
    for (auto& b : row) b = static_cast<std::uint8_t>(uniform(rng, 0, 1));
    return row;
  };
  for (int i = 0; i < m; ++i) inst.a_rows.push_back(random_row());
  for (int j = 0; j < n; ++j) inst.b_rows.push_back(random_row());
  if (plant) {
    const std::size_t i = uniform(rng, 0, static_cast<std::size_t>(m) - 1);
    const std::size_t j = uniform(rng, 0, static_cast<std::size_t>(n) - 1);
    for (int k = 0; k < d; ++k) {
      // per coordinate one of (0,0), (0,1), (1,0): dot product stays zero
      switch (uniform(rng, 0, 2)) {
        case 0:
          inst.a_rows[i][static_cast<std::size_t>(k)] = 0;
          inst.b_rows[j][static_cast<std::size_t>(k)] = 0;
          break;
        case 1:
          inst.a_rows[i][static_cast<std::size_t>(k)] = 0;
          inst.b_rows[j][static_cast<std::size_t>(k)] = 1;
          break;
        default:
          inst.a_rows[i][static_cast<std::size_t>(k)] = 1;
          inst.b_rows[j][static_cast<std::size_t>(k)] = 0;
          break;
      }
    }
  }
  return inst;
}

std::pair<NodePtr, NodePtr> gen_hard_family(std::size_t n, std::uint64_t seed) {
  // Powers of the reduction's padding gadgets at dimension 9: (a0)^j against
  // (b0)^k. Words of (a0)^j carry exactly 4j maximal x-runs while words of
  // (b0)^k carry at most 8k, so j > 2k forces emptiness and the product
  // search has to sweep the whole alignment frontier — both sides grow, so
  // the explored pair count grows quadratically with the input.
  (void)seed;  // the family is fully determined by its size
  const int d = 9;
  const GadgetSet g = special_gadgets(d);
  std::size_t b0_leaves = 0;
  for (const auto& s : g.b0.sets) b0_leaves += s.size();

  const std::size_t kb = std::max<std::size_t>(1, n / b0_leaves);
  const std::size_t ka =
      std::max<std::size_t>(2 * kb + 1, n / g.a0.runs.size());

  RunSeq a;
  for (std::size_t rep = 0; rep < ka; ++rep)
    a.runs.insert(a.runs.end(), g.a0.runs.begin(), g.a0.runs.end());
  PosSets b;
  for (std::size_t rep = 0; rep < kb; ++rep)
    b.sets.insert(b.sets.end(), g.b0.sets.begin(), g.b0.sets.end());
  return {to_ast(CanonicalForm{std::move(a)}), to_ast(CanonicalForm{std::move(b)})};
}

Word sample_word(const NodePtr& n, std::uint64_t seed) {
  std::mt19937_64 rng = make_rng(seed, 0x5a3b1e);
  Word out;
  std::geometric_distribution<int> extra(0.5);
  const std::function<void(const NodePtr&)> walk = [&](const NodePtr& t) {
    switch (t->kind) {
      case NodeKind::Leaf:
        out.push_back(t->letter);
        return;
      case NodeKind::Concat:
        for (const NodePtr& k : t->kids) walk(k);
        return;
      case NodeKind::Alt:
        walk(t->kids[uniform(rng, 0, t->kids.size() - 1)]);
        return;
      case NodeKind::Plus: {
        const int reps = 1 + std::min(3, extra(rng));
        for (int i = 0; i < reps; ++i) walk(t->kids[0]);
        return;
      }
      case NodeKind::Star: {
        const int reps = std::min(3, extra(rng));
        for (int i = 0; i < reps; ++i) walk(t->kids[0]);
        return;
      }
    }
  };
  walk(n);
  return out;
}

NodePtr gen_arbitrary_ast(std::size_t size, int alphabet_size,
                          std::uint64_t seed) {
  if (size < 1) throw std::invalid_argument("size must be positive");
  if (alphabet_size < 1)
    throw std::invalid_argument("alphabet size must be positive");
  std::mt19937_64 rng = make_rng(seed, 0xa5b17a3);
  const std::function<NodePtr(std::size_t)> build = [&](std::size_t budget) {
    if (budget <= 1) return leaf(pick_letter(rng, alphabet_size));
    switch (uniform(rng, 0, 3)) {
      case 0:
      case 1: {  // concat / alt with 2..4 children
        const std::size_t parts = uniform(rng, 2, std::min<std::size_t>(4, budget));
        std::vector<NodePtr> kids;
        std::size_t left = budget;
        for (std::size_t i = 0; i < parts; ++i) {
          const std::size_t remaining_parts = parts - i;
          const std::size_t hi = left - (remaining_parts - 1);
          const std::size_t take =
              i + 1 == parts ? left : uniform(rng, 1, std::max<std::size_t>(1, hi));
          kids.push_back(build(take));
          left -= take;
        }
        return uniform(rng, 0, 1) == 0 ? concat(std::move(kids))
                                       : alt(std::move(kids));
      }
      case 2:
        return plus(build(budget - 1));
      default:
        return star(build(budget - 1));
    }
  };
  return build(size);
}

namespace {

// Rebuilds `type`-shaped regexps that contain `w`, or returns null when the
// word does not fit the shape (caller falls back to an unrelated draw).
NodePtr embed_word(const std::string& type, const Word& w,
                   std::mt19937_64& rng, int alphabet_size) {
  const std::vector<Run> runs = w.empty() ? std::vector<Run>{} : word_runs(w);
  const bool single_run = runs.size() == 1;

  if (type == "letter") return w.size() == 1 ? leaf(w[0]) : nullptr;
  if (type == "string") {
    if (w.size() < 2) return nullptr;
    std::vector<NodePtr> kids;
    for (LetterId c : w) kids.push_back(leaf(c));
    return concat(std::move(kids));
  }
  if (type == "set") {
    if (w.size() != 1 || alphabet_size < 2) return nullptr;
    NodePtr other = leaf(pick_letter(rng, alphabet_size));
    return alt({leaf(w[0]), std::move(other)});
  }
  if (type == "plus_letter")
    return single_run ? plus(leaf(runs[0].letter)) : nullptr;
  if (type == "star_letter")
    return w.empty() ? star(leaf(pick_letter(rng, alphabet_size)))
                     : (single_run ? star(leaf(runs[0].letter)) : nullptr);

  if (type == "concat_alt") {
    if (w.size() < 2) return nullptr;
    std::vector<NodePtr> kids;
    bool has_alt = false;
    for (LetterId c : w) {
      if (uniform(rng, 0, 1) == 0) {
        kids.push_back(alt({leaf(c), leaf(pick_letter(rng, alphabet_size))}));
        has_alt = true;
      } else {
        kids.push_back(leaf(c));
      }
    }
    if (!has_alt)
      kids.back() =
          alt({leaf(w.back()), leaf(pick_letter(rng, alphabet_size))});
    return concat(std::move(kids));
  }
  if (type == "concat_plus") {
    if (runs.size() < 2) return nullptr;
    std::vector<NodePtr> kids;
    bool has_plus = false;
    for (const Run& r : runs) {
      const bool open = uniform(rng, 0, 1) == 0;
      const std::int64_t base =
          open ? static_cast<std::int64_t>(uniform(
                     rng, 1, static_cast<std::size_t>(r.len)))
               : r.len;
      for (std::int64_t i = 0; i + 1 < base; ++i) kids.push_back(leaf(r.letter));
      if (open) {
        kids.push_back(plus(leaf(r.letter)));
        has_plus = true;
      } else {
        kids.push_back(leaf(r.letter));
      }
    }
    if (!has_plus || kids.size() < 2) return nullptr;
    return concat(std::move(kids));
  }
  if (type == "concat_star") {
    std::vector<NodePtr> kids;
    for (const Run& r : runs) {
      const std::int64_t keep =
          static_cast<std::int64_t>(uniform(rng, 0, static_cast<std::size_t>(r.len)));
      for (std::int64_t i = 0; i < keep; ++i) kids.push_back(leaf(r.letter));
      kids.push_back(star(leaf(r.letter)));  // absorbs the rest of the run
    }
    if (w.empty()) kids.push_back(star(leaf(pick_letter(rng, alphabet_size))));
    if (kids.size() < 2)
      kids.push_back(star(leaf(pick_letter(rng, alphabet_size))));
    return concat(std::move(kids));
  }
  if (type == "alt_concat") {
    if (w.empty()) return nullptr;
    std::vector<NodePtr> branches;
    if (w.size() == 1)
      branches.push_back(leaf(w[0]));
    else {
      std::vector<NodePtr> kids;
      for (LetterId c : w) kids.push_back(leaf(c));
      branches.push_back(concat(std::move(kids)));
    }
    branches.push_back(
        random_word_ast(rng, uniform(rng, 2, 5), alphabet_size));
    if (uniform(rng, 0, 1) == 0)
      branches.push_back(
          random_word_ast(rng, uniform(rng, 2, 5), alphabet_size));
    std::shuffle(branches.begin(), branches.end(), rng);
    return alt(std::move(branches));
  }
  if (type == "plus_concat")
    return w.size() >= 2 ? plus(embed_word("string", w, rng, alphabet_size))
                         : nullptr;
  if (type == "star_concat") {
    if (w.empty())
      return star(random_word_ast(rng, uniform(rng, 2, 5), alphabet_size));
    return w.size() >= 2 ? star(embed_word("string", w, rng, alphabet_size))
                         : nullptr;
  }
  if (type == "alt_plus" || type == "alt_star") {
    const bool starry = type == "alt_star";
    if (w.empty() && !starry) return nullptr;
    std::vector<NodePtr> branches;
    if (!w.empty()) {
      if (!single_run) return nullptr;
      NodePtr entry = leaf(runs[0].letter);
      branches.push_back(starry ? star(std::move(entry))
                                : plus(std::move(entry)));
    } else {
      branches.push_back(star(leaf(pick_letter(rng, alphabet_size))));
    }
    branches.push_back(leaf(pick_letter(rng, alphabet_size)));
    std::shuffle(branches.begin(), branches.end(), rng);
    return alt(std::move(branches));
  }
  if (type == "plus_alt" || type == "star_alt") {
    if (w.empty() && type == "plus_alt") return nullptr;
    std::vector<LetterId> letters(w.begin(), w.end());
    letters.push_back(pick_letter(rng, alphabet_size));
    letters.push_back(pick_letter(rng, alphabet_size));
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    if (letters.size() < 2) letters.push_back(letters[0]);  // duplicate entry
    std::vector<NodePtr> branches;
    for (LetterId c : letters) branches.push_back(leaf(c));
    NodePtr body = alt(std::move(branches));
    return type == "plus_alt" ? plus(std::move(body)) : star(std::move(body));
  }
  if (type == "plus_star" || type == "star_plus") {
    LetterId c =
        single_run ? runs[0].letter : pick_letter(rng, alphabet_size);
    if (!w.empty() && !single_run) return nullptr;
    return type == "plus_star" ? plus(star(leaf(c))) : star(plus(leaf(c)));
  }
  return nullptr;
}

}  // namespace

OraclePair gen_oracle_pair(std::uint64_t index, std::uint64_t seed) {
  const std::vector<std::string>& names = gen_type_names();
  const std::uint64_t t = names.size();
  OraclePair pair;
  pair.a_type = names[index % t];
  pair.b_type = names[(index / t) % t];
  std::mt19937_64 rng = make_rng(seed, index * 0x9e3779b9ULL + 1);

  const std::size_t size_a = uniform(rng, 1, 40);
  const std::size_t size_b = uniform(rng, 1, 40);
  const int alphabet = static_cast<int>(uniform(rng, 2, 4));
  pair.a = gen_random_regex(pair.a_type, size_a, alphabet, rng());
  pair.b = gen_random_regex(pair.b_type, size_b, alphabet, rng());

  if (index % 2 == 0) {  // plant a shared word when the shape admits it
    const Word w = sample_word(pair.a, rng());
    if (NodePtr planted = embed_word(pair.b_type, w, rng, alphabet))
      pair.b = std::move(planted);
  }
  return pair;
}

}  // namespace rxmeet
