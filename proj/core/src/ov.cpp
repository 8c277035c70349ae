#include "rxmeet/ov.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rxmeet {

namespace {

const LetterId kX = static_cast<LetterId>('x');
const LetterId kY = static_cast<LetterId>('y');

using Row = std::vector<std::uint8_t>;

bool row_all(const Row& row, std::uint8_t v) {
  return std::all_of(row.begin(), row.end(),
                     [v](std::uint8_t b) { return b == v; });
}

int dot(const Row& a, const Row& b) {
  int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("ov invariant violated: ") + what);
}

// The four row patterns the construction cannot host. Normalization makes
// them unreachable; this is the safety net behind that claim.
bool forbidden_pattern(const Row& r) {
  const std::size_t d = r.size();
  if (row_all(r, 0) || row_all(r, 1)) return true;
  bool edges_one_mid_zero = r.front() == 1 && r.back() == 1;
  bool edges_zero_mid_one = r.front() == 0 && r.back() == 0;
  for (std::size_t k = 1; k + 1 < d; ++k) {
    if (r[k] != 0) edges_one_mid_zero = false;
    if (r[k] != 1) edges_zero_mid_one = false;
  }
  return edges_one_mid_zero || edges_zero_mid_one;
}

void check_assumptions(const NormalizedOv& norm) {
  const int d = norm.inst.dim;
  const std::size_t m = norm.inst.a_rows.size();
  const std::size_t n = norm.inst.b_rows.size();
  require(d % 2 == 1 && d >= 5, "dimension must be odd and at least 5");
  require(m % 2 == 1, "A-row count must be odd");
  require(n % 4 == 0 && n > m, "B-row count must be 0 mod 4 and exceed M");
  require(norm.sentinel_coord > 0 && norm.sentinel_coord < d - 1,
          "sentinel coordinate must be interior");
  require(norm.a_origin.size() == m && norm.b_origin.size() == n,
          "origin maps must cover all rows");
  for (std::size_t i = 0; i < m; ++i) {
    const Row& r = norm.inst.a_rows[i];
    require(static_cast<int>(r.size()) == d, "A row length");
    require(r.front() == 1 && r.back() == 1, "A rows must start and end in 1");
    // Real alphas keep their dot products (0 at the sentinel coordinate);
    // the padding rows hook into it (1) so no beta is ever orthogonal.
    const std::uint8_t want = norm.a_origin[i] < 0 ? 1 : 0;
    require(r[static_cast<std::size_t>(norm.sentinel_coord)] == want,
            norm.a_origin[i] < 0
                ? "sentinel A rows carry 1 at the sentinel coordinate"
                : "A rows carry 0 at the sentinel coordinate");
    require(!forbidden_pattern(r), "A row matches a forbidden pattern");
  }
  for (const Row& r : norm.inst.b_rows) {
    require(static_cast<int>(r.size()) == d, "B row length");
    require(r.front() == 0 && r.back() == 0, "B rows must start and end in 0");
    require(r[static_cast<std::size_t>(norm.sentinel_coord)] == 1,
            "B rows carry 1 at the sentinel coordinate");
    require(!forbidden_pattern(r), "B row matches a forbidden pattern");
  }
  require(norm.a_origin.front() == -1 && norm.a_origin.back() == -1,
          "first and last A rows must be sentinels");
}

}  // namespace

std::optional<std::pair<int, int>> ov_bruteforce(const OvInstance& inst) {
  for (std::size_t i = 0; i < inst.a_rows.size(); ++i)
    for (std::size_t j = 0; j < inst.b_rows.size(); ++j)
      if (dot(inst.a_rows[i], inst.b_rows[j]) == 0)
        return std::make_pair(static_cast<int>(i), static_cast<int>(j));
  return std::nullopt;
}

NormalizeResult normalize_instance(const OvInstance& inst) {
  if (inst.dim < 1) throw std::invalid_argument("dimension must be positive");
  if (inst.a_rows.empty() || inst.b_rows.empty())
    throw std::invalid_argument("both row sets must be nonempty");
  for (const auto& rows : {inst.a_rows, inst.b_rows})
    for (const Row& r : rows) {
      if (static_cast<int>(r.size()) != inst.dim)
        throw std::invalid_argument("row length differs from the dimension");
      for (std::uint8_t b : r)
        if (b > 1) throw std::invalid_argument("rows must be 0/1 vectors");
    }

  // A zero row is orthogonal to everything on the other side.
  for (std::size_t i = 0; i < inst.a_rows.size(); ++i)
    if (row_all(inst.a_rows[i], 0))
      return TriviallyDecided{true, std::make_pair(static_cast<int>(i), 0)};
  for (std::size_t j = 0; j < inst.b_rows.size(); ++j)
    if (row_all(inst.b_rows[j], 0))
      return TriviallyDecided{true, std::make_pair(0, static_cast<int>(j))};

  // All-ones rows pair only with zero rows, which no longer exist.
  std::vector<Row> a_rows;
  std::vector<int> a_origin;
  for (std::size_t i = 0; i < inst.a_rows.size(); ++i)
    if (!row_all(inst.a_rows[i], 1)) {
      a_rows.push_back(inst.a_rows[i]);
      a_origin.push_back(static_cast<int>(i));
    }
  std::vector<Row> b_rows;
  std::vector<int> b_origin;
  for (std::size_t j = 0; j < inst.b_rows.size(); ++j)
    if (!row_all(inst.b_rows[j], 1)) {
      b_rows.push_back(inst.b_rows[j]);
      b_origin.push_back(static_cast<int>(j));
    }
  if (a_rows.empty() || b_rows.empty())
    return TriviallyDecided{false, std::nullopt};

  // Sentinel coordinate: 0 in every alpha, 1 in every beta. Dot products
  // are unchanged, and the never-orthogonal sentinel rows below hook into
  // this coordinate.
  for (Row& r : a_rows) r.push_back(0);
  for (Row& r : b_rows) r.push_back(1);
  int dim = inst.dim + 1;
  int sentinel = inst.dim;

  // Odd dimension: a trailing 0 on both sides changes nothing.
  if (dim % 2 == 0) {
    for (Row& r : a_rows) r.push_back(0);
    for (Row& r : b_rows) r.push_back(0);
    ++dim;
  }

  // Boundary padding: alpha -> 1 alpha 1, beta -> 0 beta 0.
  for (Row& r : a_rows) {
    r.insert(r.begin(), 1);
    r.push_back(1);
  }
  for (Row& r : b_rows) {
    r.insert(r.begin(), 0);
    r.push_back(0);
  }
  dim += 2;
  sentinel += 1;

  // Sentinel A-rows at both ends: 1 at the boundaries and at the sentinel
  // coordinate, where every beta holds a 1 — never orthogonal.
  Row sent(static_cast<std::size_t>(dim), 0);
  sent[0] = 1;
  sent[static_cast<std::size_t>(sentinel)] = 1;
  sent[static_cast<std::size_t>(dim - 1)] = 1;
  a_rows.insert(a_rows.begin(), sent);
  a_origin.insert(a_origin.begin(), -1);
  a_rows.push_back(sent);
  a_origin.push_back(-1);
  if (a_rows.size() % 2 == 0) {  // M must end up odd
    a_rows.push_back(sent);
    a_origin.push_back(-1);
  }

  // Every beta at both index parities: duplicate each row adjacently, then
  // pad with further duplicate pairs until N is a positive multiple of four
  // exceeding M.
  std::vector<Row> b2;
  std::vector<int> b2_origin;
  for (std::size_t j = 0; j < b_rows.size(); ++j) {
    b2.push_back(b_rows[j]);
    b2.push_back(b_rows[j]);
    b2_origin.push_back(b_origin[j]);
    b2_origin.push_back(b_origin[j]);
  }
  while (b2.size() % 4 != 0 || b2.size() <= a_rows.size()) {
    b2.push_back(b2.back());
    b2.push_back(b2.back());
    b2_origin.push_back(b2_origin.back());
    b2_origin.push_back(b2_origin.back());
  }

  NormalizedOv norm;
  norm.inst.dim = dim;
  norm.inst.a_rows = std::move(a_rows);
  norm.inst.b_rows = std::move(b2);
  norm.sentinel_coord = sentinel;
  norm.a_origin = std::move(a_origin);
  norm.b_origin = std::move(b2_origin);
  check_assumptions(norm);
  return norm;
}

CoordGadgets coord_gadgets(int bit, int k) {
  if (k < 1) throw std::invalid_argument("coordinate positions are 1-based");
  const LetterId c = (k % 2 == 1) ? kY : kX;
  CoordGadgets g;
  g.a_run = Run{c, bit ? 3 : 1, true};
  g.b_word = bit ? Word{c} : Word{c, c, c};
  return g;
}

RunSeq vector_gadget_a(const std::vector<std::uint8_t>& row) {
  if (row.size() < 2 || row.front() != 1 || row.back() != 1)
    throw std::invalid_argument("alpha rows must start and end with 1");
  RunSeq rs;
  rs.runs.reserve(row.size());
  for (std::size_t k = 0; k < row.size(); ++k)
    rs.runs.push_back(coord_gadgets(row[k], static_cast<int>(k) + 1).a_run);
  return rs;
}

Word vector_gadget_b(const std::vector<std::uint8_t>& row, int j) {
  if (row.size() < 2 || row.front() != 0 || row.back() != 0)
    throw std::invalid_argument("beta rows must start and end with 0");
  Word w;
  if (j % 2 == 0) w.insert(w.end(), {kY, kY, kY});
  for (std::size_t k = 0; k < row.size(); ++k) {
    Word part = coord_gadgets(row[k], static_cast<int>(k) + 1).b_word;
    w.insert(w.end(), part.begin(), part.end());
  }
  if (j % 2 == 0) w.insert(w.end(), {kY, kY, kY});
  return w;
}

GadgetSet special_gadgets(int d) {
  if (d < 5 || d % 2 == 0)
    throw std::invalid_argument("gadgets need an odd dimension of at least 5");
  const int half = d / 2;
  GadgetSet g;

  // a0: one open run of minimal length per coordinate, (y+x+)^half y+.
  for (int k = 1; k <= d; ++k)
    g.a0.runs.push_back(Run{(k % 2 == 1) ? kY : kX, 1, true});

  // a_even: closed y^6 boundaries around the same open interior.
  g.a_even.runs.push_back(Run{kY, 6, false});
  for (int k = 2; k <= d - 1; ++k)
    g.a_even.runs.push_back(Run{(k % 2 == 1) ? kY : kX, 1, true});
  g.a_even.runs.push_back(Run{kY, 6, false});

  // b0: (y^3 [x|y]^3)^half y^3 — the flexible padding word set.
  const std::vector<LetterId> set_y{kY};
  const std::vector<LetterId> set_xy{kX, kY};
  for (int p = 0; p < half; ++p) {
    for (int t = 0; t < 3; ++t) g.b0.sets.push_back(set_y);
    for (int t = 0; t < 3; ++t) g.b0.sets.push_back(set_xy);
  }
  for (int t = 0; t < 3; ++t) g.b0.sets.push_back(set_y);

  // b_even / b_odd: the all-ones-interior words with y^6 / y^3 boundaries.
  auto boundary_word = [&](int border) {
    Word w(static_cast<std::size_t>(border), kY);
    w.push_back(kX);
    for (int p = 0; p < half - 1; ++p) {
      w.push_back(kY);
      w.push_back(kX);
    }
    w.insert(w.end(), static_cast<std::size_t>(border), kY);
    return w;
  };
  g.b_even = boundary_word(6);
  g.b_odd = boundary_word(3);

  const std::vector<LetterId> set_yd{kY, kDollar};
  auto with_dollar = [&](const PosSets& base) {
    PosSets p = base;
    p.sets.push_back(set_yd);
    return p;
  };
  auto word_sets = [](const Word& w) {
    PosSets p;
    for (LetterId c : w) p.sets.push_back({c});
    return p;
  };
  g.b0_dollar = with_dollar(g.b0);
  g.b_even_dollar = with_dollar(word_sets(g.b_even));
  g.b_odd_dollar = with_dollar(word_sets(g.b_odd));
  return g;
}

Reduction build_reduction(const NormalizedOv& norm) {
  check_assumptions(norm);
  const int d = norm.inst.dim;
  const int m = static_cast<int>(norm.inst.a_rows.size());
  const int n = static_cast<int>(norm.inst.b_rows.size());
  require((2 * m + n - 2) % 4 == 0, "2M+N-2 must be a multiple of 4");
  const int blocks = (2 * m + n - 2) / 4;
  const GadgetSet g = special_gadgets(d);

  // Shared atoms keep the flat trees small and the rendering compact.
  const NodePtr leaf_x = leaf(kX);
  const NodePtr leaf_y = leaf(kY);
  const NodePtr leaf_dollar = leaf(kDollar);
  const NodePtr plus_x = plus(leaf_x);
  const NodePtr plus_y = plus(leaf_y);
  const NodePtr x_or_y = alt({leaf_x, leaf_y});
  const NodePtr y_or_dollar = alt({leaf_y, leaf_dollar});

  std::vector<NodePtr> apos;
  auto emit_runseq = [&](const RunSeq& rs) {
    for (const Run& r : rs.runs) {
      const NodePtr& l = r.letter == kX ? leaf_x : leaf_y;
      for (std::int64_t i = 0; i + 1 < r.len; ++i) apos.push_back(l);
      if (r.open)
        apos.push_back(r.letter == kX ? plus_x : plus_y);
      else
        apos.push_back(l);
    }
  };

  std::vector<RunSeq> arows;
  arows.reserve(static_cast<std::size_t>(m));
  for (const Row& r : norm.inst.a_rows) arows.push_back(vector_gadget_a(r));

  for (int t = 0; t < 2 * m + n; ++t) emit_runseq(g.a0);
  for (int t = 0; t < n - 1; ++t) {
    emit_runseq(g.a0);
    apos.push_back(leaf_dollar);
  }
  emit_runseq(g.a_even);
  apos.push_back(leaf_dollar);
  // Core: a_1 $ a0 $ a_2 $ a0 $ ... $ a_M — two dollars between vectors.
  emit_runseq(arows[0]);
  for (int i = 1; i < m; ++i) {
    apos.push_back(leaf_dollar);
    emit_runseq(g.a0);
    apos.push_back(leaf_dollar);
    emit_runseq(arows[static_cast<std::size_t>(i)]);
  }
  apos.push_back(leaf_dollar);
  emit_runseq(g.a_even);
  for (int t = 0; t < n - 1; ++t) {
    apos.push_back(leaf_dollar);
    emit_runseq(g.a0);
  }
  for (int t = 0; t < 2 * m + n; ++t) emit_runseq(g.a0);

  std::vector<NodePtr> bpos;
  auto emit_sets = [&](const PosSets& p) {
    for (const auto& s : p.sets) {
      if (s.size() == 1) {
        bpos.push_back(s[0] == kX ? leaf_x
                                  : (s[0] == kY ? leaf_y : leaf_dollar));
      } else if (s == std::vector<LetterId>{kX, kY}) {
        bpos.push_back(x_or_y);
      } else {
        assert((s == std::vector<LetterId>{kY, kDollar}));
        bpos.push_back(y_or_dollar);
      }
    }
  };
  auto emit_word = [&](const Word& w) {
    for (LetterId c : w) bpos.push_back(c == kX ? leaf_x : leaf_y);
  };
  auto emit_flex_block = [&] {
    emit_sets(g.b0_dollar);
    emit_sets(g.b_odd_dollar);
    emit_sets(g.b0_dollar);
    emit_sets(g.b_even_dollar);
  };

  for (int t = 0; t < 2 * m + n; ++t) emit_sets(g.b0);
  for (int t = 0; t < blocks; ++t) emit_flex_block();
  // Core: b0($) b_j $ for every beta, j 1-based.
  for (int j = 1; j <= n; ++j) {
    emit_sets(g.b0_dollar);
    emit_word(vector_gadget_b(norm.inst.b_rows[static_cast<std::size_t>(j - 1)], j));
    bpos.push_back(leaf_dollar);
  }
  for (int t = 0; t < blocks; ++t) emit_flex_block();
  for (int t = 0; t < 2 * m + n; ++t) emit_sets(g.b0);

  Reduction red;
  red.a = concat(std::move(apos));
  red.b = concat(std::move(bpos));
  red.size_a = ast_size(red.a);
  red.size_b = ast_size(red.b);
  red.dollars_a = 2 * static_cast<std::int64_t>(m) + 2 * n - 2;
  red.dollars_b_min = n;
  red.dollars_b_max = 4 * static_cast<std::int64_t>(m) + 4 * n - 4;
  return red;
}

VerifyReport verify_reduction(const OvInstance& inst,
                              const ProductLimits& limits) {
  VerifyReport rep;
  rep.bruteforce_pair = ov_bruteforce(inst);
  NormalizeResult nr = normalize_instance(inst);
  if (const auto* trivial = std::get_if<TriviallyDecided>(&nr)) {
    rep.trivial = true;
    rep.product_nonempty = trivial->nonempty;
    rep.status = trivial->nonempty == rep.bruteforce_pair.has_value()
                     ? VerifyReport::Status::Pass
                     : VerifyReport::Status::Fail;
    return rep;
  }
  const NormalizedOv& norm = std::get<NormalizedOv>(nr);
  const Reduction red = build_reduction(norm);
  rep.size_a = red.size_a;
  rep.size_b = red.size_b;
  try {
    ProductStats stats;
    Answer ans = product_nonempty(red.a, red.b, limits, &stats);
    rep.pairs_visited = stats.pairs_visited;
    rep.product_nonempty = ans.nonempty();
    rep.witness = ans.witness;
    rep.status = ans.nonempty() == rep.bruteforce_pair.has_value()
                     ? VerifyReport::Status::Pass
                     : VerifyReport::Status::Fail;
  } catch (const BudgetError&) {
    rep.status = VerifyReport::Status::Inconclusive;
  }
  return rep;
}

GadgetRelationReport check_gadget_relations(const NormalizedOv& norm,
                                            int k_max) {
  check_assumptions(norm);
  const int d = norm.inst.dim;
  const int m = static_cast<int>(norm.inst.a_rows.size());
  const int n = static_cast<int>(norm.inst.b_rows.size());
  const GadgetSet g = special_gadgets(d);

  const NodePtr a0 = to_ast(CanonicalForm{g.a0});
  const NodePtr a_even = to_ast(CanonicalForm{g.a_even});
  const NodePtr b0 = to_ast(CanonicalForm{g.b0});
  std::vector<NodePtr> arows;
  for (const Row& r : norm.inst.a_rows)
    arows.push_back(to_ast(CanonicalForm{vector_gadget_a(r)}));
  std::vector<NodePtr> bwords;
  for (int j = 1; j <= n; ++j)
    bwords.push_back(to_ast(CanonicalForm{StrDict{
        {vector_gadget_b(norm.inst.b_rows[static_cast<std::size_t>(j - 1)],
                         j)}}}));
  const NodePtr b_even = to_ast(CanonicalForm{StrDict{{g.b_even}}});
  const NodePtr b_odd = to_ast(CanonicalForm{StrDict{{g.b_odd}}});

  auto cat = [](std::vector<NodePtr> parts) { return concat(std::move(parts)); };
  auto pad = [&](int k) {
    std::vector<NodePtr> parts;
    for (int t = 0; t < k; ++t) parts.push_back(b0);
    return parts;
  };
  auto nonempty = [&](const NodePtr& a, const NodePtr& b) {
    return product_nonempty(a, b).nonempty();
  };

  GadgetRelationReport rep;
  auto record = [&](int id, bool pass, std::string detail) {
    rep.items.push_back({id, pass, std::move(detail)});
  };

  {  // 1: the flexible gadget aligns with every padded beta
    bool pass = true;
    std::string detail;
    for (int j = 1; j <= n && pass; ++j)
      for (int k = 0; k <= k_max && pass; ++k) {
        std::vector<NodePtr> parts = pad(k);
        parts.push_back(bwords[static_cast<std::size_t>(j - 1)]);
        if (!nonempty(a0, cat(std::move(parts)))) {
          pass = false;
          detail = "a0 vs b0^" + std::to_string(k) + " b_" + std::to_string(j) +
                   " unexpectedly empty";
        }
      }
    record(1, pass, pass ? "a0 meets b0^k b_j for all j, k" : detail);
  }
  {  // 2: padding alone aligns with every a-gadget
    bool pass = true;
    std::string detail;
    for (int i = 0; i <= m && pass; ++i) {
      const NodePtr& a = i == 0 ? a0 : arows[static_cast<std::size_t>(i - 1)];
      for (int k = 1; k <= std::max(1, k_max) && pass; ++k) {
        if (!nonempty(a, cat(pad(k)))) {
          pass = false;
          detail = "a_" + std::to_string(i) + " vs b0^" + std::to_string(k) +
                   " unexpectedly empty";
        }
      }
    }
    record(2, pass, pass ? "every a-gadget meets b0^k, k >= 1" : detail);
  }
  {  // 3: orthogonality equivalence through the gadgets
    bool pass = true;
    std::string detail;
    for (int i = 1; i <= m && pass; ++i)
      for (int j = 1; j <= n && pass; ++j) {
        const bool ortho =
            dot(norm.inst.a_rows[static_cast<std::size_t>(i - 1)],
                norm.inst.b_rows[static_cast<std::size_t>(j - 1)]) == 0;
        for (int k = 0; k <= k_max && pass; ++k) {
          std::vector<NodePtr> parts = pad(k);
          parts.push_back(bwords[static_cast<std::size_t>(j - 1)]);
          const bool got =
              nonempty(arows[static_cast<std::size_t>(i - 1)],
                       cat(std::move(parts)));
          if (got != ortho) {
            pass = false;
            detail = "a_" + std::to_string(i) + " vs b0^" + std::to_string(k) +
                     " b_" + std::to_string(j) + ": got " +
                     (got ? "nonempty" : "empty") + ", vectors are " +
                     (ortho ? "orthogonal" : "not orthogonal");
          }
        }
      }
    record(3, pass, pass ? "a_i meets b0^k b_j exactly when rows orthogonal"
                         : detail);
  }
  {  // 4: the block words pass a0 but exclude every real a-gadget
    bool pass = true;
    std::string detail;
    for (const auto& [name, blk] :
         {std::make_pair("b_even", b_even), std::make_pair("b_odd", b_odd)}) {
      for (int k = 0; k <= k_max && pass; ++k)
        for (int h = 0; h <= k_max && pass; ++h) {
          std::vector<NodePtr> parts = pad(k);
          parts.push_back(blk);
          std::vector<NodePtr> tail = pad(h);
          parts.insert(parts.end(), tail.begin(), tail.end());
          NodePtr rhs = cat(std::move(parts));
          if (!nonempty(a0, rhs)) {
            pass = false;
            detail = std::string("a0 vs b0^k ") + name +
                     " b0^h unexpectedly empty";
            break;
          }
          for (int i = 1; i <= m && pass; ++i)
            if (nonempty(arows[static_cast<std::size_t>(i - 1)], rhs)) {
              pass = false;
              detail = "a_" + std::to_string(i) + " vs b0^k " + name +
                       " b0^h unexpectedly nonempty";
            }
        }
      if (!pass) break;
    }
    record(4, pass,
           pass ? "block words pass a0 and exclude all a_i" : detail);
  }
  {  // 5: a_even distinguishes b_even from b0 and b_odd
    bool pass = nonempty(a_even, b_even) && !nonempty(a_even, b0) &&
                !nonempty(a_even, b_odd);
    record(5, pass,
           pass ? "a_even meets exactly b_even among the specials"
                : "a_even parity separation failed");
  }
  {  // 6: a_even accepts exactly the even-indexed beta gadgets
    bool pass = true;
    std::string detail;
    for (int j = 1; j <= n && pass; ++j) {
      const bool got = nonempty(a_even, bwords[static_cast<std::size_t>(j - 1)]);
      if (got != (j % 2 == 0)) {
        pass = false;
        detail = "a_even vs b_" + std::to_string(j) + ": got " +
                 (got ? "nonempty" : "empty");
      }
    }
    record(6, pass, pass ? "a_even meets b_j exactly for even j" : detail);
  }
  {  // 7: one a-gadget cannot span two vector words
    bool pass = !nonempty(a0, cat({b_even, b0, b_odd}));
    if (pass && n >= 2)
      pass = !nonempty(a0, cat({bwords[0], b0, bwords[1]}));
    record(7, pass,
           pass ? "a0 rejects padded two-word spans"
                : "a0 unexpectedly spans two vector words");
  }

  rep.all_pass = std::all_of(rep.items.begin(), rep.items.end(),
                             [](const auto& it) { return it.pass; });
  return rep;
}

OvInstance parse_ov_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '#') continue;
      out = line.substr(start);
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_data_line(header))
    throw std::invalid_argument("missing 'M N d' header line");
  std::istringstream hs(header);
  long m = 0, n = 0, d = 0;
  if (!(hs >> m >> n >> d) || m < 1 || n < 1 || d < 1)
    throw std::invalid_argument("header must be three positive integers M N d");
  std::string rest;
  if (hs >> rest)
    throw std::invalid_argument("unexpected text after the header");

  OvInstance inst;
  inst.dim = static_cast<int>(d);
  auto read_rows = [&](long count, std::vector<Row>& rows, const char* side) {
    for (long r = 0; r < count; ++r) {
      std::string row_text;
      if (!next_data_line(row_text))
        throw std::invalid_argument(std::string("missing ") + side + " row " +
                                    std::to_string(r + 1));
      std::size_t end = row_text.find_last_not_of(" \t\r");
      row_text = row_text.substr(0, end + 1);
      if (static_cast<long>(row_text.size()) != d)
        throw std::invalid_argument(std::string(side) + " row " +
                                    std::to_string(r + 1) + " must have " +
                                    std::to_string(d) + " bits");
      Row row;
      for (char c : row_text) {
        if (c != '0' && c != '1')
          throw std::invalid_argument("rows may contain only 0 and 1");
        row.push_back(static_cast<std::uint8_t>(c - '0'));
      }
      rows.push_back(std::move(row));
    }
  };
  read_rows(m, inst.a_rows, "A");
  read_rows(n, inst.b_rows, "B");
  std::string extra;
  if (next_data_line(extra))
    throw std::invalid_argument("unexpected trailing content after all rows");
  return inst;
}

OvInstance read_ov_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open OV file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ov_text(buf.str());
}

std::string write_ov_text(const OvInstance& inst) {
  std::ostringstream out;
  out << inst.a_rows.size() << ' ' << inst.b_rows.size() << ' ' << inst.dim
      << '\n';
  for (const auto& rows : {inst.a_rows, inst.b_rows})
    for (const Row& r : rows) {
      for (std::uint8_t b : r) out << static_cast<int>(b);
      out << '\n';
    }
  return out.str();
}

}  // namespace rxmeet
