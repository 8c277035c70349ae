#include "rxmeet/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include "rxmeet/intersect.hpp"
#include "rxmeet/letters.hpp"
#include "rxmeet/nfa.hpp"

namespace rxmeet {

namespace {

// Medians at or below this are indistinguishable from timer noise.
constexpr double kClockFloorSeconds = 1e-6;

constexpr LetterId kA = 'a';
constexpr LetterId kB = 'b';
constexpr LetterId kC = 'c';

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt),
                    static_cast<std::uint32_t>(salt >> 32)};
  return std::mt19937_64(seq);
}

std::size_t uni(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

LetterId pick(std::mt19937_64& rng, std::initializer_list<LetterId> from) {
  const LetterId* it = from.begin() + uni(rng, 0, from.size() - 1);
  return *it;
}

Word random_word(std::mt19937_64& rng, std::size_t len,
                 std::initializer_list<LetterId> from) {
  Word w(len);
  for (auto& c : w) c = pick(rng, from);
  return w;
}

// A two-letter word with no immediate repeats ("ababa...", shifted), handy
// when a word must not collapse into a single run.
Word alternating_word(std::size_t len, LetterId first, LetterId second) {
  Word w(len);
  for (std::size_t i = 0; i < len; ++i) w[i] = i % 2 == 0 ? first : second;
  return w;
}

// Position sets carrying `w`: set j contains w[j] plus, half of the time, a
// second letter. The first set is always widened so the side cannot
// degrade into a plain string.
PosSets sets_through(std::mt19937_64& rng, const Word& w) {
  PosSets p;
  p.sets.reserve(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    std::vector<LetterId> s{w[j]};
    if (j == 0 || uni(rng, 0, 1) == 0) {
      LetterId extra = w[j] == kA ? kB : kA;
      s.push_back(extra);
    }
    std::sort(s.begin(), s.end());
    p.sets.push_back(std::move(s));
  }
  return p;
}

NodePtr word_branch(const Word& w) {
  std::vector<NodePtr> kids;
  kids.reserve(w.size());
  for (LetterId c : w) kids.push_back(leaf(c));
  return concat(std::move(kids));
}

NodePtr dict_ast(std::vector<Word> words) {
  std::vector<NodePtr> branches;
  branches.reserve(words.size());
  for (const Word& w : words) branches.push_back(word_branch(w));
  return alt(std::move(branches));
}

// alt(a+, b+, c): a union of single-letter runs with an open entry for
// both planted letters.
NodePtr runalt_side() {
  return alt({plus(leaf(kA)), plus(leaf(kB)), leaf(kC)});
}

struct PairPlan {
  NodePtr a;
  NodePtr b;
  std::string expected_algo;
  bool expect_empty = false;
};

PairPlan build_pair(const std::string& route, std::size_t size,
                    std::mt19937_64& rng) {
  PairPlan plan;
  plan.expected_algo = route;

  if (route == "possets_possets") {
    std::size_t k = std::max<std::size_t>(2, size / 3);
    Word w = random_word(rng, k, {kA, kB});
    plan.a = to_ast(CanonicalForm{sets_through(rng, w)});
    plan.b = to_ast(CanonicalForm{sets_through(rng, w)});
  } else if (route == "possets_dict") {
    std::size_t k = std::max<std::size_t>(2, 2 * size / 7);
    Word w = random_word(rng, k, {kA, kB});
    plan.a = to_ast(CanonicalForm{sets_through(rng, w)});
    plan.b = dict_ast({w, random_word(rng, k, {kA, kB})});
  } else if (route == "possets_power") {
    const std::size_t t = 4;
    Word pat = random_word(rng, t, {kA, kB, kC});
    pat[1] = pat[0] == kA ? kB : kA;  // at least two letters, two runs
    std::size_t reps = std::max<std::size_t>(1, 2 * size / (3 * t));
    Word carrier(t * reps);
    for (std::size_t j = 0; j < carrier.size(); ++j) carrier[j] = pat[j % t];
    plan.a = to_ast(CanonicalForm{sets_through(rng, carrier)});
    plan.b = plus(word_branch(pat));
  } else if (route == "runseq_runseq") {
    std::size_t r = std::max<std::size_t>(2, 2 * size / 5);
    RunSeq ra, rb;
    for (std::size_t i = 0; i < r; ++i) {
      LetterId c = i % 2 == 0 ? kA : kB;
      ra.runs.push_back(Run{c, 1, true});
      bool open = i == 0 || uni(rng, 0, 1) == 0;
      std::int64_t len = static_cast<std::int64_t>(uni(rng, 1, 2));
      rb.runs.push_back(Run{c, len, open});
    }
    plan.a = to_ast(CanonicalForm{std::move(ra)});
    plan.b = to_ast(CanonicalForm{std::move(rb)});
  } else if (route == "runseq_dict") {
    std::size_t r = std::max<std::size_t>(2, 2 * size / 9);
    RunSeq ra;
    for (std::size_t i = 0; i < r; ++i) {
      LetterId c = i % 2 == 0 ? kA : kB;
      bool open = i == 0 || uni(rng, 0, 1) == 0;
      ra.runs.push_back(Run{c, static_cast<std::int64_t>(uni(rng, 1, 2)), open});
    }
    Word w = minimal_word(CanonicalForm{ra});
    plan.a = to_ast(CanonicalForm{std::move(ra)});
    plan.b = dict_ast({w, random_word(rng, w.size(), {kA, kB})});
  } else if (route == "runseq_power") {
    std::size_t c = std::max<std::size_t>(2, size / 2);
    RunSeq ra;
    for (std::size_t i = 0; i < c; ++i) {
      ra.runs.push_back(Run{kA, 1, true});
      ra.runs.push_back(Run{kB, 1, true});
    }
    plan.a = to_ast(CanonicalForm{std::move(ra)});
    plan.b = plus(word_branch({kA, kB}));
  } else if (route == "dict_dict") {
    const std::size_t len = 8;
    std::size_t q = std::max<std::size_t>(2, size / (2 * len));
    Word shared = random_word(rng, len, {kA, kB, kC});
    auto side = [&] {
      std::vector<Word> words;
      for (std::size_t i = 0; i + 1 < q; ++i)
        words.push_back(random_word(rng, len, {kA, kB, kC}));
      words.insert(words.begin() + uni(rng, 0, words.size()), shared);
      return dict_ast(std::move(words));
    };
    plan.a = side();
    plan.b = side();
  } else if (route == "power_dict") {
    std::size_t t = std::max<std::size_t>(2, size / 5);
    Word pat = alternating_word(t, kA, kB);
    Word twice = pat;
    twice.insert(twice.end(), pat.begin(), pat.end());
    plan.a = plus(word_branch(pat));
    plan.b = dict_ast({twice, random_word(rng, 2 * t, {kA, kB})});
  } else if (route == "power_power") {
    std::size_t d = std::max<std::size_t>(2, size / 5);
    Word root = alternating_word(d, kA, kB);
    if (d % 2 == 0) root[d - 1] = kC;  // keep the word primitive
    Word t2 = root, t3 = root;
    t2.insert(t2.end(), root.begin(), root.end());
    t3.insert(t3.end(), t2.begin(), t2.end());
    plan.a = plus(word_branch(t2));
    plan.b = plus(word_branch(t3));
  } else if (route == "closure_possets") {
    plan.expected_algo = "closure";
    plan.a = plus(alt({leaf(kA), leaf(kB), leaf(kC)}));
    std::size_t k = std::max<std::size_t>(2, 2 * size / 3);
    Word carrier = random_word(rng, k, {kA, kB, kC});
    plan.b = to_ast(CanonicalForm{sets_through(rng, carrier)});
  } else if (route == "closure_starseq") {
    plan.expected_algo = "closure";
    plan.a = star(alt({leaf(kA), leaf(kB), leaf(kC)}));
    std::size_t k = std::max<std::size_t>(3, size);
    StarSeq s;
    s.items.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      LetterId c = pick(rng, {kA, kB, kC});
      bool starred = i == 1 || (i != 0 && uni(rng, 0, 9) < 7);
      s.items.push_back({c, starred});
    }
    plan.b = to_ast(CanonicalForm{std::move(s)});
  } else if (route == "runalt_possets") {
    plan.expected_algo = "runalt";
    plan.a = runalt_side();
    std::size_t k = std::max<std::size_t>(2, 2 * size / 3);
    PosSets p;
    p.sets.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<LetterId> s{kA};
      if (j == 0 || uni(rng, 0, 1) == 0) s.push_back(pick(rng, {kB, kC}));
      p.sets.push_back(std::move(s));
    }
    plan.b = to_ast(CanonicalForm{std::move(p)});
  } else if (route == "runalt_dict") {
    plan.expected_algo = "runalt";
    plan.a = runalt_side();
    std::size_t len = std::max<std::size_t>(2, size / 2);
    plan.b = dict_ast({Word(len, kA), alternating_word(len, kB, kC)});
  } else if (route == "star_reduce_dict") {
    plan.expected_algo = "star_reduce+power_dict";
    std::size_t t = std::max<std::size_t>(2, size / 5);
    Word pat = alternating_word(t, kA, kB);
    Word twice = pat;
    twice.insert(twice.end(), pat.begin(), pat.end());
    plan.a = star(word_branch(pat));
    plan.b = dict_ast({twice, random_word(rng, 2 * t, {kA, kB})});
  } else if (route == "baseline_hard") {
    plan.expected_algo = "baseline";
    plan.expect_empty = true;
    auto pair = gen_hard_family(size / 2, rng());
    plan.a = std::move(pair.first);
    plan.b = std::move(pair.second);
  } else {
    throw std::invalid_argument("unknown scaling route: " + route);
  }
  return plan;
}

void check_answer(const PairPlan& plan, const Answer& ans,
                  const std::string& route, std::size_t size) {
  auto fail = [&](const std::string& what) {
    throw std::logic_error("scaling self-check failed for route " + route +
                           " at size " + std::to_string(size) + ": " + what);
  };
  if (ans.algo != plan.expected_algo)
    fail("expected algo " + plan.expected_algo + ", got " + ans.algo);
  if (plan.expect_empty) {
    if (ans.nonempty()) fail("expected an empty intersection");
    return;
  }
  if (!ans.nonempty()) fail("expected a nonempty intersection");
  if (!ans.witness) fail("nonempty answer without a witness");
  if (!nfa_member(*ans.witness, plan.a)) fail("witness rejected by left side");
  if (!nfa_member(*ans.witness, plan.b)) fail("witness rejected by right side");
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void write_record(std::ostream& os, const BenchRecord& r) {
  char sec[32];
  std::snprintf(sec, sizeof sec, "%.9f", r.seconds);
  os << r.route << ',' << r.size_m << ',' << r.size_n << ',' << r.trial << ','
     << sec << ',' << (r.verdict == Verdict::NonEmpty ? "NONEMPTY" : "EMPTY")
     << ',' << r.seed << '\n';
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t size) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (size + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

const std::vector<std::string>& scaling_route_ids() {
  static const std::vector<std::string> ids = {
      "possets_possets", "possets_dict",    "possets_power",
      "runseq_runseq",   "runseq_dict",     "runseq_power",
      "dict_dict",       "power_dict",      "power_power",
      "closure_possets", "closure_starseq", "runalt_possets",
      "runalt_dict",     "star_reduce_dict", "baseline_hard"};
  return ids;
}

bool is_baseline_route(const std::string& route_id) {
  return route_id == "baseline_hard";
}

std::vector<std::size_t> default_linear_sizes() {
  return {10000, 31623, 100000, 316228, 1000000};
}

std::vector<std::size_t> default_baseline_sizes() {
  // Starts high enough that product exploration dominates the fixed per-call
  // work; the top size visits ~7.7M state pairs, inside the dispatch budget.
  return {1000, 1682, 2828, 4757, 8000};
}

ScalingReport run_scaling(const std::string& route_id,
                          const std::vector<std::size_t>& sizes, int trials,
                          std::uint64_t seed, std::ostream* csv) {
  const auto& ids = scaling_route_ids();
  if (std::find(ids.begin(), ids.end(), route_id) == ids.end())
    throw std::invalid_argument("unknown scaling route: " + route_id);
  if (sizes.empty()) throw std::invalid_argument("no sizes given");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");

  ScalingReport report;
  report.route = route_id;

  std::vector<double> xs, ys;
  for (std::size_t size : sizes) {
    const std::uint64_t size_seed = mix(seed, size);
    std::mt19937_64 rng = rng_for(size_seed, 0x5ca1e);
    PairPlan plan = build_pair(route_id, size, rng);
    const std::size_t m = ast_size(plan.a);
    const std::size_t n = ast_size(plan.b);

    // Untimed run: pin the route taken and check the witness.
    check_answer(plan, dispatch(plan.a, plan.b), route_id, size);

    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(trials));
    for (int trial = 0; trial < trials; ++trial) {
      auto t0 = std::chrono::steady_clock::now();
      Answer ans = dispatch(plan.a, plan.b);
      auto t1 = std::chrono::steady_clock::now();
      double secs = std::chrono::duration<double>(t1 - t0).count();
      times.push_back(secs);
      BenchRecord rec{route_id, m,   n,        trial,
                      secs,     ans.verdict, size_seed};
      if (csv) write_record(*csv, rec);
      report.records.push_back(std::move(rec));
    }

    double med = median_of(times);
    if (med < kClockFloorSeconds) {
      report.warnings.push_back(
          "size " + std::to_string(size) +
          ": median below timer resolution, point dropped from the fit");
      continue;
    }
    xs.push_back(std::log(static_cast<double>(m + n)));
    ys.push_back(std::log(med));
  }

  report.points = static_cast<int>(xs.size());
  if (xs.size() < 2) {
    report.warnings.push_back("fewer than two usable sizes; no slope fitted");
    return report;
  }

  double xbar = 0, ybar = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= static_cast<double>(xs.size());
  ybar /= static_cast<double>(xs.size());
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  report.slope = sxy / sxx;
  if (xs.size() > 2) {
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double r = ys[i] - ybar - report.slope * (xs[i] - xbar);
      ss += r * r;
    }
    report.slope_stderr =
        std::sqrt(ss / (static_cast<double>(xs.size()) - 2.0) / sxx);
  }
  return report;
}

void write_csv_header(std::ostream& os) {
  os << "route,size_m,size_n,trial,seconds,verdict,seed\n";
}

}  // namespace rxmeet
