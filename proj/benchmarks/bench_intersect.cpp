// Micro-benchmarks for the intersection routes. The scaling harness in the
// library (and `rxmeet bench`) fits slopes over larger ladders; these runs
// give quick per-route timings on generated inputs.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <utility>

#include "rxmeet/gen.hpp"
#include "rxmeet/intersect.hpp"
#include "rxmeet/nfa.hpp"
#include "rxmeet/parse.hpp"

namespace {

using namespace rxmeet;

// Generated pair expected to hit one concrete route; the check runs once
// outside the timed loop.
void bench_route(benchmark::State& state, const std::string& gen_type,
                 const std::string& algo) {
  const auto n = static_cast<std::size_t>(state.range(0));
  NodePtr a = gen_random_regex(gen_type, n, 3, 11);
  NodePtr b = gen_random_regex(gen_type, n, 3, 22);
  if (dispatch(a, b).algo != algo) {
    state.SkipWithError(("pair did not route to " + algo).c_str());
    return;
  }
  for (auto _ : state) {
    Answer ans = dispatch(a, b);
    benchmark::DoNotOptimize(ans);
  }
  state.SetComplexityN(static_cast<std::int64_t>(2 * n));
}

void BM_possets_possets(benchmark::State& state) {
  bench_route(state, "concat_alt", "possets_possets");
}

void BM_runseq_runseq(benchmark::State& state) {
  bench_route(state, "concat_plus", "runseq_runseq");
}

void BM_dict_dict(benchmark::State& state) {
  bench_route(state, "alt_concat", "dict_dict");
}

void BM_baseline_hard(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto [a, b] = gen_hard_family(n, 1);
  for (auto _ : state) {
    Answer ans = dispatch(a, b);
    benchmark::DoNotOptimize(ans);
  }
  state.SetComplexityN(static_cast<std::int64_t>(2 * n));
}

void BM_glushkov(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  NodePtr t = gen_random_regex("concat_alt", n, 3, 7);
  for (auto _ : state) {
    Nfa nfa = glushkov(t);
    benchmark::DoNotOptimize(nfa);
  }
}

void BM_parse_render(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::string text = render(gen_random_regex("concat_plus", n, 3, 5));
  for (auto _ : state) {
    NodePtr t = parse(text);
    benchmark::DoNotOptimize(t);
  }
}

void BM_build_reduction(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  OvInstance inst = gen_ov_instance(m, m + 1, 5, 99, true);
  NormalizeResult nr = normalize_instance(inst);
  const auto& norm = std::get<NormalizedOv>(nr);
  for (auto _ : state) {
    Reduction red = build_reduction(norm);
    benchmark::DoNotOptimize(red);
  }
}

}  // namespace

BENCHMARK(BM_possets_possets)->RangeMultiplier(8)->Range(1 << 10, 1 << 16)
    ->Unit(benchmark::kMicrosecond)->Complexity(benchmark::oN);
BENCHMARK(BM_runseq_runseq)->RangeMultiplier(8)->Range(1 << 10, 1 << 16)
    ->Unit(benchmark::kMicrosecond)->Complexity(benchmark::oN);
BENCHMARK(BM_dict_dict)->RangeMultiplier(8)->Range(1 << 10, 1 << 16)
    ->Unit(benchmark::kMicrosecond)->Complexity(benchmark::oN);
BENCHMARK(BM_baseline_hard)->RangeMultiplier(2)->Range(128, 2048)
    ->Unit(benchmark::kMicrosecond)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_glushkov)->RangeMultiplier(8)->Range(1 << 10, 1 << 16)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_parse_render)->RangeMultiplier(8)->Range(1 << 10, 1 << 16)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_build_reduction)->DenseRange(2, 6, 2)
    ->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
