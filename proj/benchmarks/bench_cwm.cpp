#include <benchmark/benchmark.h>

#include <random>

#include "cwm/circulant.hpp"
#include "cwm/olp.hpp"
#include "cwm/prune.hpp"
#include "cwm/search.hpp"

using namespace cwm;

namespace {

const char* cw_31_16 = "- 0 0 0 0 - 0 + 0 - - + 0 + + 0 0 0 - + - + + 0 0 + + 0 + 0 0";

OlpPair pair(const char* p, const char* n) { return {parse_olp(p), parse_olp(n)}; }

CirculantRow random_row(Residue n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-1, 1);
  std::vector<std::int8_t> c(static_cast<std::size_t>(n));
  for (auto& x : c) x = static_cast<std::int8_t>(coeff(rng));
  return CirculantRow(std::move(c));
}

void BM_Verify31(benchmark::State& state) {
  const auto row = parse_sign_string(cw_31_16);
  for (auto _ : state) benchmark::DoNotOptimize(verify_cw(row));
}
BENCHMARK(BM_Verify31);

void BM_VerifyLifted(benchmark::State& state) {
  const auto row = lift(parse_sign_string(cw_31_16), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_cw(row));
}
BENCHMARK(BM_VerifyLifted)->Arg(3)->Arg(21)->Arg(63);

void BM_CanonicalForm(benchmark::State& state) {
  const auto row = random_row(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(row));
}
BENCHMARK(BM_CanonicalForm)->Arg(31)->Arg(63)->Arg(315);

void BM_FeasiblePairs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(feasible_pairs(16, 2));
}
BENCHMARK(BM_FeasiblePairs);

void BM_Prune(benchmark::State& state) {
  const auto pairs = feasible_pairs(16, 2);
  const auto level = state.range(0) ? PruneLevel::counting : PruneLevel::existence;
  for (auto _ : state) benchmark::DoNotOptimize(prune(pairs, level, 2));
}
BENCHMARK(BM_Prune)->Arg(0)->Arg(1);

void BM_Search31(benchmark::State& state) {
  const SearchSpec spec{31, 16, 2, pair("5^2", "1^1 5^1")};
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(spec));
}
BENCHMARK(BM_Search31)->Unit(benchmark::kMicrosecond);

void BM_Search63(benchmark::State& state) {
  const SearchSpec spec{63, 16, 2, pair("1^1 3^1 6^1", "6^1")};
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(spec));
}
BENCHMARK(BM_Search63)->Unit(benchmark::kMicrosecond);

void BM_Search315(benchmark::State& state) {
  const SearchSpec spec{315, 16, 2, pair("4^1 6^1", "2^1 4^1")};
  const SearchOptions options{static_cast<unsigned>(state.range(0)), false};
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(spec, options));
}
BENCHMARK(BM_Search315)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond)->UseRealTime();

void BM_SearchClassification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_classification(16, state.range(0)));
}
BENCHMARK(BM_SearchClassification)->Arg(63)->Arg(105)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
