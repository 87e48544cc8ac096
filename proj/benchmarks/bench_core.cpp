#include <benchmark/benchmark.h>

#include <algorithm>
#include <stdexcept>

#include "dcfl/family.hpp"
#include "dcfl/iterative.hpp"
#include "dcfl/lda.hpp"
#include "dcfl/pumping.hpp"
#include "dcfl/stack_history.hpp"
#include "dcfl/zoo.hpp"

namespace {

dcfl::Dpda make_anbn() {
  dcfl::DpdaBuilder b(U"ab", U"AZ", U'Z');
  b.initial("start").accept("yes").reject("no");
  b.step("start", dcfl::kLeftMarker, U'Z', "as", U"Z");
  b.step("as", U'a', U'Z', "as", U"AZ");
  b.step("as", U'a', U'A', "as", U"AA");
  b.step("as", U'b', U'A', "bs", U"");
  b.step("bs", U'b', U'A', "bs", U"");
  b.step("as", dcfl::kRightMarker, U'Z', "yes", U"Z");
  b.step("bs", dcfl::kRightMarker, U'Z', "yes", U"Z");
  b.fill_rejects("no");
  return b.build();
}

dcfl::Word block_word(std::size_t n) {
  dcfl::Word w(n, U'a');
  w.append(dcfl::Word(n, U'b'));
  return w;
}

dcfl::ZooEntry entry_named(const std::string& name) {
  for (auto& e : dcfl::standard_entries())
    if (e.name == name) return e;
  throw std::runtime_error("no catalogue entry named " + name);
}

void BM_MachineRun(benchmark::State& state) {
  const dcfl::Dpda m = make_anbn();
  const dcfl::Word w = block_word(static_cast<std::size_t>(state.range(0)));
  dcfl::RunOptions opts;
  opts.collect_trace = false;
  for (auto _ : state) benchmark::DoNotOptimize(dcfl::run(m, w, opts).accepted);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MachineRun)->RangeMultiplier(4)->Range(8, 512)->Complexity(benchmark::oN);

void BM_StackHistory(benchmark::State& state) {
  const dcfl::Dpda m = make_anbn();
  const dcfl::Word w = block_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const dcfl::StackHistory h = dcfl::record_history(m, w);
    benchmark::DoNotOptimize(h.boundaries());
  }
}
BENCHMARK(BM_StackHistory)->RangeMultiplier(4)->Range(8, 512);

void BM_GoodPairEnumeration(benchmark::State& state) {
  const dcfl::Dpda m = make_anbn();
  const dcfl::StackHistory h =
      dcfl::record_history(m, block_word(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(dcfl::find_good_pairs(h, 8).size());
}
BENCHMARK(BM_GoodPairEnumeration)->RangeMultiplier(4)->Range(8, 256);

void BM_RefutationSearch(benchmark::State& state) {
  const dcfl::ZooEntry entry = entry_named("L2-union");
  const dcfl::Word x_prime = block_word(5).substr(0, 9);
  const dcfl::Word y(1, U'b');
  const dcfl::Word z(6, U'b');
  for (auto _ : state) {
    auto windowed = dcfl::prefix_interleaved_split(*entry.spec, x_prime, y, z, 4, 3);
    benchmark::DoNotOptimize(windowed.has_value());
    auto synced = dcfl::prefix_suffix_synced_split(*entry.spec, x_prime, y, z, 4, 3);
    benchmark::DoNotOptimize(synced.has_value());
  }
}
BENCHMARK(BM_RefutationSearch);

void BM_WitnessSearch(benchmark::State& state) {
  const dcfl::ZooEntry entry = entry_named("L2-union");
  const dcfl::SharedPrefixFamily family{
      *entry.spec, 4, dcfl::Word(5, U'a'),
      {dcfl::Word(5, U'b'), dcfl::Word(10, U'b'), dcfl::Word(5, U'b')}, 3, 0};
  for (auto _ : state)
    benchmark::DoNotOptimize(dcfl::shared_prefix_witness_search(family).has_value());
}
BENCHMARK(BM_WitnessSearch);

void BM_TwoWayRun(benchmark::State& state) {
  const dcfl::Lda m = dcfl::make_zigzag_anbn();
  const dcfl::Word w = block_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dcfl::run_lda(m, w).accepted);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TwoWayRun)->RangeMultiplier(4)->Range(8, 128)->Complexity(benchmark::oNSquared);

void BM_CatalogueValidation(benchmark::State& state) {
  const dcfl::ZooEntry entry = entry_named("anbncn");
  for (auto _ : state) {
    const dcfl::AgreementReport report = dcfl::cross_validate(entry, 5);
    benchmark::DoNotOptimize(report.checked);
  }
}
BENCHMARK(BM_CatalogueValidation);

void BM_DescriptionSize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dcfl::des(dcfl::pal_family(n)));
}
BENCHMARK(BM_DescriptionSize)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
