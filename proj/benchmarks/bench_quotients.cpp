#include <benchmark/benchmark.h>

#include "orbitspace/corpus.hpp"
#include "orbitspace/morse.hpp"
#include "orbitspace/random_model.hpp"
#include "orbitspace/relations.hpp"

using namespace orbitspace;

namespace {

void BM_AwoRandom(benchmark::State& state) {
  const auto models = random_models(7, 64);
  std::vector<IndexedModel> indexed(models.begin(), models.end());
  for (auto _ : state)
    for (const auto& m : indexed) benchmark::DoNotOptimize(abstract_weak_orbit_space(m));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(indexed.size()));
}
BENCHMARK(BM_AwoRandom);

void BM_PartialRelationCorpus(benchmark::State& state) {
  std::vector<IndexedModel> indexed;
  for (const auto& id : corpus_ids()) indexed.emplace_back(corpus_model(id).value());
  for (auto _ : state)
    for (const auto& m : indexed)
      benchmark::DoNotOptimize(compute_relation(m, RelationName::LeqPartial, QuotientLevel::Awo));
}
BENCHMARK(BM_PartialRelationCorpus);

void BM_ExtendedHamDisk(benchmark::State& state) {
  const IndexedModel m(corpus_model("ham-disk").value());
  for (auto _ : state) benchmark::DoNotOptimize(extended_weak_orbit_space(m));
}
BENCHMARK(BM_ExtendedHamDisk);

void BM_MorseGraphRandom(benchmark::State& state) {
  const auto models = random_models(8, 64);
  std::vector<IndexedModel> indexed(models.begin(), models.end());
  for (auto _ : state)
    for (const auto& m : indexed) benchmark::DoNotOptimize(morse_graph(m));
}
BENCHMARK(BM_MorseGraphRandom);

}  // namespace

BENCHMARK_MAIN();
