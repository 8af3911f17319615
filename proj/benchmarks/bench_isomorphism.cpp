#include <benchmark/benchmark.h>

#include "orbitspace/corpus.hpp"
#include "orbitspace/isomorphism.hpp"

using namespace orbitspace;

namespace {

void BM_CompareExtended(benchmark::State& state) {
  const auto a = labeled_quotient(IndexedModel(corpus_model("fig05-a").value()),
                                  QuotientLevel::Extended, RelationName::LeqPartial);
  const auto b = labeled_quotient(IndexedModel(corpus_model("fig05-b").value()),
                                  QuotientLevel::Extended, RelationName::LeqPartial);
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, b));
}
BENCHMARK(BM_CompareExtended);

// Uniformly labelled antichain with a cycle of relations: every candidate
// passes the cheap filters, so the search does the work.
LabeledPoset ring(std::size_t n) {
  LabeledPoset p;
  p.relation.assign(n, IndexSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    p.elements.push_back("v" + std::to_string(i));
    p.labels.push_back("X");
    p.relation[i].insert(i);
    p.relation[i].insert((i + 1) % n);
  }
  return p;
}

void BM_CompareRing(benchmark::State& state) {
  const auto a = ring(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, a));
}
BENCHMARK(BM_CompareRing)->Arg(8)->Arg(16)->Arg(32)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
