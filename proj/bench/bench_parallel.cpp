// Serial reference kernels against their OpenMP versions: common refinement
// of tropical hypersurfaces and the traversal frontier.

#include "tropfan/io.hpp"
#include "tropfan/tropical.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <iterator>

using namespace tropfan;

namespace {

InputDocument load(const std::string& name) {
  std::ifstream in(std::string(TROPFAN_BENCH_DATA) + "/" + name);
  return parse_document(std::string(std::istreambuf_iterator<char>(in), {}));
}

const Ideal& hankel() {
  static const Ideal I = [] {
    const InputDocument d = load("hankel4.in");
    return Ideal(d.ring, d.polynomials);
  }();
  return I;
}

const GroebnerConePair& hankel_start() {
  static const GroebnerConePair p = starting_cone(hankel(), 1);
  return p;
}

// Refinement of two partial prevarieties of the Hankel minors.
std::pair<Fan, Fan> refinement_inputs() {
  const auto& g = hankel().generators;
  Fan a = tropical_hypersurface(g[0]), b = tropical_hypersurface(g[1]);
  a = common_refinement_serial(a, tropical_hypersurface(g[2]));
  b = common_refinement_serial(b, tropical_hypersurface(g[3]));
  return {a, b};
}

void BM_RefinementSerial(benchmark::State& state) {
  const auto [a, b] = refinement_inputs();
  for (auto _ : state) benchmark::DoNotOptimize(common_refinement_serial(a, b));
  state.counters["pairs"] = static_cast<double>(a.cones.size() * b.cones.size());
}

void BM_RefinementParallel(benchmark::State& state) {
  const auto [a, b] = refinement_inputs();
  for (auto _ : state) benchmark::DoNotOptimize(common_refinement(a, b));
  state.counters["pairs"] = static_cast<double>(a.cones.size() * b.cones.size());
}

void BM_TraverseSerial(benchmark::State& state) {
  TraversalOptions o;
  o.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(traverse_serial(hankel_start(), o));
}

void BM_TraverseParallel(benchmark::State& state) {
  TraversalOptions o;
  o.seed = 1;
  o.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(traverse(hankel_start(), o));
}

}  // namespace

BENCHMARK(BM_RefinementSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RefinementParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TraverseSerial)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK(BM_TraverseParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(2)->UseRealTime();

BENCHMARK_MAIN();
