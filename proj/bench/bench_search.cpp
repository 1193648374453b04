#include <benchmark/benchmark.h>

#include "ryser/construct.hpp"
#include "ryser/corpus.hpp"
#include "ryser/plane.hpp"
#include "ryser/solver.hpp"

using namespace ryser;

namespace {

const PartiteHypergraph& uniform_h(std::uint32_t q) {
  static const PartiteHypergraph h4 = uniformize(build_H(default_spec(truncate(build_plane(4)), 0)));
  static const PartiteHypergraph h5 = uniformize(build_H(default_spec(truncate(build_plane(5)), 0)));
  return q == 4 ? h4 : h5;
}

const PartiteHypergraph& big_s() {
  static const PartiteHypergraph s =
      extract_S_subhypergraph(build_H(select_F_by_profile(truncate(build_plane(25)), 0, DegreeProfile{26, {4}})));
  return s;
}

const PartiteHypergraph& t8() {
  static const PartiteHypergraph t = truncate(build_plane(7));
  return t;
}

// state.range(0): 1 = serial reference, 0 = OpenMP default, n = n workers.
void BM_CoverEnumerate(benchmark::State& state, const PartiteHypergraph& (*get)()) {
  SolverOptions o;
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto res = cover_number(get(), true, o);
    benchmark::DoNotOptimize(res.tau);
  }
}

void BM_CoverWitness(benchmark::State& state) {
  SolverOptions o;
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto res = cover_number(uniform_h(5), false, o);
    benchmark::DoNotOptimize(res.tau);
  }
}

void BM_IntersectionProfileSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::intersection_size_profile(big_s()).size());
}

void BM_IntersectionProfileParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(intersection_size_profile(big_s()).size());
}

const PartiteHypergraph& h4() { return uniform_h(4); }
const PartiteHypergraph& h5() { return uniform_h(5); }

}  // namespace

BENCHMARK_CAPTURE(BM_CoverEnumerate, uniform_H_q4, h4)->Arg(1)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CoverEnumerate, uniform_H_q5, h5)->Arg(1)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CoverEnumerate, T8, t8)->Arg(1)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverWitness)->Arg(1)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntersectionProfileSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntersectionProfileParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
