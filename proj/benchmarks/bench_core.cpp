// Microbenchmarks for the hot paths: exact row reduction, subspace
// intersection, structure-constant construction, Weyl enumeration,
// degeneration limits and component enumeration.

#include <benchmark/benchmark.h>

#include "lagr/degen.hpp"
#include "lagr/lagrange.hpp"

namespace {

using lagr::Mat;
using lagr::Q;
using lagr::Rng;
using lagr::Vec;

Mat<Q> random_matrix(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  Mat<Q> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational();
  return m;
}

void BM_rref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Mat<Q> m = random_matrix(n, n, 0xabcdef);
  for (auto _ : state) {
    Mat<Q> work = m;
    benchmark::DoNotOptimize(lagr::rref(work));
    benchmark::DoNotOptimize(work);
  }
}
BENCHMARK(BM_rref)->Arg(10)->Arg(20)->Arg(40);

void BM_intersect(benchmark::State& state) {
  const int ambient = 16;
  const auto a = lagr::canonicalize(random_matrix(8, ambient, 11), ambient);
  const auto b = lagr::canonicalize(random_matrix(8, ambient, 22), ambient);
  for (auto _ : state) benchmark::DoNotOptimize(lagr::intersect(a, b));
}
BENCHMARK(BM_intersect);

void BM_chevalley(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lagr::build_chevalley('A', rank));
}
BENCHMARK(BM_chevalley)->Arg(2)->Arg(3);

void BM_weyl(benchmark::State& state) {
  const auto rs = lagr::build_root_system('A', 3);
  for (auto _ : state) benchmark::DoNotOptimize(lagr::weyl_enumerate(rs));
}
BENCHMARK(BM_weyl);

void BM_limit(benchmark::State& state) {
  const auto g = lagr::build_chevalley('A', 2);
  const auto s = lagr::make_signature(g.rs, {1, 1}, lagr::identity_involution(g.rs));
  const auto l = lagr::build_l_d_sigma(g, s);
  const auto grading = lagr::grading_from_H(g, Vec<Q>{Q(1), Q(1)});
  for (auto _ : state) benchmark::DoNotOptimize(lagr::limit_subspace(l, grading));
}
BENCHMARK(BM_limit);

void BM_components(benchmark::State& state) {
  const auto g = lagr::build_chevalley('A', 2);
  for (auto _ : state) benchmark::DoNotOptimize(lagr::enumerate_components(g));
}
BENCHMARK(BM_components);

}  // namespace

BENCHMARK_MAIN();
