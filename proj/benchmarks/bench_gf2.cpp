#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "cwsqec/gf2.hpp"

namespace {

cwsqec::BinaryVector random_vector(size_t n, std::mt19937_64& rng) {
  cwsqec::BinaryVector v(n);
  for (size_t i = 0; i < n; i++) v.set(i, (rng() & 1) != 0);
  return v;
}

cwsqec::BinaryMatrix random_matrix(size_t rows, size_t cols, uint64_t seed) {
  std::mt19937_64 rng(seed);
  cwsqec::BinaryMatrix m(cols);
  for (size_t r = 0; r < rows; r++) m.append_row(random_vector(cols, rng));
  return m;
}

void bm_gf2_rank(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  const cwsqec::BinaryMatrix m = random_matrix(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(cwsqec::gf2_rank(m));
}
BENCHMARK(bm_gf2_rank)->Arg(32)->Arg(128)->Arg(512);

void bm_gf2_solve(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  const cwsqec::BinaryMatrix m = random_matrix(n / 2, n, 11);
  std::mt19937_64 rng(13);
  // A solvable target: a random combination of the rows.
  cwsqec::BinaryVector target(n);
  for (size_t r = 0; r < m.row_count(); r++) {
    if ((rng() & 1) != 0) target ^= m.rows[r];
  }
  for (auto _ : state) benchmark::DoNotOptimize(cwsqec::gf2_solve(m, target));
}
BENCHMARK(bm_gf2_solve)->Arg(32)->Arg(128)->Arg(512);

void bm_vector_dot(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  std::mt19937_64 rng(17);
  const cwsqec::BinaryVector a = random_vector(n, rng);
  const cwsqec::BinaryVector b = random_vector(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.dot(b));
}
BENCHMARK(bm_vector_dot)->Arg(64)->Arg(1024);

}  // namespace
