#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "cwsqec/pauli.hpp"

namespace {

cwsqec::PauliOperator random_pauli(size_t n, std::mt19937_64& rng) {
  cwsqec::PauliOperator p(n);
  for (size_t i = 0; i < n; i++) {
    p.x.set(i, (rng() & 1) != 0);
    p.z.set(i, (rng() & 1) != 0);
  }
  return p.hermitian_form();
}

void bm_pauli_multiply(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  std::mt19937_64 rng(23);
  const cwsqec::PauliOperator a = random_pauli(n, rng);
  const cwsqec::PauliOperator b = random_pauli(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(bm_pauli_multiply)->Arg(16)->Arg(64)->Arg(256);

void bm_pauli_conjugate(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  std::mt19937_64 rng(29);
  const cwsqec::PauliOperator p = random_pauli(n, rng);
  const cwsqec::PauliOperator t = random_pauli(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(p.conjugated_by(t));
}
BENCHMARK(bm_pauli_conjugate)->Arg(16)->Arg(64)->Arg(256);

void bm_pauli_round_trip(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  std::mt19937_64 rng(31);
  const std::string text = random_pauli(n, rng).str();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cwsqec::PauliOperator::from_string(n, text));
  }
}
BENCHMARK(bm_pauli_round_trip)->Arg(16)->Arg(64);

}  // namespace
