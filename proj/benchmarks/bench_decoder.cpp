#include <benchmark/benchmark.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "cwsqec/decoder.hpp"
#include "cwsqec/graph_code.hpp"
#include "cwsqec/pauli.hpp"

namespace {

// Ring graph on n qubits with codewords {0^n, 1^n}.
cwsqec::CwsCode ring_code(size_t n) {
  std::vector<std::pair<size_t, size_t>> edges;
  for (size_t i = 1; i <= n; i++) edges.emplace_back(i, i % n + 1);
  cwsqec::BinaryVector ones(n);
  for (size_t i = 0; i < n; i++) ones.set(i, true);
  return cwsqec::CwsCode{cwsqec::Graph::from_edges(n, edges),
                         {cwsqec::BinaryVector(n), ones},
                         std::nullopt};
}

void bm_classical_map(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  const cwsqec::CwsCode code = ring_code(n);
  const cwsqec::PauliOperator e = cwsqec::PauliOperator::single(n, 'Y', n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(classical_map(code.graph, e));
}
BENCHMARK(bm_classical_map)->Arg(8)->Arg(64)->Arg(256);

void bm_cluster_measurement(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  const cwsqec::CwsCode code = ring_code(n);
  const cwsqec::ClusterGroup group = build_cluster_group(code, {1, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(cluster_measurement(code, group, true));
  }
}
BENCHMARK(bm_cluster_measurement)->DenseRange(5, 12, 1);

// The error sits on the last qubit, so both strategies walk their full
// budget before identifying it; channel construction is part of each
// iteration because decoding collapses the channel state.
void bm_clustered_decode(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  const cwsqec::CwsCode code = ring_code(n);
  const cwsqec::PauliOperator error = cwsqec::PauliOperator::single(n, 'Z', n);
  const auto coefficients = cwsqec::GraphBasisChannel::random_coefficients(2, 5);
  for (auto _ : state) {
    cwsqec::GraphBasisChannel channel(code, error, coefficients, 1);
    benchmark::DoNotOptimize(clustered_decode(code, 1, channel));
  }
}
BENCHMARK(bm_clustered_decode)->Arg(5)->Arg(7)->Arg(9)->Arg(11);

void bm_exhaustive_decode(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  const cwsqec::CwsCode code = ring_code(n);
  const cwsqec::PauliOperator error = cwsqec::PauliOperator::single(n, 'Z', n);
  const auto coefficients = cwsqec::GraphBasisChannel::random_coefficients(2, 5);
  for (auto _ : state) {
    cwsqec::GraphBasisChannel channel(code, error, coefficients, 1);
    benchmark::DoNotOptimize(exhaustive_decode(code, 1, channel));
  }
}
BENCHMARK(bm_exhaustive_decode)->Arg(5)->Arg(7)->Arg(9)->Arg(11);

void bm_clustered_decode_t2(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  const cwsqec::CwsCode code = ring_code(n);
  const cwsqec::PauliOperator error =
      cwsqec::PauliOperator::from_string(n, "Z" + std::to_string(n - 1) + " Z" + std::to_string(n));
  const auto coefficients = cwsqec::GraphBasisChannel::random_coefficients(2, 5);
  for (auto _ : state) {
    cwsqec::GraphBasisChannel channel(code, error, coefficients, 1);
    benchmark::DoNotOptimize(clustered_decode(code, 2, channel));
  }
}
BENCHMARK(bm_clustered_decode_t2)->Arg(7)->Arg(9);

}  // namespace
