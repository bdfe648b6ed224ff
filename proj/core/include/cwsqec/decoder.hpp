#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cwsqec/channel.hpp"
#include "cwsqec/counts.hpp"
#include "cwsqec/graph_code.hpp"
#include "cwsqec/measurement.hpp"
#include "cwsqec/ust.hpp"

namespace cwsqec {

/* Sorted 1-based qubit indices. */
using Cluster = std::vector<size_t>;

/* All t-subsets of {1..n} in lexicographic order. */
std::vector<Cluster> enumerate_clusters(size_t n, size_t t);

/*
 * Classical images of the errors supported on one cluster: the span of
 * Cl(X_i), Cl(Z_i) over the cluster's qubits. generators holds the
 * first-seen independent rows d_alpha; pivot_errors[alpha] is the
 * single-qubit error the row came from, so products of pivot errors realize
 * every class in the span.
 */
struct ClusterGroup {
  Cluster cluster;
  std::vector<BinaryVector> generators;
  std::vector<PauliOperator> pivot_errors;

  size_t s() const { return generators.size(); }
};

ClusterGroup build_cluster_group(const CwsCode& code, const Cluster& cluster);

/*
 * M_A: one union-of-subspaces measurement accepting exactly the states
 * reachable from the code space by errors supported on the cluster. With
 * merge_kernel the classical kernel of the codeword set joins the group;
 * that changes the circuit cost, not the accepted subspace, since kernel
 * translates of the code space coincide with it.
 */
MeasurementExpr cluster_measurement(const CwsCode& code, const ClusterGroup& group,
                                    bool merge_kernel = false);

/* 2 L (n+3) over the L leaves of the expression: the per-structure ceiling
 * on gate_cost(expr).two_qubit_total. */
uint64_t structure_gate_bound(const MeasurementExpr& expr, size_t n);

/* 2 K (n-1)(n+3): the dimension-level ceiling a kernel-merged measurement
 * of a K-dimensional code stays under. */
uint64_t dimension_gate_bound(size_t dimension, size_t n);

struct TranscriptEntry {
  std::string id;
  int outcome = 0;
  bool deterministic = false;
  uint64_t two_qubit_gates = 0;
};

struct DecodeReport {
  std::string strategy;
  size_t n = 0;
  size_t dimension = 0;
  size_t t = 0;

  bool corrected = false;      // the decoder committed to a recovery
  bool uncorrectable = false;  // every hypothesis was rejected
  bool consistent = true;      // all observed outcomes were deterministic
  std::optional<BinaryVector> identified_class;
  std::optional<PauliOperator> recovery;
  std::optional<Cluster> winning_cluster;  // clustered strategy only

  size_t measurements_used = 0;
  uint64_t gate_total = 0;
  uint64_t max_measurement_gates = 0;
  uint64_t max_measurement_ancillas = 0;

  bool structure_bounds_ok = true;  // every measurement under its 2L(n+3)
  uint64_t theorem_bound = 0;       // 2 K (n-1)(n+3)
  bool theorem_bound_ok = true;

  uint64_t exhaustive_bound = 0;  // worst-case measurements, exhaustive
  uint64_t clustered_bound = 0;   // worst-case measurements, clustered

  std::vector<TranscriptEntry> transcript;
};

struct DecoderOptions {
  bool merge_group = false;  // fold the codeword kernel into every group
  bool check_costs = true;   // account gate costs and ceilings per measurement
};

/*
 * Screens the corrupted state against E_r Q for one minimal-weight
 * representative E_r of every classical class of weight <= t errors,
 * identity first, stopping at the first +1. The screen is the kernel-merged
 * code measurement conjugated by E_r. All representatives rejected means
 * the state left the correctable set entirely.
 */
DecodeReport exhaustive_decode(const CwsCode& code, size_t t, MeasurementChannel& channel,
                               const DecoderOptions& options = {});

/*
 * Two-phase strategy: cluster measurements M_A over the C(n,t) size-t
 * clusters in lexicographic order locate a cluster supporting the error
 * (the last cluster is inferred when the first C(n,t)-1 all reject), then
 * s <= 2t subgroup measurements, each omitting one generator d_alpha of the
 * winning cluster's group, read off the expansion coefficient x_alpha from
 * a -1 outcome. The recovery is the matching product of pivot errors.
 */
DecodeReport clustered_decode(const CwsCode& code, size_t t, MeasurementChannel& channel,
                              const DecoderOptions& options = {});

/*
 * Exact measurement channel for states kept as graph-basis superpositions.
 * Every leaf of a measured expression must be diagonal in the graph basis
 * (classical image 0), which holds for all code and cluster measurements;
 * outcomes and collapse are then evaluated classically, so no size cap
 * applies.
 */
class GraphBasisChannel final : public MeasurementChannel {
 public:
  GraphBasisChannel(const CwsCode& code, const PauliOperator& error,
                    const std::vector<std::complex<double>>& coefficients, uint64_t seed = 0);

  MeasureOutcome measure(const MeasurementExpr& expr) override;
  double recovered_fidelity(const PauliOperator& recovery) const override;
  size_t qubit_count() const override { return graph_.n; }

  /* Coefficient helpers for spanning-set and randomized checks. */
  static std::vector<std::complex<double>> basis_coefficients(size_t dimension, size_t index);
  static std::vector<std::complex<double>> random_coefficients(size_t dimension, uint64_t seed);

 private:
  using Amplitudes = std::map<BinaryVector, std::complex<double>>;

  Amplitudes apply(const PauliOperator& p, const Amplitudes& state) const;
  int leaf_eigenvalue(const PauliOperator& leaf, const BinaryVector& label) const;
  bool plus_eigenstate(const MeasurementExpr& expr, const BinaryVector& label) const;

  Graph graph_;
  Amplitudes reference_;
  Amplitudes state_;
  std::mt19937_64 rng_;
};

using ChannelFactory =
    std::function<std::unique_ptr<MeasurementChannel>(const CwsCode&, const PauliOperator&)>;

/*
 * For an additive code (linear classical codeword set): checks that
 * clustered decoding carries exactly the information of syndrome decoding
 * on every error of weight <= t. Each error must be corrected with
 * fidelity 1, its recovery must reproduce its syndrome against the
 * stabilizer of the code space, and two errors must share a syndrome
 * precisely when the decoder identifies the same class. The factory
 * defaults to a GraphBasisChannel on a fixed random superposition.
 */
bool syndrome_equivalence_check(const CwsCode& code, size_t t,
                                const ChannelFactory& factory = {});

}  // namespace cwsqec
