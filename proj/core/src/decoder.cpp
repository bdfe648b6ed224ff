#include "cwsqec/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cwsqec {

namespace {

constexpr double kDeterministicTolerance = 1e-9;
constexpr double kFidelityTolerance = 1e-9;

constexpr std::complex<double> kImaginaryPowers[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

std::string joined_indices(const Cluster& cluster) {
  std::ostringstream out;
  for (size_t i = 0; i < cluster.size(); ++i) {
    if (i) out << ",";
    out << cluster[i];
  }
  return out.str();
}

DecodeReport make_report(const std::string& strategy, const CwsCode& code, size_t t) {
  DecodeReport report;
  report.strategy = strategy;
  report.n = code.n();
  report.dimension = code.dimension();
  report.t = t;
  report.theorem_bound = dimension_gate_bound(code.dimension(), code.n());
  report.exhaustive_bound = exhaustive_measurement_bound(code.n(), t);
  report.clustered_bound = clustered_measurement_bound(code.n(), t);
  return report;
}

/* Books one performed measurement into the report. */
struct CostLedger {
  DecodeReport* report;
  bool check_costs;

  void record(std::string id, const MeasurementExpr& expr, const MeasureOutcome& outcome) {
    ++report->measurements_used;
    TranscriptEntry entry{std::move(id), outcome.value, outcome.deterministic, 0};
    if (check_costs) {
      const GateCost cost = gate_cost(expr);
      entry.two_qubit_gates = cost.two_qubit_total;
      report->gate_total += cost.two_qubit_total;
      report->max_measurement_gates =
          std::max(report->max_measurement_gates, cost.two_qubit_total);
      report->max_measurement_ancillas =
          std::max(report->max_measurement_ancillas, cost.ancilla_count);
      if (cost.two_qubit_total > structure_gate_bound(expr, report->n)) {
        report->structure_bounds_ok = false;
      }
      if (cost.two_qubit_total > report->theorem_bound) report->theorem_bound_ok = false;
    }
    if (!outcome.deterministic) report->consistent = false;
    report->transcript.push_back(std::move(entry));
  }
};

}  // namespace

std::vector<Cluster> enumerate_clusters(size_t n, size_t t) {
  if (t > n) throw std::invalid_argument("cluster size exceeds qubit count");
  std::vector<Cluster> out;
  Cluster current(t);
  std::iota(current.begin(), current.end(), size_t{1});
  while (true) {
    out.push_back(current);
    if (t == 0) break;
    size_t i = t;
    while (i > 0 && current[i - 1] == n - t + i) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (size_t j = i; j < t; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

ClusterGroup build_cluster_group(const CwsCode& code, const Cluster& cluster) {
  for (size_t i = 0; i < cluster.size(); ++i) {
    if (cluster[i] < 1 || cluster[i] > code.n()) {
      throw std::out_of_range("cluster qubit index out of range");
    }
    if (i > 0 && cluster[i] <= cluster[i - 1]) {
      throw std::invalid_argument("cluster indices must be strictly increasing");
    }
  }
  ClusterGroup group;
  group.cluster = cluster;
  BinaryMatrix selected(code.n());
  for (size_t qubit : cluster) {
    for (char letter : {'X', 'Z'}) {
      const PauliOperator e = PauliOperator::single(code.n(), letter, qubit);
      const BinaryVector row = classical_map(code.graph, e);
      BinaryMatrix trial = selected;
      trial.append_row(row);
      if (gf2_rank(trial) > selected.row_count()) {
        selected.append_row(row);
        group.generators.push_back(row);
        group.pivot_errors.push_back(e);
      }
    }
  }
  return group;
}

MeasurementExpr cluster_measurement(const CwsCode& code, const ClusterGroup& group,
                                    bool merge_kernel) {
  BinaryMatrix rows(code.n());
  for (const BinaryVector& d : group.generators) rows.append_row(d);
  return ust_measurement(build_ust(code, rows, merge_kernel));
}

uint64_t structure_gate_bound(const MeasurementExpr& expr, size_t n) {
  return 2 * static_cast<uint64_t>(expr.leaves().size()) * (n + 3);
}

uint64_t dimension_gate_bound(size_t dimension, size_t n) {
  if (n < 1) return 0;
  return 2 * static_cast<uint64_t>(dimension) * (n - 1) * (n + 3);
}

DecodeReport exhaustive_decode(const CwsCode& code, size_t t, MeasurementChannel& channel,
                               const DecoderOptions& options) {
  code.validate();
  if (t > code.n()) throw std::invalid_argument("error weight budget exceeds qubit count");
  DecodeReport report = make_report("exhaustive", code, t);
  CostLedger ledger{&report, options.check_costs};

  /* The kernel-merged code measurement; conjugating it by a representative
   * E_r turns it into the membership test for E_r Q. */
  const MeasurementExpr base = ust_measurement(build_ust(code, BinaryMatrix(code.n()), true));

  std::set<BinaryVector> seen;
  for (const PauliOperator& rep : enumerate_errors(code.n(), t, /*include_identity=*/true)) {
    const BinaryVector image = classical_map(code.graph, rep);
    if (!seen.insert(image).second) continue;
    const MeasurementExpr screen = rep.is_identity() ? base : base.conjugated_by(rep);
    const MeasureOutcome outcome = channel.measure(screen);
    ledger.record("screen[" + image.str() + "]", screen, outcome);
    if (outcome.value == 1) {
      report.identified_class = image;
      report.recovery = rep.hermitian_form();
      report.corrected = true;
      return report;
    }
  }
  report.uncorrectable = true;
  return report;
}

DecodeReport clustered_decode(const CwsCode& code, size_t t, MeasurementChannel& channel,
                              const DecoderOptions& options) {
  code.validate();
  if (t > code.n()) throw std::invalid_argument("error weight budget exceeds qubit count");
  DecodeReport report = make_report("clustered", code, t);
  CostLedger ledger{&report, options.check_costs};

  if (t == 0) {
    report.identified_class = BinaryVector(code.n());
    report.recovery = PauliOperator::identity(code.n());
    report.winning_cluster = Cluster{};
    report.corrected = true;
    return report;
  }

  /* Phase one: find a cluster supporting the error. The last cluster is
   * never measured; it wins by elimination. */
  const std::vector<Cluster> clusters = enumerate_clusters(code.n(), t);
  size_t winner = clusters.size() - 1;
  for (size_t i = 0; i + 1 < clusters.size(); ++i) {
    const ClusterGroup group = build_cluster_group(code, clusters[i]);
    const MeasurementExpr expr = cluster_measurement(code, group, options.merge_group);
    const MeasureOutcome outcome = channel.measure(expr);
    ledger.record("cluster[" + joined_indices(clusters[i]) + "]", expr, outcome);
    if (outcome.value == 1) {
      winner = i;
      break;
    }
  }
  report.winning_cluster = clusters[winner];
  const ClusterGroup group = build_cluster_group(code, clusters[winner]);

  /* Phase two: expand the class over the group generators. Omitting
   * d_alpha from the group makes the measurement reject exactly when the
   * expansion uses d_alpha. */
  BinaryVector identified(code.n());
  PauliOperator recovery = PauliOperator::identity(code.n());
  for (size_t alpha = 0; alpha < group.s(); ++alpha) {
    BinaryMatrix rows(code.n());
    for (size_t beta = 0; beta < group.s(); ++beta) {
      if (beta != alpha) rows.append_row(group.generators[beta]);
    }
    const MeasurementExpr expr = ust_measurement(build_ust(code, rows, options.merge_group));
    const MeasureOutcome outcome = channel.measure(expr);
    std::ostringstream id;
    id << "refine[" << joined_indices(clusters[winner]) << "]#" << (alpha + 1);
    ledger.record(id.str(), expr, outcome);
    if (outcome.value == -1) {
      identified ^= group.generators[alpha];
      recovery = recovery * group.pivot_errors[alpha];
    }
  }
  report.identified_class = identified;
  report.recovery = recovery.hermitian_form();
  report.corrected = true;
  return report;
}

GraphBasisChannel::GraphBasisChannel(const CwsCode& code, const PauliOperator& error,
                                     const std::vector<std::complex<double>>& coefficients,
                                     uint64_t seed)
    : graph_(code.graph), rng_(seed) {
  code.validate();
  if (coefficients.size() != code.dimension()) {
    throw std::invalid_argument("coefficient count does not match code dimension");
  }
  if (error.n != code.n()) throw std::invalid_argument("error size does not match code");
  double norm_squared = 0.0;
  for (size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == std::complex<double>{0.0, 0.0}) continue;
    reference_[code.codewords[i]] += coefficients[i];
    norm_squared += std::norm(coefficients[i]);
  }
  if (norm_squared < 1e-28) throw std::invalid_argument("code state coefficients are all zero");
  const double scale = 1.0 / std::sqrt(norm_squared);
  for (auto& [label, amp] : reference_) amp *= scale;
  state_ = apply(error, reference_);
}

GraphBasisChannel::Amplitudes GraphBasisChannel::apply(const PauliOperator& p,
                                                       const Amplitudes& state) const {
  Amplitudes out;
  for (const auto& [label, amp] : state) {
    const PauliOperator reduced = reduce_to_z_form(graph_, p * PauliOperator::z_type(label));
    out[reduced.z] += kImaginaryPowers[reduced.phase_exponent & 3] * amp;
  }
  return out;
}

int GraphBasisChannel::leaf_eigenvalue(const PauliOperator& leaf,
                                       const BinaryVector& label) const {
  const PauliOperator reduced = reduce_to_z_form(graph_, leaf);
  if (!reduced.z.is_zero() || (reduced.phase_exponent & 1) != 0) {
    throw std::invalid_argument("measurement leaf " + leaf.str() +
                                " is not diagonal in the graph basis");
  }
  int value = reduced.phase_exponent == 2 ? -1 : 1;
  if (leaf.x.dot(label)) value = -value;
  return value;
}

bool GraphBasisChannel::plus_eigenstate(const MeasurementExpr& expr,
                                        const BinaryVector& label) const {
  switch (expr.kind) {
    case MeasurementExpr::Kind::leaf:
      return leaf_eigenvalue(expr.op, label) == 1;
    case MeasurementExpr::Kind::and_node:
      for (const MeasurementExpr& child : expr.children) {
        if (!plus_eigenstate(child, label)) return false;
      }
      return true;
    case MeasurementExpr::Kind::xor_node: {
      bool inside = false;
      for (const MeasurementExpr& child : expr.children) {
        inside = inside != plus_eigenstate(child, label);
      }
      return inside;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

MeasureOutcome GraphBasisChannel::measure(const MeasurementExpr& expr) {
  double plus_weight = 0.0;
  double total = 0.0;
  for (const auto& [label, amp] : state_) {
    const double weight = std::norm(amp);
    total += weight;
    if (plus_eigenstate(expr, label)) plus_weight += weight;
  }
  if (total <= 0.0) throw std::logic_error("channel state lost its norm");
  const double p_plus = plus_weight / total;

  MeasureOutcome outcome;
  if (p_plus > 1.0 - kDeterministicTolerance) {
    outcome.value = 1;
    outcome.deterministic = true;
  } else if (p_plus < kDeterministicTolerance) {
    outcome.value = -1;
    outcome.deterministic = true;
  } else {
    std::bernoulli_distribution coin(p_plus);
    outcome.value = coin(rng_) ? 1 : -1;
  }

  Amplitudes collapsed;
  double kept = 0.0;
  for (const auto& [label, amp] : state_) {
    if (plus_eigenstate(expr, label) == (outcome.value == 1)) {
      collapsed[label] = amp;
      kept += std::norm(amp);
    }
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (auto& [label, amp] : collapsed) amp *= scale;
  state_ = std::move(collapsed);
  return outcome;
}

double GraphBasisChannel::recovered_fidelity(const PauliOperator& recovery) const {
  const Amplitudes recovered = apply(recovery, state_);
  std::complex<double> inner = 0.0;
  for (const auto& [label, amp] : recovered) {
    const auto it = reference_.find(label);
    if (it != reference_.end()) inner += std::conj(it->second) * amp;
  }
  return std::abs(inner);
}

std::vector<std::complex<double>> GraphBasisChannel::basis_coefficients(size_t dimension,
                                                                        size_t index) {
  if (index >= dimension) throw std::out_of_range("basis coefficient index out of range");
  std::vector<std::complex<double>> out(dimension, {0.0, 0.0});
  out[index] = 1.0;
  return out;
}

std::vector<std::complex<double>> GraphBasisChannel::random_coefficients(size_t dimension,
                                                                         uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> out(dimension);
  for (auto& c : out) c = {gauss(rng), gauss(rng)};
  return out;
}

bool syndrome_equivalence_check(const CwsCode& code, size_t t, const ChannelFactory& factory) {
  code.validate();
  const std::set<BinaryVector> words(code.codewords.begin(), code.codewords.end());
  if (words.find(BinaryVector(code.n())) == words.end()) {
    throw std::invalid_argument("additive code must contain the zero codeword");
  }
  for (const BinaryVector& a : code.codewords) {
    for (const BinaryVector& b : code.codewords) {
      if (words.find(a ^ b) == words.end()) {
        throw std::invalid_argument("codeword set is not linear");
      }
    }
  }

  ChannelFactory make = factory;
  if (!make) {
    make = [](const CwsCode& c, const PauliOperator& e) -> std::unique_ptr<MeasurementChannel> {
      return std::make_unique<GraphBasisChannel>(
          c, e, GraphBasisChannel::random_coefficients(c.dimension(), 0x5eed), 1);
    };
  }

  /* Stabilizer of the code space: the graph generators recombined to
   * commute with every word operator. Anticommutation against it is the
   * usual syndrome. */
  BinaryMatrix word_rows(code.n());
  for (const BinaryVector& c : code.codewords) word_rows.append_row(c);
  std::vector<PauliOperator> word_group;
  for (const BinaryVector& row : gf2_basis(word_rows).rows) {
    word_group.push_back(PauliOperator::z_type(row));
  }
  const OrthogonalizedStabilizer ortho =
      orthogonalize(standard_form_stabilizer(code.graph), word_group);

  const auto syndrome = [&ortho](const PauliOperator& e) {
    BinaryVector bits(ortho.code_generators.size());
    for (size_t i = 0; i < ortho.code_generators.size(); ++i) {
      bits.set(i, !commutes(e, ortho.code_generators[i]));
    }
    return bits;
  };

  struct Entry {
    BinaryVector syndrome;
    BinaryVector identified;
  };
  std::vector<Entry> entries;
  for (const PauliOperator& e : enumerate_errors(code.n(), t)) {
    const auto channel = make(code, e);
    const DecodeReport report = clustered_decode(code, t, *channel);
    if (!report.corrected || !report.recovery || !report.identified_class) return false;
    if (channel->recovered_fidelity(*report.recovery) < 1.0 - kFidelityTolerance) return false;
    if (!(syndrome(*report.recovery) == syndrome(e))) return false;
    entries.push_back({syndrome(e), *report.identified_class});
  }
  for (size_t i = 0; i < entries.size(); ++i) {
    for (size_t j = i + 1; j < entries.size(); ++j) {
      const bool same_syndrome = entries[i].syndrome == entries[j].syndrome;
      const bool same_class = entries[i].identified == entries[j].identified;
      if (same_syndrome != same_class) return false;
    }
  }
  return true;
}

}  // namespace cwsqec
