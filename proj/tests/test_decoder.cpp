#include <memory>
#include <stdexcept>

#include "cwsqec/decoder.hpp"
#include "cwsqec/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cwsqec;
using cwsqec::testing::pentagon_code;

namespace {

PauliOperator op(size_t n, const std::string& text) {
  return PauliOperator::from_string(n, text);
}

GraphBasisChannel pentagon_channel(const std::string& error, uint64_t seed = 5) {
  CwsCode code = pentagon_code();
  return GraphBasisChannel(code, op(5, error),
                           GraphBasisChannel::random_coefficients(2, 17), seed);
}

}  // namespace

TEST_CASE("cluster enumeration") {
  std::vector<Cluster> singles = enumerate_clusters(5, 1);
  REQUIRE(singles.size() == 5);
  CHECK(singles.front() == Cluster{1});
  CHECK(singles.back() == Cluster{5});

  std::vector<Cluster> pairs = enumerate_clusters(5, 2);
  REQUIRE(pairs.size() == 10);
  CHECK(pairs.front() == Cluster{1, 2});
  CHECK(pairs[1] == Cluster{1, 3});
  CHECK(pairs.back() == Cluster{4, 5});

  CHECK(enumerate_clusters(3, 0) == std::vector<Cluster>{{}});
  CHECK_THROWS_AS(enumerate_clusters(2, 3), std::invalid_argument);
}

TEST_CASE("cluster groups collect independent classical images") {
  CwsCode code = pentagon_code();
  ClusterGroup g1 = build_cluster_group(code, {1});
  CHECK(g1.s() == 2);
  CHECK(g1.generators[0].str() == "01001");
  CHECK(g1.generators[1].str() == "10000");
  CHECK(g1.pivot_errors[0].str() == "X1");
  CHECK(g1.pivot_errors[1].str() == "Z1");

  ClusterGroup g12 = build_cluster_group(code, {1, 2});
  CHECK(g12.s() == 4);

  CHECK_THROWS_AS(build_cluster_group(code, {0}), std::out_of_range);
  CHECK_THROWS_AS(build_cluster_group(code, {6}), std::out_of_range);
  CHECK_THROWS_AS(build_cluster_group(code, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(build_cluster_group(code, {2, 1}), std::invalid_argument);
}

TEST_CASE("cluster measurement costs and ceilings") {
  CwsCode code = pentagon_code();
  ClusterGroup group = build_cluster_group(code, {1});

  MeasurementExpr plain = cluster_measurement(code, group);
  CHECK(gate_cost(plain).two_qubit_total == 84);
  CHECK(structure_gate_bound(plain, 5) == 2 * 6 * 8);

  MeasurementExpr merged = cluster_measurement(code, group, true);
  CHECK(gate_cost(merged).two_qubit_total == 26);

  CHECK(dimension_gate_bound(2, 5) == 128);
  CHECK(gate_cost(plain).two_qubit_total <= structure_gate_bound(plain, 5));
  CHECK(gate_cost(plain).two_qubit_total <= dimension_gate_bound(2, 5));
}

TEST_CASE("exhaustive decoding of a weight-1 error") {
  CwsCode code = pentagon_code();
  GraphBasisChannel channel = pentagon_channel("X1");
  DecodeReport report = exhaustive_decode(code, 1, channel);

  CHECK(report.strategy == "exhaustive");
  CHECK(report.corrected);
  CHECK_FALSE(report.uncorrectable);
  CHECK(report.consistent);
  CHECK(report.measurements_used == 2);
  REQUIRE(report.transcript.size() == 2);
  CHECK(report.transcript[0].id == "screen[00000]");
  CHECK(report.transcript[0].outcome == -1);
  CHECK(report.transcript[1].id == "screen[01001]");
  CHECK(report.transcript[1].outcome == 1);
  CHECK(report.transcript[1].two_qubit_gates == 58);
  CHECK(report.identified_class->str() == "01001");
  CHECK(report.recovery->str() == "X1");
  CHECK(report.gate_total == 116);
  CHECK(report.max_measurement_gates == 58);
  CHECK(report.exhaustive_bound == 16);
  CHECK(report.clustered_bound == 6);
  CHECK(report.theorem_bound == 128);
  CHECK(report.structure_bounds_ok);
  CHECK(report.theorem_bound_ok);
  CHECK(channel.recovered_fidelity(*report.recovery) == doctest::Approx(1.0));
}

TEST_CASE("clustered decoding of a weight-1 error") {
  CwsCode code = pentagon_code();
  GraphBasisChannel channel = pentagon_channel("X1");
  DecodeReport report = clustered_decode(code, 1, channel);

  CHECK(report.strategy == "clustered");
  CHECK(report.corrected);
  CHECK(report.consistent);
  CHECK(report.measurements_used == 3);
  REQUIRE(report.transcript.size() == 3);
  CHECK(report.transcript[0].id == "cluster[1]");
  CHECK(report.transcript[0].outcome == 1);
  CHECK(report.transcript[0].two_qubit_gates == 84);
  CHECK(report.transcript[1].id == "refine[1]#1");
  CHECK(report.transcript[1].outcome == -1);
  CHECK(report.transcript[1].two_qubit_gates == 116);
  CHECK(report.transcript[2].id == "refine[1]#2");
  CHECK(report.transcript[2].outcome == 1);
  CHECK(report.winning_cluster == Cluster{1});
  CHECK(report.identified_class->str() == "01001");
  CHECK(report.recovery->str() == "X1");
  CHECK(report.gate_total == 84 + 116 + 116);
  CHECK(report.structure_bounds_ok);
  CHECK(report.theorem_bound_ok);
  CHECK(channel.recovered_fidelity(*report.recovery) == doctest::Approx(1.0));
}

TEST_CASE("the last cluster wins by elimination") {
  CwsCode code = pentagon_code();
  GraphBasisChannel channel = pentagon_channel("Z5");
  DecodeReport report = clustered_decode(code, 1, channel);

  CHECK(report.corrected);
  CHECK(report.measurements_used == 6);  // 4 rejections, winner inferred, 2 refinements
  CHECK(report.measurements_used == report.clustered_bound);
  CHECK(report.winning_cluster == Cluster{5});
  CHECK(report.transcript[3].id == "cluster[4]");
  CHECK(report.transcript[3].outcome == -1);
  CHECK(report.transcript[4].id == "refine[5]#1");
  CHECK(report.identified_class->str() == "00001");
  CHECK(report.recovery->str() == "Z5");
  CHECK(channel.recovered_fidelity(*report.recovery) == doctest::Approx(1.0));

  GraphBasisChannel exhaustive_channel = pentagon_channel("Z5");
  DecodeReport worst = exhaustive_decode(code, 1, exhaustive_channel);
  CHECK(worst.measurements_used == 16);  // Z5 owns the last class screened
  CHECK(worst.measurements_used == worst.exhaustive_bound);
  CHECK(worst.identified_class->str() == "00001");
  CHECK(worst.recovery->str() == "Z5");
}

TEST_CASE("a weight-2 error defeats the weight-1 budget honestly") {
  /* Cl(X1 X2) = 11101 differs from Cl(Z4) = 00010 by the kernel word, so
   * both strategies land in the Z4 class and miscorrect; the channel
   * fidelity exposes it. */
  CwsCode code = pentagon_code();

  GraphBasisChannel clustered_channel = pentagon_channel("X1 X2");
  DecodeReport clustered = clustered_decode(code, 1, clustered_channel);
  CHECK(clustered.corrected);
  CHECK(clustered.consistent);
  CHECK(clustered.winning_cluster == Cluster{4});
  CHECK(clustered.identified_class->str() == "00010");
  CHECK(clustered.recovery->str() == "Z4");
  CHECK(clustered_channel.recovered_fidelity(*clustered.recovery) < 1.0 - 1e-9);

  GraphBasisChannel exhaustive_channel = pentagon_channel("X1 X2");
  DecodeReport exhaustive = exhaustive_decode(code, 1, exhaustive_channel);
  CHECK(exhaustive.corrected);
  CHECK(exhaustive.measurements_used == 13);
  CHECK(exhaustive.identified_class->str() == "00010");
  CHECK(exhaustive.recovery->str() == "Z4");
  CHECK(exhaustive_channel.recovered_fidelity(*exhaustive.recovery) < 1.0 - 1e-9);
}

TEST_CASE("merging the kernel into the groups only changes the cost") {
  CwsCode code = pentagon_code();
  GraphBasisChannel channel = pentagon_channel("X1");
  DecoderOptions options;
  options.merge_group = true;
  DecodeReport report = clustered_decode(code, 1, channel, options);

  CHECK(report.corrected);
  CHECK(report.identified_class->str() == "01001");
  CHECK(report.recovery->str() == "X1");
  CHECK(report.measurements_used == 3);
  CHECK(report.gate_total == 26 + 42 + 42);
  CHECK(report.max_measurement_gates == 42);
  CHECK(report.structure_bounds_ok);
  CHECK(report.theorem_bound_ok);
}

TEST_CASE("a trivial budget needs no measurement") {
  CwsCode code = pentagon_code();
  GraphBasisChannel channel = pentagon_channel("X1");
  DecodeReport report = clustered_decode(code, 0, channel);
  CHECK(report.corrected);
  CHECK(report.measurements_used == 0);
  CHECK(report.recovery->is_identity());
  CHECK(report.winning_cluster == Cluster{});
  CHECK_THROWS_AS(clustered_decode(code, 6, channel), std::invalid_argument);
}

TEST_CASE("graph basis channel agrees with the dense amplitude channel") {
  CwsCode code = pentagon_code();
  auto coefficients = GraphBasisChannel::random_coefficients(2, 99);
  for (const char* error : {"X1", "Y3", "Z5", "X1 X2"}) {
    CAPTURE(error);
    GraphBasisChannel fast(code, op(5, error), coefficients, 3);
    oracle::AmplitudeChannel dense(code, op(5, error), coefficients, 3);
    DecodeReport a = clustered_decode(code, 1, fast);
    DecodeReport b = clustered_decode(code, 1, dense);
    REQUIRE(a.transcript.size() == b.transcript.size());
    for (size_t i = 0; i < a.transcript.size(); i++) {
      CHECK(a.transcript[i].id == b.transcript[i].id);
      CHECK(a.transcript[i].outcome == b.transcript[i].outcome);
      CHECK(a.transcript[i].deterministic == b.transcript[i].deterministic);
    }
    CHECK(a.identified_class == b.identified_class);
    CHECK(a.recovery == b.recovery);
    CHECK(fast.recovered_fidelity(*a.recovery) ==
          doctest::Approx(dense.recovered_fidelity(*b.recovery)).epsilon(1e-9));
  }
}

TEST_CASE("graph basis channel rejects non-diagonal leaves") {
  GraphBasisChannel channel = pentagon_channel("X1");
  CHECK_THROWS_AS(channel.measure(MeasurementExpr::leaf(op(5, "X1"))),
                  std::invalid_argument);
  CHECK_NOTHROW(channel.measure(MeasurementExpr::leaf(op(5, "X1 Z2 Z5"))));
}

TEST_CASE("coefficient helpers") {
  auto basis = GraphBasisChannel::basis_coefficients(3, 1);
  REQUIRE(basis.size() == 3);
  CHECK(basis[1] == std::complex<double>{1.0, 0.0});
  CHECK(basis[0] == std::complex<double>{0.0, 0.0});
  CHECK_THROWS_AS(GraphBasisChannel::basis_coefficients(2, 2), std::out_of_range);
  CHECK(GraphBasisChannel::random_coefficients(4, 1) ==
        GraphBasisChannel::random_coefficients(4, 1));
}

TEST_CASE("syndrome equivalence on the pentagon") {
  CHECK(syndrome_equivalence_check(pentagon_code(), 1));

  CwsCode nonlinear{pentagon_code().graph,
                    {BinaryVector::from_string("10000"), BinaryVector::from_string("01000")},
                    std::nullopt};
  CHECK_THROWS_AS(syndrome_equivalence_check(nonlinear, 1), std::invalid_argument);

  ChannelFactory dense = [](const CwsCode& c,
                            const PauliOperator& e) -> std::unique_ptr<MeasurementChannel> {
    return std::make_unique<oracle::AmplitudeChannel>(
        c, e, GraphBasisChannel::random_coefficients(c.dimension(), 7), 2);
  };
  CHECK(syndrome_equivalence_check(pentagon_code(), 1, dense));
}
