#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "cwsqec/channel.hpp"
#include "cwsqec/graph_code.hpp"
#include "cwsqec/measurement.hpp"

/*
 * Dense, brute-force reference implementations. Everything here works
 * directly on 2^n amplitudes and matrices built from first principles, so it
 * stays independent of the classical decoding machinery it is used to check.
 */
namespace cwsqec::oracle {

struct OracleLimits {
  size_t max_qubits = 12;          // total qubits, ancillas included
  double state_tolerance = 1e-10;  // state comparisons
  double scalar_tolerance = 1e-8;  // scalar residuals (least-squares checks)
  double entry_tolerance = 1e-12;  // entrywise operator identities
};

struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Throws SizeCapError when total_qubits exceeds limits.max_qubits. */
void check_size(size_t total_qubits, const OracleLimits& limits = {});

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/* Qubit q (1-based) maps to bit q-1 of the amplitude index. */
struct DenseState {
  size_t n = 0;
  Vector amplitudes;
};

Matrix pauli_matrix(const PauliOperator& p, const OracleLimits& limits = {});
Vector apply_pauli(const PauliOperator& p, const Vector& state);

DenseState prepare_graph_state(const Graph& graph, const OracleLimits& limits = {});
DenseState codeword_state(const CwsCode& code, size_t index, const OracleLimits& limits = {});
/* Normalized sum of coefficients[i] |w_i>. */
DenseState code_state(const CwsCode& code, const std::vector<std::complex<double>>& coefficients,
                      const OracleLimits& limits = {});

/* P_Q = sum_i |w_i><w_i|, built directly from the translated graph states. */
Matrix code_projector(const CwsCode& code, const OracleLimits& limits = {});

/* Composite projectors for commuting children. */
Matrix and_projector(const Matrix& p1, const Matrix& p0);
Matrix xor_projector(const Matrix& p1, const Matrix& p0);
Matrix expr_projector(const MeasurementExpr& expr, size_t n, const OracleLimits& limits = {});

bool is_projector(const Matrix& p, double tol = 1e-10);
size_t projector_rank(const Matrix& p);

/* |<a|b>|, insensitive to global phase. */
double fidelity(const DenseState& a, const DenseState& b);

struct MeasureResult {
  int value = 0;
  bool deterministic = false;
  double probability_plus = 0.0;
};

/* Projective measurement of (projector, 1-projector); mutates the state. */
MeasureResult measure_projector(DenseState& state, const Matrix& projector, std::mt19937_64& rng,
                                const OracleLimits& limits = {});
MeasureResult measure(DenseState& state, const MeasurementExpr& expr, std::mt19937_64& rng,
                      const OracleLimits& limits = {});

/* Least-squares check of P E P = c P for some scalar c. */
bool knill_laflamme_detectable(const Matrix& projector, const Matrix& error, double tol);
bool knill_laflamme_detectable(const CwsCode& code, const PauliOperator& e,
                               const OracleLimits& limits = {});

/* P E P = c P with |c| = 1; for a unitary E this is exactly "E acts as a
 * global phase on the code subspace". */
bool acts_trivially(const CwsCode& code, const PauliOperator& e, const OracleLimits& limits = {});

/*
 * Distance by enumeration: the smallest weight of an error failing the
 * detectability check, or nullopt when all errors up to max_weight pass.
 * For K = 1 the detectability condition is vacuous, so the reported value
 * is the smallest weight of a nonidentity operator acting trivially on the
 * codeword state (the usual convention for dimension-1 codes).
 */
std::optional<size_t> verify_distance(const CwsCode& code, size_t max_weight,
                                      const OracleLimits& limits = {});

/*
 * Gate-by-gate simulations of the two ancilla measurement circuits over
 * commuting measurement operators m1, m0 (each 2P-1 for a projector P).
 * Joint amplitudes put the system in the low bits; ancilla bit j of the
 * returned snapshots is joint bit n+j. The AND circuit uses three ancillas
 * (m1's, m0's, result) and returns the intermediate states after each
 * block; the XOR circuit uses a single ancilla.
 */
struct AndCircuitRun {
  Vector after_first;    // both ancillas still |0>, m1 kicked back
  Vector after_second;   // both measurement ancillas loaded
  Vector after_toffoli;  // result ancilla set on the 00 branch
  Vector final_state;    // measurement ancillas disentangled
};
AndCircuitRun simulate_and_circuit(const Matrix& m1, const Matrix& m0, const Vector& system_state,
                                   const OracleLimits& limits = {});
Vector simulate_xor_circuit(const Matrix& m1, const Matrix& m0, const Vector& system_state,
                            const OracleLimits& limits = {});

/* MeasurementChannel carrying a dense corrupted code state. */
class AmplitudeChannel final : public MeasurementChannel {
 public:
  AmplitudeChannel(const CwsCode& code, const PauliOperator& error,
                   const std::vector<std::complex<double>>& coefficients, uint64_t seed = 0,
                   const OracleLimits& limits = {});

  MeasureOutcome measure(const MeasurementExpr& expr) override;
  double recovered_fidelity(const PauliOperator& recovery) const override;
  size_t qubit_count() const override { return state_.n; }

  const DenseState& state() const { return state_; }

 private:
  DenseState reference_;
  DenseState state_;
  std::mt19937_64 rng_;
  OracleLimits limits_;
};

}  // namespace cwsqec::oracle
