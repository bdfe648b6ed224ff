#include "cwsqec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace cwsqec::oracle {

namespace {

constexpr std::complex<double> kImaginaryPowers[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

uint64_t low_mask(const BinaryVector& v) {
  if (v.length > 64) throw std::invalid_argument("bit vector too long for dense indexing");
  return v.words.empty() ? 0 : v.words[0];
}

int parity(uint64_t bits) { return std::popcount(bits) & 1; }

size_t dimension_of(size_t n) { return size_t{1} << n; }

}  // namespace

void check_size(size_t total_qubits, const OracleLimits& limits) {
  if (total_qubits > limits.max_qubits) {
    std::ostringstream msg;
    msg << "dense oracle needs " << total_qubits << " qubits, cap is " << limits.max_qubits;
    throw SizeCapError(msg.str());
  }
}

Matrix pauli_matrix(const PauliOperator& p, const OracleLimits& limits) {
  check_size(p.n, limits);
  const size_t dim = dimension_of(p.n);
  const uint64_t u = low_mask(p.x);
  const uint64_t v = low_mask(p.z);
  const std::complex<double> phase = kImaginaryPowers[p.phase_exponent & 3];
  Matrix m = Matrix::Zero(dim, dim);
  for (size_t j = 0; j < dim; ++j) {
    const double sign = parity(v & j) ? -1.0 : 1.0;
    m(j ^ u, j) = phase * sign;
  }
  return m;
}

Vector apply_pauli(const PauliOperator& p, const Vector& state) {
  const size_t dim = dimension_of(p.n);
  if (static_cast<size_t>(state.size()) != dim) {
    throw std::invalid_argument("state dimension does not match operator");
  }
  const uint64_t u = low_mask(p.x);
  const uint64_t v = low_mask(p.z);
  const std::complex<double> phase = kImaginaryPowers[p.phase_exponent & 3];
  Vector out(dim);
  for (size_t j = 0; j < dim; ++j) {
    const double sign = parity(v & j) ? -1.0 : 1.0;
    out(j ^ u) = phase * sign * state(j);
  }
  return out;
}

DenseState prepare_graph_state(const Graph& graph, const OracleLimits& limits) {
  check_size(graph.n, limits);
  const size_t dim = dimension_of(graph.n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<std::pair<size_t, size_t>> edges = graph.edges();
  DenseState state{graph.n, Vector(dim)};
  for (size_t j = 0; j < dim; ++j) {
    int sign = 0;
    for (const auto& [a, b] : edges) {
      sign ^= static_cast<int>((j >> (a - 1)) & (j >> (b - 1)) & 1);
    }
    state.amplitudes(j) = sign ? -amp : amp;
  }
  return state;
}

DenseState codeword_state(const CwsCode& code, size_t index, const OracleLimits& limits) {
  if (index >= code.dimension()) throw std::out_of_range("codeword index out of range");
  DenseState state = prepare_graph_state(code.graph, limits);
  state.amplitudes = apply_pauli(code.word_operator(index), state.amplitudes);
  return state;
}

DenseState code_state(const CwsCode& code, const std::vector<std::complex<double>>& coefficients,
                      const OracleLimits& limits) {
  if (coefficients.size() != code.dimension()) {
    throw std::invalid_argument("coefficient count does not match code dimension");
  }
  DenseState graph = prepare_graph_state(code.graph, limits);
  DenseState state{code.n(), Vector::Zero(graph.amplitudes.size())};
  for (size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == std::complex<double>{0.0, 0.0}) continue;
    state.amplitudes += coefficients[i] * apply_pauli(code.word_operator(i), graph.amplitudes);
  }
  const double norm = state.amplitudes.norm();
  if (norm < 1e-14) throw std::invalid_argument("code state coefficients are all zero");
  state.amplitudes /= norm;
  return state;
}

Matrix code_projector(const CwsCode& code, const OracleLimits& limits) {
  const size_t dim = dimension_of(code.n());
  Matrix p = Matrix::Zero(dim, dim);
  for (size_t i = 0; i < code.dimension(); ++i) {
    const Vector w = codeword_state(code, i, limits).amplitudes;
    p += w * w.adjoint();
  }
  return p;
}

Matrix and_projector(const Matrix& p1, const Matrix& p0) { return p1 * p0; }

Matrix xor_projector(const Matrix& p1, const Matrix& p0) {
  return p1 + p0 - 2.0 * (p1 * p0);
}

Matrix expr_projector(const MeasurementExpr& expr, size_t n, const OracleLimits& limits) {
  check_size(n, limits);
  const size_t dim = dimension_of(n);
  const Matrix identity = Matrix::Identity(dim, dim);
  switch (expr.kind) {
    case MeasurementExpr::Kind::leaf:
      return 0.5 * (identity + pauli_matrix(expr.op, limits));
    case MeasurementExpr::Kind::and_node: {
      Matrix p = identity;
      for (const MeasurementExpr& child : expr.children) {
        p = and_projector(p, expr_projector(child, n, limits));
      }
      return p;
    }
    case MeasurementExpr::Kind::xor_node: {
      Matrix p = Matrix::Zero(dim, dim);
      for (const MeasurementExpr& child : expr.children) {
        p = xor_projector(expr_projector(child, n, limits), p);
      }
      return p;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

bool is_projector(const Matrix& p, double tol) {
  if (p.rows() != p.cols()) return false;
  return (p - p.adjoint()).cwiseAbs().maxCoeff() < tol &&
         (p * p - p).cwiseAbs().maxCoeff() < tol;
}

size_t projector_rank(const Matrix& p) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (p + Matrix(p.adjoint())));
  size_t rank = 0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    if (solver.eigenvalues()(i) > 0.5) ++rank;
  }
  return rank;
}

double fidelity(const DenseState& a, const DenseState& b) {
  if (a.n != b.n) throw std::invalid_argument("fidelity of states on different qubit counts");
  return std::abs(a.amplitudes.dot(b.amplitudes));
}

MeasureResult measure_projector(DenseState& state, const Matrix& projector, std::mt19937_64& rng,
                                const OracleLimits& limits) {
  const Vector projected = projector * state.amplitudes;
  double p_plus = std::real(state.amplitudes.dot(projected));
  p_plus = std::clamp(p_plus, 0.0, 1.0);

  MeasureResult result;
  result.probability_plus = p_plus;
  if (p_plus > 1.0 - limits.scalar_tolerance) {
    result.value = 1;
    result.deterministic = true;
  } else if (p_plus < limits.scalar_tolerance) {
    result.value = -1;
    result.deterministic = true;
  } else {
    std::bernoulli_distribution coin(p_plus);
    result.value = coin(rng) ? 1 : -1;
    result.deterministic = false;
  }

  if (result.value == 1) {
    state.amplitudes = projected / projected.norm();
  } else {
    Vector rest = state.amplitudes - projected;
    state.amplitudes = rest / rest.norm();
  }
  return result;
}

MeasureResult measure(DenseState& state, const MeasurementExpr& expr, std::mt19937_64& rng,
                      const OracleLimits& limits) {
  return measure_projector(state, expr_projector(expr, state.n, limits), rng, limits);
}

bool knill_laflamme_detectable(const Matrix& projector, const Matrix& error, double tol) {
  const Matrix sandwiched = projector * error * projector;
  const double overlap = std::real(projector.cwiseProduct(projector.conjugate()).sum());
  const std::complex<double> c =
      projector.conjugate().cwiseProduct(sandwiched).sum() / overlap;
  return (sandwiched - c * projector).cwiseAbs().maxCoeff() < tol;
}

bool knill_laflamme_detectable(const CwsCode& code, const PauliOperator& e,
                               const OracleLimits& limits) {
  const Matrix p = code_projector(code, limits);
  return knill_laflamme_detectable(p, pauli_matrix(e, limits), limits.scalar_tolerance);
}

bool acts_trivially(const CwsCode& code, const PauliOperator& e, const OracleLimits& limits) {
  const Matrix p = code_projector(code, limits);
  const Matrix sandwiched = p * pauli_matrix(e, limits) * p;
  const std::complex<double> c =
      p.conjugate().cwiseProduct(sandwiched).sum() / static_cast<double>(code.dimension());
  if (std::abs(std::abs(c) - 1.0) > limits.scalar_tolerance) return false;
  return (sandwiched - c * p).cwiseAbs().maxCoeff() < limits.scalar_tolerance;
}

std::optional<size_t> verify_distance(const CwsCode& code, size_t max_weight,
                                      const OracleLimits& limits) {
  const Matrix p = code_projector(code, limits);
  const bool dimension_one = code.dimension() == 1;
  for (const PauliOperator& e : enumerate_errors(code.n(), max_weight)) {
    if (dimension_one) {
      if (acts_trivially(code, e, limits)) return e.weight();
    } else if (!knill_laflamme_detectable(p, pauli_matrix(e, limits), limits.scalar_tolerance)) {
      return e.weight();
    }
  }
  return std::nullopt;
}

namespace {

/* Ancilla helpers for the joint register: system in bits 0..n-1, ancilla j
 * of the circuit in joint bit n+j. */
struct JointRegister {
  size_t n;
  size_t ancillas;
  Vector amps;

  size_t blocks() const { return dimension_of(ancillas); }
  size_t block_size() const { return dimension_of(n); }

  void hadamard(size_t ancilla) {
    const double root_half = 1.0 / std::sqrt(2.0);
    const size_t bit = size_t{1} << ancilla;
    for (size_t a = 0; a < blocks(); ++a) {
      if (a & bit) continue;
      for (size_t s = 0; s < block_size(); ++s) {
        const size_t lo = (a << n) | s;
        const size_t hi = ((a | bit) << n) | s;
        const std::complex<double> x = amps(lo);
        const std::complex<double> y = amps(hi);
        amps(lo) = root_half * (x + y);
        amps(hi) = root_half * (x - y);
      }
    }
  }

  /* Applies m to the system register on branches where the ancilla is 1. */
  void controlled(size_t ancilla, const Matrix& m) {
    const size_t bit = size_t{1} << ancilla;
    for (size_t a = 0; a < blocks(); ++a) {
      if (!(a & bit)) continue;
      amps.segment(a << n, block_size()) =
          (m * amps.segment(a << n, block_size())).eval();
    }
  }

  /* Flips the target ancilla on branches where both controls are 0. */
  void zero_controlled_toffoli(size_t control_a, size_t control_b, size_t target) {
    const size_t bit_a = size_t{1} << control_a;
    const size_t bit_b = size_t{1} << control_b;
    const size_t bit_t = size_t{1} << target;
    for (size_t a = 0; a < blocks(); ++a) {
      if ((a & bit_a) || (a & bit_b) || (a & bit_t)) continue;
      amps.segment(a << n, block_size())
          .swap(amps.segment((a | bit_t) << n, block_size()));
    }
  }

  /* H, controlled-m, H: kicks the +/-1 eigenvalue of m onto the ancilla. */
  void gadget(size_t ancilla, const Matrix& m) {
    hadamard(ancilla);
    controlled(ancilla, m);
    hadamard(ancilla);
  }
};

JointRegister make_joint(size_t ancillas, const Vector& system_state, const OracleLimits& limits) {
  const size_t n = static_cast<size_t>(std::countr_zero(
      std::bit_ceil(static_cast<uint64_t>(system_state.size()))));
  if (system_state.size() != static_cast<Eigen::Index>(dimension_of(n))) {
    throw std::invalid_argument("system state dimension is not a power of two");
  }
  check_size(n + ancillas, limits);
  JointRegister reg{n, ancillas, Vector::Zero(dimension_of(n + ancillas))};
  reg.amps.segment(0, system_state.size()) = system_state;
  return reg;
}

}  // namespace

AndCircuitRun simulate_and_circuit(const Matrix& m1, const Matrix& m0, const Vector& system_state,
                                   const OracleLimits& limits) {
  JointRegister reg = make_joint(3, system_state, limits);
  AndCircuitRun run;
  reg.gadget(0, m1);
  run.after_first = reg.amps;
  reg.gadget(1, m0);
  run.after_second = reg.amps;
  reg.zero_controlled_toffoli(0, 1, 2);
  run.after_toffoli = reg.amps;
  reg.gadget(1, m0);
  reg.gadget(0, m1);
  run.final_state = reg.amps;
  return run;
}

Vector simulate_xor_circuit(const Matrix& m1, const Matrix& m0, const Vector& system_state,
                            const OracleLimits& limits) {
  JointRegister reg = make_joint(1, system_state, limits);
  reg.hadamard(0);
  reg.controlled(0, m1);
  reg.controlled(0, m0);
  reg.hadamard(0);
  return reg.amps;
}

AmplitudeChannel::AmplitudeChannel(const CwsCode& code, const PauliOperator& error,
                                   const std::vector<std::complex<double>>& coefficients,
                                   uint64_t seed, const OracleLimits& limits)
    : rng_(seed), limits_(limits) {
  code.validate();
  reference_ = code_state(code, coefficients, limits_);
  state_ = reference_;
  state_.amplitudes = apply_pauli(error, state_.amplitudes);
}

MeasureOutcome AmplitudeChannel::measure(const MeasurementExpr& expr) {
  const MeasureResult result = oracle::measure(state_, expr, rng_, limits_);
  return MeasureOutcome{result.value, result.deterministic};
}

double AmplitudeChannel::recovered_fidelity(const PauliOperator& recovery) const {
  return std::abs(reference_.amplitudes.dot(apply_pauli(recovery, state_.amplitudes)));
}

}  // namespace cwsqec::oracle
