#pragma once

#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cwsqec/graph_code.hpp"
#include "cwsqec/pauli.hpp"

namespace cwsqec::testing {

/* Five-cycle graph 1-2-3-4-5-1 with codewords {00000, 11111}. */
CwsCode pentagon_code();

/* All 12 distinct five-cycles on vertices 1..5, each carrying the
 * repetition codeword pair; every one is an additive distance-3 code. */
std::vector<CwsCode> pentagon_labelings();

/*
 * Exact classical detectability test for one error on a standard-form
 * code: either the classical image moves some codeword onto another one
 * (off-diagonal contamination), or the image vanishes and the induced
 * per-codeword phases must agree.
 */
bool classically_detectable(const CwsCode& code, const PauliOperator& e);

struct RandomCodePool {
  std::vector<CwsCode> codes;
  size_t random_hits = 0;  // codes found by blind random draws
};

/*
 * At least `count` structurally valid codes on <= 6 qubits whose distance
 * the dense oracle confirms to be >= 3. Random graph and codeword draws
 * are tried first (classically screened, then oracle-checked); known-good
 * five-cycle presentations top the pool up if the draws run dry.
 * Deterministic for a fixed seed.
 */
RandomCodePool distance3_codes(size_t count, uint64_t seed);

/* Two distinct non-identity Hermitian Pauli operators that commute;
 * requires n >= 2. */
std::pair<PauliOperator, PauliOperator> random_commuting_pair(size_t n, std::mt19937_64& rng);

Eigen::VectorXcd random_state(size_t dimension, std::mt19937_64& rng);

std::vector<std::complex<double>> random_amplitudes(size_t count, uint64_t seed);

}  // namespace cwsqec::testing
