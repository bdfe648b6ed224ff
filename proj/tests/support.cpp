#include "support.hpp"

#include <algorithm>
#include <set>

#include "cwsqec/oracle.hpp"

namespace cwsqec::testing {

namespace {

CwsCode cycle_code(const std::vector<size_t>& order) {
  const size_t n = order.size();
  std::vector<std::pair<size_t, size_t>> edges;
  for (size_t i = 0; i < n; ++i) edges.emplace_back(order[i], order[(i + 1) % n]);
  CwsCode code;
  code.graph = Graph::from_edges(n, edges);
  code.codewords = {BinaryVector(n), BinaryVector(n)};
  for (size_t i = 0; i < n; ++i) code.codewords[1].set(i, true);
  code.declared_distance = 3;
  return code;
}

}  // namespace

CwsCode pentagon_code() { return cycle_code({1, 2, 3, 4, 5}); }

std::vector<CwsCode> pentagon_labelings() {
  std::vector<size_t> tail = {2, 3, 4, 5};
  std::set<std::set<std::pair<size_t, size_t>>> seen;
  std::vector<CwsCode> codes;
  std::sort(tail.begin(), tail.end());
  do {
    std::vector<size_t> order = {1};
    order.insert(order.end(), tail.begin(), tail.end());
    std::set<std::pair<size_t, size_t>> canon;
    for (size_t i = 0; i < order.size(); ++i) {
      const size_t a = order[i];
      const size_t b = order[(i + 1) % order.size()];
      canon.insert({std::min(a, b), std::max(a, b)});
    }
    if (seen.insert(canon).second) codes.push_back(cycle_code(order));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return codes;
}

bool classically_detectable(const CwsCode& code, const PauliOperator& e) {
  const BinaryVector image = classical_map(code.graph, e);
  if (!image.is_zero()) {
    for (const BinaryVector& a : code.codewords) {
      for (const BinaryVector& b : code.codewords) {
        if (!(a == b) && (a ^ b) == image) return false;
      }
    }
    return true;
  }
  // Diagonal action: the phase on |w_i> must not depend on i.
  uint8_t first = 0;
  for (size_t i = 0; i < code.dimension(); ++i) {
    const PauliOperator reduced =
        reduce_to_z_form(code.graph, e * code.word_operator(i));
    // e Z^c |s> = i^r Z^c' |s> with c' = c: the relative phase against Z^c.
    uint8_t relative = reduced.phase_exponent;
    if (i == 0) {
      first = relative;
    } else if (relative != first) {
      return false;
    }
  }
  return true;
}

RandomCodePool distance3_codes(size_t count, uint64_t seed) {
  RandomCodePool pool;
  std::mt19937_64 rng(seed);

  const auto random_vector = [&rng](size_t n) {
    BinaryVector v(n);
    for (size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
  };

  size_t attempts = 0;
  while (pool.codes.size() < count && attempts < 3000) {
    ++attempts;
    const size_t n = 5 + (rng() % 2);
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t a = 1; a <= n; ++a) {
      for (size_t b = a + 1; b <= n; ++b) {
        if (rng() & 1) edges.emplace_back(a, b);
      }
    }
    CwsCode code;
    code.graph = Graph::from_edges(n, edges);
    code.codewords = {random_vector(n), random_vector(n)};
    if (code.codewords[0] == code.codewords[1]) continue;

    bool screened = true;
    for (const PauliOperator& e : enumerate_errors(n, 2)) {
      if (!classically_detectable(code, e)) {
        screened = false;
        break;
      }
    }
    if (!screened) continue;
    if (oracle::verify_distance(code, 2) != std::nullopt) continue;
    pool.codes.push_back(code);
    ++pool.random_hits;
  }

  for (const CwsCode& fallback : pentagon_labelings()) {
    if (pool.codes.size() >= count) break;
    CwsCode code = fallback;
    code.declared_distance.reset();
    if (oracle::verify_distance(code, 2) != std::nullopt) continue;
    pool.codes.push_back(code);
  }
  return pool;
}

std::pair<PauliOperator, PauliOperator> random_commuting_pair(size_t n, std::mt19937_64& rng) {
  if (n < 2) {
    /* Distinct non-identity single-qubit Paulis always anticommute. */
    throw std::invalid_argument("commuting pairs need at least two qubits");
  }
  const auto random_pauli = [&]() {
    while (true) {
      PauliOperator p(n);
      for (size_t i = 0; i < n; ++i) {
        p.x.set(i, rng() & 1);
        p.z.set(i, rng() & 1);
      }
      if (p.x.is_zero() && p.z.is_zero()) continue;
      return p.hermitian_form();
    }
  };
  const PauliOperator first = random_pauli();
  while (true) {
    const PauliOperator second = random_pauli();
    if (second == first) continue;
    if (commutes(first, second)) return {first, second};
  }
}

Eigen::VectorXcd random_state(size_t dimension, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd state(dimension);
  for (size_t i = 0; i < dimension; ++i) {
    state(static_cast<Eigen::Index>(i)) = std::complex<double>(gauss(rng), gauss(rng));
  }
  state.normalize();
  return state;
}

std::vector<std::complex<double>> random_amplitudes(size_t count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> out(count);
  for (auto& c : out) c = {gauss(rng), gauss(rng)};
  return out;
}

}  // namespace cwsqec::testing
