#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cwsqec/pauli.hpp"

namespace cwsqec {

/*
 * Measurement expression tree. A leaf is a single Hermitian Pauli
 * measurement; an AND node stabilizes the intersection of its children's +1
 * eigenspaces; an XOR node stabilizes their symmetric difference. All leaves
 * across a tree must commute pairwise so the composite projectors are well
 * defined (for commuting projectors, AND multiplies them and XOR folds
 * P1 + P0 - 2 P1 P0).
 *
 * An empty AND stabilizes everything; an empty XOR stabilizes nothing.
 */
struct MeasurementExpr {
  enum class Kind : uint8_t { leaf, and_node, xor_node };

  Kind kind = Kind::leaf;
  PauliOperator op;                       // leaf payload
  std::vector<MeasurementExpr> children;  // and/xor payload

  static MeasurementExpr leaf(const PauliOperator& op);
  /* Nested ANDs are flattened; children must be leaves afterwards. */
  static MeasurementExpr and_of(std::vector<MeasurementExpr> parts);
  /* Nested XORs are flattened. */
  static MeasurementExpr xor_of(std::vector<MeasurementExpr> parts);

  std::vector<const PauliOperator*> leaves() const;
  size_t qubit_count() const;

  /* Conjugates every leaf by t; the tree shape is preserved. */
  MeasurementExpr conjugated_by(const PauliOperator& t) const;

  /*
   * S-expression text form, round-tripping exactly:
   *   (xor (and "X1 Z2 Z5" "X2 Z1 Z3") "Z4")
   * Leaves are quoted Pauli strings.
   */
  std::string str() const;
  static MeasurementExpr parse(size_t n, const std::string& text);

  bool operator==(const MeasurementExpr& other) const;
};

/*
 * Two-qubit gate ledger for the ancilla-based circuit of an expression. A
 * lone leaf or an AND over L leaves costs 2L controlled n-qubit Pauli
 * operators at n two-qubit gates each, plus L-1 Toffoli gates at 6 two-qubit
 * gates each, and uses L+1 ancillas. XOR concatenates its children's
 * circuits at no extra gate cost; concatenated blocks reuse ancillas, so the
 * ancilla count of an XOR is the maximum over its children.
 */
struct GateCost {
  uint64_t controlled_pauli_count = 0;
  uint64_t toffoli_count = 0;
  uint64_t two_qubit_total = 0;
  uint64_t ancilla_count = 0;
};

GateCost gate_cost(const MeasurementExpr& expr);

}  // namespace cwsqec
