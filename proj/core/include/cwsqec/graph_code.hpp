#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwsqec/gf2.hpp"
#include "cwsqec/pauli.hpp"

namespace cwsqec {

/* Simple undirected graph stored as a symmetric adjacency matrix with zero
 * diagonal. Vertices are 1-based at the interface. */
struct Graph {
  size_t n = 0;
  BinaryMatrix adjacency;

  Graph() = default;
  explicit Graph(size_t n_);
  /* Rejects self-loops and duplicate edges, including the same edge listed
   * in both orientations. */
  static Graph from_edges(size_t n, const std::vector<std::pair<size_t, size_t>>& edges);

  const BinaryVector& row(size_t vertex) const;  // 1-based
  std::vector<std::pair<size_t, size_t>> edges() const;
};

/* Generators of a word stabilizer, in row order. */
struct WordStabilizer {
  std::vector<PauliOperator> generators;
};

/* Standard-form graph-state generators S_i = X_i Z^{R_i}. */
WordStabilizer standard_form_stabilizer(const Graph& graph);

/*
 * Codeword-stabilized code in standard form: the graph state together with
 * Z-type word operators W_i = Z^{c_i} for the classical codewords c_i.
 */
struct CwsCode {
  Graph graph;
  std::vector<BinaryVector> codewords;
  std::optional<size_t> declared_distance;

  size_t n() const { return graph.n; }
  size_t dimension() const { return codewords.size(); }
  PauliOperator word_operator(size_t index) const;  // 0-based into codewords

  /* Structural checks: at least one codeword, matching lengths, all
   * codewords distinct. */
  void validate() const;
};

/*
 * Classical image of a Pauli error: for E = i^e X^u Z^v,
 *   Cl_G(E) = v + sum_i u_i R_i  (mod 2).
 * Phase-blind; errors with equal images act identically on the code
 * whenever both are correctable.
 */
BinaryVector classical_map(const Graph& graph, const PauliOperator& e);

bool degenerate(const Graph& graph, const PauliOperator& e1, const PauliOperator& e2);

/*
 * Pauli errors of weight 1..max_weight in deterministic order: weight-major,
 * support sets lexicographic, letters counted X < Y < Z with the highest
 * qubit moving fastest. include_identity prepends the weight-0 identity.
 */
std::vector<PauliOperator> enumerate_errors(size_t n, size_t max_weight,
                                            bool include_identity = false);

/*
 * Multiplies E by graph-state generators until the X part vanishes. The
 * result is the pure-Z operator i^e' Z^{Cl_G(E)} with the exact phase, so
 * E|s> = i^e' Z^{Cl_G(E)} |s> on the graph state.
 */
PauliOperator reduce_to_z_form(const Graph& graph, const PauliOperator& e);

/*
 * Kernel of the codeword set: all x with x + C = C. C is a disjoint union
 * of kernel cosets. Returns a basis, possibly with zero rows.
 */
BinaryMatrix classical_kernel(const std::vector<BinaryVector>& codewords);

/*
 * Code file format:
 *   n=<int> K=<int> [d=<int>]
 *   edges:
 *   <i> <j>
 *   ...
 *   codewords:
 *   <bitstring>
 *   ...
 * Blank lines and lines starting with '#' are ignored. Parse errors carry
 * 1-based line numbers.
 */
CwsCode parse_code(std::istream& in);
CwsCode parse_code_file(const std::string& path);
std::string write_code(const CwsCode& code);

}  // namespace cwsqec
