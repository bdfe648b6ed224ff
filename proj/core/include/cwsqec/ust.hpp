#pragma once

#include <vector>

#include "cwsqec/graph_code.hpp"
#include "cwsqec/measurement.hpp"

namespace cwsqec {

/*
 * Generators of the word stabilizer recombined against word operators
 * g_1..g_k: paired[i] anticommutes with g_j iff i == j, and every generator
 * in code_generators commutes with all g_j. Both lists together generate
 * the original stabilizer group, with phases tracked exactly.
 */
struct OrthogonalizedStabilizer {
  std::vector<PauliOperator> paired;           // k generators
  std::vector<PauliOperator> code_generators;  // n - k generators
};

/* Fails (std::invalid_argument) when no such recombination exists, i.e. the
 * g_j are dependent or symplectically degenerate against the stabilizer. */
OrthogonalizedStabilizer orthogonalize(const WordStabilizer& stabilizer,
                                       const std::vector<PauliOperator>& group_generators);

/*
 * Union of stabilizer codes over a common stabilizer state: the group word
 * operators g_i span an Abelian group defining the additive part, and the
 * translations t_j move it to mutually orthogonal subspaces. The dimension
 * is m * 2^k.
 */
struct UstCode {
  CwsCode base;
  std::vector<PauliOperator> group_generators;  // k independent Z-type operators
  std::vector<PauliOperator> translations;      // m operators in distinct cosets

  size_t k() const { return group_generators.size(); }
  size_t m() const { return translations.size(); }

  /* Checks Z-type independent group generators and pairwise-distinct
   * translation cosets (overlapping translated subspaces are rejected). */
  void validate() const;
};

/*
 * USt view of a CWS code with a prescribed Z-type group given as classical
 * rows. Translations are the first-seen codeword operators of the cosets
 * the codewords touch. With merge_kernel the classical kernel of the
 * codeword set joins the group, shrinking the translation set.
 */
UstCode build_ust(const CwsCode& code, const BinaryMatrix& group_rows,
                  bool merge_kernel = false);

/* AND over stabilizer generators: the error-detecting measurement of an
 * additive code. */
MeasurementExpr additive_measurement(const std::vector<PauliOperator>& generators);

/*
 * Error-detecting measurement of a USt code:
 *   M = XOR_j AND_i (t_j G_i t_j^dagger)
 * with G_i the code generators obtained by orthogonalizing the graph-state
 * stabilizer against the group generators.
 */
MeasurementExpr ust_measurement(const UstCode& code);

}  // namespace cwsqec
