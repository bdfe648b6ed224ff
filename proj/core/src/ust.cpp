#include "cwsqec/ust.hpp"

#include <map>
#include <stdexcept>

namespace cwsqec {

OrthogonalizedStabilizer orthogonalize(const WordStabilizer& stabilizer,
                                       const std::vector<PauliOperator>& group_generators) {
  std::vector<PauliOperator> remaining = stabilizer.generators;
  std::vector<PauliOperator> chosen;

  for (size_t j = 0; j < group_generators.size(); j++) {
    const PauliOperator& g = group_generators[j];
    for (size_t i = 0; i < j; i++) {
      if (!g.commutes(group_generators[i])) {
        throw std::invalid_argument("group generators must commute pairwise");
      }
    }
    size_t pivot_index = remaining.size();
    for (size_t r = 0; r < remaining.size(); r++) {
      if (!remaining[r].commutes(g)) {
        pivot_index = r;
        break;
      }
    }
    if (pivot_index == remaining.size()) {
      throw std::invalid_argument(
          "orthogonalization failed: group generator " + std::to_string(j + 1) +
          " is dependent or symplectically degenerate against the stabilizer");
    }
    PauliOperator pivot = remaining[pivot_index];
    remaining.erase(remaining.begin() + pivot_index);
    /* Clear the anticommutation of everything else with g by multiplying in
     * the pivot; products of two anticommuting partners commute with g. */
    for (auto& r : remaining) {
      if (!r.commutes(g)) {
        r = multiply(r, pivot);
      }
    }
    for (auto& c : chosen) {
      if (!c.commutes(g)) {
        c = multiply(c, pivot);
      }
    }
    chosen.push_back(std::move(pivot));
  }

  return OrthogonalizedStabilizer{std::move(chosen), std::move(remaining)};
}

void UstCode::validate() const {
  base.validate();
  BinaryMatrix group_span(base.n());
  for (const auto& g : group_generators) {
    if (g.n != base.n()) {
      throw std::invalid_argument("group generator qubit count mismatch");
    }
    if (!g.is_z_type()) {
      throw std::invalid_argument("group generators must be Z-type: " + g.str());
    }
    group_span.append_row(g.z);
  }
  if (gf2_rank(group_span) != group_generators.size()) {
    throw std::invalid_argument("group generators must be independent");
  }
  if (translations.empty()) {
    throw std::invalid_argument("USt code needs at least one translation");
  }
  for (size_t i = 0; i < translations.size(); i++) {
    if (translations[i].n != base.n()) {
      throw std::invalid_argument("translation qubit count mismatch");
    }
    for (size_t j = i + 1; j < translations.size(); j++) {
      BinaryVector difference = classical_map(base.graph, translations[i]) ^
                                classical_map(base.graph, translations[j]);
      if (gf2_in_span(group_span, difference)) {
        throw std::invalid_argument(
            "translated subspaces overlap: translations " + std::to_string(i + 1) + " and " +
            std::to_string(j + 1) + " lie in the same group coset");
      }
    }
  }
}

UstCode build_ust(const CwsCode& code, const BinaryMatrix& group_rows, bool merge_kernel) {
  BinaryMatrix rows(code.n());
  for (const auto& r : group_rows.rows) {
    rows.append_row(r);
  }
  if (merge_kernel) {
    for (const auto& r : classical_kernel(code.codewords).rows) {
      rows.append_row(r);
    }
  }
  BinaryMatrix basis = gf2_basis(rows);

  UstCode ust;
  ust.base = code;
  for (const auto& r : basis.rows) {
    ust.group_generators.push_back(PauliOperator::z_type(r));
  }

  /* Echelonize the span so each reduction row has a unique pivot; reducing
   * against it canonicalizes coset representatives. */
  std::vector<BinaryVector> echelon;
  std::vector<size_t> pivots;
  for (const auto& b : basis.rows) {
    BinaryVector r = b;
    for (size_t i = 0; i < echelon.size(); i++) {
      if (r.get(pivots[i])) {
        r ^= echelon[i];
      }
    }
    size_t pivot = 0;
    while (!r.get(pivot)) {
      pivot++;
    }
    echelon.push_back(std::move(r));
    pivots.push_back(pivot);
  }

  /* First-seen codeword operator of every group coset the codewords touch. */
  std::map<BinaryVector, size_t> coset_reps;
  for (size_t i = 0; i < code.codewords.size(); i++) {
    BinaryVector canonical = code.codewords[i];
    for (size_t r = 0; r < echelon.size(); r++) {
      if (canonical.get(pivots[r])) {
        canonical ^= echelon[r];
      }
    }
    if (coset_reps.emplace(canonical, i).second) {
      ust.translations.push_back(code.word_operator(i));
    }
  }
  ust.validate();
  return ust;
}

MeasurementExpr additive_measurement(const std::vector<PauliOperator>& generators) {
  std::vector<MeasurementExpr> parts;
  parts.reserve(generators.size());
  for (const auto& g : generators) {
    parts.push_back(MeasurementExpr::leaf(g));
  }
  return MeasurementExpr::and_of(std::move(parts));
}

MeasurementExpr ust_measurement(const UstCode& code) {
  code.validate();
  OrthogonalizedStabilizer split =
      orthogonalize(standard_form_stabilizer(code.base.graph), code.group_generators);

  std::vector<MeasurementExpr> blocks;
  blocks.reserve(code.translations.size());
  for (const auto& t : code.translations) {
    std::vector<MeasurementExpr> parts;
    parts.reserve(split.code_generators.size());
    for (const auto& g : split.code_generators) {
      parts.push_back(MeasurementExpr::leaf(g.conjugated_by(t)));
    }
    blocks.push_back(MeasurementExpr::and_of(std::move(parts)));
  }
  return MeasurementExpr::xor_of(std::move(blocks));
}

}  // namespace cwsqec
