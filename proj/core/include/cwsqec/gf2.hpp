#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cwsqec {

/*
 * Fixed-length bit vector over GF(2), packed into 64-bit words. Bit i of the
 * vector is bit (i % 64) of word (i / 64). Indices here are 0-based; the
 * 1-based qubit convention of the text formats is converted at the parsing
 * boundary.
 */
struct BinaryVector {
  size_t length = 0;
  std::vector<uint64_t> words;

  BinaryVector() = default;
  explicit BinaryVector(size_t n) : length(n), words((n + 63) / 64, 0) {}

  /* Parses "01101"; bit i of the vector is character i. */
  static BinaryVector from_string(const std::string& bits);
  static BinaryVector unit(size_t n, size_t index);

  bool get(size_t i) const;
  void set(size_t i, bool value);

  size_t weight() const;
  bool is_zero() const;

  /* Inner product mod 2. */
  bool dot(const BinaryVector& other) const;

  BinaryVector& operator^=(const BinaryVector& other);
  BinaryVector operator^(const BinaryVector& other) const;
  bool operator==(const BinaryVector& other) const = default;
  /* Lexicographic on the bit string; usable as a map key. */
  bool operator<(const BinaryVector& other) const;

  std::string str() const;
};

/* Row list of equal-length vectors. */
struct BinaryMatrix {
  size_t columns = 0;
  std::vector<BinaryVector> rows;

  BinaryMatrix() = default;
  explicit BinaryMatrix(size_t cols) : columns(cols) {}
  BinaryMatrix(size_t cols, std::vector<BinaryVector> r);

  void append_row(const BinaryVector& row);
  size_t row_count() const { return rows.size(); }
};

size_t gf2_rank(const BinaryMatrix& m);

/*
 * Independent subset of the input rows spanning the same space. Keeps the
 * first-seen independent rows in input order, so everything built on top of
 * the basis is deterministic.
 */
BinaryMatrix gf2_basis(const BinaryMatrix& m);

/*
 * Solves sum_i c_i * m.rows[i] = target. Returns the coefficient vector
 * (length m.row_count()), or nullopt when target is outside the row span.
 * The solution is unique when the rows are independent.
 */
std::optional<BinaryVector> gf2_solve(const BinaryMatrix& m, const BinaryVector& target);

bool gf2_in_span(const BinaryMatrix& m, const BinaryVector& target);

}  // namespace cwsqec
