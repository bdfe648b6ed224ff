#include "cwsqec/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace cwsqec {

BinaryVector BinaryVector::from_string(const std::string& bits) {
  BinaryVector v(bits.size());
  for (size_t i = 0; i < bits.size(); i++) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1': " + bits);
    }
  }
  return v;
}

BinaryVector BinaryVector::unit(size_t n, size_t index) {
  BinaryVector v(n);
  v.set(index, true);
  return v;
}

bool BinaryVector::get(size_t i) const {
  if (i >= length) {
    throw std::out_of_range("bit index out of range");
  }
  return (words[i >> 6] >> (i & 63)) & 1;
}

void BinaryVector::set(size_t i, bool value) {
  if (i >= length) {
    throw std::out_of_range("bit index out of range");
  }
  uint64_t mask = uint64_t{1} << (i & 63);
  if (value) {
    words[i >> 6] |= mask;
  } else {
    words[i >> 6] &= ~mask;
  }
}

size_t BinaryVector::weight() const {
  size_t total = 0;
  for (uint64_t w : words) {
    total += std::popcount(w);
  }
  return total;
}

bool BinaryVector::is_zero() const {
  for (uint64_t w : words) {
    if (w) {
      return false;
    }
  }
  return true;
}

bool BinaryVector::dot(const BinaryVector& other) const {
  if (length != other.length) {
    throw std::invalid_argument("length mismatch in BinaryVector::dot");
  }
  uint64_t acc = 0;
  for (size_t i = 0; i < words.size(); i++) {
    acc ^= words[i] & other.words[i];
  }
  return std::popcount(acc) & 1;
}

BinaryVector& BinaryVector::operator^=(const BinaryVector& other) {
  if (length != other.length) {
    throw std::invalid_argument("length mismatch in BinaryVector::operator^");
  }
  for (size_t i = 0; i < words.size(); i++) {
    words[i] ^= other.words[i];
  }
  return *this;
}

BinaryVector BinaryVector::operator^(const BinaryVector& other) const {
  BinaryVector result = *this;
  result ^= other;
  return result;
}

bool BinaryVector::operator<(const BinaryVector& other) const {
  size_t common = std::min(length, other.length);
  for (size_t w = 0; w < (common + 63) / 64; w++) {
    uint64_t diff = words[w] ^ other.words[w];
    if (diff) {
      size_t bit = (w << 6) + std::countr_zero(diff);
      if (bit >= common) {
        break;
      }
      return !get(bit);
    }
  }
  return length < other.length;
}

std::string BinaryVector::str() const {
  std::string s(length, '0');
  for (size_t i = 0; i < length; i++) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

BinaryMatrix::BinaryMatrix(size_t cols, std::vector<BinaryVector> r) : columns(cols), rows(std::move(r)) {
  for (const auto& row : rows) {
    if (row.length != columns) {
      throw std::invalid_argument("row length mismatch in BinaryMatrix");
    }
  }
}

void BinaryMatrix::append_row(const BinaryVector& row) {
  if (row.length != columns) {
    throw std::invalid_argument("row length mismatch in BinaryMatrix::append_row");
  }
  rows.push_back(row);
}

namespace {

/*
 * Incremental elimination state: `reduced[i]` has a unique pivot column
 * `pivots[i]`, and equals the combination `combos[i]` of the rows fed in so
 * far (combos are tracked only when requested).
 */
struct Eliminator {
  std::vector<BinaryVector> reduced;
  std::vector<size_t> pivots;
  std::vector<std::vector<size_t>> combos;  // index sets over input rows
  bool track;

  explicit Eliminator(bool track_combos) : track(track_combos) {}

  /* Reduces `row` against the pivots; returns the residual and, if tracking,
   * appends the contributing reduced-row indices to `used`. */
  BinaryVector residual(const BinaryVector& row, std::vector<size_t>* used) const {
    BinaryVector r = row;
    for (size_t i = 0; i < reduced.size(); i++) {
      if (!r.is_zero() && r.get(pivots[i])) {
        r ^= reduced[i];
        if (used) {
          used->push_back(i);
        }
      }
    }
    return r;
  }

  /* Feeds input row `index`; returns true when it was independent. */
  bool add(const BinaryVector& row, size_t index) {
    std::vector<size_t> used;
    BinaryVector r = residual(row, track ? &used : nullptr);
    if (r.is_zero()) {
      return false;
    }
    size_t pivot = 0;
    while (!r.get(pivot)) {
      pivot++;
    }
    if (track) {
      std::vector<size_t> combo{index};
      for (size_t i : used) {
        for (size_t j : combos[i]) {
          combo.push_back(j);
        }
      }
      combos.push_back(std::move(combo));
    }
    reduced.push_back(std::move(r));
    pivots.push_back(pivot);
    return true;
  }
};

}  // namespace

size_t gf2_rank(const BinaryMatrix& m) {
  Eliminator e(false);
  size_t rank = 0;
  for (size_t i = 0; i < m.rows.size(); i++) {
    if (e.add(m.rows[i], i)) {
      rank++;
    }
  }
  return rank;
}

BinaryMatrix gf2_basis(const BinaryMatrix& m) {
  Eliminator e(false);
  BinaryMatrix basis(m.columns);
  for (size_t i = 0; i < m.rows.size(); i++) {
    if (e.add(m.rows[i], i)) {
      basis.append_row(m.rows[i]);
    }
  }
  return basis;
}

std::optional<BinaryVector> gf2_solve(const BinaryMatrix& m, const BinaryVector& target) {
  if (target.length != m.columns) {
    throw std::invalid_argument("target length mismatch in gf2_solve");
  }
  Eliminator e(true);
  for (size_t i = 0; i < m.rows.size(); i++) {
    e.add(m.rows[i], i);
  }
  std::vector<size_t> used;
  BinaryVector r = e.residual(target, &used);
  if (!r.is_zero()) {
    return std::nullopt;
  }
  BinaryVector coefficients(m.row_count());
  for (size_t i : used) {
    for (size_t j : e.combos[i]) {
      coefficients.set(j, !coefficients.get(j));
    }
  }
  return coefficients;
}

bool gf2_in_span(const BinaryMatrix& m, const BinaryVector& target) {
  if (target.length != m.columns) {
    throw std::invalid_argument("target length mismatch in gf2_in_span");
  }
  Eliminator e(false);
  for (size_t i = 0; i < m.rows.size(); i++) {
    e.add(m.rows[i], i);
  }
  return e.residual(target, nullptr).is_zero();
}

}  // namespace cwsqec
