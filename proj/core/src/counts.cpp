#include "cwsqec/counts.hpp"

#include <stdexcept>

namespace cwsqec {

namespace {

uint64_t checked_mul(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("measurement count overflows 64 bits");
  }
  return r;
}

uint64_t checked_add(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("measurement count overflows 64 bits");
  }
  return r;
}

uint64_t pow3(size_t t) {
  uint64_t r = 1;
  for (size_t i = 0; i < t; i++) {
    r = checked_mul(r, 3);
  }
  return r;
}

}  // namespace

uint64_t binomial(size_t n, size_t k) {
  if (k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  uint64_t r = 1;
  for (size_t i = 1; i <= k; i++) {
    /* r * (n-k+i) is divisible by i at every step. */
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

uint64_t exhaustive_measurement_bound(size_t n, size_t t) {
  uint64_t total = 0;
  for (size_t i = 0; i <= t; i++) {
    total = checked_add(total, checked_mul(binomial(n, i), pow3(i)));
  }
  return total;
}

uint64_t clustered_measurement_bound(size_t n, size_t t) {
  if (t == 0) {
    return 0;
  }
  return binomial(n, t) + 2 * static_cast<uint64_t>(t) - 1;
}

bool ratio_bound_met(size_t n, size_t t) {
  if (t == 0) {
    return true;
  }
  uint64_t b = exhaustive_measurement_bound(n, t);
  uint64_t cn = clustered_measurement_bound(n, t);
  if (t == 1) {
    /* B (n+1) >= (3n+1) N, both sides exact. */
    return checked_mul(b, n + 1) >= checked_mul(3 * static_cast<uint64_t>(n) + 1, cn);
  }
  return b >= checked_mul(pow3(t), cn);
}

}  // namespace cwsqec
