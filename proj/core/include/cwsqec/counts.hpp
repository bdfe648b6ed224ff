#pragma once

#include <cstddef>
#include <cstdint>

namespace cwsqec {

/* C(n, k); 0 when k > n. Throws std::overflow_error if the value does not
 * fit in 64 bits. */
uint64_t binomial(size_t n, size_t k);

/*
 * Number of Pauli errors of weight at most t on n qubits, identity
 * included: sum_{i=0..t} C(n,i) 3^i. This is the worst-case measurement
 * count of the exhaustive strategy on a non-degenerate code.
 */
uint64_t exhaustive_measurement_bound(size_t n, size_t t);

/*
 * Worst-case measurement count of the clustered strategy:
 * C(n,t) + 2t - 1, which is 0 for t = 0 (nothing to locate).
 */
uint64_t clustered_measurement_bound(size_t n, size_t t);

/*
 * Exact-integer check of the advertised reduction factor
 *   B/N >= (3n+1)/(n+1)  for t = 1 (an equality),
 *   B/N >= 3^t           for t > 1.
 * The t > 1 inequality holds wherever a t-error-correcting code can exist
 * (n >= 4t+1) but fails for some shorter lengths; this reports the plain
 * mathematical truth. Vacuously true for t = 0.
 */
bool ratio_bound_met(size_t n, size_t t);

}  // namespace cwsqec
