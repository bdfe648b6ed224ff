#include <stdexcept>

#include "cwsqec/counts.hpp"
#include "doctest.h"

using namespace cwsqec;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(12, 3) == 220);
  CHECK(binomial(60, 30) == 118264581564861424ull);
  CHECK_THROWS_AS(binomial(100, 50), std::overflow_error);
}

TEST_CASE("exhaustive and clustered measurement bounds") {
  CHECK(exhaustive_measurement_bound(5, 0) == 1);
  CHECK(exhaustive_measurement_bound(5, 1) == 16);
  CHECK(exhaustive_measurement_bound(9, 2) == 352);
  CHECK(exhaustive_measurement_bound(12, 3) == 6571);

  CHECK(clustered_measurement_bound(5, 0) == 0);
  CHECK(clustered_measurement_bound(5, 1) == 6);
  CHECK(clustered_measurement_bound(9, 2) == 39);
  CHECK(clustered_measurement_bound(12, 3) == 225);
}

TEST_CASE("reduction factor check is exact in integers") {
  for (size_t n = 3; n <= 12; n++) {
    CAPTURE(n);
    CHECK(ratio_bound_met(n, 0));
    CHECK(ratio_bound_met(n, 1));  // equality B (n+1) = (3n+1) N
  }
  CHECK_FALSE(ratio_bound_met(4, 2));
  CHECK_FALSE(ratio_bound_met(8, 2));
  CHECK(ratio_bound_met(9, 2));
  CHECK(ratio_bound_met(12, 2));
  CHECK_FALSE(ratio_bound_met(5, 3));
  CHECK(ratio_bound_met(6, 3));
  CHECK(ratio_bound_met(12, 3));
}
