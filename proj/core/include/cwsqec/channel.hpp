#pragma once

#include "cwsqec/measurement.hpp"
#include "cwsqec/pauli.hpp"

namespace cwsqec {

struct MeasureOutcome {
  int value = 0;               // +1 or -1
  bool deterministic = false;  // the outcome probability was 0 or 1
};

/*
 * A corrupted code state under measurement. measure() projects the hidden
 * state onto the observed outcome and returns it; recovered_fidelity()
 * reports |<reference| R |state>| for a candidate recovery operator R
 * against the undamaged reference state.
 */
class MeasurementChannel {
 public:
  virtual ~MeasurementChannel() = default;
  virtual MeasureOutcome measure(const MeasurementExpr& expr) = 0;
  virtual double recovered_fidelity(const PauliOperator& recovery) const = 0;
  virtual size_t qubit_count() const = 0;
};

}  // namespace cwsqec
