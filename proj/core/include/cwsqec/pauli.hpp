#pragma once

#include <cstdint>
#include <string>

#include "cwsqec/gf2.hpp"

namespace cwsqec {

/*
 * n-qubit Pauli operator stored as i^phase_exponent * X^x * Z^z, with the X
 * factor applied after Z. A Y on qubit j contributes x_j = z_j = 1 together
 * with one factor of i, so Y = i*X*Z is Hermitian with phase_exponent 1.
 *
 * Multiplication, adjoints and conjugation track the phase exactly:
 *   (i^a X^u Z^v)(i^b X^p Z^q) = i^(a+b) (-1)^(v.p) X^(u+p) Z^(v+q).
 */
struct PauliOperator {
  size_t n = 0;
  BinaryVector x;
  BinaryVector z;
  uint8_t phase_exponent = 0;  // exponent of i, mod 4

  PauliOperator() = default;
  explicit PauliOperator(size_t n_) : n(n_), x(n_), z(n_) {}

  static PauliOperator identity(size_t n);
  /* Single-qubit factor; letter in {X, Y, Z}, qubit is 1-based. */
  static PauliOperator single(size_t n, char letter, size_t qubit);
  static PauliOperator z_type(const BinaryVector& v);

  /*
   * Text form "X1 Z3 Y4" with an optional leading phase token among
   * "+", "-", "+i", "-i". "I" denotes the identity. Qubits are 1-based and
   * may not repeat. str() emits the same form (the "+" token is omitted)
   * and round-trips through from_string exactly.
   */
  static PauliOperator from_string(size_t n, const std::string& text);
  std::string str() const;

  size_t weight() const;
  bool is_identity() const;  // ignores the phase
  bool is_hermitian() const;
  bool is_z_type() const;

  bool commutes(const PauliOperator& other) const;

  PauliOperator adjoint() const;
  /* t * (*this) * t^dagger; flips the sign exactly when t anticommutes. */
  PauliOperator conjugated_by(const PauliOperator& t) const;
  /* Same operator up to phase, rephased to +1 times a Hermitian tensor of
   * I/X/Y/Z letters. */
  PauliOperator hermitian_form() const;
  PauliOperator ignoring_phase() const;

  PauliOperator operator*(const PauliOperator& other) const;
  bool operator==(const PauliOperator& other) const = default;
};

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
bool commutes(const PauliOperator& a, const PauliOperator& b);

}  // namespace cwsqec
