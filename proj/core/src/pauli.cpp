#include "cwsqec/pauli.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cwsqec {

namespace {

/* Number of qubits carrying both an X and a Z factor (the Y positions). */
size_t xz_overlap(const PauliOperator& p) {
  size_t total = 0;
  for (size_t w = 0; w < p.x.words.size(); w++) {
    total += std::popcount(p.x.words[w] & p.z.words[w]);
  }
  return total;
}

}  // namespace

PauliOperator PauliOperator::identity(size_t n) {
  return PauliOperator(n);
}

PauliOperator PauliOperator::single(size_t n, char letter, size_t qubit) {
  if (qubit < 1 || qubit > n) {
    throw std::invalid_argument("qubit index out of range");
  }
  PauliOperator p(n);
  switch (letter) {
    case 'X':
      p.x.set(qubit - 1, true);
      break;
    case 'Z':
      p.z.set(qubit - 1, true);
      break;
    case 'Y':
      p.x.set(qubit - 1, true);
      p.z.set(qubit - 1, true);
      p.phase_exponent = 1;
      break;
    default:
      throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
  }
  return p;
}

PauliOperator PauliOperator::z_type(const BinaryVector& v) {
  PauliOperator p(v.length);
  p.z = v;
  return p;
}

PauliOperator PauliOperator::from_string(size_t n, const std::string& text) {
  PauliOperator p(n);
  std::istringstream in(text);
  std::string token;
  bool first = true;
  bool saw_letters = false;
  while (in >> token) {
    if (first) {
      first = false;
      if (token == "+") {
        continue;
      }
      if (token == "-") {
        p.phase_exponent = 2;
        continue;
      }
      if (token == "+i") {
        p.phase_exponent = 1;
        continue;
      }
      if (token == "-i") {
        p.phase_exponent = 3;
        continue;
      }
    }
    if (token == "I") {
      saw_letters = true;
      continue;
    }
    if (token.size() < 2) {
      throw std::invalid_argument("bad Pauli token '" + token + "' in \"" + text + "\"");
    }
    char letter = token[0];
    size_t qubit = 0;
    for (size_t i = 1; i < token.size(); i++) {
      if (!std::isdigit(static_cast<unsigned char>(token[i]))) {
        throw std::invalid_argument("bad Pauli token '" + token + "' in \"" + text + "\"");
      }
      qubit = qubit * 10 + (token[i] - '0');
    }
    if (qubit < 1 || qubit > n) {
      throw std::invalid_argument("qubit index out of range in \"" + text + "\"");
    }
    if (p.x.get(qubit - 1) || p.z.get(qubit - 1)) {
      throw std::invalid_argument("duplicate qubit index in \"" + text + "\"");
    }
    p = multiply(p, single(n, letter, qubit));
    saw_letters = true;
  }
  if (!saw_letters) {
    throw std::invalid_argument("Pauli string has no operator tokens: \"" + text + "\"");
  }
  return p;
}

std::string PauliOperator::str() const {
  static const char* phase_names[4] = {"", "+i ", "- ", "-i "};
  uint8_t display = static_cast<uint8_t>((phase_exponent + 4 - (xz_overlap(*this) & 3)) & 3);
  std::string s = phase_names[display];
  bool any = false;
  for (size_t q = 0; q < n; q++) {
    bool xs = x.get(q);
    bool zs = z.get(q);
    if (!xs && !zs) {
      continue;
    }
    if (any) {
      s += ' ';
    }
    s += xs ? (zs ? 'Y' : 'X') : 'Z';
    s += std::to_string(q + 1);
    any = true;
  }
  if (!any) {
    s += 'I';
  }
  return s;
}

size_t PauliOperator::weight() const {
  size_t total = 0;
  for (size_t w = 0; w < x.words.size(); w++) {
    total += std::popcount(x.words[w] | z.words[w]);
  }
  return total;
}

bool PauliOperator::is_identity() const {
  return x.is_zero() && z.is_zero();
}

bool PauliOperator::is_hermitian() const {
  return ((phase_exponent + xz_overlap(*this)) & 1) == 0;
}

bool PauliOperator::is_z_type() const {
  return x.is_zero();
}

bool PauliOperator::commutes(const PauliOperator& other) const {
  if (n != other.n) {
    throw std::invalid_argument("qubit count mismatch in commutes");
  }
  return !(x.dot(other.z) ^ z.dot(other.x));
}

PauliOperator PauliOperator::adjoint() const {
  PauliOperator p = *this;
  p.phase_exponent = static_cast<uint8_t>((4 - phase_exponent + 2 * (xz_overlap(*this) & 1)) & 3);
  return p;
}

PauliOperator PauliOperator::conjugated_by(const PauliOperator& t) const {
  PauliOperator p = *this;
  if (!commutes(t)) {
    p.phase_exponent = static_cast<uint8_t>((p.phase_exponent + 2) & 3);
  }
  return p;
}

PauliOperator PauliOperator::hermitian_form() const {
  PauliOperator p = *this;
  p.phase_exponent = static_cast<uint8_t>(xz_overlap(*this) & 3);
  return p;
}

PauliOperator PauliOperator::ignoring_phase() const {
  PauliOperator p = *this;
  p.phase_exponent = 0;
  return p;
}

PauliOperator PauliOperator::operator*(const PauliOperator& other) const {
  return multiply(*this, other);
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("qubit count mismatch in multiply");
  }
  PauliOperator p(a.n);
  p.phase_exponent = static_cast<uint8_t>((a.phase_exponent + b.phase_exponent + 2 * (a.z.dot(b.x) ? 1 : 0)) & 3);
  p.x = a.x ^ b.x;
  p.z = a.z ^ b.z;
  return p;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  return a.commutes(b);
}

}  // namespace cwsqec
