#include "cwsqec/measurement.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cwsqec {

namespace {

void check_leaf_operator(const PauliOperator& op) {
  if (!op.is_hermitian()) {
    throw std::invalid_argument("measurement leaf must be Hermitian: " + op.str());
  }
}

void check_pairwise_commuting(const std::vector<const PauliOperator*>& leaves) {
  for (size_t i = 0; i < leaves.size(); i++) {
    for (size_t j = i + 1; j < leaves.size(); j++) {
      if (!leaves[i]->commutes(*leaves[j])) {
        throw std::invalid_argument("measurement leaves must commute pairwise: " +
                                    leaves[i]->str() + " vs " + leaves[j]->str());
      }
    }
  }
}

}  // namespace

MeasurementExpr MeasurementExpr::leaf(const PauliOperator& op) {
  check_leaf_operator(op);
  MeasurementExpr e;
  e.kind = Kind::leaf;
  e.op = op;
  return e;
}

MeasurementExpr MeasurementExpr::and_of(std::vector<MeasurementExpr> parts) {
  MeasurementExpr e;
  e.kind = Kind::and_node;
  for (auto& part : parts) {
    if (part.kind == Kind::and_node) {
      for (auto& child : part.children) {
        e.children.push_back(std::move(child));
      }
    } else {
      e.children.push_back(std::move(part));
    }
  }
  for (const auto& child : e.children) {
    if (child.kind != Kind::leaf) {
      throw std::invalid_argument("AND children must be leaves");
    }
  }
  check_pairwise_commuting(e.leaves());
  return e;
}

MeasurementExpr MeasurementExpr::xor_of(std::vector<MeasurementExpr> parts) {
  MeasurementExpr e;
  e.kind = Kind::xor_node;
  for (auto& part : parts) {
    if (part.kind == Kind::xor_node) {
      for (auto& child : part.children) {
        e.children.push_back(std::move(child));
      }
    } else {
      e.children.push_back(std::move(part));
    }
  }
  check_pairwise_commuting(e.leaves());
  return e;
}

std::vector<const PauliOperator*> MeasurementExpr::leaves() const {
  std::vector<const PauliOperator*> result;
  if (kind == Kind::leaf) {
    result.push_back(&op);
    return result;
  }
  for (const auto& child : children) {
    auto sub = child.leaves();
    result.insert(result.end(), sub.begin(), sub.end());
  }
  return result;
}

size_t MeasurementExpr::qubit_count() const {
  auto all = leaves();
  if (all.empty()) {
    return 0;
  }
  return all[0]->n;
}

MeasurementExpr MeasurementExpr::conjugated_by(const PauliOperator& t) const {
  MeasurementExpr e;
  e.kind = kind;
  if (kind == Kind::leaf) {
    e.op = op.conjugated_by(t);
    return e;
  }
  e.children.reserve(children.size());
  for (const auto& child : children) {
    e.children.push_back(child.conjugated_by(t));
  }
  return e;
}

std::string MeasurementExpr::str() const {
  if (kind == Kind::leaf) {
    return "\"" + op.str() + "\"";
  }
  std::string s = kind == Kind::and_node ? "(and" : "(xor";
  for (const auto& child : children) {
    s += ' ';
    s += child.str();
  }
  s += ')';
  return s;
}

bool MeasurementExpr::operator==(const MeasurementExpr& other) const {
  if (kind != other.kind) {
    return false;
  }
  if (kind == Kind::leaf) {
    return op == other.op;
  }
  return children == other.children;
}

namespace {

struct ExprParser {
  const std::string& text;
  size_t n;
  size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      pos++;
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw std::invalid_argument("measurement expression, offset " + std::to_string(pos) + ": " +
                                message);
  }

  MeasurementExpr parse_node() {
    skip_spaces();
    if (pos >= text.size()) {
      fail("unexpected end of input");
    }
    if (text[pos] == '"') {
      pos++;
      size_t close = text.find('"', pos);
      if (close == std::string::npos) {
        fail("unterminated leaf string");
      }
      std::string body = text.substr(pos, close - pos);
      pos = close + 1;
      return MeasurementExpr::leaf(PauliOperator::from_string(n, body));
    }
    if (text[pos] != '(') {
      fail("expected '(' or a quoted leaf");
    }
    pos++;
    skip_spaces();
    size_t word_end = pos;
    while (word_end < text.size() && std::isalpha(static_cast<unsigned char>(text[word_end]))) {
      word_end++;
    }
    std::string head = text.substr(pos, word_end - pos);
    pos = word_end;
    if (head != "and" && head != "xor") {
      fail("expected 'and' or 'xor'");
    }
    std::vector<MeasurementExpr> parts;
    while (true) {
      skip_spaces();
      if (pos >= text.size()) {
        fail("missing ')'");
      }
      if (text[pos] == ')') {
        pos++;
        break;
      }
      parts.push_back(parse_node());
    }
    return head == "and" ? MeasurementExpr::and_of(std::move(parts))
                         : MeasurementExpr::xor_of(std::move(parts));
  }
};

}  // namespace

MeasurementExpr MeasurementExpr::parse(size_t n, const std::string& text) {
  ExprParser parser{text, n};
  MeasurementExpr e = parser.parse_node();
  parser.skip_spaces();
  if (parser.pos != text.size()) {
    parser.fail("trailing content");
  }
  return e;
}

namespace {

/* Cost of one AND block over L leaves on n qubits. */
GateCost and_block_cost(size_t leaf_count, size_t n) {
  GateCost cost;
  cost.controlled_pauli_count = 2 * leaf_count;
  cost.toffoli_count = leaf_count > 0 ? leaf_count - 1 : 0;
  cost.two_qubit_total = cost.controlled_pauli_count * n + 6 * cost.toffoli_count;
  cost.ancilla_count = leaf_count + 1;
  return cost;
}

}  // namespace

GateCost gate_cost(const MeasurementExpr& expr) {
  size_t n = expr.qubit_count();
  switch (expr.kind) {
    case MeasurementExpr::Kind::leaf:
      return and_block_cost(1, n);
    case MeasurementExpr::Kind::and_node:
      return and_block_cost(expr.children.size(), n);
    case MeasurementExpr::Kind::xor_node: {
      GateCost total;
      for (const auto& child : expr.children) {
        GateCost sub = gate_cost(child);
        total.controlled_pauli_count += sub.controlled_pauli_count;
        total.toffoli_count += sub.toffoli_count;
        total.two_qubit_total += sub.two_qubit_total;
        total.ancilla_count = std::max(total.ancilla_count, sub.ancilla_count);
      }
      return total;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace cwsqec
