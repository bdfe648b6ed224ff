#include "cwsqec/graph_code.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cwsqec {

Graph::Graph(size_t n_) : n(n_), adjacency(n_) {
  for (size_t i = 0; i < n; i++) {
    adjacency.append_row(BinaryVector(n));
  }
}

Graph Graph::from_edges(size_t n, const std::vector<std::pair<size_t, size_t>>& edges) {
  Graph g(n);
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw std::invalid_argument("edge vertex out of range");
    }
    if (a == b) {
      throw std::invalid_argument("self-loop in edge list");
    }
    if (g.adjacency.rows[a - 1].get(b - 1)) {
      throw std::invalid_argument("duplicate edge in edge list");
    }
    g.adjacency.rows[a - 1].set(b - 1, true);
    g.adjacency.rows[b - 1].set(a - 1, true);
  }
  return g;
}

const BinaryVector& Graph::row(size_t vertex) const {
  if (vertex < 1 || vertex > n) {
    throw std::out_of_range("vertex out of range");
  }
  return adjacency.rows[vertex - 1];
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
  std::vector<std::pair<size_t, size_t>> result;
  for (size_t i = 1; i <= n; i++) {
    for (size_t j = i + 1; j <= n; j++) {
      if (adjacency.rows[i - 1].get(j - 1)) {
        result.emplace_back(i, j);
      }
    }
  }
  return result;
}

WordStabilizer standard_form_stabilizer(const Graph& graph) {
  WordStabilizer s;
  for (size_t i = 1; i <= graph.n; i++) {
    PauliOperator p(graph.n);
    p.x.set(i - 1, true);
    p.z = graph.row(i);
    s.generators.push_back(std::move(p));
  }
  return s;
}

PauliOperator CwsCode::word_operator(size_t index) const {
  if (index >= codewords.size()) {
    throw std::out_of_range("codeword index out of range");
  }
  return PauliOperator::z_type(codewords[index]);
}

void CwsCode::validate() const {
  if (codewords.empty()) {
    throw std::invalid_argument("code has no codewords");
  }
  std::set<BinaryVector> seen;
  for (const auto& c : codewords) {
    if (c.length != graph.n) {
      throw std::invalid_argument("codeword length does not match qubit count");
    }
    if (!seen.insert(c).second) {
      throw std::invalid_argument("duplicate codeword " + c.str());
    }
  }
}

BinaryVector classical_map(const Graph& graph, const PauliOperator& e) {
  if (e.n != graph.n) {
    throw std::invalid_argument("qubit count mismatch in classical_map");
  }
  BinaryVector image = e.z;
  for (size_t i = 0; i < graph.n; i++) {
    if (e.x.get(i)) {
      image ^= graph.adjacency.rows[i];
    }
  }
  return image;
}

bool degenerate(const Graph& graph, const PauliOperator& e1, const PauliOperator& e2) {
  return classical_map(graph, e1) == classical_map(graph, e2);
}

std::vector<PauliOperator> enumerate_errors(size_t n, size_t max_weight, bool include_identity) {
  std::vector<PauliOperator> errors;
  if (include_identity) {
    errors.push_back(PauliOperator::identity(n));
  }
  static const char letters[3] = {'X', 'Y', 'Z'};
  for (size_t w = 1; w <= std::min(max_weight, n); w++) {
    /* Lexicographically ordered w-subsets of {1..n}. */
    std::vector<size_t> support(w);
    for (size_t i = 0; i < w; i++) {
      support[i] = i + 1;
    }
    while (true) {
      /* Letter odometer, highest qubit fastest, X < Y < Z. */
      std::vector<size_t> letter(w, 0);
      while (true) {
        PauliOperator e = PauliOperator::identity(n);
        for (size_t i = 0; i < w; i++) {
          e = multiply(e, PauliOperator::single(n, letters[letter[i]], support[i]));
        }
        errors.push_back(std::move(e));
        size_t pos = w;
        while (pos > 0 && letter[pos - 1] == 2) {
          letter[--pos] = 0;
        }
        if (pos == 0) {
          break;
        }
        letter[pos - 1]++;
      }
      size_t pos = w;
      while (pos > 0 && support[pos - 1] == n - w + pos) {
        pos--;
      }
      if (pos == 0) {
        break;
      }
      support[pos - 1]++;
      for (size_t i = pos; i < w; i++) {
        support[i] = support[i - 1] + 1;
      }
    }
  }
  return errors;
}

PauliOperator reduce_to_z_form(const Graph& graph, const PauliOperator& e) {
  if (e.n != graph.n) {
    throw std::invalid_argument("qubit count mismatch in reduce_to_z_form");
  }
  WordStabilizer s = standard_form_stabilizer(graph);
  PauliOperator p = e;
  for (size_t i = 0; i < graph.n; i++) {
    if (p.x.get(i)) {
      p = multiply(p, s.generators[i]);
    }
  }
  return p;
}

BinaryMatrix classical_kernel(const std::vector<BinaryVector>& codewords) {
  if (codewords.empty()) {
    throw std::invalid_argument("kernel of an empty codeword set");
  }
  size_t n = codewords[0].length;
  std::set<BinaryVector> word_set(codewords.begin(), codewords.end());
  BinaryMatrix candidates(n);
  for (const auto& c : codewords) {
    candidates.append_row(c ^ codewords[0]);
  }
  BinaryMatrix kernel(n);
  for (const auto& x : candidates.rows) {
    if (x.is_zero()) {
      continue;
    }
    bool stabilizes = true;
    for (const auto& c : word_set) {
      if (!word_set.count(c ^ x)) {
        stabilizes = false;
        break;
      }
    }
    if (stabilizes) {
      kernel.append_row(x);
    }
  }
  return gf2_basis(kernel);
}

namespace {

[[noreturn]] void parse_fail(size_t line, const std::string& message) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + message);
}

}  // namespace

CwsCode parse_code(std::istream& in) {
  std::string line;
  size_t line_number = 0;
  size_t n = 0;
  size_t declared_k = 0;
  std::optional<size_t> declared_d;
  bool header_seen = false;
  enum class Section { none, edges, codewords } section = Section::none;
  std::vector<std::pair<size_t, size_t>> edges;
  std::vector<BinaryVector> codewords;

  while (std::getline(in, line)) {
    line_number++;
    std::string trimmed = line;
    size_t begin = trimmed.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
      continue;
    }
    size_t end = trimmed.find_last_not_of(" \t\r");
    trimmed = trimmed.substr(begin, end - begin + 1);
    if (trimmed[0] == '#') {
      continue;
    }

    if (!header_seen) {
      std::istringstream header(trimmed);
      std::string field;
      bool have_n = false;
      bool have_k = false;
      while (header >> field) {
        size_t eq = field.find('=');
        if (eq == std::string::npos) {
          parse_fail(line_number, "expected header of the form n=<int> K=<int> [d=<int>]");
        }
        std::string key = field.substr(0, eq);
        std::string value = field.substr(eq + 1);
        size_t parsed = 0;
        try {
          parsed = std::stoul(value);
        } catch (const std::exception&) {
          parse_fail(line_number, "bad integer '" + value + "' in header");
        }
        if (key == "n") {
          n = parsed;
          have_n = true;
        } else if (key == "K") {
          declared_k = parsed;
          have_k = true;
        } else if (key == "d") {
          declared_d = parsed;
        } else {
          parse_fail(line_number, "unknown header field '" + key + "'");
        }
      }
      if (!have_n || !have_k) {
        parse_fail(line_number, "header must declare n and K");
      }
      if (n == 0) {
        parse_fail(line_number, "n must be positive");
      }
      header_seen = true;
      continue;
    }

    if (trimmed == "edges:") {
      section = Section::edges;
      continue;
    }
    if (trimmed == "codewords:") {
      section = Section::codewords;
      continue;
    }

    if (section == Section::edges) {
      std::istringstream pair_in(trimmed);
      size_t a = 0;
      size_t b = 0;
      if (!(pair_in >> a >> b)) {
        parse_fail(line_number, "expected an edge '<i> <j>'");
      }
      std::string extra;
      if (pair_in >> extra) {
        parse_fail(line_number, "trailing content after edge");
      }
      if (a < 1 || a > n || b < 1 || b > n) {
        parse_fail(line_number, "edge vertex out of range");
      }
      if (a == b) {
        parse_fail(line_number, "self-loop");
      }
      for (const auto& [ea, eb] : edges) {
        if ((ea == a && eb == b) || (ea == b && eb == a)) {
          parse_fail(line_number, "duplicate edge (possibly listed in both orientations)");
        }
      }
      edges.emplace_back(a, b);
      continue;
    }

    if (section == Section::codewords) {
      if (trimmed.size() != n) {
        parse_fail(line_number, "codeword length " + std::to_string(trimmed.size()) +
                                    " does not match n=" + std::to_string(n));
      }
      BinaryVector c(n);
      for (size_t i = 0; i < n; i++) {
        if (trimmed[i] == '1') {
          c.set(i, true);
        } else if (trimmed[i] != '0') {
          parse_fail(line_number, "codeword may only contain '0' and '1'");
        }
      }
      for (const auto& existing : codewords) {
        if (existing == c) {
          parse_fail(line_number, "duplicate codeword");
        }
      }
      codewords.push_back(std::move(c));
      continue;
    }

    parse_fail(line_number, "content outside of a section");
  }

  if (!header_seen) {
    throw std::invalid_argument("empty code file");
  }
  if (codewords.size() != declared_k) {
    throw std::invalid_argument("header declares K=" + std::to_string(declared_k) + " but " +
                                std::to_string(codewords.size()) + " codewords listed");
  }

  CwsCode code{Graph::from_edges(n, edges), std::move(codewords), declared_d};
  code.validate();
  return code;
}

CwsCode parse_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open code file: " + path);
  }
  return parse_code(in);
}

std::string write_code(const CwsCode& code) {
  std::ostringstream out;
  out << "n=" << code.n() << " K=" << code.dimension();
  if (code.declared_distance) {
    out << " d=" << *code.declared_distance;
  }
  out << "\nedges:\n";
  for (const auto& [a, b] : code.graph.edges()) {
    out << a << " " << b << "\n";
  }
  out << "codewords:\n";
  for (const auto& c : code.codewords) {
    out << c.str() << "\n";
  }
  return out.str();
}

}  // namespace cwsqec
