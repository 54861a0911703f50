#include "parity/io.hpp"

#include <sstream>

namespace parity {

namespace {

char cell_char(const Plaquette& p) {
  if (p.kind == CellKind::Empty) return '.';
  if (p.kind == CellKind::Square) return 'Q';
  switch (p.missing) {
    case Corner::NW:
      return '1';
    case Corner::NE:
      return '2';
    case Corner::SW:
      return '3';
    case Corner::SE:
      return '4';
  }
  return '?';
}

Plaquette cell_from_char(char ch, double angle, int line, int column) {
  switch (ch) {
    case '.':
      return Plaquette::empty();
    case 'Q':
      return Plaquette::square(angle);
    case '1':
      return Plaquette::triangle(Corner::NW, angle);
    case '2':
      return Plaquette::triangle(Corner::NE, angle);
    case '3':
      return Plaquette::triangle(Corner::SW, angle);
    case '4':
      return Plaquette::triangle(Corner::SE, angle);
    default:
      throw ParseError(line, column,
                       std::string("unknown cell character '") + ch + "'");
  }
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream is(text);
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool is_header(const std::string& line) {
  std::istringstream is(line);
  int a, b;
  return static_cast<bool>(is >> a >> b);
}

QubitCoord coord_from_json(const nlohmann::json& j) {
  return {j.at(0).get<int>(), j.at(1).get<int>()};
}

nlohmann::json coord_to_json(QubitCoord q) {
  return nlohmann::json::array({q.col, q.row});
}

Corner corner_from_name(const std::string& name) {
  if (name == "nw" || name == "NW") return Corner::NW;
  if (name == "ne" || name == "NE") return Corner::NE;
  if (name == "sw" || name == "SW") return Corner::SW;
  if (name == "se" || name == "SE") return Corner::SE;
  throw std::invalid_argument("unknown corner name: " + name);
}

}  // namespace

Layout parse_layout(const std::string& text, double default_angle) {
  std::vector<std::string> lines = split_lines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, 1, "empty layout");

  int header_lines = 0;
  int n_cols = -1, n_rows = -1;
  double angle = default_angle;
  if (is_header(lines[0])) {
    std::istringstream is(lines[0]);
    is >> n_cols >> n_rows;
    double a;
    if (is >> a) angle = a;
    std::string rest;
    if (is >> rest) throw ParseError(1, 1, "malformed header line");
    if (n_cols < 2 || n_rows < 2)
      throw ParseError(1, 1, "grid must be at least 2x2 qubits");
    header_lines = 1;
  }

  int cell_rows = static_cast<int>(lines.size()) - header_lines;
  if (n_rows < 0) {
    n_rows = cell_rows + 1;
    n_cols = static_cast<int>(lines[0].size()) + 1;
    if (n_cols < 2) throw ParseError(1, 1, "empty layout line");
  } else if (cell_rows != n_rows - 1) {
    throw ParseError(header_lines + cell_rows, 1,
                     "expected " + std::to_string(n_rows - 1) +
                         " cell rows, got " + std::to_string(cell_rows));
  }

  Layout layout(n_cols, n_rows);
  for (int i = 0; i < cell_rows; ++i) {
    const std::string& line = lines[header_lines + i];
    int line_no = header_lines + i + 1;
    if (static_cast<int>(line.size()) != n_cols - 1) {
      throw ParseError(line_no, static_cast<int>(line.size()) + 1,
                       "expected " + std::to_string(n_cols - 1) +
                           " cells in this row, got " +
                           std::to_string(line.size()));
    }
    int r = cell_rows - i;  // first line is the top cell row
    for (int c = 1; c <= n_cols - 1; ++c) {
      layout.cell(c, r) = cell_from_char(line[c - 1], angle, line_no, c);
    }
  }
  return layout;
}

std::string layout_to_text(const Layout& layout) {
  std::ostringstream os;
  os << layout.n_cols() << ' ' << layout.n_rows() << '\n';
  for (int r = layout.cell_rows(); r >= 1; --r) {
    for (int c = 1; c <= layout.cell_cols(); ++c)
      os << cell_char(layout.cell(c, r));
    os << '\n';
  }
  return os.str();
}

nlohmann::json layout_to_json(const Layout& layout) {
  nlohmann::json cells = nlohmann::json::array();
  for (int r = 1; r <= layout.cell_rows(); ++r) {
    for (int c = 1; c <= layout.cell_cols(); ++c) {
      const Plaquette& p = layout.cell(c, r);
      if (!p.is_constraint()) continue;
      nlohmann::json cell{{"col", c}, {"row", r}, {"angle", p.angle}};
      if (p.kind == CellKind::Square) {
        cell["kind"] = "square";
      } else {
        cell["kind"] = "triangle";
        cell["missing"] = to_string(p.missing);
      }
      cells.push_back(std::move(cell));
    }
  }
  return {{"n_cols", layout.n_cols()},
          {"n_rows", layout.n_rows()},
          {"cells", std::move(cells)}};
}

Layout layout_from_json(const nlohmann::json& j) {
  Layout layout(j.at("n_cols").get<int>(), j.at("n_rows").get<int>());
  for (const auto& cell : j.at("cells")) {
    int c = cell.at("col").get<int>();
    int r = cell.at("row").get<int>();
    double angle = cell.value("angle", 1.0);
    std::string kind = cell.at("kind").get<std::string>();
    if (kind == "square") {
      layout.cell(c, r) = Plaquette::square(angle);
    } else if (kind == "triangle") {
      layout.cell(c, r) = Plaquette::triangle(
          corner_from_name(cell.at("missing").get<std::string>()), angle);
    } else {
      throw std::invalid_argument("unknown cell kind: " + kind);
    }
  }
  return layout;
}

nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json moments = nlohmann::json::array();
  for (const Moment& m : c.moments) {
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate& g : m.gates) {
      nlohmann::json gate;
      switch (g.type) {
        case GateType::CNOT:
          gate = {{"type", "cnot"},
                  {"control", coord_to_json(g.a)},
                  {"target", coord_to_json(g.b)}};
          break;
        case GateType::ZZ:
          gate = {{"type", "zz"},
                  {"a", coord_to_json(g.a)},
                  {"b", coord_to_json(g.b)},
                  {"angle", g.angle}};
          break;
        case GateType::RZ:
          gate = {{"type", "rz"},
                  {"q", coord_to_json(g.a)},
                  {"angle", g.angle}};
          break;
      }
      gates.push_back(std::move(gate));
    }
    moments.push_back(std::move(gates));
  }
  return {{"n_cols", c.n_cols},
          {"n_rows", c.n_rows},
          {"moments", std::move(moments)}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit c;
  c.n_cols = j.at("n_cols").get<int>();
  c.n_rows = j.at("n_rows").get<int>();
  for (const auto& moment : j.at("moments")) {
    Moment m;
    for (const auto& gate : moment) {
      std::string type = gate.at("type").get<std::string>();
      if (type == "cnot") {
        m.gates.push_back(Gate::cnot(coord_from_json(gate.at("control")),
                                     coord_from_json(gate.at("target"))));
      } else if (type == "zz") {
        m.gates.push_back(Gate::zz(coord_from_json(gate.at("a")),
                                   coord_from_json(gate.at("b")),
                                   gate.at("angle").get<double>()));
      } else if (type == "rz") {
        m.gates.push_back(Gate::rz(coord_from_json(gate.at("q")),
                                   gate.at("angle").get<double>()));
      } else {
        throw std::invalid_argument("unknown gate type: " + type);
      }
    }
    c.moments.push_back(std::move(m));
  }
  return c;
}

std::string to_qasm(const Circuit& c) {
  std::ostringstream os;
  os.precision(17);
  os << "OPENQASM 2.0;\n"
     << "include \"qelib1.inc\";\n"
     << "qreg q[" << c.n_qubits() << "];\n";
  auto idx = [&](QubitCoord q) {
    return (q.col - 1) + (q.row - 1) * c.n_cols;
  };
  bool first = true;
  for (const Moment& m : c.moments) {
    if (!first) os << "barrier q;\n";
    first = false;
    for (const Gate& g : m.gates) {
      switch (g.type) {
        case GateType::CNOT:
          os << "cx q[" << idx(g.a) << "],q[" << idx(g.b) << "];\n";
          break;
        case GateType::ZZ:
          // exp(i*angle*ZZ) up to a global phase.
          os << "cx q[" << idx(g.a) << "],q[" << idx(g.b) << "];\n"
             << "rz(" << -2.0 * g.angle << ") q[" << idx(g.b) << "];\n"
             << "cx q[" << idx(g.a) << "],q[" << idx(g.b) << "];\n";
          break;
        case GateType::RZ:
          os << "rz(" << -2.0 * g.angle << ") q[" << idx(g.a) << "];\n";
          break;
      }
    }
  }
  return os.str();
}

}  // namespace parity
