#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "parity/circuit.hpp"
#include "parity/lattice.hpp"

namespace parity {

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}

  int line;
  int column;
};

// Text layout format, one character per cell:
//   Q  square          .  empty
//   1  triangle missing NW        2  missing NE
//   3  triangle missing SW        4  missing SE
// Lines run top to bottom, i.e. the first line is the highest cell row.
// An optional first line "n_cols n_rows [default_angle]" fixes the qubit
// grid size (and requires exactly n_rows-1 lines of n_cols-1 cells each);
// without it the size is inferred and all lines must have equal length.
Layout parse_layout(const std::string& text, double default_angle = 1.0);
std::string layout_to_text(const Layout& layout);

nlohmann::json layout_to_json(const Layout& layout);
Layout layout_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

// OpenQASM 2.0. Qubit (col, row) maps to q[(col-1) + (row-1)*n_cols];
// moments are separated by barriers; ZZ(angle) is emitted as
// cx; rz(-2*angle); cx.
std::string to_qasm(const Circuit& c);

}  // namespace parity
