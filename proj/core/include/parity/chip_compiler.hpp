#pragma once

#include <map>
#include <string>

#include "parity/circuit.hpp"
#include "parity/lattice.hpp"

namespace parity {

enum class Orientation : std::uint8_t { Auto, Horizontal, Vertical };

std::string to_string(Orientation o);

struct CompileOptions {
  int d = 1;  // minimum distance between simultaneous two-qubit gates
  Orientation orientation = Orientation::Auto;
  bool line_parallel = false;  // restrict each moment to one grid line
};

struct CompileReport {
  int depth = 0;       // moments containing two-qubit gates
  int cnot_depth = 0;  // same, after rewriting ZZ into CNOT+RZ
  int two_qubit_count = 0;
  int naive_count = 0;  // 5 per square, 3 per triangle
  double cancellation_rate = 0.0;  // (naive - actual) / naive
  int d = 1;
  Orientation orientation = Orientation::Horizontal;  // the one compiled
  std::map<std::string, int> boundary_case_histogram;
};

struct CompileResult {
  Circuit circuit;
  CompileReport report;
};

// Compile the full chip: every cell row becomes a strip, and strips whose
// rows agree modulo d+1 run simultaneously (they are at least d+1 rows
// apart). The resulting depth is at most (d+1)(5d+1). With orientation Auto
// the transposed layout is compiled as well and the shallower circuit wins
// (ties keep Horizontal).
CompileResult compile(const Layout& layout, const CompileOptions& options = {});

// Split every moment so that all its gates lie on a single horizontal or
// vertical grid line, preserving gate order.
Circuit line_parallel_refine(const Circuit& c);

}  // namespace parity
