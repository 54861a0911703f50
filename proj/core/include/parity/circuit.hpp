#pragma once

#include <string>
#include <vector>

#include "parity/lattice.hpp"

namespace parity {

enum class GateType : std::uint8_t {
  CNOT,  // a = control, b = target; a and b nearest neighbors
  ZZ,    // exp(i * angle * Z_a Z_b); a and b nearest neighbors
  RZ,    // exp(i * angle * Z_a); single qubit
};

struct Gate {
  GateType type = GateType::CNOT;
  QubitCoord a;
  QubitCoord b;           // unused for RZ
  double angle = 0.0;     // unused for CNOT

  bool is_two_qubit() const { return type != GateType::RZ; }
  // True if the gate acts within one qubit row.
  bool is_horizontal() const { return is_two_qubit() && a.row == b.row; }

  static Gate cnot(QubitCoord control, QubitCoord target) {
    return {GateType::CNOT, control, target, 0.0};
  }
  static Gate zz(QubitCoord a, QubitCoord b, double angle) {
    return {GateType::ZZ, a, b, angle};
  }
  static Gate rz(QubitCoord q, double angle) {
    return {GateType::RZ, q, {}, angle};
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

// A moment is a set of gates executed in parallel. Compiler-produced moments
// contain gates of a single type, and two-qubit gates of a single axis.
struct Moment {
  std::vector<Gate> gates;

  friend bool operator==(const Moment&, const Moment&) = default;
};

struct Circuit {
  int n_cols = 0;
  int n_rows = 0;
  std::vector<Moment> moments;

  int n_qubits() const { return n_cols * n_rows; }

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

// Number of moments containing at least one two-qubit gate.
int depth(const Circuit& c);

// Number of moments containing at least one CNOT.
int cnot_depth(const Circuit& c);

int two_qubit_count(const Circuit& c);

// Two-qubit cost of decomposing every constraint in isolation:
// 5 per square, 3 per triangle.
int naive_count(const Layout& layout);

// Rewrite every ZZ moment as the moment triple [CNOTs, RZs, CNOTs], using
// exp(i a Z Z) = CNOT . exp(i a Z_target) . CNOT. Other moments are kept.
Circuit to_cnot_rz(const Circuit& c);

// Static validity checks. `d` is the parallelization distance: two two-qubit
// gates may share a moment only if the minimum Euclidean distance between
// their qubit sets is at least d. With `line_parallel`, every moment must
// additionally be collinear (all qubits in one row or one column).
// Returns human-readable violations; empty means valid.
std::vector<std::string> validate(const Circuit& c, int d,
                                  bool line_parallel = false);

}  // namespace parity
