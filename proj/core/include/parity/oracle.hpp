#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parity/circuit.hpp"
#include "parity/lattice.hpp"

namespace parity {

// The compiled circuits consist of CNOTs (a permutation of the computational
// basis) and diagonal rotations, so they are fully characterized by their
// action on basis states: |s> -> e^{i phase(s)} |pi(s)>. The oracle traces
// that action directly and compares it with the phases the layout demands.

// A computational basis state over n qubits, indexed
// q = (col-1) + (row-1)*n_cols.
class BasisState {
 public:
  BasisState() = default;
  explicit BasisState(int n_qubits)
      : words_((n_qubits + 63) / 64, 0), n_(n_qubits) {}
  // Convenience constructor for small states: bit q of `bits` is qubit q.
  BasisState(int n_qubits, std::uint64_t bits) : BasisState(n_qubits) {
    if (!words_.empty()) words_[0] = bits;
  }

  int n_qubits() const { return n_; }
  int bit(int q) const {
    return static_cast<int>((words_[q >> 6] >> (q & 63)) & 1u);
  }
  void flip(int q) { words_[q >> 6] ^= std::uint64_t{1} << (q & 63); }
  void set(int q, int v) {
    if (bit(q) != v) flip(q);
  }
  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::vector<std::uint64_t> words_;
  int n_ = 0;
};

inline int qubit_index(int n_cols, QubitCoord q) {
  return (q.col - 1) + (q.row - 1) * n_cols;
}

// Phase mandated by the layout on basis state `s`:
//   sum over constraints of angle * prod_{q in constraint} (-1)^{s_q}.
double target_phase(const Layout& layout, const BasisState& s);

struct Propagated {
  BasisState state;
  double phase = 0.0;
};

// Trace one basis state through the circuit.
Propagated propagate(const Circuit& c, const BasisState& s);

struct VerifyResult {
  bool ok = true;
  std::string detail;  // first mismatch, human readable
};

inline constexpr double kPhaseTolerance = 1e-9;
inline constexpr int kMaxExhaustiveQubits = 24;

// Check that the circuit implements exactly the product of constraint
// rotations of `layout`: the basis permutation must be the identity and the
// phase of every checked state must match the target up to a global phase
// (all phases are compared relative to the all-zeros state, modulo 2*pi).
VerifyResult verify_exhaustive(const Layout& layout, const Circuit& c);
VerifyResult verify_sampled(const Layout& layout, const Circuit& c,
                            int n_samples, std::uint64_t seed);

}  // namespace parity
