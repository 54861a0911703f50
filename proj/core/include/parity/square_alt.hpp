#pragma once

#include <stdexcept>
#include <utility>

#include "parity/circuit.hpp"
#include "parity/lattice.hpp"

namespace parity {

struct UnsupportedLayoutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Alternative compiler for all-square layouts in the CNOT+RZ gate set.
//
// Every cell row r is assigned a "home" qubit row that accumulates the strip
// parity y_c = s(c,r) + s(c,r+1) in three vertical fold moments (one qubit
// row per group of up to five cell rows stays untouched and only serves as a
// CNOT source). Horizontal chain moments then pair neighboring columns of
// every home row at once, so a single RZ layer rotates one cell per pair;
// two chain matchings cover all cells, and mirrored moments restore the
// state.
//
// For n_rows in 3..6 the schedule is always 14 moments: 10 CNOT-only and 4
// RZ-only, independent of size. The two-qubit count on square n x n layouts
// is exactly 4*N_C + 4*sqrt(N_C) with N_C = (n-1)^2. Larger n_rows are
// compiled as consecutive groups of cell rows; the depth then grows by 14
// per group of five.
Circuit compile_squares_alt(const Layout& layout);

// Reported reference gate counts (alternative vs main method, CNOT+Z gate
// set) for a square n x n layout: (4.5*N_C + 4*sqrt(N_C), 4*N_C + sqrt(N_C)).
std::pair<double, double> alt_vs_main_counts(int n);

}  // namespace parity
