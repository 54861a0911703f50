#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "parity/circuit.hpp"
#include "parity/lattice.hpp"

namespace parity {

// A strip is one horizontal row of cells. It is compiled into a fixed
// template of 5d+1 time slots (d = minimum distance between simultaneous
// two-qubit gates):
//
//   slot 0 .. d-1          start CNOTs   (boundary b -> slot (b-1) mod d)
//   slot d+3t              ZZ rotations  (cell c -> t = (c-1) mod (d+1))
//   slot d+3g+1, d+3g+2    mid CNOTs     (gaps g = 0..d-1 between ZZ slots)
//   slot 4d+1 .. 5d        end CNOTs     (boundary b -> 4d+1 + (b-1) mod d)
//
// Vertical boundary b (qubit column b) sits between cell b-1 and cell b.
// How many CNOTs it needs, and where they go, depends only on whether the
// adjacent plaquette sides are closed and on the plaquette directions.
enum class BoundaryCase : std::uint8_t {
  BothOpen,               // no CNOTs
  BothClosedSame,         // one shared start + one shared end CNOT
  BothClosedOpposite,     // start + close-mid + open-mid + end (4 CNOTs)
  ClosedOpenSameDir,      // start + close-mid, or open-mid + end (2 CNOTs)
  ClosedOpenOppositeDir,  // start + end around both ZZs (2 CNOTs)
};

inline constexpr int kNumBoundaryCases = 5;

std::string to_string(BoundaryCase c);

// Per-cell CNOT directions for the strip at cell row `row`. Triangles are
// forced; Empty cells get nullopt; each maximal run of consecutive squares
// (which must share a direction, so its interior boundaries stay
// BothClosedSame) picks the direction minimizing first the worst per-boundary
// slot usage of the run's two outer boundaries, then their total CNOT count.
// Ties resolve to Up. The choice does not depend on d.
std::vector<std::optional<Direction>> assign_directions(const Layout& layout,
                                                        int row);

// Case of boundary b (1..n_cols) in the strip at `row`, given directions.
BoundaryCase classify_boundary(const Layout& layout, int row, int boundary,
                               const std::vector<std::optional<Direction>>& dirs);

struct StripCompilation {
  // 5d+1 template slots; empty slots are kept so strips can be interleaved.
  std::vector<Moment> slots;
  std::array<int, kNumBoundaryCases> histogram{};
};

StripCompilation compile_strip(const Layout& layout, int row,
                               const std::vector<std::optional<Direction>>& dirs,
                               int d);

}  // namespace parity
