#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parity {

// 1-based coordinate of a physical qubit on the rectangular chip.
// col runs 1..n_cols (left to right), row runs 1..n_rows (bottom to top).
struct QubitCoord {
  int col = 0;
  int row = 0;

  friend bool operator==(const QubitCoord&, const QubitCoord&) = default;
  friend auto operator<=>(const QubitCoord&, const QubitCoord&) = default;
};

// A plaquette cell (c, r) spans the four qubits
//   SW=(c,r) SE=(c+1,r) NW=(c,r+1) NE=(c+1,r+1).
// Cells are 1-based: c in 1..n_cols-1, r in 1..n_rows-1.
struct CellCoord {
  int col = 0;
  int row = 0;

  friend bool operator==(const CellCoord&, const CellCoord&) = default;
  friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

enum class Corner : std::uint8_t { NW, NE, SW, SE };

enum class CellKind : std::uint8_t {
  Empty,     // no constraint on this cell
  Square,    // 4-body constraint on all four corners
  Triangle,  // 3-body constraint; `missing` names the absent corner
};

struct Plaquette {
  CellKind kind = CellKind::Empty;
  Corner missing = Corner::NW;  // meaningful only for Triangle
  double angle = 1.0;           // rotation angle of the constraint

  static Plaquette empty() { return {}; }
  static Plaquette square(double angle = 1.0) {
    return {CellKind::Square, Corner::NW, angle};
  }
  static Plaquette triangle(Corner missing, double angle = 1.0) {
    return {CellKind::Triangle, missing, angle};
  }

  bool is_constraint() const { return kind != CellKind::Empty; }
  // True if the given corner carries a constraint qubit.
  bool has_corner(Corner c) const {
    if (kind == CellKind::Empty) return false;
    if (kind == CellKind::Square) return true;
    return missing != c;
  }

  friend bool operator==(const Plaquette&, const Plaquette&) = default;
};

// Which vertical side of a cell we are talking about.
enum class Side : std::uint8_t { Left, Right };

enum class SideState : std::uint8_t { Open, Closed };

// Direction of the vertical decomposition CNOTs of a plaquette.
// Up: CNOTs point upward (control on the bottom row, target on the top row)
// and the ZZ interaction acts on the top row of the cell; Down is the mirror.
enum class Direction : std::uint8_t { Up, Down };

inline Direction opposite(Direction d) {
  return d == Direction::Up ? Direction::Down : Direction::Up;
}

// A rectangular arrangement of plaquettes on an n_cols x n_rows qubit grid.
class Layout {
 public:
  Layout() = default;
  Layout(int n_cols, int n_rows);

  int n_cols() const { return n_cols_; }
  int n_rows() const { return n_rows_; }
  int cell_cols() const { return n_cols_ - 1; }
  int cell_rows() const { return n_rows_ - 1; }
  int n_qubits() const { return n_cols_ * n_rows_; }

  const Plaquette& cell(int c, int r) const { return cells_[index(c, r)]; }
  Plaquette& cell(int c, int r) { return cells_[index(c, r)]; }

  // Number of non-empty cells.
  int n_constraints() const;
  int n_squares() const;
  int n_triangles() const;

  // A plaquette is Closed on one of its vertical sides iff both qubits of
  // that side belong to the constraint; Empty cells are Open on both sides.
  SideState side_state(int c, int r, Side side) const;

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  int index(int c, int r) const;

  int n_cols_ = 0;
  int n_rows_ = 0;
  std::vector<Plaquette> cells_;
};

// Side classification for a single plaquette, independent of its position.
SideState classify_side(const Plaquette& p, Side side);

// Triangles have a forced CNOT direction: the ZZ interaction must act on the
// row that carries two constraint qubits. Squares and Empty cells are free.
std::optional<Direction> forced_direction(const Plaquette& p);

// All-square layout on an n_cols x n_rows qubit grid.
Layout gen_squares(int n_cols, int n_rows, double angle = 1.0);

// Random layout: each cell is a triangle with probability r3 (orientation
// uniform among the four), otherwise a square. Deterministic in `seed`.
Layout gen_random(int n_cols, int n_rows, double r3, std::uint64_t seed,
                  double angle = 1.0);

// Triangular staircase layout for `n_logical` logical qubits: cell row j
// holds n_logical-1-j constraints (j = 1..n_logical-2), all squares except a
// single triangle at the staircase edge of each row.
Layout gen_lhz(int n_logical, double angle = 1.0);

// Exchange rows and columns. Triangle orientations map NW<->SE; NE and SW
// are fixed points of the reflection.
Layout transpose(const Layout& layout);

std::string to_string(Corner c);
std::string to_string(CellKind k);

}  // namespace parity
