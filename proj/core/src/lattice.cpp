#include "parity/lattice.hpp"

#include <cassert>
#include <random>
#include <stdexcept>

namespace parity {

Layout::Layout(int n_cols, int n_rows) : n_cols_(n_cols), n_rows_(n_rows) {
  if (n_cols < 2 || n_rows < 2) {
    throw std::invalid_argument("Layout requires at least a 2x2 qubit grid");
  }
  cells_.assign(static_cast<std::size_t>(cell_cols()) * cell_rows(),
                Plaquette::empty());
}

int Layout::index(int c, int r) const {
  assert(c >= 1 && c <= cell_cols() && r >= 1 && r <= cell_rows());
  return (c - 1) + (r - 1) * cell_cols();
}

int Layout::n_constraints() const {
  int n = 0;
  for (const auto& p : cells_) n += p.is_constraint() ? 1 : 0;
  return n;
}

int Layout::n_squares() const {
  int n = 0;
  for (const auto& p : cells_) n += p.kind == CellKind::Square ? 1 : 0;
  return n;
}

int Layout::n_triangles() const {
  int n = 0;
  for (const auto& p : cells_) n += p.kind == CellKind::Triangle ? 1 : 0;
  return n;
}

SideState Layout::side_state(int c, int r, Side side) const {
  return classify_side(cell(c, r), side);
}

SideState classify_side(const Plaquette& p, Side side) {
  if (!p.is_constraint()) return SideState::Open;
  const Corner top = side == Side::Left ? Corner::NW : Corner::NE;
  const Corner bottom = side == Side::Left ? Corner::SW : Corner::SE;
  return (p.has_corner(top) && p.has_corner(bottom)) ? SideState::Closed
                                                     : SideState::Open;
}

std::optional<Direction> forced_direction(const Plaquette& p) {
  if (p.kind != CellKind::Triangle) return std::nullopt;
  // The ZZ interaction must act on the full row of the cell: a missing top
  // corner leaves two constraint qubits on the bottom row and vice versa.
  switch (p.missing) {
    case Corner::NW:
    case Corner::NE:
      return Direction::Down;
    case Corner::SW:
    case Corner::SE:
      return Direction::Up;
  }
  return std::nullopt;
}

Layout gen_squares(int n_cols, int n_rows, double angle) {
  Layout l(n_cols, n_rows);
  for (int r = 1; r <= l.cell_rows(); ++r) {
    for (int c = 1; c <= l.cell_cols(); ++c) {
      l.cell(c, r) = Plaquette::square(angle);
    }
  }
  return l;
}

Layout gen_random(int n_cols, int n_rows, double r3, std::uint64_t seed,
                  double angle) {
  if (r3 < 0.0 || r3 > 1.0) {
    throw std::invalid_argument("triangle fraction must lie in [0, 1]");
  }
  Layout l(n_cols, n_rows);
  std::mt19937_64 rng(seed);
  // Draw doubles explicitly from the raw generator so that layouts are
  // bit-identical for equal seeds across standard library implementations.
  auto next_unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  constexpr Corner kCorners[4] = {Corner::NW, Corner::NE, Corner::SW,
                                  Corner::SE};
  for (int r = 1; r <= l.cell_rows(); ++r) {
    for (int c = 1; c <= l.cell_cols(); ++c) {
      if (next_unit() < r3) {
        const auto pick = static_cast<std::size_t>(rng() & 3u);
        l.cell(c, r) = Plaquette::triangle(kCorners[pick], angle);
      } else {
        l.cell(c, r) = Plaquette::square(angle);
      }
    }
  }
  return l;
}

Layout gen_lhz(int n_logical, double angle) {
  if (n_logical < 3) {
    throw std::invalid_argument("staircase layout requires n_logical >= 3");
  }
  Layout l(n_logical - 1, n_logical - 1);
  for (int r = 1; r <= n_logical - 2; ++r) {
    const int row_cells = n_logical - 1 - r;
    for (int c = 1; c < row_cells; ++c) {
      l.cell(c, r) = Plaquette::square(angle);
    }
    // Staircase edge: a triangle whose forced direction (Up) matches the
    // free choice of the square run to its left, so every strip boundary is
    // shared without adjustment gates.
    l.cell(row_cells, r) = Plaquette::triangle(Corner::SE, angle);
  }
  return l;
}

Layout transpose(const Layout& layout) {
  Layout t(layout.n_rows(), layout.n_cols());
  auto flip = [](Corner c) {
    switch (c) {
      case Corner::NW: return Corner::SE;
      case Corner::SE: return Corner::NW;
      case Corner::NE: return Corner::NE;
      case Corner::SW: return Corner::SW;
    }
    return Corner::NW;
  };
  for (int r = 1; r <= layout.cell_rows(); ++r) {
    for (int c = 1; c <= layout.cell_cols(); ++c) {
      Plaquette p = layout.cell(c, r);
      if (p.kind == CellKind::Triangle) p.missing = flip(p.missing);
      t.cell(r, c) = p;
    }
  }
  return t;
}

std::string to_string(Corner c) {
  switch (c) {
    case Corner::NW: return "nw";
    case Corner::NE: return "ne";
    case Corner::SW: return "sw";
    case Corner::SE: return "se";
  }
  return "?";
}

std::string to_string(CellKind k) {
  switch (k) {
    case CellKind::Empty: return "empty";
    case CellKind::Square: return "square";
    case CellKind::Triangle: return "triangle";
  }
  return "?";
}

}  // namespace parity
