#include "parity/strip_compiler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parity {

namespace {

bool cell_in_range(const Layout& layout, int c) {
  return c >= 1 && c <= layout.cell_cols();
}

// Closed-ness of the plaquette sides facing boundary b from the left/right.
bool closed_left_of(const Layout& layout, int row, int b) {
  return cell_in_range(layout, b - 1) &&
         layout.side_state(b - 1, row, Side::Right) == SideState::Closed;
}

bool closed_right_of(const Layout& layout, int row, int b) {
  return cell_in_range(layout, b) &&
         layout.side_state(b, row, Side::Left) == SideState::Closed;
}

std::optional<Direction> dir_of(const Layout& layout, int row, int c,
                                const std::vector<std::optional<Direction>>& dirs) {
  if (!cell_in_range(layout, c) || !layout.cell(c, row).is_constraint())
    return std::nullopt;
  return dirs[c - 1];
}

// Vertical CNOT at qubit column b; the target sits on the ZZ row.
Gate boundary_cnot(int b, int row, Direction dir) {
  QubitCoord bottom{b, row};
  QubitCoord top{b, row + 1};
  return dir == Direction::Up ? Gate::cnot(bottom, top)
                              : Gate::cnot(top, bottom);
}

int zz_slot(int c, int d) { return d + 3 * ((c - 1) % (d + 1)); }

double pair_distance(const Gate& g, const Gate& h) {
  double best = std::hypot(g.a.col - h.a.col, g.a.row - h.a.row);
  best = std::min(best, std::hypot(g.a.col - h.b.col, g.a.row - h.b.row));
  best = std::min(best, std::hypot(g.b.col - h.a.col, g.b.row - h.a.row));
  best = std::min(best, std::hypot(g.b.col - h.b.col, g.b.row - h.b.row));
  return best;
}

bool can_place(const Moment& m, const Gate& g, int d) {
  for (const Gate& h : m.gates) {
    if (h.a == g.a || h.a == g.b || h.b == g.a || h.b == g.b) return false;
    if (pair_distance(g, h) < double(d)) return false;
  }
  return true;
}

// Mid-CNOT slots strictly between two ZZ slots, in time order.
std::vector<int> mid_slots(int lo, int hi, int d) {
  std::vector<int> out;
  for (int g = 0; g < d; ++g) {
    for (int p : {d + 3 * g + 1, d + 3 * g + 2}) {
      if (p > lo && p < hi) out.push_back(p);
    }
  }
  return out;
}

// A closing mid-CNOT wants the earliest slot after the rotation it closes; an
// opening one wants the latest slot before the rotation it opens.
void place_lone_mid(StripCompilation& res, const Gate& g, int lo, int hi,
                    int d, bool closing) {
  std::vector<int> slots = mid_slots(lo, hi, d);
  if (!closing) std::reverse(slots.begin(), slots.end());
  for (int p : slots) {
    if (can_place(res.slots[p], g, d)) {
      res.slots[p].gates.push_back(g);
      return;
    }
  }
  throw std::logic_error("strip compiler: no slot for mid CNOT");
}

void place_mid_pair(StripCompilation& res, const Gate& close, const Gate& open,
                    int lo, int hi, int d) {
  std::vector<int> slots = mid_slots(lo, hi, d);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!can_place(res.slots[slots[i]], close, d)) continue;
    for (std::size_t j = slots.size(); j-- > i + 1;) {
      if (!can_place(res.slots[slots[j]], open, d)) continue;
      res.slots[slots[i]].gates.push_back(close);
      res.slots[slots[j]].gates.push_back(open);
      return;
    }
  }
  throw std::logic_error("strip compiler: no slots for mid CNOT pair");
}

// Slot-usage and gate cost of a square-run end boundary, used to pick run
// directions. BothOpen cannot occur at a run end (the square side is closed).
struct BoundaryCost {
  int slots = 0;  // template slots this boundary touches
  int cnots = 0;

  friend auto operator<=>(const BoundaryCost&, const BoundaryCost&) = default;
};

BoundaryCost boundary_cost(BoundaryCase c) {
  switch (c) {
    case BoundaryCase::BothOpen:
      return {0, 0};
    case BoundaryCase::BothClosedSame:
      return {4, 2};
    case BoundaryCase::BothClosedOpposite:
      return {6, 4};
    case BoundaryCase::ClosedOpenSameDir:
      return {5, 2};
    case BoundaryCase::ClosedOpenOppositeDir:
      return {4, 2};
  }
  return {};
}

}  // namespace

std::string to_string(BoundaryCase c) {
  switch (c) {
    case BoundaryCase::BothOpen:
      return "both_open";
    case BoundaryCase::BothClosedSame:
      return "both_closed_same";
    case BoundaryCase::BothClosedOpposite:
      return "both_closed_opposite";
    case BoundaryCase::ClosedOpenSameDir:
      return "closed_open_same_dir";
    case BoundaryCase::ClosedOpenOppositeDir:
      return "closed_open_opposite_dir";
  }
  return "?";
}

BoundaryCase classify_boundary(const Layout& layout, int row, int boundary,
                               const std::vector<std::optional<Direction>>& dirs) {
  bool left_closed = closed_left_of(layout, row, boundary);
  bool right_closed = closed_right_of(layout, row, boundary);
  if (!left_closed && !right_closed) return BoundaryCase::BothOpen;
  std::optional<Direction> left = dir_of(layout, row, boundary - 1, dirs);
  std::optional<Direction> right = dir_of(layout, row, boundary, dirs);
  if (left_closed && right_closed) {
    return left == right ? BoundaryCase::BothClosedSame
                         : BoundaryCase::BothClosedOpposite;
  }
  // One closed side; the open neighbor only matters if it is a constraint
  // whose ZZ row coincides with the closed plaquette's (same direction): the
  // boundary CNOT would then disturb that ZZ and cannot span it.
  std::optional<Direction> open_dir = left_closed ? right : left;
  std::optional<Direction> closed_dir = left_closed ? left : right;
  if (open_dir && open_dir == closed_dir) return BoundaryCase::ClosedOpenSameDir;
  return BoundaryCase::ClosedOpenOppositeDir;
}

std::vector<std::optional<Direction>> assign_directions(const Layout& layout,
                                                        int row) {
  int cols = layout.cell_cols();
  std::vector<std::optional<Direction>> dirs(cols);
  for (int c = 1; c <= cols; ++c) {
    dirs[c - 1] = forced_direction(layout.cell(c, row));
  }
  // Each maximal run of squares shares one direction; only its two outer
  // boundaries depend on the choice (interior ones are BothClosedSame).
  for (int c0 = 1; c0 <= cols;) {
    if (layout.cell(c0, row).kind != CellKind::Square) {
      ++c0;
      continue;
    }
    int c1 = c0;
    while (c1 + 1 <= cols && layout.cell(c1 + 1, row).kind == CellKind::Square)
      ++c1;
    auto run_cost = [&](Direction dir) {
      for (int c = c0; c <= c1; ++c) dirs[c - 1] = dir;
      BoundaryCost left = boundary_cost(classify_boundary(layout, row, c0, dirs));
      BoundaryCost right =
          boundary_cost(classify_boundary(layout, row, c1 + 1, dirs));
      return std::pair{std::max(left.slots, right.slots),
                       left.cnots + right.cnots};
    };
    auto up = run_cost(Direction::Up);
    auto down = run_cost(Direction::Down);
    Direction pick = down < up ? Direction::Down : Direction::Up;
    for (int c = c0; c <= c1; ++c) dirs[c - 1] = pick;
    c0 = c1 + 1;
  }
  return dirs;
}

StripCompilation compile_strip(const Layout& layout, int row,
                               const std::vector<std::optional<Direction>>& dirs,
                               int d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  StripCompilation res;
  res.slots.resize(5 * d + 1);

  // ZZ rotations.
  for (int c = 1; c <= layout.cell_cols(); ++c) {
    const Plaquette& p = layout.cell(c, row);
    if (!p.is_constraint()) continue;
    int zr = *dirs[c - 1] == Direction::Up ? row + 1 : row;
    res.slots[zz_slot(c, d)].gates.push_back(
        Gate::zz({c, zr}, {c + 1, zr}, p.angle));
  }

  // Boundary CNOTs. Mid CNOTs are collected first and placed afterwards:
  // close/open pairs have the tightest windows and go before lone mids.
  struct PairRequest {
    Gate close, open;
    int lo, hi;
  };
  struct LoneRequest {
    Gate gate;
    int lo, hi;
    bool closing;
  };
  std::vector<PairRequest> pairs;
  std::vector<LoneRequest> lones;

  for (int b = 1; b <= layout.n_cols(); ++b) {
    BoundaryCase bc = classify_boundary(layout, row, b, dirs);
    ++res.histogram[static_cast<int>(bc)];
    if (bc == BoundaryCase::BothOpen) continue;

    int start = (b - 1) % d;
    int end = 4 * d + 1 + (b - 1) % d;
    std::optional<Direction> left = dir_of(layout, row, b - 1, dirs);
    std::optional<Direction> right = dir_of(layout, row, b, dirs);

    switch (bc) {
      case BoundaryCase::BothClosedSame: {
        Gate g = boundary_cnot(b, row, left ? *left : *right);
        res.slots[start].gates.push_back(g);
        res.slots[end].gates.push_back(g);
        break;
      }
      case BoundaryCase::BothClosedOpposite: {
        // The conjugation of the earlier ZZ closes, and that of the later ZZ
        // opens, in the gap between the two rotations.
        int zl = zz_slot(b - 1, d);
        int zr = zz_slot(b, d);
        Direction d_earlier = zl < zr ? *left : *right;
        Direction d_later = opposite(d_earlier);
        res.slots[start].gates.push_back(boundary_cnot(b, row, d_earlier));
        res.slots[end].gates.push_back(boundary_cnot(b, row, d_later));
        pairs.push_back({boundary_cnot(b, row, d_earlier),
                         boundary_cnot(b, row, d_later), std::min(zl, zr),
                         std::max(zl, zr)});
        break;
      }
      case BoundaryCase::ClosedOpenSameDir: {
        bool left_is_closed = closed_left_of(layout, row, b);
        int closed_cell = left_is_closed ? b - 1 : b;
        int open_cell = left_is_closed ? b : b - 1;
        Direction dir = left_is_closed ? *left : *right;
        Gate g = boundary_cnot(b, row, dir);
        int zc = zz_slot(closed_cell, d);
        int zo = zz_slot(open_cell, d);
        if (zc < zo) {
          // Closed ZZ first: open at the start, close before the open
          // neighbor's ZZ.
          res.slots[start].gates.push_back(g);
          lones.push_back({g, zc, zo, true});
        } else {
          // Open neighbor's ZZ first: open after it, close at the end.
          lones.push_back({g, zo, zc, false});
          res.slots[end].gates.push_back(g);
        }
        break;
      }
      case BoundaryCase::ClosedOpenOppositeDir: {
        Direction dir = closed_left_of(layout, row, b) ? *left : *right;
        Gate g = boundary_cnot(b, row, dir);
        res.slots[start].gates.push_back(g);
        res.slots[end].gates.push_back(g);
        break;
      }
      case BoundaryCase::BothOpen:
        break;
    }
  }

  for (const PairRequest& p : pairs) {
    place_mid_pair(res, p.close, p.open, p.lo, p.hi, d);
  }
  for (const LoneRequest& l : lones) {
    place_lone_mid(res, l.gate, l.lo, l.hi, d, l.closing);
  }
  return res;
}

}  // namespace parity
