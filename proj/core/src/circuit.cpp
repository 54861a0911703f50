#include "parity/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace parity {

int depth(const Circuit& c) {
  int n = 0;
  for (const auto& m : c.moments) {
    n += std::any_of(m.gates.begin(), m.gates.end(),
                     [](const Gate& g) { return g.is_two_qubit(); });
  }
  return n;
}

int cnot_depth(const Circuit& c) {
  int n = 0;
  for (const auto& m : c.moments) {
    n += std::any_of(m.gates.begin(), m.gates.end(),
                     [](const Gate& g) { return g.type == GateType::CNOT; });
  }
  return n;
}

int two_qubit_count(const Circuit& c) {
  int n = 0;
  for (const auto& m : c.moments) {
    for (const auto& g : m.gates) n += g.is_two_qubit() ? 1 : 0;
  }
  return n;
}

int naive_count(const Layout& layout) {
  return 5 * layout.n_squares() + 3 * layout.n_triangles();
}

Circuit to_cnot_rz(const Circuit& c) {
  Circuit out{c.n_cols, c.n_rows, {}};
  for (const auto& m : c.moments) {
    const bool has_zz =
        std::any_of(m.gates.begin(), m.gates.end(),
                    [](const Gate& g) { return g.type == GateType::ZZ; });
    if (!has_zz) {
      out.moments.push_back(m);
      continue;
    }
    Moment cnots, rzs;
    for (const auto& g : m.gates) {
      cnots.gates.push_back(Gate::cnot(g.a, g.b));
      rzs.gates.push_back(Gate::rz(g.b, g.angle));
    }
    out.moments.push_back(cnots);
    out.moments.push_back(rzs);
    out.moments.push_back(cnots);
  }
  return out;
}

namespace {

bool in_grid(const Circuit& c, QubitCoord q) {
  return q.col >= 1 && q.col <= c.n_cols && q.row >= 1 && q.row <= c.n_rows;
}

bool nearest_neighbor(QubitCoord a, QubitCoord b) {
  const int dc = std::abs(a.col - b.col);
  const int dr = std::abs(a.row - b.row);
  return dc + dr == 1;
}

double pair_distance(const Gate& x, const Gate& y) {
  double best = 1e18;
  const QubitCoord xs[2] = {x.a, x.b};
  const QubitCoord ys[2] = {y.a, y.b};
  const int nx = x.is_two_qubit() ? 2 : 1;
  const int ny = y.is_two_qubit() ? 2 : 1;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const double dc = xs[i].col - ys[j].col;
      const double dr = xs[i].row - ys[j].row;
      best = std::min(best, std::hypot(dc, dr));
    }
  }
  return best;
}

}  // namespace

std::vector<std::string> validate(const Circuit& c, int d,
                                  bool line_parallel) {
  std::vector<std::string> out;
  auto fail = [&out](int moment, const std::string& what) {
    std::ostringstream os;
    os << "moment " << moment << ": " << what;
    out.push_back(os.str());
  };

  for (std::size_t mi = 0; mi < c.moments.size(); ++mi) {
    const auto& gates = c.moments[mi].gates;
    if (gates.empty()) {
      fail(static_cast<int>(mi), "empty moment");
      continue;
    }
    std::set<std::pair<int, int>> used;
    bool same_row = true, same_col = true;
    for (const auto& g : gates) {
      if (!in_grid(c, g.a) || (g.is_two_qubit() && !in_grid(c, g.b))) {
        fail(static_cast<int>(mi), "gate off the qubit grid");
      }
      if (g.is_two_qubit() && !nearest_neighbor(g.a, g.b)) {
        fail(static_cast<int>(mi), "two-qubit gate on non-adjacent qubits");
      }
      const QubitCoord qs[2] = {g.a, g.b};
      for (int i = 0; i < (g.is_two_qubit() ? 2 : 1); ++i) {
        if (!used.insert({qs[i].col, qs[i].row}).second) {
          fail(static_cast<int>(mi), "two gates share a qubit");
        }
        same_row = same_row && qs[i].row == gates[0].a.row;
        same_col = same_col && qs[i].col == gates[0].a.col;
      }
      if (g.type != gates[0].type) {
        fail(static_cast<int>(mi), "mixed gate types in one moment");
      }
      if (g.is_two_qubit() && gates[0].is_two_qubit() &&
          g.is_horizontal() != gates[0].is_horizontal()) {
        fail(static_cast<int>(mi), "mixed gate axes in one moment");
      }
    }
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (!gates[i].is_two_qubit()) continue;
      for (std::size_t j = i + 1; j < gates.size(); ++j) {
        if (!gates[j].is_two_qubit()) continue;
        if (pair_distance(gates[i], gates[j]) < static_cast<double>(d)) {
          fail(static_cast<int>(mi),
               "two-qubit gates closer than the parallelization distance");
        }
      }
    }
    if (line_parallel && !(same_row || same_col)) {
      fail(static_cast<int>(mi), "moment is not collinear");
    }
  }
  return out;
}

}  // namespace parity
