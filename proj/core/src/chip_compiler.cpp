#include "parity/chip_compiler.hpp"

#include <stdexcept>
#include <utility>

#include "parity/strip_compiler.hpp"

namespace parity {

namespace {

struct ChipCompilation {
  Circuit circuit;
  std::array<int, kNumBoundaryCases> histogram{};
};

ChipCompilation compile_strips(const Layout& layout, int d) {
  ChipCompilation res;
  res.circuit.n_cols = layout.n_cols();
  res.circuit.n_rows = layout.n_rows();

  std::vector<StripCompilation> strips;
  strips.reserve(layout.cell_rows());
  for (int r = 1; r <= layout.cell_rows(); ++r) {
    strips.push_back(compile_strip(layout, r, assign_directions(layout, r), d));
    for (int i = 0; i < kNumBoundaryCases; ++i)
      res.histogram[i] += strips.back().histogram[i];
  }

  // Strips whose rows agree mod d+1 are at least d+1 rows apart and share
  // the template slots; the d+1 groups run one after another.
  for (int g = 0; g < d + 1; ++g) {
    for (int slot = 0; slot <= 5 * d; ++slot) {
      Moment m;
      for (int r = 1; r <= layout.cell_rows(); ++r) {
        if (r % (d + 1) != g) continue;
        const auto& gates = strips[r - 1].slots[slot].gates;
        m.gates.insert(m.gates.end(), gates.begin(), gates.end());
      }
      if (!m.gates.empty()) res.circuit.moments.push_back(std::move(m));
    }
  }
  return res;
}

Circuit transpose_back(const Circuit& c) {
  Circuit out;
  out.n_cols = c.n_rows;
  out.n_rows = c.n_cols;
  out.moments = c.moments;
  for (Moment& m : out.moments) {
    for (Gate& g : m.gates) {
      std::swap(g.a.col, g.a.row);
      std::swap(g.b.col, g.b.row);
    }
  }
  return out;
}

}  // namespace

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::Auto:
      return "auto";
    case Orientation::Horizontal:
      return "horizontal";
    case Orientation::Vertical:
      return "vertical";
  }
  return "?";
}

Circuit line_parallel_refine(const Circuit& c) {
  Circuit out;
  out.n_cols = c.n_cols;
  out.n_rows = c.n_rows;
  for (const Moment& m : c.moments) {
    // Key: horizontal gates by their row, then vertical gates by column.
    std::map<std::pair<int, int>, Moment> lines;
    for (const Gate& g : m.gates) {
      auto key = g.is_horizontal() ? std::pair{0, g.a.row}
                                   : std::pair{1, g.a.col};
      lines[key].gates.push_back(g);
    }
    for (auto& [key, moment] : lines) out.moments.push_back(std::move(moment));
  }
  return out;
}

CompileResult compile(const Layout& layout, const CompileOptions& options) {
  if (options.d < 1) throw std::invalid_argument("d must be >= 1");

  ChipCompilation chosen;
  Orientation chosen_orientation = Orientation::Horizontal;
  if (options.orientation != Orientation::Vertical) {
    chosen = compile_strips(layout, options.d);
  }
  if (options.orientation != Orientation::Horizontal) {
    ChipCompilation vertical = compile_strips(transpose(layout), options.d);
    vertical.circuit = transpose_back(vertical.circuit);
    if (options.orientation == Orientation::Vertical ||
        depth(vertical.circuit) < depth(chosen.circuit)) {
      chosen = std::move(vertical);
      chosen_orientation = Orientation::Vertical;
    }
  }

  CompileResult res;
  res.circuit = std::move(chosen.circuit);
  if (options.line_parallel) res.circuit = line_parallel_refine(res.circuit);

  CompileReport& rep = res.report;
  rep.depth = depth(res.circuit);
  rep.cnot_depth = cnot_depth(to_cnot_rz(res.circuit));
  rep.two_qubit_count = two_qubit_count(res.circuit);
  rep.naive_count = naive_count(layout);
  rep.cancellation_rate =
      rep.naive_count > 0
          ? double(rep.naive_count - rep.two_qubit_count) / rep.naive_count
          : 0.0;
  rep.d = options.d;
  rep.orientation = chosen_orientation;
  for (int i = 0; i < kNumBoundaryCases; ++i) {
    rep.boundary_case_histogram[to_string(static_cast<BoundaryCase>(i))] =
        chosen.histogram[i];
  }
  return res;
}

}  // namespace parity
