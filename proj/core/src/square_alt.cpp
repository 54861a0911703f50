#include "parity/square_alt.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace parity {

namespace {

// One vertical fold step, relative to the first qubit row of a block:
// target_row accumulates source_row (one CNOT per column).
struct FoldStep {
  int target_row;
  int source_row;
};

// Static per-block-size data. A block of `size` cell rows spans size+1
// qubit rows. fold[k] lists the steps of the k-th fold moment; home[r]
// (0-based strip index) is the qubit row that ends up holding the strip
// parity of cell row r+1; hub is the row that is never overwritten.
struct BlockPlan {
  std::vector<std::vector<FoldStep>> fold;
  std::vector<int> home;
  int hub;
};

BlockPlan block_plan(int size) {
  switch (size) {
    case 2:
      return {{{{1, 2}}, {{3, 2}}}, {1, 3}, 2};
    case 3:
      return {{{{1, 2}, {4, 3}}, {{2, 3}}}, {1, 2, 4}, 3};
    case 4:
      return {{{{1, 2}, {5, 4}}, {{2, 3}}, {{4, 3}}}, {1, 2, 4, 5}, 3};
    case 5:
      return {{{{1, 2}, {6, 5}}, {{2, 3}, {5, 4}}, {{4, 3}}},
              {1, 2, 4, 5, 6},
              3};
    default:
      throw std::logic_error("square_alt: unsupported block size");
  }
}

// Horizontal chain matching m (1 or 2) on absolute qubit row `row`:
// CX (c, row) -> (c+1, row) for c = m, m+2, m+4, ...
Moment chain_moment(int n_cols, int matching, const std::vector<int>& rows) {
  Moment moment;
  for (int row : rows) {
    for (int c = matching; c + 1 <= n_cols; c += 2) {
      moment.gates.push_back(Gate::cnot({c, row}, {c + 1, row}));
    }
  }
  return moment;
}

// RZ rotations exposed by chain matching m on the given strips: the pair
// (c, c+1) of home row w holds the parity of cell (c, strip) at (c+1, w).
Moment rz_moment(const Layout& layout, int matching,
                 const std::vector<std::pair<int, int>>& strip_homes) {
  Moment moment;
  for (auto [strip, home] : strip_homes) {
    for (int c = matching; c + 1 <= layout.n_cols(); c += 2) {
      moment.gates.push_back(
          Gate::rz({c + 1, home}, layout.cell(c, strip).angle));
    }
  }
  return moment;
}

void compile_block(const Layout& layout, int first_strip, int size,
                   std::vector<Moment>& out) {
  const int base = first_strip - 1;  // qubit row offset of the block
  const BlockPlan plan = block_plan(size);

  auto fold_moment = [&](const std::vector<FoldStep>& steps) {
    Moment moment;
    for (const FoldStep& step : steps) {
      for (int c = 1; c <= layout.n_cols(); ++c) {
        moment.gates.push_back(Gate::cnot({c, base + step.source_row},
                                          {c, base + step.target_row}));
      }
    }
    return moment;
  };

  // All qubit rows of the block take part in the chain moments; the hub row
  // carries no rotation but keeps the drawn pattern uniform (its chain
  // CNOTs cancel pairwise).
  std::vector<int> all_rows;
  for (int r = 1; r <= size + 1; ++r) all_rows.push_back(base + r);

  // Strips split by home position relative to the hub row.
  std::vector<std::pair<int, int>> low_strips, high_strips;
  std::vector<int> low_rows, high_rows;
  for (int s = 0; s < size; ++s) {
    int home = base + plan.home[s];
    if (plan.home[s] < plan.hub) {
      low_strips.emplace_back(first_strip + s, home);
      low_rows.push_back(home);
    } else {
      high_strips.emplace_back(first_strip + s, home);
      high_rows.push_back(home);
    }
  }

  for (const auto& steps : plan.fold) out.push_back(fold_moment(steps));

  if (plan.fold.size() == 3) {
    // Merged chains: four CNOT moments, rotations split by row group.
    for (int matching : {1, 2}) {
      out.push_back(chain_moment(layout.n_cols(), matching, all_rows));
      out.push_back(rz_moment(layout, matching, low_strips));
      out.push_back(rz_moment(layout, matching, high_strips));
      out.push_back(chain_moment(layout.n_cols(), matching, all_rows));
    }
  } else {
    // Staggered chains: the low group (with the hub row) runs one moment
    // ahead of the high group, giving six CNOT moments and the same four
    // rotation moments as the merged form.
    std::vector<int> low_and_hub = low_rows;
    low_and_hub.push_back(base + plan.hub);
    std::sort(low_and_hub.begin(), low_and_hub.end());
    for (int matching : {1, 2}) {
      Moment open = chain_moment(layout.n_cols(), matching, low_and_hub);
      Moment both = chain_moment(layout.n_cols(), matching, low_and_hub);
      Moment rest = chain_moment(layout.n_cols(), matching, high_rows);
      both.gates.insert(both.gates.end(), rest.gates.begin(),
                        rest.gates.end());
      out.push_back(open);
      out.push_back(rz_moment(layout, matching, low_strips));
      out.push_back(both);
      out.push_back(rz_moment(layout, matching, high_strips));
      out.push_back(rest);
    }
  }

  for (auto it = plan.fold.rbegin(); it != plan.fold.rend(); ++it) {
    out.push_back(fold_moment(*it));
  }
}

}  // namespace

Circuit compile_squares_alt(const Layout& layout) {
  if (layout.n_cols() < 3 || layout.n_rows() < 3) {
    throw UnsupportedLayoutError(
        "alternative square compiler requires at least a 3x3 qubit grid");
  }
  for (int r = 1; r <= layout.cell_rows(); ++r) {
    for (int c = 1; c <= layout.cell_cols(); ++c) {
      if (layout.cell(c, r).kind != CellKind::Square) {
        throw UnsupportedLayoutError(
            "alternative square compiler supports square plaquettes only");
      }
    }
  }

  Circuit circuit;
  circuit.n_cols = layout.n_cols();
  circuit.n_rows = layout.n_rows();

  // Cell rows are processed in consecutive groups of at most five; size
  // differences across groups never exceed one.
  const int strips = layout.cell_rows();
  const int blocks = (strips + 4) / 5;
  const int small = strips / blocks;
  const int large_count = strips % blocks;
  int next = 1;
  for (int b = 0; b < blocks; ++b) {
    int size = small + (b < large_count ? 1 : 0);
    compile_block(layout, next, size, circuit.moments);
    next += size;
  }
  return circuit;
}

std::pair<double, double> alt_vs_main_counts(int n) {
  double nc = static_cast<double>(n - 1) * (n - 1);
  double root = std::sqrt(nc);
  return {4.5 * nc + 4.0 * root, 4.0 * nc + root};
}

}  // namespace parity
