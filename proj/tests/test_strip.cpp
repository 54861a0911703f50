#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <parity/chip_compiler.hpp>
#include <parity/circuit.hpp>
#include <parity/lattice.hpp>
#include <parity/oracle.hpp>
#include <parity/strip_compiler.hpp>

using namespace parity;

namespace {

Layout strip_layout(const std::vector<Plaquette>& cells) {
  Layout l(static_cast<int>(cells.size()) + 1, 2);
  for (int c = 0; c < static_cast<int>(cells.size()); ++c)
    l.cell(c + 1, 1) = cells[c];
  return l;
}

CompileResult compile_strip_layout(const std::vector<Plaquette>& cells,
                                   int d = 1) {
  return compile(strip_layout(cells),
                 {.d = d, .orientation = Orientation::Horizontal});
}

}  // namespace

TEST_CASE("direction assignment honors forced triangles") {
  Layout l = strip_layout({Plaquette::triangle(Corner::NW),
                           Plaquette::empty(),
                           Plaquette::triangle(Corner::SE)});
  auto dirs = assign_directions(l, 1);
  CHECK(dirs[0] == Direction::Down);
  CHECK(!dirs[1].has_value());
  CHECK(dirs[2] == Direction::Up);
}

TEST_CASE("square runs share one direction") {
  Layout l = strip_layout({Plaquette::square(), Plaquette::square(),
                           Plaquette::square()});
  auto dirs = assign_directions(l, 1);
  CHECK(dirs[0].has_value());
  CHECK(dirs[0] == dirs[1]);
  CHECK(dirs[1] == dirs[2]);
}

TEST_CASE("boundary classification") {
  // triangle missing NW: direction Down, left open, right closed.
  // triangle missing SE: direction Up, left closed, right open.
  Layout l = strip_layout({Plaquette::triangle(Corner::NW),
                           Plaquette::triangle(Corner::SE)});
  auto dirs = assign_directions(l, 1);
  CHECK(classify_boundary(l, 1, 1, dirs) == BoundaryCase::BothOpen);
  CHECK(classify_boundary(l, 1, 2, dirs) == BoundaryCase::BothClosedOpposite);
  CHECK(classify_boundary(l, 1, 3, dirs) == BoundaryCase::BothOpen);

  Layout same = strip_layout({Plaquette::square(), Plaquette::square()});
  auto sdirs = assign_directions(same, 1);
  CHECK(classify_boundary(same, 1, 2, sdirs) == BoundaryCase::BothClosedSame);

  // Closed right side against an open left side of a same-direction cell.
  Layout cos = strip_layout({Plaquette::triangle(Corner::NW),
                             Plaquette::triangle(Corner::NW)});
  auto cdirs = assign_directions(cos, 1);
  CHECK(classify_boundary(cos, 1, 2, cdirs) ==
        BoundaryCase::ClosedOpenSameDir);
}

TEST_CASE("strip template size is 5d+1") {
  Layout l = strip_layout({Plaquette::square(), Plaquette::square()});
  for (int d : {1, 2, 3}) {
    auto s = compile_strip(l, 1, assign_directions(l, 1), d);
    CHECK(static_cast<int>(s.slots.size()) == 5 * d + 1);
  }
}

TEST_CASE("per-case strip depths at d=1") {
  // Shared CNOTs: both closed, same direction -> depth 4.
  auto bcs = compile_strip_layout({Plaquette::square(0.3),
                                   Plaquette::square(0.4)});
  CHECK(depth(bcs.circuit) == 4);
  CHECK(bcs.report.boundary_case_histogram.at("both_closed_same") == 1);

  // Closed/open with matching directions -> one mid CNOT -> depth 5.
  auto cos = compile_strip_layout({Plaquette::triangle(Corner::NW, 0.3),
                                   Plaquette::triangle(Corner::NW, 0.4)});
  CHECK(depth(cos.circuit) == 5);
  CHECK(cos.report.boundary_case_histogram.at("closed_open_same_dir") == 1);

  // Both closed, opposite directions -> two mid CNOTs -> depth 6.
  auto bco = compile_strip_layout({Plaquette::triangle(Corner::NW, 0.3),
                                   Plaquette::triangle(Corner::SE, 0.4)});
  CHECK(depth(bco.circuit) == 6);
  CHECK(bco.report.boundary_case_histogram.at("both_closed_opposite") == 1);

  for (const auto* r : {&bcs, &cos, &bco}) {
    CHECK(validate(r->circuit, 1).empty());
  }
}

TEST_CASE("per-case strips implement their constraints") {
  for (auto cells : {std::vector<Plaquette>{Plaquette::square(0.3),
                                            Plaquette::square(0.4)},
                     {Plaquette::triangle(Corner::NW, 0.3),
                      Plaquette::triangle(Corner::NW, 0.4)},
                     {Plaquette::triangle(Corner::NW, 0.3),
                      Plaquette::triangle(Corner::SE, 0.4)}}) {
    Layout l = strip_layout(cells);
    for (int d : {1, 2, 3}) {
      auto r = compile_strip_layout(cells, d);
      CHECK(validate(r.circuit, d).empty());
      CHECK(verify_exhaustive(l, r.circuit).ok);
    }
  }
}

TEST_CASE("all-square strip depths") {
  for (int nc : {4, 6, 9}) {
    std::vector<Plaquette> cells(nc - 1, Plaquette::square(0.3));
    CHECK(depth(compile_strip_layout(cells, 1).circuit) == 4);
    CHECK(depth(compile_strip_layout(cells, 2).circuit) == 7);
    int d3 = depth(compile_strip_layout(cells, 3).circuit);
    CHECK(d3 >= 9);
    CHECK(d3 <= 10);
  }
}

TEST_CASE("single square compiles to depth 3 with 5 gates") {
  auto r = compile_strip_layout({Plaquette::square(0.7)});
  CHECK(depth(r.circuit) == 3);
  CHECK(two_qubit_count(r.circuit) == 5);
  CHECK(verify_exhaustive(strip_layout({Plaquette::square(0.7)}),
                          r.circuit).ok);
}

TEST_CASE("single triangle compiles to depth 3 with 3 gates") {
  auto r = compile_strip_layout({Plaquette::triangle(Corner::SW, 0.7)});
  CHECK(depth(r.circuit) == 3);
  CHECK(two_qubit_count(r.circuit) == 3);
}

TEST_CASE("boundary case names cover the histogram keys") {
  CHECK(to_string(BoundaryCase::BothOpen) == "both_open");
  CHECK(to_string(BoundaryCase::BothClosedSame) == "both_closed_same");
  CHECK(to_string(BoundaryCase::BothClosedOpposite) ==
        "both_closed_opposite");
  CHECK(to_string(BoundaryCase::ClosedOpenSameDir) ==
        "closed_open_same_dir");
  CHECK(to_string(BoundaryCase::ClosedOpenOppositeDir) ==
        "closed_open_opposite_dir");
}
