#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <parity/io.hpp>
#include <parity/lattice.hpp>

using namespace parity;

TEST_CASE("layout geometry and counting") {
  Layout l(5, 4);
  CHECK(l.n_cols() == 5);
  CHECK(l.n_rows() == 4);
  CHECK(l.cell_cols() == 4);
  CHECK(l.cell_rows() == 3);
  CHECK(l.n_qubits() == 20);
  CHECK(l.n_constraints() == 0);

  l.cell(1, 1) = Plaquette::square(0.5);
  l.cell(4, 3) = Plaquette::triangle(Corner::NE, 0.25);
  CHECK(l.n_constraints() == 2);
  CHECK(l.n_squares() == 1);
  CHECK(l.n_triangles() == 1);
}

TEST_CASE("corner membership") {
  Plaquette sq = Plaquette::square();
  for (Corner c : {Corner::NW, Corner::NE, Corner::SW, Corner::SE})
    CHECK(sq.has_corner(c));

  Plaquette tr = Plaquette::triangle(Corner::SW);
  CHECK(!tr.has_corner(Corner::SW));
  CHECK(tr.has_corner(Corner::NW));
  CHECK(tr.has_corner(Corner::NE));
  CHECK(tr.has_corner(Corner::SE));

  CHECK(!Plaquette::empty().has_corner(Corner::NW));
}

TEST_CASE("side states") {
  // A side is closed iff both of its qubits belong to the constraint.
  CHECK(classify_side(Plaquette::square(), Side::Left) == SideState::Closed);
  CHECK(classify_side(Plaquette::square(), Side::Right) == SideState::Closed);
  CHECK(classify_side(Plaquette::empty(), Side::Left) == SideState::Open);

  Plaquette t_nw = Plaquette::triangle(Corner::NW);
  CHECK(classify_side(t_nw, Side::Left) == SideState::Open);
  CHECK(classify_side(t_nw, Side::Right) == SideState::Closed);

  Plaquette t_se = Plaquette::triangle(Corner::SE);
  CHECK(classify_side(t_se, Side::Left) == SideState::Closed);
  CHECK(classify_side(t_se, Side::Right) == SideState::Open);
}

TEST_CASE("forced directions") {
  // The ZZ must land on the row holding two constraint qubits, so triangles
  // with a missing top corner point down, missing bottom corner up.
  CHECK(forced_direction(Plaquette::triangle(Corner::NW)) == Direction::Down);
  CHECK(forced_direction(Plaquette::triangle(Corner::NE)) == Direction::Down);
  CHECK(forced_direction(Plaquette::triangle(Corner::SW)) == Direction::Up);
  CHECK(forced_direction(Plaquette::triangle(Corner::SE)) == Direction::Up);
  CHECK(!forced_direction(Plaquette::square()).has_value());
  CHECK(!forced_direction(Plaquette::empty()).has_value());
}

TEST_CASE("generators") {
  Layout sq = gen_squares(4, 3, 0.7);
  CHECK(sq.n_constraints() == 6);
  CHECK(sq.n_squares() == 6);
  CHECK(sq.cell(2, 1).angle == doctest::Approx(0.7));

  // Staircase: row j holds n-1-j cells, one triangle per row.
  Layout lhz = gen_lhz(5);
  CHECK(lhz.n_constraints() == 3 + 2 + 1);
  CHECK(lhz.n_triangles() == 3);

  Layout r0 = gen_random(6, 6, 0.0, 42);
  CHECK(r0.n_triangles() == 0);
  CHECK(r0.n_constraints() == 25);
  Layout r1 = gen_random(6, 6, 1.0, 42);
  CHECK(r1.n_squares() == 0);
  CHECK(gen_random(6, 6, 0.5, 9) == gen_random(6, 6, 0.5, 9));
  CHECK(gen_random(6, 6, 0.5, 9) != gen_random(6, 6, 0.5, 10));
}

TEST_CASE("transpose is an involution and swaps dimensions") {
  Layout l = gen_random(7, 4, 0.6, 3);
  Layout t = transpose(l);
  CHECK(t.n_cols() == 4);
  CHECK(t.n_rows() == 7);
  CHECK(t.n_constraints() == l.n_constraints());
  CHECK(transpose(t) == l);
}

TEST_CASE("text format round trip") {
  // The text format carries cell kinds only; angles come from the parse-time
  // default, so the round trip is exact at the default angle.
  Layout l = gen_random(5, 4, 0.5, 17);
  std::string text = layout_to_text(l);
  CHECK(parse_layout(text) == l);
}

TEST_CASE("text format with header and inferred sizes") {
  Layout with_header = parse_layout("3 3 0.5\nQ.\n13\n");
  CHECK(with_header.n_cols() == 3);
  CHECK(with_header.cell(1, 2).kind == CellKind::Square);
  CHECK(with_header.cell(1, 2).angle == doctest::Approx(0.5));
  CHECK(with_header.cell(2, 2).kind == CellKind::Empty);
  CHECK(with_header.cell(1, 1).missing == Corner::NW);
  CHECK(with_header.cell(2, 1).missing == Corner::SW);

  Layout inferred = parse_layout("Q.\n13\n");
  CHECK(inferred == parse_layout("3 3 1.0\nQ.\n13\n"));
}

TEST_CASE("parse errors carry line and column") {
  CHECK_THROWS_AS(parse_layout("QQ\nQXQ\n"), ParseError);
  try {
    parse_layout("QQ\nQX\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 2);
  }
  CHECK_THROWS_AS(parse_layout("3 3\nQQQ\nQQ\n"), ParseError);
  CHECK_THROWS_AS(parse_layout(""), ParseError);
}

TEST_CASE("json round trip") {
  Layout l = gen_random(6, 5, 0.4, 23, 1.3);
  CHECK(layout_from_json(layout_to_json(l)) == l);
}
