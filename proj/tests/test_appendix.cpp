#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <parity/chip_compiler.hpp>
#include <parity/circuit.hpp>
#include <parity/lattice.hpp>
#include <parity/oracle.hpp>
#include <parity/square_alt.hpp>

using namespace parity;

namespace {

int rz_moments(const Circuit& c) {
  int n = 0;
  for (const Moment& m : c.moments) {
    bool rz = !m.gates.empty();
    for (const Gate& g : m.gates) rz = rz && g.type == GateType::RZ;
    if (rz) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("square chips: 14 moments, CNOT depth 10, constant in n") {
  for (int n : {3, 4, 5, 6}) {
    Layout l = gen_squares(n, n, 0.9);
    Circuit c = compile_squares_alt(l);
    CHECK(c.moments.size() == 14);
    CHECK(cnot_depth(c) == 10);
    CHECK(rz_moments(c) == 4);
    CHECK(validate(c, 1).empty());
    if (l.n_qubits() <= 24) {
      CHECK(verify_exhaustive(l, c).ok);
    } else {
      CHECK(verify_sampled(l, c, 60, 9).ok);
    }
  }
}

TEST_CASE("4x4 exhaustive oracle with distinct per-cell angles") {
  Layout l = gen_squares(4, 4);
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c) l.cell(c, r).angle = 0.1 * (3 * r + c);
  CHECK(verify_exhaustive(l, compile_squares_alt(l)).ok);
}

TEST_CASE("two-qubit count is 4 N_C + 4 sqrt(N_C) on square chips") {
  // Holds for the single-block sizes (up to six qubit rows); larger chips
  // pay extra boundary gates per block.
  for (int n : {3, 4, 5, 6}) {
    Layout l = gen_squares(n, n);
    int nc = (n - 1) * (n - 1);
    CHECK(two_qubit_count(compile_squares_alt(l)) == 4 * nc + 4 * (n - 1));
  }
}

TEST_CASE("alternative vs main-text reference count formulas") {
  auto [alt5, main5] = alt_vs_main_counts(5);
  CHECK(alt5 == doctest::Approx(88.0));
  CHECK(main5 == doctest::Approx(68.0));
  auto [alt3, main3] = alt_vs_main_counts(3);
  CHECK(alt3 == doctest::Approx(26.0));
  CHECK(main3 == doctest::Approx(18.0));
  for (int n = 3; n <= 20; ++n) {
    auto [alt, main] = alt_vs_main_counts(n);
    CHECK(alt > main);
  }
}

TEST_CASE("CNOT depth beats the converted main-method depth") {
  for (int n : {4, 5, 6}) {
    Layout l = gen_squares(n, n);
    Circuit alt = compile_squares_alt(l);
    Circuit main_cx = to_cnot_rz(compile(l, {}).circuit);
    CHECK(cnot_depth(alt) == 10);
    CHECK(cnot_depth(alt) < cnot_depth(main_cx));
  }
}

TEST_CASE("rectangles compile correctly; depth holds up to six rows") {
  for (auto [nc, nr] : std::vector<std::pair<int, int>>{
           {3, 6}, {7, 3}, {5, 4}, {4, 9}, {6, 12}}) {
    Layout l = gen_squares(nc, nr, 0.4);
    Circuit c = compile_squares_alt(l);
    CHECK(validate(c, 1).empty());
    if (l.n_qubits() <= 24) {
      CHECK(verify_exhaustive(l, c).ok);
    } else {
      CHECK(verify_sampled(l, c, 40, 1).ok);
    }
    if (nr <= 6) {
      CHECK(c.moments.size() == 14);
      CHECK(cnot_depth(c) == 10);
    }
  }
}

TEST_CASE("non-square plaquettes are rejected") {
  CHECK_THROWS_AS(compile_squares_alt(gen_lhz(4)), UnsupportedLayoutError);
  Layout holey = gen_squares(4, 4);
  holey.cell(2, 2) = Plaquette::empty();
  CHECK_THROWS_AS(compile_squares_alt(holey), UnsupportedLayoutError);
  Layout tri = gen_squares(4, 4);
  tri.cell(1, 1) = Plaquette::triangle(Corner::NW);
  CHECK_THROWS_AS(compile_squares_alt(tri), UnsupportedLayoutError);
  CHECK_THROWS_AS(compile_squares_alt(gen_squares(2, 3)),
                  UnsupportedLayoutError);
}
