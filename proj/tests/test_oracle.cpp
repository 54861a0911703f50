#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <parity/chip_compiler.hpp>
#include <parity/circuit.hpp>
#include <parity/lattice.hpp>
#include <parity/oracle.hpp>

#include <cmath>
#include <complex>
#include <vector>

using namespace parity;

namespace {

// Independent reference: apply the circuit to a full 2^n statevector and
// compare with the diagonal exp(i * target_phase) the layout demands. This
// shares no code with the basis-state propagation oracle.
bool statevector_matches(const Layout& l, const Circuit& c) {
  int n = l.n_qubits();
  REQUIRE(n <= 14);
  std::size_t dim = std::size_t{1} << n;
  std::vector<std::complex<double>> state(dim);
  // A fixed dense input vector with distinct entries.
  for (std::size_t i = 0; i < dim; ++i)
    state[i] = std::polar(1.0 + double(i % 7), 0.1 * double(i % 11));

  std::vector<std::complex<double>> out = state;
  for (const Moment& m : c.moments) {
    for (const Gate& g : m.gates) {
      int qa = qubit_index(c.n_cols, g.a);
      if (g.type == GateType::CNOT) {
        int qb = qubit_index(c.n_cols, g.b);
        std::vector<std::complex<double>> next(dim);
        for (std::size_t i = 0; i < dim; ++i) {
          std::size_t j = (i >> qa) & 1 ? i ^ (std::size_t{1} << qb) : i;
          next[j] = out[i];
        }
        out = std::move(next);
      } else if (g.type == GateType::ZZ) {
        int qb = qubit_index(c.n_cols, g.b);
        for (std::size_t i = 0; i < dim; ++i) {
          int za = (i >> qa) & 1 ? -1 : 1;
          int zb = (i >> qb) & 1 ? -1 : 1;
          out[i] *= std::polar(1.0, g.angle * za * zb);
        }
      } else {
        for (std::size_t i = 0; i < dim; ++i) {
          int za = (i >> qa) & 1 ? -1 : 1;
          out[i] *= std::polar(1.0, g.angle * za);
        }
      }
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    BasisState s(n, i);
    std::complex<double> want =
        state[i] * std::polar(1.0, target_phase(l, s));
    if (std::abs(out[i] - want) > 1e-9) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("target phase is the signed sum of constraint angles") {
  Layout l(3, 2);
  l.cell(1, 1) = Plaquette::square(0.5);
  l.cell(2, 1) = Plaquette::triangle(Corner::NE, 0.25);

  BasisState zero(6, 0);
  CHECK(target_phase(l, zero) == doctest::Approx(0.75));

  // Flipping one square qubit flips that term's sign.
  BasisState one(6, 0);
  one.set(qubit_index(3, {1, 1}), 1);
  CHECK(target_phase(l, one) == doctest::Approx(-0.5 + 0.25));
}

TEST_CASE("propagation tracks CNOT permutations and diagonal phases") {
  Circuit c{2, 2, {}};
  c.moments.push_back({{Gate::cnot({1, 1}, {2, 1})}});
  c.moments.push_back({{Gate::rz({2, 1}, 0.4)}});

  BasisState s(4, 0b0001);  // qubit (1,1) set
  Propagated p = propagate(c, s);
  CHECK(p.state.bit(1) == 1);  // target flipped
  CHECK(p.phase == doctest::Approx(-0.4));

  BasisState t(4, 0b0000);
  Propagated q = propagate(c, t);
  CHECK(q.state == t);
  CHECK(q.phase == doctest::Approx(0.4));
}

TEST_CASE("exhaustive verifier agrees with a statevector simulation") {
  for (unsigned s = 0; s < 4; ++s) {
    Layout l = gen_random(4, 3, 0.5, s, 0.7 + 0.1 * s);
    Circuit c = compile(l, {}).circuit;
    CHECK(verify_exhaustive(l, c).ok);
    CHECK(statevector_matches(l, c));
  }
}

TEST_CASE("statevector simulation also confirms the CNOT+RZ form") {
  Layout l = gen_random(4, 3, 0.4, 9, 0.9);
  Circuit c = to_cnot_rz(compile(l, {}).circuit);
  CHECK(statevector_matches(l, c));
}

TEST_CASE("verifier rejects wrong angles and stray gates") {
  Layout l = gen_random(3, 3, 0.5, 2, 0.8);
  Circuit c = compile(l, {}).circuit;
  REQUIRE(verify_exhaustive(l, c).ok);

  Circuit wrong_angle = c;
  for (Moment& m : wrong_angle.moments)
    for (Gate& g : m.gates)
      if (g.type == GateType::ZZ) g.angle += 0.1;
  CHECK(!verify_exhaustive(l, wrong_angle).ok);

  Circuit stray = c;
  stray.moments.push_back({{Gate::cnot({1, 1}, {2, 1})}});
  CHECK(!verify_exhaustive(l, stray).ok);
}

TEST_CASE("deleting any single gate breaks verification") {
  Layout l = gen_random(3, 3, 0.5, 6, 0.6);
  Circuit c = compile(l, {}).circuit;
  REQUIRE(verify_exhaustive(l, c).ok);
  for (std::size_t mi = 0; mi < c.moments.size(); ++mi) {
    for (std::size_t gi = 0; gi < c.moments[mi].gates.size(); ++gi) {
      Circuit mutant = c;
      auto& gates = mutant.moments[mi].gates;
      gates.erase(gates.begin() + gi);
      CHECK(!verify_exhaustive(l, mutant).ok);
    }
  }
}

TEST_CASE("sampled verification is deterministic in the seed") {
  Layout l = gen_random(8, 8, 0.5, 1);
  Circuit c = compile(l, {}).circuit;
  CHECK(verify_sampled(l, c, 25, 3).ok);
  CHECK(verify_sampled(l, c, 25, 4).ok);
}

TEST_CASE("exhaustive verification refuses oversized layouts") {
  Layout l = gen_squares(6, 6);
  Circuit c = compile(l, {}).circuit;
  CHECK_THROWS_AS(verify_exhaustive(l, c), std::invalid_argument);
}
