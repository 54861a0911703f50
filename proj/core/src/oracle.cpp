#include "parity/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace parity {

namespace {

// Map an angle to (-pi, pi].
double wrap_phase(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  x = std::fmod(x, two_pi);
  if (x <= -std::numbers::pi) x += two_pi;
  if (x > std::numbers::pi) x -= two_pi;
  return x;
}

std::string describe_state(const BasisState& s) {
  std::string out;
  out.reserve(s.n_qubits());
  for (int q = 0; q < s.n_qubits(); ++q) out.push_back(s.bit(q) ? '1' : '0');
  return out;  // qubit 0 first
}

VerifyResult check_state(const Layout& layout, const Circuit& c,
                         const BasisState& s, double ref_got,
                         double ref_want) {
  Propagated p = propagate(c, s);
  if (!(p.state == s)) {
    return {false, "basis state " + describe_state(s) +
                       " maps to a different state " +
                       describe_state(p.state)};
  }
  double err = wrap_phase((p.phase - ref_got) -
                          (target_phase(layout, s) - ref_want));
  if (std::abs(err) > kPhaseTolerance) {
    std::ostringstream os;
    os << "phase mismatch on state " << describe_state(s) << ": off by "
       << err;
    return {false, os.str()};
  }
  return {};
}

// Phases are compared relative to the all-zeros state so that a global phase
// (e.g. from the RZ decomposition of ZZ) does not count as a failure.
struct Reference {
  double got;
  double want;
};

Reference reference_phases(const Layout& layout, const Circuit& c) {
  BasisState zero(layout.n_cols() * layout.n_rows());
  return {propagate(c, zero).phase, target_phase(layout, zero)};
}

}  // namespace

double target_phase(const Layout& layout, const BasisState& s) {
  double phase = 0.0;
  for (int r = 1; r < layout.n_rows(); ++r) {
    for (int col = 1; col < layout.n_cols(); ++col) {
      const Plaquette& p = layout.cell(col, r);
      if (!p.is_constraint()) continue;
      int parity = 0;
      for (Corner corner : {Corner::SW, Corner::SE, Corner::NW, Corner::NE}) {
        if (!p.has_corner(corner)) continue;
        QubitCoord q{corner == Corner::SW || corner == Corner::NW ? col
                                                                  : col + 1,
                     corner == Corner::SW || corner == Corner::SE ? r : r + 1};
        parity ^= s.bit(qubit_index(layout.n_cols(), q));
      }
      phase += parity ? -p.angle : p.angle;
    }
  }
  return phase;
}

Propagated propagate(const Circuit& c, const BasisState& s) {
  Propagated p{s, 0.0};
  for (const Moment& m : c.moments) {
    for (const Gate& g : m.gates) {
      int qa = qubit_index(c.n_cols, g.a);
      switch (g.type) {
        case GateType::CNOT: {
          if (p.state.bit(qa)) p.state.flip(qubit_index(c.n_cols, g.b));
          break;
        }
        case GateType::ZZ: {
          int qb = qubit_index(c.n_cols, g.b);
          p.phase += p.state.bit(qa) == p.state.bit(qb) ? g.angle : -g.angle;
          break;
        }
        case GateType::RZ: {
          // RZ(theta) = exp(i*theta*Z): +theta on |0>, -theta on |1>.
          p.phase += p.state.bit(qa) ? -g.angle : g.angle;
          break;
        }
      }
    }
  }
  return p;
}

VerifyResult verify_exhaustive(const Layout& layout, const Circuit& c) {
  int nq = layout.n_cols() * layout.n_rows();
  if (nq > kMaxExhaustiveQubits) {
    throw std::invalid_argument(
        "exhaustive verification is limited to " +
        std::to_string(kMaxExhaustiveQubits) + " qubits");
  }
  Reference ref = reference_phases(layout, c);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nq); ++bits) {
    VerifyResult r = check_state(layout, c, BasisState(nq, bits), ref.got,
                                 ref.want);
    if (!r.ok) return r;
  }
  return {};
}

VerifyResult verify_sampled(const Layout& layout, const Circuit& c,
                            int n_samples, std::uint64_t seed) {
  int nq = layout.n_cols() * layout.n_rows();
  Reference ref = reference_phases(layout, c);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n_samples; ++i) {
    BasisState s(nq);
    for (std::uint64_t& w : s.words()) w = rng();
    if (nq & 63) s.words().back() &= (std::uint64_t{1} << (nq & 63)) - 1;
    VerifyResult r = check_state(layout, c, s, ref.got, ref.want);
    if (!r.ok) return r;
  }
  return {};
}

}  // namespace parity
