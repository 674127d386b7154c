#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "evoqsi/circuit.hpp"
#include "evoqsi/random.hpp"
#include "evoqsi/statevector.hpp"

namespace evoqsi::testing {

inline circuit::Gate random_gate(int n, Rng& rng) {
    using circuit::GateKind;
    const GateKind kinds[] = {GateKind::Rx, GateKind::Ry, GateKind::Rz,
                              GateKind::CRx, GateKind::CRy, GateKind::CRz};
    const GateKind kind = kinds[rng.below(n > 1 ? 6 : 3)];
    const int target = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const double theta = rng.uniform(-2 * std::numbers::pi, 2 * std::numbers::pi);
    if (!circuit::is_controlled(kind)) return {kind, target, std::nullopt, theta};
    int control = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    if (control >= target) ++control;
    return {kind, target, control, theta};
}

inline circuit::Circuit random_circuit(int n, std::size_t depth, Rng& rng) {
    circuit::Circuit c(n);
    for (std::size_t i = 0; i < depth; ++i) c.append(random_gate(n, rng));
    return c;
}

/// A generic (non-basis) state: Ry/Rx layer on every qubit, then random gates.
inline circuit::Statevector random_state(int n, std::size_t depth, Rng& rng) {
    circuit::Circuit c(n);
    for (int q = 0; q < n; ++q) {
        c.append(circuit::Gate::ry(q, rng.uniform(0.2, 2.9)));
        c.append(circuit::Gate::rx(q, rng.uniform(0.2, 2.9)));
    }
    for (std::size_t i = 0; i < depth; ++i) c.append(random_gate(n, rng));
    return circuit::run_circuit(c, circuit::kernels::Backend::Serial);
}

inline circuit::DiagonalObservable random_observable(int n, Rng& rng, double lo = -10.0,
                                                     double hi = 10.0) {
    std::vector<double> e(std::size_t{1} << n);
    for (double& v : e) v = rng.uniform(lo, hi);
    return {n, std::move(e)};
}

inline circuit::Gate inverse(const circuit::Gate& g) {
    circuit::Gate inv = g;
    inv.theta = -g.theta;
    return inv;
}

}  // namespace evoqsi::testing
