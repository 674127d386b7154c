#pragma once

// QUBO and Ising forms of the least-squares cost ||D decode(x) - t||^2.

#include <cstdint>
#include <span>
#include <vector>

#include "evoqsi/problem.hpp"
#include "evoqsi/statevector.hpp"

namespace evoqsi::problem {

/// energy(x) = x^T Q x + offset over x in {0,1}^n, with Q symmetric and the
/// linear terms folded onto the diagonal (x_a^2 = x_a).
struct Qubo {
    int n = 0;
    std::vector<double> q;  // n*n, row-major
    double offset = 0.0;

    double coefficient(int a, int b) const { return q[static_cast<std::size_t>(a) * n + b]; }

    double energy(std::span<const std::uint8_t> x) const;
    /// Bit a of `x` is variable a.
    double energy(circuit::BasisIndex x) const;
};

/// energy(z) = sum_{a<b} J_ab z_a z_b + sum_a h_a z_a + offset over spins
/// z in {+1,-1}^n. The QUBO variable maps as x = (1 - z) / 2, so x = 0 is z = +1.
struct IsingModel {
    int n = 0;
    std::vector<double> couplings;  // n*n symmetric, zero diagonal
    std::vector<double> fields;
    double offset = 0.0;

    double coupling(int a, int b) const { return couplings[static_cast<std::size_t>(a) * n + b]; }
    double energy(std::span<const std::int8_t> spins) const;
};

Qubo build_qubo(const LayeredProblem& problem);
IsingModel qubo_to_ising(const Qubo& qubo);

/// Tabulates the QUBO energy over all 2^n basis labels (qubit a = variable a).
circuit::DiagonalObservable to_observable(const Qubo& qubo);

/// Everything a solver needs about one instance: its QUBO, the tabulated
/// diagonal Hamiltonian, and how to turn a measured label back into slowness.
struct CostHamiltonian {
    int layers = 0;
    int bits = 0;
    Qubo qubo;
    circuit::DiagonalObservable observable;

    int nqubits() const noexcept { return observable.nqubits(); }
    Slowness decode(circuit::BasisIndex x) const;
};

/// Validates `problem`, builds its QUBO and tabulates it. Throws if the
/// qubit count exceeds the simulator limit.
CostHamiltonian make_hamiltonian(const LayeredProblem& problem);

}  // namespace evoqsi::problem
