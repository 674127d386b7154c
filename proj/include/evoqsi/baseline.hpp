#pragma once

// Fixed-structure variational baseline trained by gradient descent.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "evoqsi/circuit.hpp"
#include "evoqsi/qubo.hpp"
#include "evoqsi/statevector.hpp"

namespace evoqsi::baseline {

/// Hardware-efficient layered ansatz. Each layer is one Ry per qubit followed
/// by a ring of CRz entanglers (qubit q controls q+1 mod n); the ring is
/// omitted on a single qubit. Parameters are laid out layer by layer, Ry
/// angles first, then ring angles in control order.
struct Ansatz {
    int nqubits = 1;
    int layers = 1;

    std::size_t parameter_count() const noexcept;
    circuit::Circuit circuit(std::span<const double> theta) const;
    /// Whether parameter k drives a controlled rotation.
    bool is_entangler(std::size_t k) const;
};

double ansatz_expectation(const Ansatz& ansatz, std::span<const double> theta,
                          const circuit::DiagonalObservable& observable);

/// Exact gradient by parameter shifts. Ry parameters use the two-term rule
/// [f(t + pi/2) - f(t - pi/2)] / 2; CRz parameters, whose generator has
/// eigenvalues {0, +-1/2}, use the four-term rule
///   c+ [f(t + pi/2) - f(t - pi/2)] - c- [f(t + 3pi/2) - f(t - 3pi/2)],
///   c+- = (sqrt2 +- 1) / (4 sqrt2).
std::vector<double> parameter_shift_gradient(const Ansatz& ansatz, std::span<const double> theta,
                                             const circuit::DiagonalObservable& observable);

struct OptimizerConfig {
    double learning_rate = 0.1;
    int iterations = 300;
    std::uint64_t seed = 0;
};

struct VqaResult {
    std::vector<double> initial_theta;
    std::vector<double> best_theta;
    double best_cost = 0.0;
    /// iterations + 1 entries: cost at theta_0, theta_1, ...
    std::vector<double> cost_trace;
    std::vector<double> final_distribution;
    circuit::BasisIndex readout = 0;
    problem::Slowness decoded;
};

/// Called with (iteration, theta, cost) for every entry of the cost trace.
using VqaObserver = std::function<void(int, std::span<const double>, double)>;

/// Plain gradient descent from theta_0 ~ U[0, 2pi). The readout is the argmax
/// bitstring of the best-cost parameters.
VqaResult run_vqa(const problem::CostHamiltonian& hamiltonian, const Ansatz& ansatz,
                  const OptimizerConfig& config, const VqaObserver& observer = {});

}  // namespace evoqsi::baseline
