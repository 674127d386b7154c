#include "evoqsi/baseline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "evoqsi/random.hpp"

namespace evoqsi::baseline {

using circuit::Gate;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void check_parameters(const Ansatz& ansatz, std::span<const double> theta) {
    if (theta.size() != ansatz.parameter_count()) {
        throw std::invalid_argument("ansatz expects " + std::to_string(ansatz.parameter_count()) +
                                    " parameters, got " + std::to_string(theta.size()));
    }
}

std::size_t per_layer(int nqubits) {
    const auto n = static_cast<std::size_t>(nqubits);
    return nqubits == 1 ? n : 2 * n;
}

double shifted(const Ansatz& ansatz, std::vector<double>& theta, std::size_t k, double shift,
               const circuit::DiagonalObservable& observable) {
    const double saved = theta[k];
    theta[k] = saved + shift;
    const double f = ansatz_expectation(ansatz, theta, observable);
    theta[k] = saved;
    return f;
}

}  // namespace

std::size_t Ansatz::parameter_count() const noexcept {
    return static_cast<std::size_t>(layers) * per_layer(nqubits);
}

bool Ansatz::is_entangler(std::size_t k) const {
    if (k >= parameter_count()) throw std::out_of_range("parameter index past ansatz size");
    return k % per_layer(nqubits) >= static_cast<std::size_t>(nqubits);
}

circuit::Circuit Ansatz::circuit(std::span<const double> theta) const {
    if (layers < 0) throw std::invalid_argument("ansatz layer count must be nonnegative");
    check_parameters(*this, theta);
    circuit::Circuit c(nqubits);
    std::size_t k = 0;
    for (int l = 0; l < layers; ++l) {
        for (int q = 0; q < nqubits; ++q) c.append(Gate::ry(q, theta[k++]));
        if (nqubits > 1) {
            for (int q = 0; q < nqubits; ++q) c.append(Gate::crz(q, (q + 1) % nqubits, theta[k++]));
        }
    }
    return c;
}

double ansatz_expectation(const Ansatz& ansatz, std::span<const double> theta,
                          const circuit::DiagonalObservable& observable) {
    if (ansatz.nqubits != observable.nqubits()) {
        throw std::invalid_argument("ansatz and observable sizes differ");
    }
    const auto state = circuit::run_circuit(ansatz.circuit(theta));
    return circuit::expectation_exact(state, observable);
}

std::vector<double> parameter_shift_gradient(const Ansatz& ansatz, std::span<const double> theta,
                                             const circuit::DiagonalObservable& observable) {
    check_parameters(ansatz, theta);
    if (ansatz.nqubits != observable.nqubits()) {
        throw std::invalid_argument("ansatz and observable sizes differ");
    }
    const double c_plus = (std::numbers::sqrt2 + 1) / (4 * std::numbers::sqrt2);
    const double c_minus = (std::numbers::sqrt2 - 1) / (4 * std::numbers::sqrt2);

    const auto count = static_cast<std::int64_t>(theta.size());
    std::vector<double> grad(theta.size(), 0.0);
    #pragma omp parallel for schedule(dynamic) if(ansatz.nqubits < 12 && count > 1)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        std::vector<double> local(theta.begin(), theta.end());
        const double d1 = shifted(ansatz, local, k, kHalfPi, observable) -
                          shifted(ansatz, local, k, -kHalfPi, observable);
        if (!ansatz.is_entangler(k)) {
            grad[k] = d1 / 2;
        } else {
            const double d3 = shifted(ansatz, local, k, 3 * kHalfPi, observable) -
                              shifted(ansatz, local, k, -3 * kHalfPi, observable);
            grad[k] = c_plus * d1 - c_minus * d3;
        }
    }
    return grad;
}

VqaResult run_vqa(const problem::CostHamiltonian& hamiltonian, const Ansatz& ansatz,
                  const OptimizerConfig& config, const VqaObserver& observer) {
    if (config.iterations < 0) throw std::invalid_argument("iteration count must be nonnegative");
    if (!std::isfinite(config.learning_rate)) throw std::invalid_argument("learning rate must be finite");
    if (ansatz.nqubits != hamiltonian.nqubits()) {
        throw std::invalid_argument("ansatz has " + std::to_string(ansatz.nqubits) +
                                    " qubits, problem needs " + std::to_string(hamiltonian.nqubits()));
    }
    const auto& observable = hamiltonian.observable;

    Rng rng(config.seed);
    std::vector<double> theta(ansatz.parameter_count());
    for (double& t : theta) t = rng.uniform(0.0, 2 * std::numbers::pi);

    VqaResult result;
    result.initial_theta = theta;
    result.cost_trace.reserve(static_cast<std::size_t>(config.iterations) + 1);

    double cost = ansatz_expectation(ansatz, theta, observable);
    result.best_theta = theta;
    result.best_cost = cost;
    result.cost_trace.push_back(cost);
    if (observer) observer(0, theta, cost);

    for (int it = 1; it <= config.iterations; ++it) {
        const auto grad = parameter_shift_gradient(ansatz, theta, observable);
        for (std::size_t k = 0; k < theta.size(); ++k) theta[k] -= config.learning_rate * grad[k];
        cost = ansatz_expectation(ansatz, theta, observable);
        result.cost_trace.push_back(cost);
        if (cost < result.best_cost) {
            result.best_cost = cost;
            result.best_theta = theta;
        }
        if (observer) observer(it, theta, cost);
    }

    const auto state = circuit::run_circuit(ansatz.circuit(result.best_theta));
    result.final_distribution = circuit::probabilities(state);
    result.readout = circuit::argmax_bitstring(state);
    result.decoded = hamiltonian.decode(result.readout);
    return result;
}

}  // namespace evoqsi::baseline
