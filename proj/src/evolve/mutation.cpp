#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "evoqsi/evolve.hpp"

namespace evoqsi::evolve {

using circuit::Gate;
using circuit::GateKind;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr std::array<GateKind, 3> kSingleKinds{GateKind::Rx, GateKind::Ry, GateKind::Rz};
constexpr std::array<GateKind, 3> kControlledKinds{GateKind::CRx, GateKind::CRy, GateKind::CRz};

std::size_t count_controlled(const Circuit& c) {
    std::size_t k = 0;
    for (const Gate& g : c.gates()) k += g.control.has_value();
    return k;
}

bool valid_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void MutationConfig::validate() const {
    for (double p : {p_insert, p_delete, p_modify, p_swap, single_qubit_ratio}) {
        if (!valid_probability(p)) throw std::invalid_argument("mutation probabilities must lie in [0, 1]");
    }
    const double total = p_insert + p_delete + p_modify + p_swap;
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("mutation probabilities must sum to 1, got " + std::to_string(total));
    }
    if (mutations_per_offspring < 1) throw std::invalid_argument("mutations per offspring must be positive");
}

bool applicable(MutationOp op, const Circuit& circuit) {
    switch (op) {
        case MutationOp::Insert: return true;
        case MutationOp::Delete:
        case MutationOp::Modify: return !circuit.empty();
        case MutationOp::Swap: return count_controlled(circuit) > 0;
    }
    return false;
}

Circuit mutate_insert(Circuit circuit, Rng& rng, double single_qubit_ratio) {
    const int n = circuit.nqubits();
    const bool single = n == 1 || rng.uniform() < single_qubit_ratio;
    const GateKind kind = single ? kSingleKinds[rng.below(3)] : kControlledKinds[rng.below(3)];
    Gate gate;
    gate.kind = kind;
    gate.target = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (!single) {
        int control = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        if (control >= gate.target) ++control;
        gate.control = control;
    }
    gate.theta = kTwoPi * rng.uniform();
    const auto position = static_cast<std::size_t>(rng.below(circuit.depth() + 1));
    circuit.insert(position, gate);
    return circuit;
}

Circuit mutate_delete(Circuit circuit, Rng& rng) {
    if (circuit.empty()) throw std::invalid_argument("delete needs a non-empty circuit");
    circuit.erase(static_cast<std::size_t>(rng.below(circuit.depth())));
    return circuit;
}

Circuit mutate_modify(Circuit circuit, Rng& rng) {
    if (circuit.empty()) throw std::invalid_argument("modify needs a non-empty circuit");
    const auto position = static_cast<std::size_t>(rng.below(circuit.depth()));
    Gate gate = circuit[position];
    gate.theta = kTwoPi * rng.uniform();
    circuit.replace(position, gate);
    return circuit;
}

Circuit mutate_swap(Circuit circuit, Rng& rng) {
    const std::size_t controlled = count_controlled(circuit);
    if (controlled == 0) throw std::invalid_argument("swap needs a two-qubit gate");
    std::size_t pick = static_cast<std::size_t>(rng.below(controlled));
    for (std::size_t i = 0; i < circuit.depth(); ++i) {
        if (!circuit[i].control) continue;
        if (pick-- == 0) {
            Gate gate = circuit[i];
            std::swap(gate.target, *gate.control);
            circuit.replace(i, gate);
            break;
        }
    }
    return circuit;
}

MutationOp choose_operation(const Circuit& circuit, const MutationConfig& config, Rng& rng) {
    constexpr std::array<MutationOp, 4> ops{MutationOp::Insert, MutationOp::Delete,
                                            MutationOp::Modify, MutationOp::Swap};
    const std::array<double, 4> p{config.p_insert, config.p_delete, config.p_modify, config.p_swap};
    std::array<double, 4> w{};
    double total = 0.0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        w[i] = applicable(ops[i], circuit) ? p[i] : 0.0;
        total += w[i];
    }
    if (total <= 0.0) return MutationOp::Insert;
    double u = rng.uniform() * total;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (w[i] > 0.0 && u < w[i]) return ops[i];
        u -= w[i];
    }
    // rounding: fall back to the last operator with weight
    for (std::size_t i = ops.size(); i-- > 0;) {
        if (w[i] > 0.0) return ops[i];
    }
    return MutationOp::Insert;
}

Circuit apply_mutation(Circuit circuit, MutationOp op, const MutationConfig& config, Rng& rng) {
    switch (op) {
        case MutationOp::Insert: return mutate_insert(std::move(circuit), rng, config.single_qubit_ratio);
        case MutationOp::Delete: return mutate_delete(std::move(circuit), rng);
        case MutationOp::Modify: return mutate_modify(std::move(circuit), rng);
        case MutationOp::Swap: return mutate_swap(std::move(circuit), rng);
    }
    return circuit;
}

Circuit mutate(Circuit circuit, const MutationConfig& config, Rng& rng) {
    for (int i = 0; i < config.mutations_per_offspring; ++i) {
        const MutationOp op = choose_operation(circuit, config, rng);
        circuit = apply_mutation(std::move(circuit), op, config, rng);
    }
    return circuit;
}

Circuit initial_circuit(int nqubits, InitialCircuit kind, Rng& rng) {
    Circuit c(nqubits);
    if (kind == InitialCircuit::RandomRy) {
        for (int q = 0; q < nqubits; ++q) c.append(Gate::ry(q, kTwoPi * rng.uniform()));
    }
    return c;
}

}  // namespace evoqsi::evolve
