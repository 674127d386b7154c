#pragma once

// Gradient-free evolutionary circuit learning.
//
// A parent circuit produces lambda offspring by random structural and
// parametric mutations (insert / delete / modify / swap). Each offspring is
// scored by the expectation of the diagonal cost Hamiltonian on U|0...0>,
// and the cheapest of {parent} + offspring becomes the next parent.

#include <cstdint>
#include <functional>
#include <vector>

#include "evoqsi/circuit.hpp"
#include "evoqsi/qubo.hpp"
#include "evoqsi/random.hpp"
#include "evoqsi/statevector.hpp"

namespace evoqsi::evolve {

using circuit::Circuit;

enum class MutationOp { Insert, Delete, Modify, Swap };

struct MutationConfig {
    double p_insert = 0.25;
    double p_delete = 0.25;
    double p_modify = 0.25;
    double p_swap = 0.25;
    /// Probability that an inserted gate is single-qubit.
    double single_qubit_ratio = 0.5;
    int mutations_per_offspring = 1;

    void validate() const;
};

/// Exact statevector expectation when shots == 0, otherwise the mean over
/// `shots` sampled measurements.
struct EvalMode {
    std::uint64_t shots = 0;
    bool exact() const noexcept { return shots == 0; }
};

enum class InitialCircuit {
    RandomRy,  // one Ry(theta ~ U[0, 2pi)) on every qubit
    Empty,
};

struct EvolutionConfig {
    int mu = 1;
    int lambda = 4;
    int generations = 300;
    MutationConfig mutation;
    EvalMode eval;
    std::uint64_t seed = 0;
    InitialCircuit initial = InitialCircuit::RandomRy;

    /// Only mu == 1 is supported.
    void validate() const;
};

struct GenerationTrace {
    int generation = 0;
    double best_cost = 0.0;
    std::size_t depth = 0;
    /// Circuit evaluations spent in this generation.
    int evaluations = 0;
};

struct Individual {
    Circuit circuit;
    double cost = 0.0;
};

bool applicable(MutationOp op, const Circuit& circuit);

/// Inserts a fresh random gate at a uniform position in [0, depth].
Circuit mutate_insert(Circuit circuit, Rng& rng, double single_qubit_ratio = 0.5);
/// The remaining operators throw std::invalid_argument when not applicable.
Circuit mutate_delete(Circuit circuit, Rng& rng);
Circuit mutate_modify(Circuit circuit, Rng& rng);
Circuit mutate_swap(Circuit circuit, Rng& rng);

/// Draws an operator with the configured probabilities renormalised over the
/// operators applicable to `circuit`. Falls back to Insert if every applicable
/// operator has zero weight.
MutationOp choose_operation(const Circuit& circuit, const MutationConfig& config, Rng& rng);

Circuit apply_mutation(Circuit circuit, MutationOp op, const MutationConfig& config, Rng& rng);

/// `mutations_per_offspring` successive random mutations.
Circuit mutate(Circuit circuit, const MutationConfig& config, Rng& rng);

Circuit initial_circuit(int nqubits, InitialCircuit kind, Rng& rng);

/// <0|U^dag H U|0>, exact or sampled. `seed` only matters in sampled mode.
double evaluate(const Circuit& circuit, const circuit::DiagonalObservable& observable,
                EvalMode mode, std::uint64_t seed = 0);

struct StepResult {
    Individual parent;
    GenerationTrace trace;
    std::vector<double> offspring_costs;
};

/// One (1+lambda) generation. Offspring k of generation g draws from the
/// stream derive_seed(config.seed, {g, k}), so the outcome does not depend on
/// how offspring are scheduled across threads.
StepResult step(const Individual& parent, const EvolutionConfig& config,
                const circuit::DiagonalObservable& observable, int generation);

struct EvolutionResult {
    Individual best;
    /// generations + 1 entries; entry 0 is the initial parent.
    std::vector<GenerationTrace> trace;
    /// Final parent's probability distribution, indexed by basis label.
    std::vector<double> final_distribution;
    circuit::BasisIndex readout = 0;
    problem::Slowness decoded;
};

/// Called with (generation, parent) after initialisation and after every step.
using Observer = std::function<void(int, const Individual&)>;

EvolutionResult run_evolution(const problem::CostHamiltonian& hamiltonian,
                              const EvolutionConfig& config, const Observer& observer = {});

}  // namespace evoqsi::evolve
