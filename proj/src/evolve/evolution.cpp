#include <algorithm>
#include <optional>
#include <stdexcept>

#include "evoqsi/evolve.hpp"

namespace evoqsi::evolve {

namespace {

// Stream label for the final sampled readout; generations use labels 0..G.
constexpr std::uint64_t kReadoutStream = 0x72656164'6f757400ULL;

// Below this register size offspring are evaluated concurrently; above it the
// gate kernels themselves are parallel.
constexpr int kOffspringParallelBelow = 12;

}  // namespace

void EvolutionConfig::validate() const {
    if (mu != 1) throw std::invalid_argument("only mu = 1 is supported, got mu = " + std::to_string(mu));
    if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
    if (generations < 0) throw std::invalid_argument("generation count must be nonnegative");
    mutation.validate();
}

double evaluate(const Circuit& circuit, const circuit::DiagonalObservable& observable,
                EvalMode mode, std::uint64_t seed) {
    if (circuit.nqubits() != observable.nqubits()) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.nqubits()) +
                                    " qubits, observable " + std::to_string(observable.nqubits()));
    }
    const auto state = circuit::run_circuit(circuit);
    if (mode.exact()) return circuit::expectation_exact(state, observable);
    return circuit::expectation_sampled(state, observable, mode.shots, seed);
}

StepResult step(const Individual& parent, const EvolutionConfig& config,
                const circuit::DiagonalObservable& observable, int generation) {
    if (parent.circuit.nqubits() != observable.nqubits()) {
        throw std::invalid_argument("parent circuit and observable sizes differ");
    }
    const int lambda = config.lambda;
    if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
    std::vector<std::optional<Individual>> offspring(static_cast<std::size_t>(lambda));

    #pragma omp parallel for schedule(dynamic) if(observable.nqubits() < kOffspringParallelBelow && lambda > 1)
    for (int k = 0; k < lambda; ++k) {
        Rng rng(derive_seed(config.seed, {static_cast<std::uint64_t>(generation),
                                          static_cast<std::uint64_t>(k)}));
        Circuit child = mutate(parent.circuit, config.mutation, rng);
        const std::uint64_t eval_seed = rng.next();
        const double cost = evaluate(child, observable, config.eval, eval_seed);
        offspring[static_cast<std::size_t>(k)] = Individual{std::move(child), cost};
    }

    StepResult result{parent, {}, {}};
    result.offspring_costs.reserve(offspring.size());
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < offspring.size(); ++k) {
        result.offspring_costs.push_back(offspring[k]->cost);
        if (!best || offspring[k]->cost < offspring[*best]->cost) best = k;
    }
    // ties with the parent go to the offspring (neutral drift)
    if (offspring[*best]->cost <= parent.cost) result.parent = std::move(*offspring[*best]);

    result.trace.generation = generation;
    result.trace.best_cost = result.parent.cost;
    result.trace.depth = result.parent.circuit.depth();
    result.trace.evaluations = lambda;
    return result;
}

EvolutionResult run_evolution(const problem::CostHamiltonian& hamiltonian,
                              const EvolutionConfig& config, const Observer& observer) {
    config.validate();
    const auto& observable = hamiltonian.observable;

    Rng init_rng(derive_seed(config.seed, {0, 0}));
    Circuit start = initial_circuit(hamiltonian.nqubits(), config.initial, init_rng);
    const double start_cost = evaluate(start, observable, config.eval, init_rng.next());

    EvolutionResult result{Individual{std::move(start), start_cost}, {}, {}, 0, {}};
    result.trace.reserve(static_cast<std::size_t>(config.generations) + 1);
    result.trace.push_back({0, result.best.cost, result.best.circuit.depth(), 1});
    if (observer) observer(0, result.best);

    for (int g = 1; g <= config.generations; ++g) {
        StepResult s = step(result.best, config, observable, g);
        result.best = std::move(s.parent);
        result.trace.push_back(s.trace);
        if (observer) observer(g, result.best);
    }

    const auto state = circuit::run_circuit(result.best.circuit);
    result.final_distribution = circuit::probabilities(state);
    if (config.eval.exact()) {
        result.readout = circuit::argmax_bitstring(state);
    } else {
        const auto counts = circuit::sample_counts(state, config.eval.shots,
                                                   derive_seed(config.seed, {kReadoutStream}));
        result.readout = static_cast<circuit::BasisIndex>(
            std::max_element(counts.begin(), counts.end()) - counts.begin());
    }
    result.decoded = hamiltonian.decode(result.readout);
    return result;
}

}  // namespace evoqsi::evolve
