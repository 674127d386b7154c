#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "evoqsi/problem_json.hpp"
#include "evoqsi/runner.hpp"

namespace evoqsi::runner {

namespace fs = std::filesystem;

std::string to_string(Solver solver) {
    return solver == Solver::Evolutionary ? "evolutionary" : "vqa";
}

int ExperimentConfig::budget() const noexcept {
    return solver == Solver::Evolutionary ? evolution.generations : vqa.iterations;
}

std::vector<int> ExperimentConfig::sampling() const {
    return sampled_generations.empty() ? default_sampling(budget()) : sampled_generations;
}

void ExperimentConfig::validate() const {
    if (runs < 1) throw std::invalid_argument("run count must be at least 1");
    if (jobs < 1) throw std::invalid_argument("job count must be at least 1");
    if (ansatz_layers < 0) throw std::invalid_argument("ansatz layer count must be nonnegative");
    if (solver == Solver::Evolutionary) {
        evolution.validate();
    } else if (vqa.iterations < 0) {
        throw std::invalid_argument("iteration count must be nonnegative");
    }
    for (int g : sampled_generations) {
        if (g < 0 || g > budget()) {
            throw std::invalid_argument("sampled generation " + std::to_string(g) + " outside [0, " +
                                        std::to_string(budget()) + "]");
        }
    }
    if (!std::is_sorted(sampled_generations.begin(), sampled_generations.end()) ||
        std::adjacent_find(sampled_generations.begin(), sampled_generations.end()) !=
            sampled_generations.end()) {
        throw std::invalid_argument("sampled generations must be strictly increasing");
    }
}

std::vector<int> default_sampling(int budget, int step) {
    if (step < 1) throw std::invalid_argument("sampling step must be positive");
    std::vector<int> g;
    for (int i = 0; i <= budget; i += step) g.push_back(i);
    if (g.back() != budget) g.push_back(budget);
    return g;
}

std::uint64_t run_seed(std::uint64_t master_seed, int index) {
    return derive_seed(master_seed, {static_cast<std::uint64_t>(index)});
}

std::vector<ProbabilityEntry> top_probabilities(std::span<const double> distribution, std::size_t k) {
    std::vector<circuit::BasisIndex> order(distribution.size());
    std::iota(order.begin(), order.end(), circuit::BasisIndex{0});
    k = std::min(k, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](circuit::BasisIndex a, circuit::BasisIndex b) {
                          if (distribution[a] != distribution[b]) return distribution[a] > distribution[b];
                          return a < b;
                      });
    std::vector<ProbabilityEntry> top;
    top.reserve(k);
    for (std::size_t i = 0; i < k; ++i) top.push_back({order[i], distribution[order[i]]});
    return top;
}

problem::LayeredProblem resolve_instance(const InstanceSpec& spec) {
    if (const auto* synth = std::get_if<SynthSpec>(&spec)) {
        return problem::synth_instance(synth->layers, synth->bits, synth->seed);
    }
    return problem::load_problem(std::get<fs::path>(spec));
}

RunRecord run_single(const problem::CostHamiltonian& hamiltonian, const ExperimentConfig& config,
                     int index) {
    const auto started = std::chrono::steady_clock::now();
    const auto sampling = config.sampling();
    auto sampled = [&](int g) { return std::binary_search(sampling.begin(), sampling.end(), g); };

    RunRecord record;
    record.solver = config.solver;
    record.run = index;
    record.seed = run_seed(config.master_seed, index);

    std::vector<double> final_distribution;
    if (config.solver == Solver::Evolutionary) {
        evolve::EvolutionConfig ec = config.evolution;
        ec.seed = record.seed;
        auto observer = [&](int g, const evolve::Individual& parent) {
            if (!sampled(g)) return;
            const auto dist = circuit::probabilities(circuit::run_circuit(parent.circuit));
            record.snapshots.push_back({g, top_probabilities(dist, config.top_k)});
        };
        auto result = evolve::run_evolution(hamiltonian, ec, observer);
        record.costs.reserve(result.trace.size());
        for (const auto& t : result.trace) record.costs.push_back(t.best_cost);
        record.final_best_cost = result.best.cost;
        record.final_depth = result.best.circuit.depth();
        record.readout = result.readout;
        record.decoded = std::move(result.decoded);
        final_distribution = std::move(result.final_distribution);
    } else {
        baseline::OptimizerConfig oc = config.vqa;
        oc.seed = record.seed;
        const baseline::Ansatz ansatz{hamiltonian.nqubits(), config.ansatz_layers};
        auto observer = [&](int it, std::span<const double> theta, double) {
            if (!sampled(it)) return;
            const auto dist = circuit::probabilities(circuit::run_circuit(ansatz.circuit(theta)));
            record.snapshots.push_back({it, top_probabilities(dist, config.top_k)});
        };
        auto result = baseline::run_vqa(hamiltonian, ansatz, oc, observer);
        record.costs = std::move(result.cost_trace);
        record.final_best_cost = result.best_cost;
        record.final_depth = ansatz.circuit(result.best_theta).depth();
        record.readout = result.readout;
        record.decoded = std::move(result.decoded);
        final_distribution = std::move(result.final_distribution);
    }
    record.readout_energy = hamiltonian.observable.energy(record.readout);
    record.top_k = top_probabilities(final_distribution, config.top_k);
    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return record;
}

Aggregate aggregate(std::span<const RunRecord> records,
                    const std::optional<problem::Slowness>& reference) {
    if (records.empty()) throw std::invalid_argument("cannot aggregate zero runs");
    Aggregate agg;
    agg.runs = static_cast<int>(records.size());
    agg.reference = reference;
    const double n = static_cast<double>(records.size());

    const std::size_t length = records.front().costs.size();
    for (const auto& r : records) {
        if (r.costs.size() != length) throw std::invalid_argument("runs have different trace lengths");
        agg.run_costs.push_back(r.costs);
    }
    agg.mean_cost.assign(length, 0.0);
    agg.std_cost.assign(length, 0.0);
    for (std::size_t g = 0; g < length; ++g) {
        double sum = 0.0;
        for (const auto& r : records) sum += r.costs[g];
        const double mean = sum / n;
        double sq = 0.0;
        for (const auto& r : records) sq += (r.costs[g] - mean) * (r.costs[g] - mean);
        agg.mean_cost[g] = mean;
        agg.std_cost[g] = std::sqrt(sq / n);
    }

    const std::size_t layers = records.front().decoded.size();
    agg.mean_decoded.assign(layers, 0.0);
    agg.std_decoded.assign(layers, 0.0);
    for (std::size_t i = 0; i < layers; ++i) {
        double sum = 0.0;
        for (const auto& r : records) sum += static_cast<double>(r.decoded.at(i));
        const double mean = sum / n;
        double sq = 0.0;
        for (const auto& r : records) {
            const double d = static_cast<double>(r.decoded.at(i)) - mean;
            sq += d * d;
        }
        agg.mean_decoded[i] = mean;
        agg.std_decoded[i] = std::sqrt(sq / n);
    }

    double initial = 0.0;
    double final_cost = 0.0;
    for (const auto& r : records) {
        initial += r.costs.front();
        final_cost += r.final_best_cost;
        agg.exact_recoveries += r.readout_energy == 0.0;
    }
    agg.mean_initial_cost = initial / n;
    agg.mean_final_cost = final_cost / n;
    return agg;
}

namespace {

void write_file(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << body;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string record_name(int index) {
    std::string digits = std::to_string(index);
    if (digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
    return "run_" + digits + ".json";
}

void prepare_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw std::runtime_error("cannot create output directory " + dir.string() +
                                 (ec ? ": " + ec.message() : ""));
    }
    // probe writability up front rather than after the runs
    const fs::path probe = dir / ".write_probe";
    {
        std::ofstream out(probe);
        if (!out) throw std::runtime_error("output directory " + dir.string() + " is not writable");
    }
    fs::remove(probe, ec);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    ExperimentResult result{resolve_instance(config.instance), {}, {}};
    const auto hamiltonian = problem::make_hamiltonian(result.problem);
    if (config.out_dir) prepare_directory(*config.out_dir);

    result.records.resize(static_cast<std::size_t>(config.runs));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(config.runs));

    #pragma omp parallel for schedule(dynamic) num_threads(config.jobs) if(config.jobs > 1)
    for (int i = 0; i < config.runs; ++i) {
        const auto slot = static_cast<std::size_t>(i);
        try {
            result.records[slot] = run_single(hamiltonian, config, i);
            if (config.out_dir) {
                write_file(*config.out_dir / record_name(i),
                           to_json(result.records[slot], result.problem).dump(2) + "\n");
            }
        } catch (...) {
            errors[slot] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    result.aggregate = aggregate(result.records, result.problem.slowness_true);
    if (config.out_dir) {
        std::ostringstream conv;
        const auto sampling = config.sampling();
        emit_convergence_csv(conv, result.aggregate, sampling);
        write_file(*config.out_dir / "convergence.csv", conv.str());
        if (result.aggregate.reference) {
            std::ostringstream hist;
            emit_histogram_csv(hist, result.aggregate);
            write_file(*config.out_dir / "histogram.csv", hist.str());
        }
    }
    return result;
}

}  // namespace evoqsi::runner
