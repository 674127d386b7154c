#pragma once

// Seeded experiment batches and their on-disk outputs.
//
// An experiment directory holds one run_NNN.json per run plus
// convergence.csv and histogram.csv (the latter only when the instance
// carries a reference slowness).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "evoqsi/baseline.hpp"
#include "evoqsi/evolve.hpp"
#include "evoqsi/problem.hpp"
#include "evoqsi/qubo.hpp"

namespace evoqsi::runner {

enum class Solver { Evolutionary, Vqa };

std::string to_string(Solver solver);

struct SynthSpec {
    int layers = 3;
    int bits = 3;
    std::uint64_t seed = 0;
};

using InstanceSpec = std::variant<SynthSpec, std::filesystem::path>;

struct ExperimentConfig {
    InstanceSpec instance = SynthSpec{};
    Solver solver = Solver::Evolutionary;
    /// Used for the evolutionary solver; its seed field is overwritten per run.
    evolve::EvolutionConfig evolution;
    /// Used for the variational solver; its seed field is overwritten per run.
    baseline::OptimizerConfig vqa;
    int ansatz_layers = 2;

    int runs = 10;
    std::uint64_t master_seed = 0;
    /// No files are written when unset.
    std::optional<std::filesystem::path> out_dir;
    /// Generations at which the top-k distribution is stored and the
    /// convergence CSV is sampled. Empty means default_sampling(budget()).
    std::vector<int> sampled_generations;
    std::size_t top_k = 64;
    int jobs = 1;

    /// Generations (evolutionary) or iterations (variational).
    int budget() const noexcept;
    std::vector<int> sampling() const;
    void validate() const;
};

/// 0, step, 2*step, ... up to `budget`, always including `budget`.
std::vector<int> default_sampling(int budget, int step = 50);

/// Per-run seed: derive_seed(master, {index}). Adding runs never changes the
/// seeds of earlier runs.
std::uint64_t run_seed(std::uint64_t master_seed, int index);

struct ProbabilityEntry {
    circuit::BasisIndex index = 0;
    double probability = 0.0;
};

/// Most probable `k` labels, probability descending, ties by label.
std::vector<ProbabilityEntry> top_probabilities(std::span<const double> distribution, std::size_t k);

struct Snapshot {
    int generation = 0;
    std::vector<ProbabilityEntry> top;
};

struct RunRecord {
    Solver solver = Solver::Evolutionary;
    int run = 0;
    std::uint64_t seed = 0;
    /// Best cost per generation (evolutionary) or cost per iteration (variational).
    std::vector<double> costs;
    double final_best_cost = 0.0;
    std::size_t final_depth = 0;
    circuit::BasisIndex readout = 0;
    /// QUBO energy of the readout bitstring; 0 iff the decoded slowness solves D s = t.
    double readout_energy = 0.0;
    problem::Slowness decoded;
    std::vector<ProbabilityEntry> top_k;
    std::vector<Snapshot> snapshots;
    /// Kept out of the JSON so records are reproducible byte for byte.
    double wall_seconds = 0.0;
};

struct Aggregate {
    int runs = 0;
    /// run_costs[r][g]
    std::vector<std::vector<double>> run_costs;
    std::vector<double> mean_cost;
    std::vector<double> std_cost;
    std::vector<double> mean_decoded;
    std::vector<double> std_decoded;
    std::optional<problem::Slowness> reference;
    double mean_initial_cost = 0.0;
    double mean_final_cost = 0.0;
    /// Runs whose readout decodes to an exact solution.
    int exact_recoveries = 0;
};

/// Mean and population standard deviation over the records.
Aggregate aggregate(std::span<const RunRecord> records,
                    const std::optional<problem::Slowness>& reference);

struct ExperimentResult {
    problem::LayeredProblem problem;
    std::vector<RunRecord> records;
    Aggregate aggregate;
};

problem::LayeredProblem resolve_instance(const InstanceSpec& spec);

/// Run `index` of an experiment, seeded with run_seed(config.master_seed, index).
RunRecord run_single(const problem::CostHamiltonian& hamiltonian, const ExperimentConfig& config,
                     int index);

ExperimentResult run_experiment(const ExperimentConfig& config);

nlohmann::json to_json(const RunRecord& record, const problem::LayeredProblem& problem);

/// generation,mean_cost,std_cost,run_0,...  One row per sampled generation.
void emit_convergence_csv(std::ostream& out, const Aggregate& aggregate,
                          std::span<const int> generations);
/// layer,reference,mean_decoded,std_decoded. Throws without a reference.
void emit_histogram_csv(std::ostream& out, const Aggregate& aggregate);
/// generation,evolutionary_mean,evolutionary_std,vqa_mean,vqa_std for every
/// generation both traces cover.
void emit_comparison_csv(std::ostream& out, const Aggregate& evolutionary, const Aggregate& vqa);

/// Shortest decimal that round-trips to the same double.
std::string format_number(double v);

std::string bit_label(circuit::BasisIndex x, int nbits);

}  // namespace evoqsi::runner
