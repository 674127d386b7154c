#include "evoqsi/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "evoqsi/problem_json.hpp"
#include "evoqsi/runner.hpp"

namespace evoqsi::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    int layers = 0;
    int bits = 0;
    std::string problem;
    int generations = 300;
    int mu = 1;
    int lambda = 4;
    int runs = 10;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    std::string out = "out";
    int jobs = 1;
    int sample_every = 50;
    std::string init = "ry";
    int mutations = 1;
    double p_insert = 0.25;
    double p_delete = 0.25;
    double p_modify = 0.25;
    double p_swap = 0.25;
    double single_ratio = 0.5;
    int ansatz_layers = 2;
    double learning_rate = 0.1;
};

void add_instance_flags(CLI::App* cmd, Options& o) {
    auto* layers = cmd->add_option("--layers", o.layers, "Number of layers M of a synthetic instance")
                       ->check(CLI::PositiveNumber);
    auto* bits = cmd->add_option("--bits", o.bits, "Bits R per slowness value")->check(CLI::PositiveNumber);
    auto* problem = cmd->add_option("--problem", o.problem, "Problem JSON to load instead of synthesizing");
    problem->excludes(layers)->excludes(bits);
}

void add_run_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--generations", o.generations, "Generations (iterations for the variational baseline)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--runs", o.runs, "Independent seeded runs")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Master seed (also seeds a synthetic instance)");
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--jobs", o.jobs, "Runs executed concurrently")->check(CLI::PositiveNumber);
    cmd->add_option("--sample-every", o.sample_every, "Stride of stored distribution snapshots")
        ->check(CLI::PositiveNumber);
}

void add_evolution_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--mu", o.mu, "Parents per generation (only 1 is supported)");
    cmd->add_option("--lambda", o.lambda, "Offspring per generation")->check(CLI::PositiveNumber);
    cmd->add_option("--shots", o.shots, "Measurement shots per evaluation, 0 = exact expectation");
    cmd->add_option("--init", o.init, "Initial circuit")->check(CLI::IsMember({"ry", "empty"}));
    cmd->add_option("--mutations", o.mutations, "Mutations applied to each offspring")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--p-insert", o.p_insert, "Insert probability")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--p-delete", o.p_delete, "Delete probability")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--p-modify", o.p_modify, "Modify probability")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--p-swap", o.p_swap, "Swap probability")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--single-ratio", o.single_ratio, "Probability an inserted gate is single-qubit")
        ->check(CLI::Range(0.0, 1.0));
}

void add_vqa_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--ansatz-layers", o.ansatz_layers, "Layers of the variational ansatz")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--learning-rate", o.learning_rate, "Gradient descent step size");
}

runner::ExperimentConfig make_config(const Options& o, runner::Solver solver) {
    runner::ExperimentConfig c;
    if (!o.problem.empty()) {
        c.instance = fs::path(o.problem);
    } else {
        if (o.layers < 1 || o.bits < 1) {
            throw std::invalid_argument("an instance needs --problem or both --layers and --bits");
        }
        c.instance = runner::SynthSpec{o.layers, o.bits, o.seed};
    }
    c.solver = solver;
    c.evolution.mu = o.mu;
    c.evolution.lambda = o.lambda;
    c.evolution.generations = o.generations;
    c.evolution.eval.shots = o.shots;
    c.evolution.initial = o.init == "empty" ? evolve::InitialCircuit::Empty : evolve::InitialCircuit::RandomRy;
    c.evolution.mutation.p_insert = o.p_insert;
    c.evolution.mutation.p_delete = o.p_delete;
    c.evolution.mutation.p_modify = o.p_modify;
    c.evolution.mutation.p_swap = o.p_swap;
    c.evolution.mutation.single_qubit_ratio = o.single_ratio;
    c.evolution.mutation.mutations_per_offspring = o.mutations;
    c.vqa.iterations = o.generations;
    c.vqa.learning_rate = o.learning_rate;
    c.ansatz_layers = o.ansatz_layers;
    c.runs = o.runs;
    c.master_seed = o.seed;
    c.jobs = o.jobs;
    c.out_dir = fs::path(o.out);
    c.sampled_generations = runner::default_sampling(c.budget(), o.sample_every);
    return c;
}

std::string slowness_text(const problem::Slowness& s) {
    std::string text = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(s[i]);
    }
    return text + "]";
}

void report(std::ostream& out, const runner::ExperimentConfig& config,
            const runner::ExperimentResult& result) {
    out << runner::to_string(config.solver) << ": " << result.problem.layers << " layers, "
        << result.problem.bits << " bits, " << result.problem.nqubits() << " qubits, "
        << config.runs << " runs\n";
    for (const auto& r : result.records) {
        out << "  run " << r.run << "  final_cost=" << runner::format_number(r.final_best_cost)
            << "  readout_energy=" << runner::format_number(r.readout_energy)
            << "  slowness=" << slowness_text(r.decoded) << "  depth=" << r.final_depth
            << "  time=" << runner::format_number(std::round(r.wall_seconds * 1000) / 1000) << "s\n";
    }
    const auto& a = result.aggregate;
    out << "  mean initial cost " << runner::format_number(a.mean_initial_cost)
        << ", mean final cost " << runner::format_number(a.mean_final_cost) << ", exact readouts "
        << a.exact_recoveries << "/" << a.runs << "\n";
    if (a.reference) out << "  reference slowness " << slowness_text(*a.reference) << "\n";
    if (config.out_dir) out << "  wrote " << config.out_dir->string() << "\n";
}

int run_synth(const Options& o, std::ostream& out) {
    const auto p = problem::synth_instance(o.layers, o.bits, o.seed);
    if (o.out.empty() || o.out == "-") {
        out << problem::to_json(p).dump(2) << '\n';
    } else {
        problem::save_problem(o.out, p);
        out << "wrote " << o.out << " (" << p.nqubits() << " qubits)\n";
    }
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Traveltime inversion by evolutionary quantum circuit learning", "evoqsi"};
    app.require_subcommand(1);

    Options o;
    Options synth_o;
    synth_o.out.clear();

    auto* synth = app.add_subcommand("synth", "Write a synthetic problem JSON");
    synth->add_option("--layers", synth_o.layers, "Number of layers M")->required()->check(CLI::PositiveNumber);
    synth->add_option("--bits", synth_o.bits, "Bits R per slowness value")->required()->check(CLI::PositiveNumber);
    synth->add_option("--seed", synth_o.seed, "Instance seed");
    synth->add_option("--out", synth_o.out, "Output file (stdout when omitted)");

    auto* evolve_cmd = app.add_subcommand("evolve", "Run the evolutionary circuit-learning experiment");
    add_instance_flags(evolve_cmd, o);
    add_run_flags(evolve_cmd, o);
    add_evolution_flags(evolve_cmd, o);

    auto* vqa_cmd = app.add_subcommand("vqa", "Run the fixed-ansatz variational baseline");
    add_instance_flags(vqa_cmd, o);
    add_run_flags(vqa_cmd, o);
    add_vqa_flags(vqa_cmd, o);

    auto* compare_cmd = app.add_subcommand("compare", "Run both solvers on one instance");
    add_instance_flags(compare_cmd, o);
    add_run_flags(compare_cmd, o);
    add_evolution_flags(compare_cmd, o);
    add_vqa_flags(compare_cmd, o);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (synth->parsed()) return run_synth(synth_o, out);

        if (evolve_cmd->parsed() || vqa_cmd->parsed()) {
            const auto solver = evolve_cmd->parsed() ? runner::Solver::Evolutionary : runner::Solver::Vqa;
            const auto config = make_config(o, solver);
            const auto result = runner::run_experiment(config);
            report(out, config, result);
            return 0;
        }

        // compare
        auto evo_config = make_config(o, runner::Solver::Evolutionary);
        auto vqa_config = make_config(o, runner::Solver::Vqa);
        const fs::path root = o.out;
        evo_config.out_dir = root / "evolutionary";
        vqa_config.out_dir = root / "vqa";
        const auto evo = runner::run_experiment(evo_config);
        report(out, evo_config, evo);
        const auto vqa = runner::run_experiment(vqa_config);
        report(out, vqa_config, vqa);
        std::ofstream csv(root / "compare.csv", std::ios::binary | std::ios::trunc);
        if (!csv) throw std::runtime_error("cannot write " + (root / "compare.csv").string());
        runner::emit_comparison_csv(csv, evo.aggregate, vqa.aggregate);
        out << "  wrote " << (root / "compare.csv").string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "evoqsi: error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace evoqsi::cli
