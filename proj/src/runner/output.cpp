#include <charconv>
#include <cmath>
#include <stdexcept>

#include "evoqsi/problem_json.hpp"
#include "evoqsi/runner.hpp"

namespace evoqsi::runner {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

std::string bit_label(circuit::BasisIndex x, int nbits) {
    // character q is qubit q, i.e. the variable order of encode_slowness
    std::string s(static_cast<std::size_t>(nbits), '0');
    for (int q = 0; q < nbits; ++q) {
        if ((x >> q) & 1U) s[static_cast<std::size_t>(q)] = '1';
    }
    return s;
}

namespace {

nlohmann::json entries_to_json(std::span<const ProbabilityEntry> entries,
                               const problem::LayeredProblem& problem) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) {
        arr.push_back({
            {"index", e.index},
            {"bits", bit_label(e.index, problem.nqubits())},
            {"probability", e.probability},
            {"slowness", problem::decode_slowness(circuit::bits_of(e.index, problem.nqubits()),
                                                  problem.bits)},
        });
    }
    return arr;
}

}  // namespace

nlohmann::json to_json(const RunRecord& record, const problem::LayeredProblem& problem) {
    nlohmann::json snapshots = nlohmann::json::array();
    for (const auto& s : record.snapshots) {
        snapshots.push_back({{"generation", s.generation}, {"top_k", entries_to_json(s.top, problem)}});
    }
    nlohmann::json doc;
    doc["solver"] = to_string(record.solver);
    doc["run"] = record.run;
    doc["seed"] = record.seed;
    doc["problem"] = problem::to_json(problem);
    doc["costs"] = record.costs;
    doc["final_best_cost"] = record.final_best_cost;
    doc["final_depth"] = record.final_depth;
    doc["readout"] = {
        {"index", record.readout},
        {"bits", bit_label(record.readout, problem.nqubits())},
        {"energy", record.readout_energy},
    };
    doc["decoded_slowness"] = record.decoded;
    doc["top_k"] = entries_to_json(record.top_k, problem);
    doc["snapshots"] = std::move(snapshots);
    return doc;
}

void emit_convergence_csv(std::ostream& out, const Aggregate& aggregate,
                          std::span<const int> generations) {
    out << "generation,mean_cost,std_cost";
    for (int r = 0; r < aggregate.runs; ++r) out << ",run_" << r;
    out << '\n';
    for (int g : generations) {
        const auto gi = static_cast<std::size_t>(g);
        if (g < 0 || gi >= aggregate.mean_cost.size()) {
            throw std::out_of_range("generation " + std::to_string(g) + " not in the trace");
        }
        out << g << ',' << format_number(aggregate.mean_cost[gi]) << ','
            << format_number(aggregate.std_cost[gi]);
        for (const auto& costs : aggregate.run_costs) out << ',' << format_number(costs[gi]);
        out << '\n';
    }
    if (!out) throw std::runtime_error("failed writing convergence CSV");
}

void emit_histogram_csv(std::ostream& out, const Aggregate& aggregate) {
    if (!aggregate.reference) {
        throw std::invalid_argument("histogram needs a reference slowness model");
    }
    const auto& ref = *aggregate.reference;
    if (ref.size() != aggregate.mean_decoded.size()) {
        throw std::invalid_argument("reference and decoded slowness lengths differ");
    }
    out << "layer,reference,mean_decoded,std_decoded\n";
    for (std::size_t i = 0; i < ref.size(); ++i) {
        out << i << ',' << ref[i] << ',' << format_number(aggregate.mean_decoded[i]) << ','
            << format_number(aggregate.std_decoded[i]) << '\n';
    }
    if (!out) throw std::runtime_error("failed writing histogram CSV");
}

void emit_comparison_csv(std::ostream& out, const Aggregate& evolutionary, const Aggregate& vqa) {
    out << "generation,evolutionary_mean,evolutionary_std,vqa_mean,vqa_std\n";
    const std::size_t n = std::min(evolutionary.mean_cost.size(), vqa.mean_cost.size());
    for (std::size_t g = 0; g < n; ++g) {
        out << g << ',' << format_number(evolutionary.mean_cost[g]) << ','
            << format_number(evolutionary.std_cost[g]) << ',' << format_number(vqa.mean_cost[g])
            << ',' << format_number(vqa.std_cost[g]) << '\n';
    }
    if (!out) throw std::runtime_error("failed writing comparison CSV");
}

}  // namespace evoqsi::runner
