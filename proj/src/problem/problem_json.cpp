#include "evoqsi/problem_json.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace evoqsi::problem {

namespace {

// Integral values are written as JSON integers so synthetic instances stay
// readable; anything else keeps full double precision.
nlohmann::json number(double v) {
    if (std::isfinite(v) && v == std::trunc(v) && std::fabs(v) < 0x1.0p53) {
        return static_cast<std::int64_t>(v);
    }
    return v;
}

double read_number(const nlohmann::json& j, const char* field) {
    if (!j.is_number()) throw std::invalid_argument(std::string("field '") + field + "' must hold numbers");
    return j.get<double>();
}

const nlohmann::json& require(const nlohmann::json& doc, const char* field) {
    auto it = doc.find(field);
    if (it == doc.end()) throw std::invalid_argument(std::string("problem document lacks '") + field + "'");
    return *it;
}

}  // namespace

nlohmann::json to_json(const LayeredProblem& problem) {
    nlohmann::json doc;
    doc["M"] = problem.layers;
    doc["R"] = problem.bits;
    nlohmann::json d = nlohmann::json::array();
    for (double v : problem.distances.row_major()) d.push_back(number(v));
    doc["D"] = std::move(d);
    nlohmann::json t = nlohmann::json::array();
    for (double v : problem.times) t.push_back(number(v));
    doc["t"] = std::move(t);
    if (problem.slowness_true) doc["slowness_true"] = *problem.slowness_true;
    doc["seed"] = problem.seed ? nlohmann::json(*problem.seed) : nlohmann::json(nullptr);
    return doc;
}

LayeredProblem problem_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("problem document must be a JSON object");
    LayeredProblem p;
    const auto& m_field = require(doc, "M");
    const auto& r_field = require(doc, "R");
    if (!m_field.is_number_integer() || !r_field.is_number_integer()) {
        throw std::invalid_argument("'M' and 'R' must be integers");
    }
    p.layers = m_field.get<int>();
    p.bits = r_field.get<int>();
    if (p.layers < 1) throw std::invalid_argument("'M' must be positive");
    const auto m = static_cast<std::size_t>(p.layers);

    const auto& d_field = require(doc, "D");
    if (!d_field.is_array()) throw std::invalid_argument("'D' must be an array");
    std::vector<double> d;
    if (!d_field.empty() && d_field.front().is_array()) {
        if (d_field.size() != m) throw std::invalid_argument("'D' must have M rows");
        for (const auto& row : d_field) {
            if (!row.is_array() || row.size() != m) throw std::invalid_argument("'D' rows must have M entries");
            for (const auto& v : row) d.push_back(read_number(v, "D"));
        }
    } else {
        for (const auto& v : d_field) d.push_back(read_number(v, "D"));
    }
    if (d.size() != m * m) throw std::invalid_argument("'D' must hold M*M entries");
    p.distances = Matrix(m, m, std::move(d));

    const auto& t_field = require(doc, "t");
    if (!t_field.is_array()) throw std::invalid_argument("'t' must be an array");
    for (const auto& v : t_field) p.times.push_back(read_number(v, "t"));

    if (auto it = doc.find("slowness_true"); it != doc.end() && !it->is_null()) {
        if (!it->is_array()) throw std::invalid_argument("'slowness_true' must be an array");
        Slowness s;
        for (const auto& v : *it) {
            if (!v.is_number_integer()) throw std::invalid_argument("'slowness_true' must hold integers");
            s.push_back(v.get<std::int64_t>());
        }
        p.slowness_true = std::move(s);
    }
    if (auto it = doc.find("seed"); it != doc.end() && !it->is_null()) {
        if (!it->is_number_unsigned()) throw std::invalid_argument("'seed' must be a nonnegative integer");
        p.seed = it->get<std::uint64_t>();
    }
    p.validate();
    return p;
}

LayeredProblem load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed problem file " + path.string() + ": " + e.what());
    }
    return problem_from_json(doc);
}

void save_problem(const std::filesystem::path& path, const LayeredProblem& problem) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write problem file " + path.string());
    out << to_json(problem).dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace evoqsi::problem
