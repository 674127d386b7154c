#pragma once

// Problem instance document:
//   {"M": 3, "R": 3, "D": [row-major M*M numbers], "t": [M numbers],
//    "slowness_true": [M integers] (optional), "seed": integer or null}

#include <filesystem>

#include "json.hpp"

#include "evoqsi/problem.hpp"

namespace evoqsi::problem {

nlohmann::json to_json(const LayeredProblem& problem);

/// Parses and validates. Also accepts D as a list of M rows.
LayeredProblem problem_from_json(const nlohmann::json& doc);

LayeredProblem load_problem(const std::filesystem::path& path);
void save_problem(const std::filesystem::path& path, const LayeredProblem& problem);

}  // namespace evoqsi::problem
