#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "evoqsi/problem.hpp"
#include "evoqsi/problem_json.hpp"
#include "evoqsi/random.hpp"
#include "instances.hpp"
#include "oracles.hpp"

namespace evoqsi {
namespace {

using problem::LayeredProblem;
using problem::Matrix;

TEST(ForwardTimes, UpperTriangularExample) {
    const Matrix d(2, 2, {1, 2, 0, 3});
    const std::vector<double> s{2, 1};
    EXPECT_EQ(problem::forward_times(d, s), (std::vector<double>{4, 3}));
}

TEST(ForwardTimes, LengthMismatch) {
    const Matrix d(2, 2, {1, 2, 0, 3});
    const std::vector<double> s{2};
    EXPECT_THROW(problem::forward_times(d, s), std::invalid_argument);
}

TEST(Objective, ToyValues) {
    const LayeredProblem p = testing::toy_problem();
    const std::vector<std::int64_t> s1{1};
    const std::vector<std::int64_t> s3{3};
    const std::vector<double> half{2.5};
    EXPECT_EQ(problem::objective(p, s1), 16.0);
    EXPECT_EQ(problem::objective(p, s3), 0.0);
    EXPECT_EQ(problem::objective(p, half), 1.0);
}

TEST(Encoding, Examples) {
    const std::vector<std::int64_t> five{5};
    EXPECT_EQ(problem::encode_slowness(five, 3), (problem::Bitstring{1, 0, 1}));
    const std::vector<std::int64_t> pair{0, 7};
    EXPECT_EQ(problem::encode_slowness(pair, 3), (problem::Bitstring{0, 0, 0, 1, 1, 1}));
    const std::vector<std::int64_t> big{8};
    EXPECT_THROW(problem::encode_slowness(big, 3), std::out_of_range);
    const std::vector<std::int64_t> neg{-1};
    EXPECT_THROW(problem::encode_slowness(neg, 3), std::out_of_range);
}

TEST(Encoding, ExhaustiveRoundTrip) {
    for (std::int64_t a = 0; a < 8; ++a)
        for (std::int64_t b = 0; b < 8; ++b)
            for (std::int64_t c = 0; c < 8; ++c) {
                const std::vector<std::int64_t> s{a, b, c};
                const auto x = problem::encode_slowness(s, 3);
                ASSERT_EQ(x.size(), 9u);
                EXPECT_EQ(problem::decode_slowness(x, 3), problem::Slowness(s.begin(), s.end()));
            }
}

TEST(Encoding, DecodeRejectsBadLength) {
    const problem::Bitstring x{1, 0, 1, 1};
    EXPECT_THROW(problem::decode_slowness(x, 3), std::invalid_argument);
}

TEST(Validate, AcceptsToyAndSynth) {
    EXPECT_NO_THROW(testing::toy_problem().validate());
    for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_NO_THROW(problem::synth_instance(4, 3, seed).validate());
}

TEST(Validate, RejectsMalformed) {
    auto lower = problem::synth_instance(3, 3, 1);
    lower.distances(2, 0) = 1.0;
    EXPECT_THROW(lower.validate(), std::invalid_argument);

    auto negative = problem::synth_instance(3, 3, 1);
    negative.distances(0, 1) = -1.0;
    EXPECT_THROW(negative.validate(), std::invalid_argument);

    auto empty_row = testing::toy_problem();
    empty_row.distances(0, 0) = 0.0;
    empty_row.slowness_true.reset();
    EXPECT_THROW(empty_row.validate(), std::invalid_argument);

    auto wide = testing::toy_problem();
    wide.slowness_true = problem::Slowness{4};
    wide.times = {8};
    EXPECT_THROW(wide.validate(), std::invalid_argument);

    auto inconsistent = testing::toy_problem();
    inconsistent.times = {7};
    EXPECT_THROW(inconsistent.validate(), std::invalid_argument);

    auto bits = testing::toy_problem();
    bits.bits = 0;
    EXPECT_THROW(bits.validate(), std::invalid_argument);
}

TEST(Synth, ShapeAndConsistency) {
    for (auto [m, r] : {std::pair{3, 3}, std::pair{4, 3}, std::pair{6, 3}}) {
        const LayeredProblem p = problem::synth_instance(m, r, 7);
        EXPECT_EQ(p.nqubits(), m * r);
        ASSERT_TRUE(p.slowness_true);
        EXPECT_EQ(problem::objective(p, std::span<const std::int64_t>(*p.slowness_true)), 0.0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const double d = p.distances(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                if (j < i) EXPECT_EQ(d, 0.0);
                else EXPECT_EQ(d, std::round(d));
            }
    }
}

TEST(Synth, Deterministic) {
    const LayeredProblem a = problem::synth_instance(4, 3, 11);
    const LayeredProblem b = problem::synth_instance(4, 3, 11);
    EXPECT_EQ(a.distances, b.distances);
    EXPECT_EQ(a.times, b.times);
    EXPECT_EQ(a.slowness_true, b.slowness_true);
    EXPECT_NE(problem::synth_instance(4, 3, 12).distances, a.distances);
}

TEST(StraightRay, DiagonalThroughThreeLayers) {
    const std::vector<double> h{1, 1, 1};
    const auto d = problem::straight_ray_distances(h, 0.0, 3.0, 4.0);
    const auto want = testing::segment_layer_lengths(h, 0.0, 3.0, 4.0);
    ASSERT_EQ(d.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(d[i], 5.0 / 3.0, 1e-12);
        EXPECT_NEAR(d[i], want[i], 1e-12);
    }
}

TEST(StraightRay, MatchesSegmentOracle) {
    Rng rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng.below(6);
        std::vector<double> h(m);
        double total = 0;
        for (double& x : h) total += (x = rng.uniform(0.1, 3.0));
        const double z0 = rng.uniform(0, total), z1 = rng.uniform(0, total);
        const double offset = rng.uniform(0, 10);
        const auto d = problem::straight_ray_distances(h, z0, z1, offset);
        const auto want = testing::segment_layer_lengths(h, z0, z1, offset);
        double sum = 0;
        for (std::size_t i = 0; i < m; ++i) {
            EXPECT_NEAR(d[i], want[i], 1e-9);
            EXPECT_GE(d[i], 0.0);
            sum += d[i];
        }
        EXPECT_NEAR(sum, std::hypot(offset, z1 - z0), 1e-9);
    }
}

TEST(StraightRay, HorizontalRayStaysInLayer) {
    const std::vector<double> h{1, 2, 1};
    EXPECT_EQ(problem::straight_ray_distances(h, 1.5, 1.5, 7.0), (std::vector<double>{0, 7, 0}));
    EXPECT_EQ(problem::straight_ray_distances(h, 4.0, 4.0, 2.0), (std::vector<double>{0, 0, 2}));
}

TEST(StraightRay, Errors) {
    const std::vector<double> h{1, 1};
    EXPECT_THROW(problem::straight_ray_distances(h, -0.1, 1.0, 1.0), std::out_of_range);
    EXPECT_THROW(problem::straight_ray_distances(h, 0.0, 2.5, 1.0), std::out_of_range);
    const std::vector<double> bad{1, 0};
    EXPECT_THROW(problem::straight_ray_distances(bad, 0.0, 0.5, 1.0), std::invalid_argument);
}

TEST(ProblemJson, RoundTrip) {
    const LayeredProblem p = problem::synth_instance(4, 3, 5);
    const nlohmann::json doc = problem::to_json(p);
    EXPECT_EQ(doc.at("M"), 4);
    EXPECT_EQ(doc.at("R"), 3);
    EXPECT_EQ(doc.at("D").size(), 16u);
    const LayeredProblem q = problem::problem_from_json(doc);
    EXPECT_EQ(q.distances, p.distances);
    EXPECT_EQ(q.times, p.times);
    EXPECT_EQ(q.slowness_true, p.slowness_true);
    EXPECT_EQ(q.seed, p.seed);
    EXPECT_EQ(problem::to_json(q).dump(), doc.dump());
}

TEST(ProblemJson, NestedRowsAccepted) {
    const auto doc = nlohmann::json::parse(R"({"M":2,"R":2,"D":[[1,2],[0,3]],"t":[4,3]})");
    const LayeredProblem p = problem::problem_from_json(doc);
    EXPECT_EQ(p.distances(0, 1), 2.0);
    EXPECT_FALSE(p.slowness_true);
    EXPECT_FALSE(p.seed);
}

TEST(ProblemJson, FileRoundTripAndErrors) {
    const auto dir = std::filesystem::temp_directory_path() / "evoqsi_problem_json_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "p.json";
    problem::save_problem(path, testing::toy_problem());
    const LayeredProblem p = problem::load_problem(path);
    EXPECT_EQ(p.times, (std::vector<double>{6}));

    EXPECT_THROW(problem::load_problem(dir / "missing.json"), std::runtime_error);
    std::ofstream(dir / "bad.json") << "{ not json";
    EXPECT_THROW(problem::load_problem(dir / "bad.json"), std::invalid_argument);

    for (const char* text : {R"({"R":2,"D":[2],"t":[6]})", R"({"M":1,"R":2,"D":[2,1],"t":[6]})",
                             R"({"M":1,"R":2,"D":[2],"t":[6],"slowness_true":[2]})",
                             R"({"M":1,"R":2,"D":["x"],"t":[6]})", R"([1,2])"}) {
        EXPECT_THROW(problem::problem_from_json(nlohmann::json::parse(text)), std::invalid_argument) << text;
    }
    std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace evoqsi
