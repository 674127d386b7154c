#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "evoqsi/qubo.hpp"
#include "evoqsi/statevector.hpp"
#include "instances.hpp"
#include "oracles.hpp"

namespace evoqsi {
namespace {

using problem::LayeredProblem;

std::vector<std::int8_t> spins_of(std::uint64_t x, int n) {
    std::vector<std::int8_t> z(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) z[static_cast<std::size_t>(a)] = ((x >> a) & 1U) ? -1 : 1;
    return z;
}

TEST(Qubo, ToyEnergies) {
    const problem::Qubo q = problem::build_qubo(testing::toy_problem());
    ASSERT_EQ(q.n, 2);
    // bit lists are x0 x1
    const problem::Bitstring b11{1, 1}, b00{0, 0}, b10{1, 0}, b01{0, 1};
    EXPECT_EQ(q.energy(b11), 0.0);
    EXPECT_EQ(q.energy(b00), 36.0);
    EXPECT_EQ(q.energy(b10), 16.0);
    EXPECT_EQ(q.energy(b01), 4.0);
}

TEST(Qubo, SymmetricWithOffset) {
    const LayeredProblem p = problem::synth_instance(3, 3, 2);
    const problem::Qubo q = problem::build_qubo(p);
    for (int a = 0; a < q.n; ++a)
        for (int b = 0; b < q.n; ++b) EXPECT_EQ(q.coefficient(a, b), q.coefficient(b, a));
    double tt = 0;
    for (double t : p.times) tt += t * t;
    EXPECT_EQ(q.offset, tt);
    EXPECT_EQ(q.energy(circuit::BasisIndex{0}), tt);
}

TEST(Qubo, OracleEquivalenceAcrossShapes) {
    for (auto [m, r] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 2}, std::pair{2, 5}}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const LayeredProblem p = problem::synth_instance(m, r, seed);
            const problem::Qubo q = problem::build_qubo(p);
            for (std::uint64_t x = 0; x < (1ULL << (m * r)); ++x) {
                const double e = q.energy(x);
                ASSERT_EQ(e, static_cast<double>(testing::integer_objective(p, x)))
                    << "M=" << m << " R=" << r << " x=" << x;
                ASSERT_EQ(e, q.energy(circuit::bits_of(x, m * r)));
            }
        }
    }
}

TEST(Qubo, GroundStateIsReferenceEncoding) {
    const LayeredProblem p = problem::synth_instance(3, 3, 4);
    const problem::Qubo q = problem::build_qubo(p);
    const auto ref = problem::encode_slowness(*p.slowness_true, 3);
    EXPECT_EQ(q.energy(ref), 0.0);
    for (std::uint64_t x = 0; x < 512; ++x) EXPECT_GE(q.energy(x), 0.0);
}

TEST(Ising, PreservesEnergies) {
    for (auto [m, r] : {std::pair{1, 2}, std::pair{3, 3}, std::pair{4, 3}, std::pair{2, 6}}) {
        const problem::Qubo q = problem::build_qubo(problem::synth_instance(m, r, 9));
        const problem::IsingModel ising = problem::qubo_to_ising(q);
        ASSERT_EQ(ising.n, q.n);
        for (int a = 0; a < q.n; ++a) {
            EXPECT_EQ(ising.coupling(a, a), 0.0);
            for (int b = 0; b < q.n; ++b) EXPECT_EQ(ising.coupling(a, b), ising.coupling(b, a));
        }
        for (std::uint64_t x = 0; x < (1ULL << q.n); ++x) {
            const double e = q.energy(x);
            ASSERT_NEAR(ising.energy(spins_of(x, q.n)), e, 1e-9 * std::max(1.0, std::abs(e)));
        }
    }
}

TEST(Ising, RejectsWrongLength) {
    const problem::IsingModel ising = problem::qubo_to_ising(problem::build_qubo(testing::toy_problem()));
    const std::vector<std::int8_t> z{1, 1, 1};
    EXPECT_THROW(ising.energy(z), std::invalid_argument);
}

TEST(Hamiltonian, QubitCounts) {
    EXPECT_EQ(problem::make_hamiltonian(problem::synth_instance(3, 3, 1)).nqubits(), 9);
    EXPECT_EQ(problem::make_hamiltonian(problem::synth_instance(4, 3, 1)).nqubits(), 12);
    EXPECT_EQ(problem::make_hamiltonian(problem::synth_instance(6, 3, 1)).nqubits(), 18);
}

TEST(Hamiltonian, ObservableTabulatesQubo) {
    const LayeredProblem p = problem::synth_instance(3, 3, 3);
    const problem::CostHamiltonian h = problem::make_hamiltonian(p);
    for (std::uint64_t x = 0; x < 512; ++x) {
        EXPECT_EQ(h.observable.energy(x), static_cast<double>(testing::integer_objective(p, x)));
        const auto s = h.decode(x);
        EXPECT_EQ(problem::encode_slowness(s, 3), circuit::bits_of(x, 9));
    }
}

}  // namespace
}  // namespace evoqsi
