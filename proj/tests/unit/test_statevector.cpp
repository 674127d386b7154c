#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "evoqsi/statevector.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace evoqsi {
namespace {

using circuit::Circuit;
using circuit::DiagonalObservable;
using circuit::Gate;
using circuit::Statevector;
using std::numbers::pi;

void expect_state(const Statevector& s, const std::vector<testing::Complex>& want, double tol) {
    ASSERT_EQ(s.dimension(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_NEAR(s.amplitudes()[i].real(), want[i].real(), tol) << "index " << i;
        EXPECT_NEAR(s.amplitudes()[i].imag(), want[i].imag(), tol) << "index " << i;
    }
}

TEST(Gate, Validation) {
    EXPECT_THROW(circuit::validate(Gate::rx(3, 0.1), 3), std::out_of_range);
    EXPECT_THROW(circuit::validate(Gate::rx(-1, 0.1), 3), std::out_of_range);
    EXPECT_THROW(circuit::validate(Gate::crx(1, 1, 0.1), 3), std::invalid_argument);
    EXPECT_THROW(circuit::validate(Gate::cry(5, 1, 0.1), 3), std::out_of_range);
    EXPECT_THROW(circuit::validate(Gate::rz(0, std::nan("")), 3), std::invalid_argument);
    Gate missing{circuit::GateKind::CRz, 0, std::nullopt, 0.0};
    EXPECT_THROW(circuit::validate(missing, 2), std::invalid_argument);
    EXPECT_NO_THROW(circuit::validate(Gate::crz(2, 0, 1.0), 3));
}

TEST(Circuit, EditOperations) {
    Circuit c(2);
    c.append(Gate::rx(0, 1));
    c.insert(0, Gate::ry(1, 2));
    c.append(Gate::crz(0, 1, 3));
    ASSERT_EQ(c.depth(), 3u);
    EXPECT_EQ(c[0], Gate::ry(1, 2));
    c.erase(1);
    EXPECT_EQ(c[1], Gate::crz(0, 1, 3));
    c.replace(0, Gate::rz(0, 4));
    EXPECT_EQ(c[0], Gate::rz(0, 4));
    EXPECT_THROW(c.insert(5, Gate::rx(0, 1)), std::out_of_range);
    EXPECT_THROW(c.erase(2), std::out_of_range);
    EXPECT_THROW(c.append(Gate::rx(2, 1)), std::out_of_range);
    EXPECT_THROW(Circuit(0), std::invalid_argument);
}

TEST(ApplyGate, IdentityRotation) {
    const Statevector s = circuit::apply_gate(Statevector(1), Gate::rx(0, 0.0));
    expect_state(s, {1.0, 0.0}, 0.0);
}

TEST(ApplyGate, RyPiFlips) {
    const Statevector s = circuit::apply_gate(Statevector(1), Gate::ry(0, pi));
    expect_state(s, {0.0, 1.0}, 1e-15);
}

TEST(ApplyGate, ControlledRxOnControlSet) {
    // |01> (qubit 0 set) is index 1
    Statevector s(2);
    s.apply(Gate::rx(0, pi));
    const Gate g = Gate::crx(0, 1, pi);
    std::vector<testing::Complex> v(s.amplitudes().begin(), s.amplitudes().end());
    const auto want = testing::matvec(testing::dense_unitary(g, 2), v);
    s.apply(g);
    expect_state(s, want, 1e-15);
    EXPECT_NEAR(std::norm(s.amplitudes()[3]), 1.0, 1e-15);
}

TEST(ApplyGate, ControlledGateIgnoresUnsetControl) {
    Statevector s(2);
    s.apply(Gate::crx(0, 1, 1.234));
    expect_state(s, {1.0, 0.0, 0.0, 0.0}, 0.0);
}

TEST(ApplyGate, RejectsForeignQubit) {
    Statevector s(2);
    EXPECT_THROW(s.apply(Gate::rx(2, 1.0)), std::out_of_range);
    EXPECT_THROW(s.apply(Circuit(3)), std::invalid_argument);
}

TEST(RunCircuit, EmptyCircuitIsGroundState) {
    const Statevector s = circuit::run_circuit(Circuit(3));
    expect_state(s, {1, 0, 0, 0, 0, 0, 0, 0}, 0.0);
}

TEST(RunCircuit, UniformSuperposition) {
    Circuit c(2);
    c.append(Gate::ry(0, pi / 2));
    c.append(Gate::ry(1, pi / 2));
    const auto p = circuit::probabilities(circuit::run_circuit(c));
    for (double x : p) EXPECT_NEAR(x, 0.25, 1e-15);
}

TEST(RunCircuit, MatchesDenseOracle) {
    Rng rng(21);
    for (int n = 1; n <= 5; ++n) {
        const Circuit c = testing::random_circuit(n, 30, rng);
        std::vector<testing::Complex> v(std::size_t{1} << n, 0.0);
        v[0] = 1.0;
        for (const Gate& g : c.gates()) v = testing::matvec(testing::dense_unitary(g, n), v);
        expect_state(circuit::run_circuit(c), v, 1e-12);
    }
}

TEST(RunCircuit, NormAndInverseProperties) {
    Rng rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(14));
        const Circuit c = testing::random_circuit(n, 1 + rng.below(120), rng);
        Statevector s = testing::random_state(n, 5, rng);
        const Statevector input = s;
        s.apply(c);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
        for (std::size_t i = c.depth(); i-- > 0;) s.apply(testing::inverse(c[i]));
        for (std::size_t i = 0; i < s.dimension(); ++i) {
            ASSERT_NEAR(std::abs(s.amplitudes()[i] - input.amplitudes()[i]), 0.0, 1e-10);
        }
    }
}

TEST(Expectation, UniformStateAverage) {
    Circuit c(2);
    c.append(Gate::ry(0, pi / 2));
    c.append(Gate::ry(1, pi / 2));
    const DiagonalObservable h(2, {0, 1, 2, 3});
    EXPECT_NEAR(circuit::expectation_exact(circuit::run_circuit(c), h), 1.5, 1e-15);
}

TEST(Expectation, MatchesEnumeration) {
    Rng rng(4);
    for (int n = 1; n <= 10; ++n) {
        const Statevector s = testing::random_state(n, 20, rng);
        const DiagonalObservable h = testing::random_observable(n, rng);
        const double want =
            testing::enumerate_expectation(s.amplitudes(), [&](std::uint64_t x) { return h.energy(x); });
        EXPECT_NEAR(circuit::expectation_exact(s, h), want, 1e-9);
    }
}

TEST(Expectation, SizeMismatchThrows) {
    EXPECT_THROW(circuit::expectation_exact(Statevector(2), DiagonalObservable(3, std::vector<double>(8))),
                 std::invalid_argument);
}

TEST(Observable, Arithmetic) {
    const DiagonalObservable a(1, {1, 2});
    const DiagonalObservable b = DiagonalObservable::from_function(1, [](auto x) { return 10.0 * x; });
    const DiagonalObservable c = a + 2.0 * b;
    EXPECT_EQ(c.energy(0), 1.0);
    EXPECT_EQ(c.energy(1), 22.0);
    EXPECT_THROW(DiagonalObservable(2, {1, 2, 3}), std::invalid_argument);
}

TEST(Sampling, GroundStateIsExact) {
    const DiagonalObservable h(2, {3.5, 1, 2, 7});
    EXPECT_EQ(circuit::expectation_sampled(Statevector(2), h, 1000, 1), 3.5);
}

TEST(Sampling, Deterministic) {
    Rng rng(1);
    const Statevector s = testing::random_state(4, 10, rng);
    EXPECT_EQ(circuit::sample_counts(s, 5000, 42), circuit::sample_counts(s, 5000, 42));
    EXPECT_NE(circuit::sample_counts(s, 5000, 42), circuit::sample_counts(s, 5000, 43));
    std::uint64_t total = 0;
    for (auto k : circuit::sample_counts(s, 5000, 42)) total += k;
    EXPECT_EQ(total, 5000u);
    EXPECT_THROW(circuit::sample_counts(s, 0, 1), std::invalid_argument);
}

TEST(Sampling, WithinThreeStandardErrors) {
    Rng rng(17);
    const int n = 5;
    const Statevector s = testing::random_state(n, 15, rng);
    const DiagonalObservable h = testing::random_observable(n, rng);
    const auto p = circuit::probabilities(s);
    double mean = 0, second = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
        mean += p[x] * h.energy(x);
        second += p[x] * h.energy(x) * h.energy(x);
    }
    const std::uint64_t shots = 100000;
    const double se = std::sqrt((second - mean * mean) / shots);
    EXPECT_NEAR(circuit::expectation_sampled(s, h, shots, 9), mean, 3 * se);
}

TEST(Argmax, FirstMaximumWins) {
    // equal weight on basis states 2 and 5
    Statevector s(3);
    auto a = s.amplitudes();
    a[0] = 0.0;
    a[2] = std::sqrt(0.5);
    a[5] = std::sqrt(0.5);
    EXPECT_EQ(circuit::argmax_bitstring(s), 2u);
}

TEST(Bits, RoundTrip) {
    const auto b = circuit::bits_of(6, 4);
    EXPECT_EQ(b, (std::vector<std::uint8_t>{0, 1, 1, 0}));
    EXPECT_EQ(circuit::index_of(b), 6u);
    const std::vector<std::uint8_t> bad{0, 2};
    EXPECT_THROW(circuit::index_of(bad), std::invalid_argument);
}

}  // namespace
}  // namespace evoqsi
