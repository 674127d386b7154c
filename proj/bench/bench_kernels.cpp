// Serial reference kernels vs the OpenMP kernels, plus one full offspring
// evaluation on an 18-qubit (M=6, R=3) instance.

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "evoqsi/evolve.hpp"
#include "evoqsi/kernels.hpp"
#include "evoqsi/random.hpp"
#include "evoqsi/statevector.hpp"

namespace {

using namespace evoqsi;
using circuit::Gate;
using circuit::kernels::Amplitude;
using circuit::kernels::Backend;

std::vector<Amplitude> random_state(int n) {
    Rng rng(42);
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (auto& a : amps) a = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    return amps;
}

template <Backend B>
void BM_Rotation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = random_state(n);
    const Gate g = Gate::ry(n / 2, 0.3);
    for (auto _ : state) {
        circuit::kernels::apply_gate(amps, g, B);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <Backend B>
void BM_ControlledRotation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = random_state(n);
    const Gate g = Gate::crx(0, n - 1, 0.3);
    for (auto _ : state) {
        circuit::kernels::apply_gate(amps, g, B);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

void BM_ExpectationSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = random_state(n);
    std::vector<double> energies(amps.size(), 1.5);
    for (auto _ : state) benchmark::DoNotOptimize(circuit::kernels::serial::expectation(amps, energies));
}

void BM_ExpectationParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = random_state(n);
    std::vector<double> energies(amps.size(), 1.5);
    for (auto _ : state) benchmark::DoNotOptimize(circuit::kernels::parallel::expectation(amps, energies));
}

// One offspring evaluation on the 18-qubit (6 layers x 3 bits) instance with a
// depth-40 circuit.
void BM_Evaluate18(benchmark::State& state) {
    const auto h = problem::make_hamiltonian(problem::synth_instance(6, 3, 1));
    Rng rng(7);
    circuit::Circuit c(18);
    for (int i = 0; i < 40; ++i) c = evolve::mutate_insert(std::move(c), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve::evaluate(c, h.observable, {}));
    }
}

}  // namespace

BENCHMARK(BM_Rotation<Backend::Serial>)->DenseRange(10, 22, 4);
BENCHMARK(BM_Rotation<Backend::Parallel>)->DenseRange(10, 22, 4);
BENCHMARK(BM_ControlledRotation<Backend::Serial>)->DenseRange(10, 22, 4);
BENCHMARK(BM_ControlledRotation<Backend::Parallel>)->DenseRange(10, 22, 4);
BENCHMARK(BM_ExpectationSerial)->DenseRange(10, 22, 4);
BENCHMARK(BM_ExpectationParallel)->DenseRange(10, 22, 4);
BENCHMARK(BM_Evaluate18)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
