#include "evoqsi/statevector.hpp"

#include <algorithm>
#include <stdexcept>

#include "evoqsi/random.hpp"

namespace evoqsi::circuit {

Statevector::Statevector(int nqubits) : nqubits_(nqubits) {
    if (nqubits < 1 || nqubits > kMaxQubits) {
        throw std::invalid_argument("statevector qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
    amps_.assign(std::size_t{1} << nqubits, kernels::Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

void Statevector::apply(const Gate& gate, kernels::Backend backend) {
    validate(gate, nqubits_);
    kernels::apply_gate(amps_, gate, backend);
}

void Statevector::apply(const Circuit& circuit, kernels::Backend backend) {
    if (circuit.nqubits() != nqubits_) {
        throw std::invalid_argument("circuit acts on " + std::to_string(circuit.nqubits()) +
                                    " qubits, state has " + std::to_string(nqubits_));
    }
    // gates were validated on insertion into the circuit
    for (const Gate& g : circuit.gates()) kernels::apply_gate(amps_, g, backend);
}

double Statevector::norm_squared() const { return kernels::parallel::norm_squared(amps_); }

DiagonalObservable::DiagonalObservable(int nqubits, std::vector<double> energies)
    : nqubits_(nqubits), energies_(std::move(energies)) {
    if (nqubits < 1 || nqubits > kMaxQubits) {
        throw std::invalid_argument("observable qubit count out of range");
    }
    if (energies_.size() != (std::size_t{1} << nqubits)) {
        throw std::invalid_argument("observable needs 2^n energies");
    }
}

DiagonalObservable DiagonalObservable::from_function(
    int nqubits, const std::function<double(BasisIndex)>& energy) {
    if (nqubits < 1 || nqubits > kMaxQubits) {
        throw std::invalid_argument("observable qubit count out of range");
    }
    std::vector<double> table(std::size_t{1} << nqubits);
    for (BasisIndex x = 0; x < table.size(); ++x) table[x] = energy(x);
    return {nqubits, std::move(table)};
}

DiagonalObservable operator+(const DiagonalObservable& a, const DiagonalObservable& b) {
    if (a.nqubits_ != b.nqubits_) throw std::invalid_argument("observable sizes differ");
    std::vector<double> sum(a.energies_.size());
    for (std::size_t x = 0; x < sum.size(); ++x) sum[x] = a.energies_[x] + b.energies_[x];
    return {a.nqubits_, std::move(sum)};
}

DiagonalObservable operator*(double scale, const DiagonalObservable& h) {
    std::vector<double> scaled(h.energies_);
    for (double& e : scaled) e *= scale;
    return {h.nqubits_, std::move(scaled)};
}

Statevector apply_gate(Statevector state, const Gate& gate) {
    state.apply(gate);
    return state;
}

Statevector run_circuit(const Circuit& circuit, kernels::Backend backend) {
    Statevector state(circuit.nqubits());
    state.apply(circuit, backend);
    return state;
}

std::vector<double> probabilities(const Statevector& state) {
    const auto amps = state.amplitudes();
    std::vector<double> p(amps.size());
    std::transform(amps.begin(), amps.end(), p.begin(),
                   [](const kernels::Amplitude& a) { return std::norm(a); });
    return p;
}

double expectation_exact(const Statevector& state, const DiagonalObservable& obs) {
    if (obs.nqubits() != state.nqubits()) {
        throw std::invalid_argument("observable acts on " + std::to_string(obs.nqubits()) +
                                    " qubits, state has " + std::to_string(state.nqubits()));
    }
    return kernels::parallel::expectation(state.amplitudes(), obs.energies());
}

std::vector<std::uint64_t> sample_counts(const Statevector& state, std::uint64_t shots,
                                         std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("shot count must be positive");
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double running = 0.0;
    for (std::size_t x = 0; x < amps.size(); ++x) {
        running += std::norm(amps[x]);
        cdf[x] = running;
    }
    std::vector<std::uint64_t> counts(amps.size(), 0);
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) --it;
        ++counts[static_cast<std::size_t>(it - cdf.begin())];
    }
    return counts;
}

double expectation_sampled(const Statevector& state, const DiagonalObservable& obs,
                           std::uint64_t shots, std::uint64_t seed) {
    if (obs.nqubits() != state.nqubits()) {
        throw std::invalid_argument("observable and state sizes differ");
    }
    const auto counts = sample_counts(state, shots, seed);
    double sum = 0.0;
    for (std::size_t x = 0; x < counts.size(); ++x) {
        if (counts[x] != 0) sum += static_cast<double>(counts[x]) * obs.energy(x);
    }
    return sum / static_cast<double>(shots);
}

BasisIndex argmax_bitstring(const Statevector& state) {
    const auto amps = state.amplitudes();
    BasisIndex best = 0;
    double best_p = std::norm(amps[0]);
    for (std::size_t x = 1; x < amps.size(); ++x) {
        const double p = std::norm(amps[x]);
        if (p > best_p) {
            best_p = p;
            best = x;
        }
    }
    return best;
}

std::vector<std::uint8_t> bits_of(BasisIndex x, int nbits) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(nbits));
    for (int q = 0; q < nbits; ++q) bits[static_cast<std::size_t>(q)] = (x >> q) & 1U;
    return bits;
}

BasisIndex index_of(std::span<const std::uint8_t> bits) {
    if (bits.size() > 64) throw std::invalid_argument("bitstring longer than 64 bits");
    BasisIndex x = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] > 1) throw std::invalid_argument("bitstring entries must be 0 or 1");
        x |= BasisIndex{bits[q]} << q;
    }
    return x;
}

}  // namespace evoqsi::circuit
