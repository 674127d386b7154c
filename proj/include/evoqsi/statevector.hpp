#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "evoqsi/circuit.hpp"
#include "evoqsi/kernels.hpp"

namespace evoqsi::circuit {

/// Computational-basis label. Bit q of the label is the value of qubit q
/// (qubit 0 is the least-significant bit).
using BasisIndex = std::uint64_t;

/// Dense 2^n amplitude vector, initialised to |0...0>.
class Statevector {
public:
    explicit Statevector(int nqubits);

    int nqubits() const noexcept { return nqubits_; }
    std::uint64_t dimension() const noexcept { return amps_.size(); }

    std::span<const kernels::Amplitude> amplitudes() const noexcept { return amps_; }
    std::span<kernels::Amplitude> amplitudes() noexcept { return amps_; }

    /// Applies `gate` in place. Throws if the gate is invalid for this register.
    void apply(const Gate& gate, kernels::Backend backend = kernels::Backend::Parallel);
    void apply(const Circuit& circuit, kernels::Backend backend = kernels::Backend::Parallel);

    double norm_squared() const;

private:
    int nqubits_;
    std::vector<kernels::Amplitude> amps_;
};

/// Diagonal cost Hamiltonian H = sum_x E_x |x><x|, stored as the full energy
/// table indexed by BasisIndex.
class DiagonalObservable {
public:
    DiagonalObservable(int nqubits, std::vector<double> energies);

    /// Tabulates `energy` over every basis label.
    static DiagonalObservable from_function(int nqubits,
                                            const std::function<double(BasisIndex)>& energy);

    int nqubits() const noexcept { return nqubits_; }
    double energy(BasisIndex x) const { return energies_.at(x); }
    std::span<const double> energies() const noexcept { return energies_; }

    friend DiagonalObservable operator+(const DiagonalObservable& a, const DiagonalObservable& b);
    friend DiagonalObservable operator*(double scale, const DiagonalObservable& h);

private:
    int nqubits_;
    std::vector<double> energies_;
};

Statevector apply_gate(Statevector state, const Gate& gate);

/// U|0...0> for the gates of `circuit` applied in order.
Statevector run_circuit(const Circuit& circuit,
                        kernels::Backend backend = kernels::Backend::Parallel);

/// p_x = |amp_x|^2, indexed by BasisIndex.
std::vector<double> probabilities(const Statevector& state);

/// sum_x p_x E_x over all 2^n basis states.
double expectation_exact(const Statevector& state, const DiagonalObservable& obs);

/// Histogram of `shots` computational-basis measurements, indexed by BasisIndex.
/// Deterministic for a fixed seed.
std::vector<std::uint64_t> sample_counts(const Statevector& state, std::uint64_t shots,
                                         std::uint64_t seed);

/// Empirical mean of E_x over `shots` sampled outcomes. Throws on shots == 0.
double expectation_sampled(const Statevector& state, const DiagonalObservable& obs,
                           std::uint64_t shots, std::uint64_t seed);

/// Most probable basis label; ties go to the smallest label.
BasisIndex argmax_bitstring(const Statevector& state);

/// Bit q of `x` as element q.
std::vector<std::uint8_t> bits_of(BasisIndex x, int nbits);
BasisIndex index_of(std::span<const std::uint8_t> bits);

}  // namespace evoqsi::circuit
