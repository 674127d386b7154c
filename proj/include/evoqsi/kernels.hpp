#pragma once

// Statevector kernels.
//
// Two implementations share one contract:
//   serial::   plain loops, the reference the tests compare against
//   parallel:: OpenMP work-sharing over amplitude pairs / fixed blocks
//
// Gate kernels update each amplitude pair with the same arithmetic in both
// versions, so their outputs are bitwise identical. Reductions in parallel::
// sum fixed-size blocks and then combine the block sums in index order, which
// makes them independent of the thread count (but not bitwise equal to the
// serial running sum).

#include <complex>
#include <cstdint>
#include <span>

#include "evoqsi/circuit.hpp"

namespace evoqsi::circuit::kernels {

using Amplitude = std::complex<double>;

/// Row-major 2x2 unitary acting on one target qubit.
struct Matrix2 {
    Amplitude m00, m01, m10, m11;
    bool diagonal = false;
};

/// exp(-i theta a / 2) for the rotation axis of `kind` (controls ignored).
Matrix2 rotation_matrix(GateKind kind, double theta);

/// Amplitude blocks reduced independently by the parallel reductions.
inline constexpr std::uint64_t kReductionBlock = 1ULL << 12;

/// Below this many amplitudes the parallel kernels stay on one thread.
inline constexpr std::uint64_t kParallelThreshold = 1ULL << 12;

namespace detail {

/// Inserts a zero bit at position `bit` of `k`.
constexpr std::uint64_t insert_zero(std::uint64_t k, int bit) noexcept {
    const std::uint64_t low = k & ((1ULL << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

// Complex products are spelled out in real arithmetic: std::complex
// multiplication carries NaN/inf recovery branches that block vectorisation.
inline void apply_pair(Amplitude& a0, Amplitude& a1, const Matrix2& m) noexcept {
    const double r0 = a0.real(), i0 = a0.imag();
    const double r1 = a1.real(), i1 = a1.imag();
    a0 = {m.m00.real() * r0 - m.m00.imag() * i0 + m.m01.real() * r1 - m.m01.imag() * i1,
          m.m00.real() * i0 + m.m00.imag() * r0 + m.m01.real() * i1 + m.m01.imag() * r1};
    a1 = {m.m10.real() * r0 - m.m10.imag() * i0 + m.m11.real() * r1 - m.m11.imag() * i1,
          m.m10.real() * i0 + m.m10.imag() * r0 + m.m11.real() * i1 + m.m11.imag() * r1};
}

inline void apply_diagonal(Amplitude& a0, Amplitude& a1, const Matrix2& m) noexcept {
    const double r0 = a0.real(), i0 = a0.imag();
    const double r1 = a1.real(), i1 = a1.imag();
    a0 = {m.m00.real() * r0 - m.m00.imag() * i0, m.m00.real() * i0 + m.m00.imag() * r0};
    a1 = {m.m11.real() * r1 - m.m11.imag() * i1, m.m11.real() * i1 + m.m11.imag() * r1};
}

}  // namespace detail

namespace serial {
void apply_single(std::span<Amplitude> amps, int target, const Matrix2& m);
void apply_controlled(std::span<Amplitude> amps, int control, int target, const Matrix2& m);
double norm_squared(std::span<const Amplitude> amps);
/// sum_x |amp_x|^2 * energies[x]
double expectation(std::span<const Amplitude> amps, std::span<const double> energies);
}  // namespace serial

namespace parallel {
void apply_single(std::span<Amplitude> amps, int target, const Matrix2& m);
void apply_controlled(std::span<Amplitude> amps, int control, int target, const Matrix2& m);
double norm_squared(std::span<const Amplitude> amps);
double expectation(std::span<const Amplitude> amps, std::span<const double> energies);
}  // namespace parallel

enum class Backend { Serial, Parallel };

/// Dispatches `gate` to the chosen backend. The gate must already be valid
/// for the register size implied by amps.size().
void apply_gate(std::span<Amplitude> amps, const Gate& gate, Backend backend = Backend::Parallel);

}  // namespace evoqsi::circuit::kernels
