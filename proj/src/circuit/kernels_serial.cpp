#include <cmath>

#include "evoqsi/kernels.hpp"

namespace evoqsi::circuit::kernels {

Matrix2 rotation_matrix(GateKind kind, double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    switch (base_rotation(kind)) {
        case GateKind::Rx:
            return {{c, 0}, {0, -s}, {0, -s}, {c, 0}, false};
        case GateKind::Ry:
            return {{c, 0}, {-s, 0}, {s, 0}, {c, 0}, false};
        default:  // Rz
            return {{c, -s}, {0, 0}, {0, 0}, {c, s}, true};
    }
}

void apply_gate(std::span<Amplitude> amps, const Gate& gate, Backend backend) {
    const Matrix2 m = rotation_matrix(gate.kind, gate.theta);
    if (backend == Backend::Serial) {
        if (gate.control) serial::apply_controlled(amps, *gate.control, gate.target, m);
        else serial::apply_single(amps, gate.target, m);
    } else {
        if (gate.control) parallel::apply_controlled(amps, *gate.control, gate.target, m);
        else parallel::apply_single(amps, gate.target, m);
    }
}

namespace serial {

void apply_single(std::span<Amplitude> amps, int target, const Matrix2& matrix) {
    const Matrix2 m = matrix;
    const std::uint64_t half = amps.size() / 2;
    const std::uint64_t tmask = 1ULL << target;
    for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = detail::insert_zero(k, target);
        if (m.diagonal) detail::apply_diagonal(amps[i0], amps[i0 | tmask], m);
        else detail::apply_pair(amps[i0], amps[i0 | tmask], m);
    }
}

void apply_controlled(std::span<Amplitude> amps, int control, int target, const Matrix2& matrix) {
    const Matrix2 m = matrix;
    const std::uint64_t quarter = amps.size() / 4;
    const std::uint64_t tmask = 1ULL << target;
    const std::uint64_t cmask = 1ULL << control;
    const int lo = control < target ? control : target;
    const int hi = control < target ? target : control;
    for (std::uint64_t k = 0; k < quarter; ++k) {
        const std::uint64_t i0 = detail::insert_zero(detail::insert_zero(k, lo), hi) | cmask;
        if (m.diagonal) detail::apply_diagonal(amps[i0], amps[i0 | tmask], m);
        else detail::apply_pair(amps[i0], amps[i0 | tmask], m);
    }
}

double norm_squared(std::span<const Amplitude> amps) {
    double sum = 0.0;
    for (const Amplitude& a : amps) sum += std::norm(a);
    return sum;
}

double expectation(std::span<const Amplitude> amps, std::span<const double> energies) {
    double sum = 0.0;
    for (std::size_t x = 0; x < amps.size(); ++x) sum += std::norm(amps[x]) * energies[x];
    return sum;
}

}  // namespace serial
}  // namespace evoqsi::circuit::kernels
