#include <algorithm>
#include <vector>

#include "evoqsi/kernels.hpp"

namespace evoqsi::circuit::kernels::parallel {

namespace {

// Sums f(x) over [0, n) in kReductionBlock chunks; chunk sums are combined in
// index order so the result does not depend on the team size.
template <typename F>
double blocked_sum(std::uint64_t n, F&& f) {
    const std::int64_t nblocks = static_cast<std::int64_t>((n + kReductionBlock - 1) / kReductionBlock);
    std::vector<double> partial(static_cast<std::size_t>(nblocks), 0.0);
    #pragma omp parallel for schedule(static) if(n >= kParallelThreshold)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        const std::uint64_t begin = static_cast<std::uint64_t>(b) * kReductionBlock;
        const std::uint64_t end = std::min(n, begin + kReductionBlock);
        double s = 0.0;
        for (std::uint64_t x = begin; x < end; ++x) s += f(x);
        partial[static_cast<std::size_t>(b)] = s;
    }
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

}  // namespace

void apply_single(std::span<Amplitude> amps, int target, const Matrix2& matrix) {
    const Matrix2 m = matrix;
    const std::int64_t half = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t tmask = 1ULL << target;
    Amplitude* a = amps.data();
    if (m.diagonal) {
        #pragma omp parallel for schedule(static) if(amps.size() >= kParallelThreshold)
        for (std::int64_t k = 0; k < half; ++k) {
            const std::uint64_t i0 = detail::insert_zero(static_cast<std::uint64_t>(k), target);
            detail::apply_diagonal(a[i0], a[i0 | tmask], m);
        }
    } else {
        #pragma omp parallel for schedule(static) if(amps.size() >= kParallelThreshold)
        for (std::int64_t k = 0; k < half; ++k) {
            const std::uint64_t i0 = detail::insert_zero(static_cast<std::uint64_t>(k), target);
            detail::apply_pair(a[i0], a[i0 | tmask], m);
        }
    }
}

void apply_controlled(std::span<Amplitude> amps, int control, int target, const Matrix2& matrix) {
    const Matrix2 m = matrix;
    const std::int64_t quarter = static_cast<std::int64_t>(amps.size() / 4);
    const std::uint64_t tmask = 1ULL << target;
    const std::uint64_t cmask = 1ULL << control;
    const int lo = std::min(control, target);
    const int hi = std::max(control, target);
    Amplitude* a = amps.data();
    if (m.diagonal) {
        #pragma omp parallel for schedule(static) if(amps.size() >= kParallelThreshold)
        for (std::int64_t k = 0; k < quarter; ++k) {
            const std::uint64_t i0 =
                detail::insert_zero(detail::insert_zero(static_cast<std::uint64_t>(k), lo), hi) | cmask;
            detail::apply_diagonal(a[i0], a[i0 | tmask], m);
        }
    } else {
        #pragma omp parallel for schedule(static) if(amps.size() >= kParallelThreshold)
        for (std::int64_t k = 0; k < quarter; ++k) {
            const std::uint64_t i0 =
                detail::insert_zero(detail::insert_zero(static_cast<std::uint64_t>(k), lo), hi) | cmask;
            detail::apply_pair(a[i0], a[i0 | tmask], m);
        }
    }
}

double norm_squared(std::span<const Amplitude> amps) {
    const Amplitude* a = amps.data();
    return blocked_sum(amps.size(), [a](std::uint64_t x) { return std::norm(a[x]); });
}

double expectation(std::span<const Amplitude> amps, std::span<const double> energies) {
    const Amplitude* a = amps.data();
    const double* e = energies.data();
    return blocked_sum(amps.size(), [a, e](std::uint64_t x) { return std::norm(a[x]) * e[x]; });
}

}  // namespace evoqsi::circuit::kernels::parallel
