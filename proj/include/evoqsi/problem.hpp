#pragma once

// Layered-earth traveltime model D s = t and the binary slowness encoding.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace evoqsi::problem {

/// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const double> row_major() const noexcept { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

using Slowness = std::vector<std::int64_t>;
/// One byte per binary variable, each 0 or 1.
using Bitstring = std::vector<std::uint8_t>;

/// M parallel layers observed by M rays. distances(i, j) is the length ray i
/// travels inside layer j; rows are upper-triangular.
struct LayeredProblem {
    int layers = 0;
    int bits = 0;
    Matrix distances;
    std::vector<double> times;
    std::optional<Slowness> slowness_true;
    std::optional<std::uint64_t> seed;

    int nqubits() const noexcept { return layers * bits; }

    /// Throws std::invalid_argument describing the first violated invariant.
    void validate() const;
};

/// t = D s. Throws on dimension mismatch.
std::vector<double> forward_times(const Matrix& distances, std::span<const double> slowness);

/// ||D s - t||^2.
double objective(const LayeredProblem& problem, std::span<const double> slowness);
double objective(const LayeredProblem& problem, std::span<const std::int64_t> slowness);

/// Variable x_{i,r} sits at position i*bits + r and carries weight 2^r.
Bitstring encode_slowness(std::span<const std::int64_t> slowness, int bits);
Slowness decode_slowness(std::span<const std::uint8_t> x, int bits);

/// Random instance: D(i, j) uniform in [1, 9] for j >= i, slowness uniform in
/// [1, 2^bits - 1], t = D s.
LayeredProblem synth_instance(int layers, int bits, std::uint64_t seed);

/// Length of the straight source->detector segment inside each layer of a
/// horizontally layered column. Depths are measured from the top of the
/// first layer; `offset` is the horizontal source-detector distance.
std::vector<double> straight_ray_distances(std::span<const double> thicknesses,
                                           double source_depth, double detector_depth,
                                           double offset);

}  // namespace evoqsi::problem
