#include "evoqsi/problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "evoqsi/random.hpp"

namespace evoqsi::problem {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows * cols) fail("matrix data does not match its shape");
}

void LayeredProblem::validate() const {
    if (layers < 1) fail("layer count must be positive");
    if (bits < 1 || bits > 31) fail("bit width must be in [1, 31]");
    const auto m = static_cast<std::size_t>(layers);
    if (distances.rows() != m || distances.cols() != m) {
        fail("distance matrix must be " + std::to_string(m) + "x" + std::to_string(m));
    }
    if (times.size() != m) fail("expected " + std::to_string(m) + " traveltimes");
    for (std::size_t i = 0; i < m; ++i) {
        bool sampled = false;
        for (std::size_t j = 0; j < m; ++j) {
            const double d = distances(i, j);
            if (!std::isfinite(d) || d < 0) fail("distances must be finite and nonnegative");
            if (j < i && d != 0) fail("distance matrix must be upper-triangular");
            sampled = sampled || d > 0;
        }
        if (!sampled) fail("ray " + std::to_string(i) + " crosses no layer");
        if (!std::isfinite(times[i])) fail("traveltimes must be finite");
    }
    if (slowness_true) {
        if (slowness_true->size() != m) fail("reference slowness has wrong length");
        for (std::int64_t s : *slowness_true) {
            if (s < 0 || s >= (std::int64_t{1} << bits)) {
                fail("reference slowness " + std::to_string(s) + " not representable in " +
                     std::to_string(bits) + " bits");
            }
        }
        for (std::size_t i = 0; i < m; ++i) {
            double t = 0;
            for (std::size_t j = 0; j < m; ++j) {
                t += distances(i, j) * static_cast<double>((*slowness_true)[j]);
            }
            if (t != times[i]) fail("traveltimes do not match D * reference slowness");
        }
    }
}

std::vector<double> forward_times(const Matrix& distances, std::span<const double> slowness) {
    if (distances.cols() != slowness.size()) {
        throw std::invalid_argument("slowness length " + std::to_string(slowness.size()) +
                                    " does not match " + std::to_string(distances.cols()) +
                                    " distance columns");
    }
    std::vector<double> t(distances.rows(), 0.0);
    for (std::size_t i = 0; i < distances.rows(); ++i) {
        for (std::size_t j = 0; j < distances.cols(); ++j) t[i] += distances(i, j) * slowness[j];
    }
    return t;
}

double objective(const LayeredProblem& problem, std::span<const double> slowness) {
    const auto t = forward_times(problem.distances, slowness);
    if (t.size() != problem.times.size()) throw std::invalid_argument("traveltime length mismatch");
    double f = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double r = t[i] - problem.times[i];
        f += r * r;
    }
    return f;
}

double objective(const LayeredProblem& problem, std::span<const std::int64_t> slowness) {
    std::vector<double> s(slowness.begin(), slowness.end());
    return objective(problem, std::span<const double>(s));
}

Bitstring encode_slowness(std::span<const std::int64_t> slowness, int bits) {
    if (bits < 1 || bits > 62) throw std::invalid_argument("bit width out of range");
    Bitstring x;
    x.reserve(slowness.size() * static_cast<std::size_t>(bits));
    for (std::int64_t s : slowness) {
        if (s < 0 || s >= (std::int64_t{1} << bits)) {
            throw std::out_of_range("slowness " + std::to_string(s) + " not representable in " +
                                    std::to_string(bits) + " bits");
        }
        for (int r = 0; r < bits; ++r) x.push_back(static_cast<std::uint8_t>((s >> r) & 1));
    }
    return x;
}

Slowness decode_slowness(std::span<const std::uint8_t> x, int bits) {
    if (bits < 1 || bits > 62) throw std::invalid_argument("bit width out of range");
    const auto width = static_cast<std::size_t>(bits);
    if (x.size() % width != 0) {
        throw std::invalid_argument("bitstring length " + std::to_string(x.size()) +
                                    " is not a multiple of the bit width");
    }
    Slowness s(x.size() / width, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t r = 0; r < width; ++r) {
            const std::uint8_t b = x[i * width + r];
            if (b > 1) throw std::invalid_argument("bitstring entries must be 0 or 1");
            s[i] += std::int64_t{b} << r;
        }
    }
    return s;
}

LayeredProblem synth_instance(int layers, int bits, std::uint64_t seed) {
    if (layers < 1) throw std::invalid_argument("layer count must be positive");
    if (bits < 1 || bits > 31) throw std::invalid_argument("bit width must be in [1, 31]");
    Rng rng(seed);
    const auto m = static_cast<std::size_t>(layers);
    LayeredProblem p;
    p.layers = layers;
    p.bits = bits;
    p.seed = seed;
    p.distances = Matrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) p.distances(i, j) = static_cast<double>(rng.between(1, 9));
    }
    Slowness s(m);
    for (auto& v : s) v = rng.between(1, (std::int64_t{1} << bits) - 1);
    p.times = forward_times(p.distances, std::vector<double>(s.begin(), s.end()));
    p.slowness_true = std::move(s);
    return p;
}

std::vector<double> straight_ray_distances(std::span<const double> thicknesses,
                                           double source_depth, double detector_depth,
                                           double offset) {
    if (thicknesses.empty()) throw std::invalid_argument("no layers given");
    double bottom = 0.0;
    for (double h : thicknesses) {
        if (!(h > 0) || !std::isfinite(h)) throw std::invalid_argument("layer thickness must be positive");
        bottom += h;
    }
    for (double z : {source_depth, detector_depth}) {
        if (!(z >= 0 && z <= bottom)) {
            throw std::out_of_range("depth " + std::to_string(z) + " outside layered column [0, " +
                                    std::to_string(bottom) + "]");
        }
    }
    if (!(offset >= 0) || !std::isfinite(offset)) {
        throw std::invalid_argument("horizontal offset must be finite and nonnegative");
    }

    std::vector<double> d(thicknesses.size(), 0.0);
    const double top_z = std::min(source_depth, detector_depth);
    const double bottom_z = std::max(source_depth, detector_depth);
    const double dz = bottom_z - top_z;
    const double length = std::hypot(offset, dz);

    if (dz == 0.0) {
        // horizontal ray: a depth on an interface belongs to the layer below,
        // the base of the column to the last layer
        double layer_top = 0.0;
        std::size_t k = thicknesses.size() - 1;
        for (std::size_t j = 0; j < thicknesses.size(); ++j) {
            if (top_z < layer_top + thicknesses[j]) {
                k = j;
                break;
            }
            layer_top += thicknesses[j];
        }
        d[k] = length;
        return d;
    }

    double layer_top = 0.0;
    for (std::size_t j = 0; j < thicknesses.size(); ++j) {
        const double layer_bottom = layer_top + thicknesses[j];
        const double overlap = std::min(bottom_z, layer_bottom) - std::max(top_z, layer_top);
        if (overlap > 0) d[j] = length * (overlap / dz);
        layer_top = layer_bottom;
    }
    return d;
}

}  // namespace evoqsi::problem
