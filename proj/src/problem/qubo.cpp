#include "evoqsi/qubo.hpp"

#include <stdexcept>
#include <string>

namespace evoqsi::problem {

double Qubo::energy(std::span<const std::uint8_t> x) const {
    if (x.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("bitstring has " + std::to_string(x.size()) +
                                    " entries, QUBO has " + std::to_string(n) + " variables");
    }
    double e = offset;
    for (int a = 0; a < n; ++a) {
        if (!x[static_cast<std::size_t>(a)]) continue;
        for (int b = 0; b < n; ++b) {
            if (x[static_cast<std::size_t>(b)]) e += coefficient(a, b);
        }
    }
    return e;
}

double Qubo::energy(circuit::BasisIndex x) const {
    // x^T Q x = sum_a x_a (Q_aa + 2 sum_{b<a} Q_ab x_b)
    double e = offset;
    for (int a = 0; a < n; ++a) {
        if (!((x >> a) & 1U)) continue;
        const double* row = &q[static_cast<std::size_t>(a) * n];
        double cross = 0.0;
        for (int b = 0; b < a; ++b) {
            if ((x >> b) & 1U) cross += row[b];
        }
        e += row[a] + 2.0 * cross;
    }
    return e;
}

double IsingModel::energy(std::span<const std::int8_t> spins) const {
    if (spins.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("spin vector has wrong length");
    }
    double e = offset;
    for (int a = 0; a < n; ++a) {
        const double za = spins[static_cast<std::size_t>(a)];
        e += fields[static_cast<std::size_t>(a)] * za;
        for (int b = a + 1; b < n; ++b) e += coupling(a, b) * za * spins[static_cast<std::size_t>(b)];
    }
    return e;
}

Qubo build_qubo(const LayeredProblem& problem) {
    problem.validate();
    const int m = problem.layers;
    const int r_bits = problem.bits;
    const int n = problem.nqubits();

    // D s - t = A x - t with A(k, i*R + r) = D(k, i) * 2^r, so
    // ||A x - t||^2 = x^T (A^T A) x - 2 (A^T t) . x + t . t
    Matrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) {
            for (int r = 0; r < r_bits; ++r) {
                a(k, i * r_bits + r) = problem.distances(k, i) * static_cast<double>(std::int64_t{1} << r);
            }
        }
    }

    Qubo qubo;
    qubo.n = n;
    qubo.q.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            double s = 0.0;
            for (int k = 0; k < m; ++k) s += a(k, u) * a(k, v);
            qubo.q[static_cast<std::size_t>(u) * n + v] = s;
            qubo.q[static_cast<std::size_t>(v) * n + u] = s;
        }
    }
    for (int u = 0; u < n; ++u) {
        double at_t = 0.0;
        for (int k = 0; k < m; ++k) at_t += a(k, u) * problem.times[static_cast<std::size_t>(k)];
        qubo.q[static_cast<std::size_t>(u) * n + u] -= 2.0 * at_t;
    }
    for (double t : problem.times) qubo.offset += t * t;
    return qubo;
}

IsingModel qubo_to_ising(const Qubo& qubo) {
    // x_a = (1 - z_a)/2:
    //   Q_aa x_a           = Q_aa/2 - Q_aa z_a/2
    //   2 Q_ab x_a x_b     = Q_ab/2 (1 - z_a - z_b + z_a z_b)      (a < b)
    const int n = qubo.n;
    IsingModel ising;
    ising.n = n;
    ising.couplings.assign(static_cast<std::size_t>(n) * n, 0.0);
    ising.fields.assign(static_cast<std::size_t>(n), 0.0);
    ising.offset = qubo.offset;
    for (int a = 0; a < n; ++a) {
        const double qaa = qubo.coefficient(a, a);
        ising.offset += qaa / 2;
        ising.fields[static_cast<std::size_t>(a)] -= qaa / 2;
        for (int b = a + 1; b < n; ++b) {
            const double qab = qubo.coefficient(a, b);
            ising.offset += qab / 2;
            ising.fields[static_cast<std::size_t>(a)] -= qab / 2;
            ising.fields[static_cast<std::size_t>(b)] -= qab / 2;
            ising.couplings[static_cast<std::size_t>(a) * n + b] = qab / 2;
            ising.couplings[static_cast<std::size_t>(b) * n + a] = qab / 2;
        }
    }
    return ising;
}

circuit::DiagonalObservable to_observable(const Qubo& qubo) {
    if (qubo.n < 1 || qubo.n > circuit::kMaxQubits) {
        throw std::invalid_argument("QUBO with " + std::to_string(qubo.n) +
                                    " variables cannot be simulated");
    }
    std::vector<double> table(std::size_t{1} << qubo.n);
    const auto size = static_cast<std::int64_t>(table.size());
    #pragma omp parallel for schedule(static) if(size >= 4096)
    for (std::int64_t x = 0; x < size; ++x) {
        table[static_cast<std::size_t>(x)] = qubo.energy(static_cast<circuit::BasisIndex>(x));
    }
    return {qubo.n, std::move(table)};
}

Slowness CostHamiltonian::decode(circuit::BasisIndex x) const {
    return decode_slowness(circuit::bits_of(x, layers * bits), bits);
}

CostHamiltonian make_hamiltonian(const LayeredProblem& problem) {
    Qubo qubo = build_qubo(problem);
    auto observable = to_observable(qubo);
    return {problem.layers, problem.bits, std::move(qubo), std::move(observable)};
}

}  // namespace evoqsi::problem
