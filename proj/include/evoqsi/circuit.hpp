#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evoqsi::circuit {

enum class GateKind { Rx, Ry, Rz, CRx, CRy, CRz };

constexpr bool is_controlled(GateKind kind) noexcept {
    return kind == GateKind::CRx || kind == GateKind::CRy || kind == GateKind::CRz;
}

/// Rotation axis shared by a gate and its controlled form (Rx and CRx -> Rx).
constexpr GateKind base_rotation(GateKind kind) noexcept {
    switch (kind) {
        case GateKind::CRx: return GateKind::Rx;
        case GateKind::CRy: return GateKind::Ry;
        case GateKind::CRz: return GateKind::Rz;
        default: return kind;
    }
}

std::string to_string(GateKind kind);

/// A single parameterized rotation.
///
/// Convention: R_a(theta) = exp(-i theta a / 2) for a in {X, Y, Z}. The
/// controlled forms apply R_a(theta) to `target` iff the `control` qubit is 1.
struct Gate {
    GateKind kind = GateKind::Rx;
    int target = 0;
    std::optional<int> control;
    double theta = 0.0;

    static Gate rx(int target, double theta) { return {GateKind::Rx, target, std::nullopt, theta}; }
    static Gate ry(int target, double theta) { return {GateKind::Ry, target, std::nullopt, theta}; }
    static Gate rz(int target, double theta) { return {GateKind::Rz, target, std::nullopt, theta}; }
    static Gate crx(int control, int target, double theta) { return {GateKind::CRx, target, control, theta}; }
    static Gate cry(int control, int target, double theta) { return {GateKind::CRy, target, control, theta}; }
    static Gate crz(int control, int target, double theta) { return {GateKind::CRz, target, control, theta}; }

    bool operator==(const Gate&) const = default;
};

/// Throws std::invalid_argument / std::out_of_range if `gate` is not valid on
/// `nqubits` qubits.
void validate(const Gate& gate, int nqubits);

/// Largest register the dense simulator accepts.
inline constexpr int kMaxQubits = 30;

/// Ordered gate list on a fixed number of qubits. The empty circuit is the
/// identity. Every mutating member re-checks the gate invariants.
class Circuit {
public:
    explicit Circuit(int nqubits);
    Circuit(int nqubits, std::vector<Gate> gates);

    int nqubits() const noexcept { return nqubits_; }
    std::size_t depth() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    std::span<const Gate> gates() const noexcept { return gates_; }
    const Gate& operator[](std::size_t i) const { return gates_.at(i); }

    void append(const Gate& gate);
    void insert(std::size_t position, const Gate& gate);
    void erase(std::size_t position);
    void replace(std::size_t position, const Gate& gate);

    bool operator==(const Circuit&) const = default;

private:
    int nqubits_;
    std::vector<Gate> gates_;
};

}  // namespace evoqsi::circuit
