#include "evoqsi/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace evoqsi::circuit {

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::Rx: return "rx";
        case GateKind::Ry: return "ry";
        case GateKind::Rz: return "rz";
        case GateKind::CRx: return "crx";
        case GateKind::CRy: return "cry";
        case GateKind::CRz: return "crz";
    }
    return "?";
}

void validate(const Gate& gate, int nqubits) {
    if (gate.target < 0 || gate.target >= nqubits) {
        throw std::out_of_range("gate target " + std::to_string(gate.target) +
                                " outside register of " + std::to_string(nqubits) + " qubits");
    }
    if (is_controlled(gate.kind) != gate.control.has_value()) {
        throw std::invalid_argument(to_string(gate.kind) + ": control qubit " +
                                    (gate.control ? "given for an uncontrolled gate" : "missing"));
    }
    if (gate.control) {
        if (*gate.control < 0 || *gate.control >= nqubits) {
            throw std::out_of_range("gate control " + std::to_string(*gate.control) +
                                    " outside register of " + std::to_string(nqubits) + " qubits");
        }
        if (*gate.control == gate.target) {
            throw std::invalid_argument("gate control equals target (qubit " +
                                        std::to_string(gate.target) + ")");
        }
    }
    if (!std::isfinite(gate.theta)) {
        throw std::invalid_argument("gate angle is not finite");
    }
}

Circuit::Circuit(int nqubits) : nqubits_(nqubits) {
    if (nqubits < 1 || nqubits > kMaxQubits) {
        throw std::invalid_argument("circuit qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(nqubits));
    }
}

Circuit::Circuit(int nqubits, std::vector<Gate> gates) : Circuit(nqubits) {
    for (const Gate& g : gates) validate(g, nqubits_);
    gates_ = std::move(gates);
}

void Circuit::append(const Gate& gate) {
    validate(gate, nqubits_);
    gates_.push_back(gate);
}

void Circuit::insert(std::size_t position, const Gate& gate) {
    if (position > gates_.size()) throw std::out_of_range("insert position past end of circuit");
    validate(gate, nqubits_);
    gates_.insert(gates_.begin() + static_cast<std::ptrdiff_t>(position), gate);
}

void Circuit::erase(std::size_t position) {
    if (position >= gates_.size()) throw std::out_of_range("erase position past end of circuit");
    gates_.erase(gates_.begin() + static_cast<std::ptrdiff_t>(position));
}

void Circuit::replace(std::size_t position, const Gate& gate) {
    if (position >= gates_.size()) throw std::out_of_range("replace position past end of circuit");
    validate(gate, nqubits_);
    gates_[position] = gate;
}

}  // namespace evoqsi::circuit
