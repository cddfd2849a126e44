#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vqebench/gates.hpp"

namespace vqebench {

/// Ordered list of gates over n qubits with a shared parameter vector.
class Circuit {
  public:
    Circuit() = default;
    Circuit(std::uint32_t n_qubits, std::uint32_t n_parameters)
        : n_qubits_(n_qubits), n_parameters_(n_parameters) {}

    std::uint32_t n_qubits() const { return n_qubits_; }
    std::uint32_t n_parameters() const { return n_parameters_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    void add(const Gate& g);
    void add(GateKind kind, std::uint32_t q, ParamBinding p = {});
    void add(GateKind kind, std::uint32_t a, std::uint32_t b, ParamBinding p = {});

    void x(std::uint32_t q) { add(GateKind::X, q); }
    void h(std::uint32_t q) { add(GateKind::H, q); }
    void sx(std::uint32_t q) { add(GateKind::SX, q); }
    void ry(std::uint32_t q, ParamBinding p) { add(GateKind::Ry, q, p); }
    void rz(std::uint32_t q, ParamBinding p) { add(GateKind::Rz, q, p); }
    void cnot(std::uint32_t control, std::uint32_t target) {
        add(GateKind::CNOT, control, target);
    }
    void rxxyy(std::uint32_t a, std::uint32_t b, ParamBinding p) {
        add(GateKind::RXXYY, a, b, p);
    }
    void hop(std::uint32_t a, std::uint32_t b, ParamBinding p) {
        add(GateKind::Hop, a, b, p);
    }

    /// Append another circuit's gates; parameter references are kept as-is.
    void append(const Circuit& other);

    /// Gate angle with parameters resolved. Throws BindingError on size mismatch.
    double bound_angle(const Gate& g, std::span<const double> parameters) const;

    /// Number of gates of one kind.
    std::size_t count(GateKind kind) const;

    /// Line-oriented text: header "qubits N params M", then one gate per line,
    /// e.g. "HOP q0 q1 p0" or "RY q2 0.5". Scaled references serialize as
    /// "p0*-2" or "p0*-2+1.5707963".
    std::string to_text() const;
    static Circuit from_text(const std::string& text);

  private:
    std::uint32_t n_qubits_ = 0;
    std::uint32_t n_parameters_ = 0;
    std::vector<Gate> gates_;
};

/// Hop gate template over {H, Ry, CNOT}: returns a gate list whose composed
/// unitary equals the hop matrix exactly for every angle bound through
/// `param`. Uses three CNOTs; see the module tests for the equivalence check.
std::vector<Gate> hop_decomposition(std::uint32_t a, std::uint32_t b, ParamBinding param);

} // namespace vqebench
