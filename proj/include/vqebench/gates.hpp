#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace vqebench {

enum class GateKind : std::uint8_t { X, H, SX, Ry, Rz, CNOT, RXXYY, Hop };

/// Angle of a parameterized gate: multiplier * theta[index] + offset, or the
/// fixed value `offset` when index < 0. Scaled references let one shared
/// parameter drive several gates with different weights.
struct ParamBinding {
    int index = -1;
    double multiplier = 0.0;
    double offset = 0.0;

    static ParamBinding fixed(double angle) { return {-1, 0.0, angle}; }
    static ParamBinding ref(int k, double multiplier = 1.0, double offset = 0.0) {
        return {k, multiplier, offset};
    }
    bool is_fixed() const { return index < 0; }
};

/// One gate: kind, one or two target qubits, optional parameter binding.
/// For CNOT the control is the first target. Two-qubit matrices are indexed
/// little-endian over the target list: internal basis index = bit(targets[0])
/// + 2*bit(targets[1]).
struct Gate {
    GateKind kind;
    std::array<std::uint32_t, 2> targets{0, 0};
    ParamBinding param;
};

int gate_arity(GateKind kind);
bool gate_is_parameterized(GateKind kind);
const char* gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

/// The 2x2 unitary of a single-qubit kind at a bound angle (ignored for X, H, SX).
Eigen::Matrix2cd gate_matrix_1q(GateKind kind, double angle = 0.0);

/// The 4x4 unitary of a two-qubit kind at a bound angle (ignored for CNOT).
Eigen::Matrix4cd gate_matrix_2q(GateKind kind, double angle = 0.0);

/// Unitary of an arbitrary kind as a dense matrix (2x2 or 4x4).
Eigen::MatrixXcd gate_matrix(GateKind kind, double angle = 0.0);

} // namespace vqebench
