#include "vqebench/gates.hpp"

#include <cmath>

#include "vqebench/errors.hpp"

namespace vqebench {

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::SX:
        case GateKind::Ry:
        case GateKind::Rz:
            return 1;
        case GateKind::CNOT:
        case GateKind::RXXYY:
        case GateKind::Hop:
            return 2;
    }
    throw ContractError("unknown gate kind");
}

bool gate_is_parameterized(GateKind kind) {
    switch (kind) {
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::RXXYY:
        case GateKind::Hop:
            return true;
        default:
            return false;
    }
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "X";
        case GateKind::H: return "H";
        case GateKind::SX: return "SX";
        case GateKind::Ry: return "RY";
        case GateKind::Rz: return "RZ";
        case GateKind::CNOT: return "CNOT";
        case GateKind::RXXYY: return "RXXYY";
        case GateKind::Hop: return "HOP";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
    if (name == "X") return GateKind::X;
    if (name == "H") return GateKind::H;
    if (name == "SX") return GateKind::SX;
    if (name == "RY") return GateKind::Ry;
    if (name == "RZ") return GateKind::Rz;
    if (name == "CNOT") return GateKind::CNOT;
    if (name == "RXXYY") return GateKind::RXXYY;
    if (name == "HOP") return GateKind::Hop;
    throw ParseError("unknown gate name '" + name + "'");
}

Eigen::Matrix2cd gate_matrix_1q(GateKind kind, double angle) {
    Eigen::Matrix2cd m;
    const complexd i(0, 1);
    switch (kind) {
        case GateKind::X:
            m << 0, 1, 1, 0;
            return m;
        case GateKind::H:
            m << 1, 1, 1, -1;
            return m / std::sqrt(2.0);
        case GateKind::SX:
            m << complexd(0.5, 0.5), complexd(0.5, -0.5),
                 complexd(0.5, -0.5), complexd(0.5, 0.5);
            return m;
        case GateKind::Ry: {
            const double c = std::cos(angle / 2), s = std::sin(angle / 2);
            m << c, -s, s, c;
            return m;
        }
        case GateKind::Rz:
            m << std::exp(-i * angle / 2.0), 0, 0, std::exp(i * angle / 2.0);
            return m;
        default:
            throw ContractError("not a single-qubit gate kind");
    }
}

Eigen::Matrix4cd gate_matrix_2q(GateKind kind, double angle) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    switch (kind) {
        case GateKind::CNOT:
            // control = first target = least significant internal bit
            m.setZero();
            m(0, 0) = 1;
            m(3, 1) = 1;
            m(2, 2) = 1;
            m(1, 3) = 1;
            return m;
        case GateKind::RXXYY: {
            // exp(-i angle (XX+YY)/4): partial swap between |01> and |10>
            const double c = std::cos(angle / 2), s = std::sin(angle / 2);
            m(1, 1) = c;
            m(2, 2) = c;
            m(1, 2) = complexd(0, -s);
            m(2, 1) = complexd(0, -s);
            return m;
        }
        case GateKind::Hop: {
            const double c = std::cos(angle), s = std::sin(angle);
            m(1, 1) = c;
            m(1, 2) = s;
            m(2, 1) = -s;
            m(2, 2) = c;
            m(3, 3) = -1;
            return m;
        }
        default:
            throw ContractError("not a two-qubit gate kind");
    }
}

Eigen::MatrixXcd gate_matrix(GateKind kind, double angle) {
    if (gate_arity(kind) == 1) return gate_matrix_1q(kind, angle);
    return gate_matrix_2q(kind, angle);
}

} // namespace vqebench
