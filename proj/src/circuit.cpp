#include "vqebench/circuit.hpp"

#include <cmath>
#include <sstream>

#include "vqebench/errors.hpp"

namespace vqebench {

void Circuit::add(const Gate& g) {
    const int arity = gate_arity(g.kind);
    for (int i = 0; i < arity; ++i)
        if (g.targets[static_cast<std::size_t>(i)] >= n_qubits_)
            throw SizeError("gate target out of range");
    if (arity == 2 && g.targets[0] == g.targets[1])
        throw ContractError("two-qubit gate targets must be distinct");
    if (gate_is_parameterized(g.kind)) {
        if (g.param.index >= static_cast<int>(n_parameters_))
            throw BindingError("parameter reference out of range");
    } else if (g.param.index >= 0 || g.param.offset != 0.0) {
        throw BindingError(std::string(gate_name(g.kind)) + " takes no parameter");
    }
    gates_.push_back(g);
}

void Circuit::add(GateKind kind, std::uint32_t q, ParamBinding p) {
    add(Gate{kind, {q, 0}, p});
}

void Circuit::add(GateKind kind, std::uint32_t a, std::uint32_t b, ParamBinding p) {
    add(Gate{kind, {a, b}, p});
}

void Circuit::append(const Circuit& other) {
    if (other.n_qubits_ > n_qubits_ || other.n_parameters_ > n_parameters_)
        throw SizeError("appended circuit exceeds qubit or parameter count");
    for (const auto& g : other.gates_) add(g);
}

double Circuit::bound_angle(const Gate& g, std::span<const double> parameters) const {
    if (!gate_is_parameterized(g.kind)) return 0.0;
    if (g.param.is_fixed()) return g.param.offset;
    if (parameters.size() != n_parameters_)
        throw BindingError("parameter vector length " + std::to_string(parameters.size()) +
                           " does not match circuit (" + std::to_string(n_parameters_) + ")");
    return g.param.multiplier * parameters[static_cast<std::size_t>(g.param.index)] +
           g.param.offset;
}

std::size_t Circuit::count(GateKind kind) const {
    std::size_t n = 0;
    for (const auto& g : gates_)
        if (g.kind == kind) ++n;
    return n;
}

namespace {

void format_binding(std::ostream& os, const ParamBinding& p) {
    if (p.is_fixed()) {
        os << p.offset;
        return;
    }
    os << "p" << p.index;
    if (p.multiplier != 1.0) os << "*" << p.multiplier;
    if (p.offset != 0.0) os << (p.offset > 0 ? "+" : "") << p.offset;
}

ParamBinding parse_binding(const std::string& token, long line_no) {
    if (token.empty()) throw ParseError("empty parameter token", line_no);
    if (token[0] != 'p') {
        try {
            return ParamBinding::fixed(std::stod(token));
        } catch (const std::exception&) {
            throw ParseError("bad angle literal '" + token + "'", line_no);
        }
    }
    ParamBinding b;
    b.multiplier = 1.0;
    std::size_t pos = 1;
    std::size_t next = token.find_first_of("*+-", pos);
    try {
        b.index = std::stoi(token.substr(pos, next - pos));
        if (next != std::string::npos && token[next] == '*') {
            std::size_t after = next + 1;
            // the multiplier may itself be signed; find a following +/- separator
            std::size_t sep = token.find_first_of("+-", after + 1);
            b.multiplier = std::stod(token.substr(after, sep - after));
            next = sep;
        }
        if (next != std::string::npos) b.offset = std::stod(token.substr(next));
    } catch (const std::exception&) {
        throw ParseError("bad parameter token '" + token + "'", line_no);
    }
    return b;
}

} // namespace

std::string Circuit::to_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "qubits " << n_qubits_ << " params " << n_parameters_ << "\n";
    for (const auto& g : gates_) {
        os << gate_name(g.kind);
        for (int i = 0; i < gate_arity(g.kind); ++i)
            os << " q" << g.targets[static_cast<std::size_t>(i)];
        if (gate_is_parameterized(g.kind)) {
            os << " ";
            format_binding(os, g.param);
        }
        os << "\n";
    }
    return os.str();
}

Circuit Circuit::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    long line_no = 0;
    Circuit c;
    bool have_header = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string kw1, kw2;
            std::uint32_t n, m;
            if (!(ls >> kw1 >> n >> kw2 >> m) || kw1 != "qubits" || kw2 != "params")
                throw ParseError("expected header 'qubits N params M'", line_no);
            c = Circuit(n, m);
            have_header = true;
            continue;
        }
        std::string name;
        ls >> name;
        const GateKind kind = gate_kind_from_name(name);
        Gate g{kind, {0, 0}, {}};
        for (int i = 0; i < gate_arity(kind); ++i) {
            std::string qt;
            if (!(ls >> qt) || qt.size() < 2 || qt[0] != 'q')
                throw ParseError("expected qubit token like 'q0'", line_no);
            g.targets[static_cast<std::size_t>(i)] =
                static_cast<std::uint32_t>(std::stoul(qt.substr(1)));
        }
        if (gate_is_parameterized(kind)) {
            std::string token;
            if (!(ls >> token)) throw ParseError("missing parameter token", line_no);
            g.param = parse_binding(token, line_no);
        }
        try {
            c.add(g);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (!have_header) throw ParseError("missing circuit header");
    return c;
}

std::vector<Gate> hop_decomposition(std::uint32_t a, std::uint32_t b, ParamBinding param) {
    if (a == b) throw ContractError("hop decomposition needs two distinct targets");
    ParamBinding neg = param;
    if (neg.is_fixed()) {
        neg.offset = -neg.offset;
    } else {
        neg.multiplier = -neg.multiplier;
        neg.offset = -neg.offset;
    }
    // hop = CZ * G(theta) with G the plain Givens rotation; the corner phase
    // costs the third CNOT (CZ = H_b CNOT H_b), the Givens core takes two.
    std::vector<Gate> out;
    out.push_back({GateKind::H, {a, 0}, {}});
    out.push_back({GateKind::CNOT, {a, b}, {}});
    out.push_back({GateKind::Ry, {a, 0}, neg});
    out.push_back({GateKind::Ry, {b, 0}, neg});
    out.push_back({GateKind::CNOT, {a, b}, {}});
    out.push_back({GateKind::H, {a, 0}, {}});
    out.push_back({GateKind::H, {b, 0}, {}});
    out.push_back({GateKind::CNOT, {a, b}, {}});
    out.push_back({GateKind::H, {b, 0}, {}});
    return out;
}

} // namespace vqebench
