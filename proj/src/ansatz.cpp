#include "vqebench/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vqebench/errors.hpp"
#include "vqebench/fermion.hpp"

namespace vqebench {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

std::vector<std::pair<std::uint32_t, std::uint32_t>> entangling_pairs(
    std::uint32_t n, Entanglement pattern) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    if (pattern == Entanglement::Full) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    } else {
        for (std::uint32_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    }
    return pairs;
}

void check_he_spec(const AnsatzSpec& spec) {
    if (spec.repetitions < 1)
        throw ContractError("hardware-efficient ansatz needs repetitions >= 1");
    if (spec.n_electrons > spec.n_qubits)
        throw ContractError("n_electrons exceeds n_qubits");
}

/// Append exp(-i angle/2 * P) for one Pauli string: basis changes, CNOT
/// staircase onto the last support qubit, Rz, then the mirror image.
void append_pauli_exponential(Circuit& c, const PauliString& p, ParamBinding angle) {
    std::vector<std::uint32_t> support;
    for (std::uint32_t q = 0; q < p.n_qubits(); ++q)
        if (p.letter(q) != 'I') support.push_back(q);
    if (support.empty()) return; // identity generator: global phase only

    for (auto q : support) {
        switch (p.letter(q)) {
            case 'X': c.h(q); break;
            case 'Y': c.rz(q, ParamBinding::fixed(-kHalfPi)); c.h(q); break;
            default: break;
        }
    }
    for (std::size_t k = 0; k + 1 < support.size(); ++k)
        c.cnot(support[k], support[k + 1]);
    c.rz(support.back(), angle);
    for (std::size_t k = support.size() - 1; k-- > 0;)
        c.cnot(support[k], support[k + 1]);
    for (auto q : support) {
        switch (p.letter(q)) {
            case 'X': c.h(q); break;
            case 'Y': c.h(q); c.rz(q, ParamBinding::fixed(kHalfPi)); break;
            default: break;
        }
    }
}

} // namespace

AnsatzFamily ansatz_family_from_name(const std::string& name) {
    if (name == "ryrz") return AnsatzFamily::RyRz;
    if (name == "swaprz") return AnsatzFamily::SwapRz;
    if (name == "uccsd") return AnsatzFamily::UCCSD;
    if (name == "givens") return AnsatzFamily::Givens;
    throw ContractError("unknown ansatz family '" + name + "'");
}

const char* ansatz_family_name(AnsatzFamily family) {
    switch (family) {
        case AnsatzFamily::RyRz: return "ryrz";
        case AnsatzFamily::SwapRz: return "swaprz";
        case AnsatzFamily::UCCSD: return "uccsd";
        case AnsatzFamily::Givens: return "givens";
    }
    return "?";
}

Circuit hf_reference(std::uint32_t n_qubits, std::uint32_t n_electrons) {
    if (n_qubits % 2 != 0)
        throw ContractError("blocked spin ordering needs an even qubit count");
    if (n_electrons % 2 != 0)
        throw ContractError("hf_reference covers closed shells (even electron count)");
    if (n_electrons > n_qubits) throw ContractError("too many electrons");
    const std::uint32_t m = n_qubits / 2;
    Circuit c(n_qubits, 0);
    for (std::uint32_t k = 0; k < n_electrons / 2; ++k) {
        c.x(k);      // spin-up block
        c.x(m + k);  // spin-down block
    }
    return c;
}

std::vector<Excitation> uccsd_excitations(std::uint32_t n_qubits,
                                          std::uint32_t n_electrons) {
    if (n_qubits % 2 != 0 || n_electrons % 2 != 0)
        throw ContractError("excitation enumeration assumes a closed shell");
    const std::uint32_t m = n_qubits / 2;
    const std::uint32_t nocc = n_electrons / 2; // per spin
    std::vector<std::uint32_t> occ, virt;
    for (std::uint32_t k = 0; k < nocc; ++k) {
        occ.push_back(k);
        occ.push_back(m + k);
    }
    for (std::uint32_t k = nocc; k < m; ++k) {
        virt.push_back(k);
        virt.push_back(m + k);
    }
    std::sort(occ.begin(), occ.end());
    std::sort(virt.begin(), virt.end());
    const auto spin = [m](std::uint32_t q) { return q < m ? 0 : 1; };

    std::vector<Excitation> out;
    for (auto i : occ)
        for (auto a : virt)
            if (spin(i) == spin(a)) out.push_back({{i}, {a}});
    for (std::size_t ii = 0; ii < occ.size(); ++ii)
        for (std::size_t jj = ii + 1; jj < occ.size(); ++jj)
            for (std::size_t aa = 0; aa < virt.size(); ++aa)
                for (std::size_t bb = aa + 1; bb < virt.size(); ++bb) {
                    const auto i = occ[ii], j = occ[jj], a = virt[aa], b = virt[bb];
                    if (spin(i) + spin(j) != spin(a) + spin(b)) continue;
                    out.push_back({{i, j}, {a, b}});
                }
    return out;
}

Ansatz build_ryrz(const AnsatzSpec& spec) {
    if (spec.family != AnsatzFamily::RyRz) throw ContractError("spec family is not ryrz");
    check_he_spec(spec);
    const std::uint32_t n = spec.n_qubits;
    const std::uint32_t n_params = (spec.repetitions + 1) * 2 * n;
    Circuit c(n, n_params);
    int next = 0;
    const auto rotation_layer = [&] {
        for (std::uint32_t q = 0; q < n; ++q) c.ry(q, ParamBinding::ref(next++));
        for (std::uint32_t q = 0; q < n; ++q) c.rz(q, ParamBinding::ref(next++));
    };
    const auto pairs = entangling_pairs(n, spec.entanglement);
    for (std::uint32_t r = 0; r < spec.repetitions; ++r) {
        rotation_layer();
        for (auto [i, j] : pairs) c.cnot(i, j);
    }
    rotation_layer();
    return {std::move(c), spec, false, "ryrz(r=" + std::to_string(spec.repetitions) + ")"};
}

Ansatz build_swaprz(const AnsatzSpec& spec) {
    if (spec.family != AnsatzFamily::SwapRz) throw ContractError("spec family is not swaprz");
    check_he_spec(spec);
    const std::uint32_t n = spec.n_qubits;
    const auto pairs = entangling_pairs(n, spec.entanglement);
    const std::uint32_t n_params =
        spec.repetitions * (n + static_cast<std::uint32_t>(pairs.size())) + n;
    Circuit c(n, n_params);
    c.append(hf_reference(n, spec.n_electrons));
    int next = 0;
    for (std::uint32_t r = 0; r < spec.repetitions; ++r) {
        for (std::uint32_t q = 0; q < n; ++q) c.rz(q, ParamBinding::ref(next++));
        for (auto [i, j] : pairs) c.rxxyy(i, j, ParamBinding::ref(next++));
    }
    for (std::uint32_t q = 0; q < n; ++q) c.rz(q, ParamBinding::ref(next++));
    return {std::move(c), spec, true, "swaprz(r=" + std::to_string(spec.repetitions) + ")"};
}

Ansatz build_uccsd(const AnsatzSpec& spec, const std::vector<Excitation>& excitations) {
    if (spec.family != AnsatzFamily::UCCSD) throw ContractError("spec family is not uccsd");
    const std::uint32_t n = spec.n_qubits;
    Circuit c(n, static_cast<std::uint32_t>(excitations.size()));
    c.append(hf_reference(n, spec.n_electrons));
    for (std::size_t k = 0; k < excitations.size(); ++k) {
        const auto& exc = excitations[k];
        if (exc.from.size() != exc.to.size() ||
            (exc.from.size() != 1 && exc.from.size() != 2))
            throw ContractError("excitation must move one or two electrons");
        for (auto q : exc.from)
            if (q >= n) throw ContractError("excitation index outside active space");
        for (auto q : exc.to)
            if (q >= n) throw ContractError("excitation index outside active space");

        // T - T^dag for this excitation; all JW terms of one excitation commute,
        // so the first-order Trotter product is the exact exponential.
        FermionTerm fwd{1.0, {}};
        for (auto a : exc.to) fwd.ops.push_back({a, true});
        for (auto i : exc.from) fwd.ops.push_back({i, false});
        FermionTerm rev{-1.0, {}};
        for (auto i : exc.from) rev.ops.push_back({i, true});
        for (auto a : exc.to) rev.ops.push_back({a, false});
        const PauliSum generator = jordan_wigner(FermionSum{fwd, rev}, n);

        for (const auto& term : generator.terms()) {
            // term = i*c * P with real c; exp(theta*i*c*P) = exp(-i((-2c)theta/2) P)
            const double c_im = term.coefficient.imag();
            if (std::abs(term.coefficient.real()) > 1e-12)
                throw NumericalError("excitation generator is not anti-Hermitian");
            if (std::abs(c_im) < 1e-14) continue;
            append_pauli_exponential(c, term.string,
                                     ParamBinding::ref(static_cast<int>(k), -2.0 * c_im));
        }
    }
    return {std::move(c), spec, true, "uccsd"};
}

Ansatz build_uccsd(const AnsatzSpec& spec) {
    return build_uccsd(spec, uccsd_excitations(spec.n_qubits, spec.n_electrons));
}

Ansatz build_givens(const AnsatzSpec& spec) {
    if (spec.family != AnsatzFamily::Givens) throw ContractError("spec family is not givens");
    if (spec.n_qubits != 4 || spec.n_electrons != 2)
        throw ContractError("givens ansatz is shaped for a (2e,2o) active space "
                            "(4 qubits, 2 electrons)");
    // Occupation of the lowest spin-up orbital; the CNOT pair copies the
    // up-spin configuration onto the down-spin block, completing the reference
    // and entangling the doubly excited component in one step.
    Circuit c(4, 2);
    c.x(0);
    c.hop(0, 1, ParamBinding::ref(0));
    c.cnot(1, 3);
    c.cnot(0, 2);
    c.hop(0, 1, ParamBinding::ref(1));
    c.hop(2, 3, ParamBinding::ref(1));
    return {std::move(c), spec, true, "givens"};
}

Ansatz build_ansatz(const AnsatzSpec& spec) {
    switch (spec.family) {
        case AnsatzFamily::RyRz: return build_ryrz(spec);
        case AnsatzFamily::SwapRz: return build_swaprz(spec);
        case AnsatzFamily::UCCSD: return build_uccsd(spec);
        case AnsatzFamily::Givens: return build_givens(spec);
    }
    throw ContractError("unknown ansatz family");
}

} // namespace vqebench
