#include "vqebench/fermion.hpp"

#include "vqebench/errors.hpp"

namespace vqebench {

PauliSum jordan_wigner(const FermionOp& op, std::uint32_t n_spin_orbitals) {
    if (op.index >= n_spin_orbitals)
        throw SizeError("spin-orbital index " + std::to_string(op.index) +
                        " out of range for " + std::to_string(n_spin_orbitals) + " spin-orbitals");
    const std::uint64_t p = 1ULL << op.index;
    const std::uint64_t zstring = p - 1; // Z on every index below p
    PauliSum out(n_spin_orbitals);
    out.add_term(0.5, PauliString(n_spin_orbitals, p, zstring));
    const complexd y_coeff = op.create ? complexd(0, -0.5) : complexd(0, 0.5);
    out.add_term(y_coeff, PauliString(n_spin_orbitals, p, zstring | p));
    return out;
}

PauliSum jordan_wigner(const FermionTerm& term, std::uint32_t n_spin_orbitals) {
    PauliSum acc = PauliSum::identity(n_spin_orbitals, term.coefficient);
    for (const auto& op : term.ops) acc = acc * jordan_wigner(op, n_spin_orbitals);
    return acc;
}

PauliSum jordan_wigner(const FermionSum& sum, std::uint32_t n_spin_orbitals) {
    PauliSum acc(n_spin_orbitals);
    for (const auto& term : sum) acc += jordan_wigner(term, n_spin_orbitals);
    return acc.simplified();
}

PauliSum particle_number_operator(std::uint32_t n_spin_orbitals) {
    if (n_spin_orbitals < 1)
        throw ContractError("particle number operator needs at least one spin-orbital");
    FermionSum number;
    for (std::uint32_t i = 0; i < n_spin_orbitals; ++i)
        number.push_back({1.0, {{i, true}, {i, false}}});
    return jordan_wigner(number, n_spin_orbitals);
}

PauliSum penalty_hamiltonian(std::uint32_t n_spin_orbitals, std::uint32_t n_electrons,
                             PenaltyForm form) {
    if (n_electrons > n_spin_orbitals)
        throw ContractError("n_electrons exceeds n_spin_orbitals");
    const PauliSum p = particle_number_operator(n_spin_orbitals);
    if (form == PenaltyForm::NumberOperator) return p;
    const PauliSum dev =
        p - PauliSum::identity(n_spin_orbitals, static_cast<double>(n_electrons));
    return (dev * dev).simplified();
}

} // namespace vqebench
