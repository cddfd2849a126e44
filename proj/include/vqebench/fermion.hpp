#pragma once

#include <cstdint>
#include <vector>

#include "vqebench/pauli.hpp"

namespace vqebench {

/// One creation or annihilation operator acting on a spin-orbital.
struct FermionOp {
    std::uint32_t index;
    bool create;
};

/// coefficient * a^(dag)_{i1} a^(dag)_{i2} ... in the written order.
struct FermionTerm {
    double coefficient = 0.0;
    std::vector<FermionOp> ops;
};

using FermionSum = std::vector<FermionTerm>;

/// Jordan-Wigner image of a single operator: a_p^dag = (X_p - iY_p)/2 * Z_{p-1}...Z_0,
/// a_p the conjugate. Z string on indices below p, little-endian.
PauliSum jordan_wigner(const FermionOp& op, std::uint32_t n_spin_orbitals);

/// Map a product term multiplicatively, then simplify.
PauliSum jordan_wigner(const FermionTerm& term, std::uint32_t n_spin_orbitals);

/// Map a sum of terms; result acts on n_spin_orbitals qubits.
PauliSum jordan_wigner(const FermionSum& sum, std::uint32_t n_spin_orbitals);

/// JW image of the particle number operator P = sum_i a_i^dag a_i.
PauliSum particle_number_operator(std::uint32_t n_spin_orbitals);

enum class PenaltyForm {
    SquaredDeviation, // (P - N)^2: penalizes any deviation from N electrons
    NumberOperator,   // plain P, as printed in the source cost function
};

/// Penalty observable for particle-number violations. The squared-deviation
/// form has expectation zero exactly on N-electron basis states and strictly
/// positive otherwise.
PauliSum penalty_hamiltonian(std::uint32_t n_spin_orbitals, std::uint32_t n_electrons,
                             PenaltyForm form = PenaltyForm::SquaredDeviation);

} // namespace vqebench
