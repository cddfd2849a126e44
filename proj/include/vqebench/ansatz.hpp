#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vqebench/circuit.hpp"

namespace vqebench {

enum class AnsatzFamily { RyRz, SwapRz, UCCSD, Givens };
enum class Entanglement { Full, Linear };

AnsatzFamily ansatz_family_from_name(const std::string& name);
const char* ansatz_family_name(AnsatzFamily family);

struct AnsatzSpec {
    AnsatzFamily family = AnsatzFamily::RyRz;
    std::uint32_t n_qubits = 0;
    std::uint32_t n_electrons = 0;
    std::uint32_t repetitions = 1;                    // HE families only
    Entanglement entanglement = Entanglement::Full;   // HE families only
};

struct Ansatz {
    Circuit circuit;
    AnsatzSpec spec;
    bool particle_conserving = false;
    std::string label;
};

/// X gates preparing the closed-shell Hartree-Fock determinant in blocked
/// spin ordering (spin-up on qubits 0..M-1, spin-down on M..2M-1).
Circuit hf_reference(std::uint32_t n_qubits, std::uint32_t n_electrons);

/// One spin-preserving excitation from occupied to virtual spin-orbitals.
struct Excitation {
    std::vector<std::uint32_t> from;
    std::vector<std::uint32_t> to;
};

/// Singles then doubles, enumerated from the HF reference, spin-preserving,
/// ascending index order.
std::vector<Excitation> uccsd_excitations(std::uint32_t n_qubits,
                                          std::uint32_t n_electrons);

Ansatz build_ryrz(const AnsatzSpec& spec);
Ansatz build_swaprz(const AnsatzSpec& spec);
Ansatz build_uccsd(const AnsatzSpec& spec, const std::vector<Excitation>& excitations);
Ansatz build_uccsd(const AnsatzSpec& spec); // default excitation set
Ansatz build_givens(const AnsatzSpec& spec);

/// Dispatch on spec.family.
Ansatz build_ansatz(const AnsatzSpec& spec);

} // namespace vqebench
