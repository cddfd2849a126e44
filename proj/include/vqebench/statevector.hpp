#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vqebench/circuit.hpp"
#include "vqebench/pauli.hpp"

namespace vqebench {

/// Complex amplitudes over 2^n little-endian basis states (qubit 0 is the
/// least significant bit of the index).
class Statevector {
  public:
    Statevector() = default;
    explicit Statevector(std::uint32_t n_qubits);

    static Statevector zero_state(std::uint32_t n_qubits);
    static Statevector basis_state(std::uint32_t n_qubits, std::uint64_t index);

    std::uint32_t n_qubits() const { return n_; }
    std::uint64_t dim() const { return std::uint64_t(1) << n_; }
    const std::vector<complexd>& amplitudes() const { return amps_; }
    std::vector<complexd>& amplitudes() { return amps_; }
    complexd operator[](std::uint64_t i) const { return amps_[i]; }

    double norm() const;

    /// Apply one gate in place; parameters resolve the gate's binding.
    void apply(const Gate& g, const Circuit& owner, std::span<const double> parameters);
    /// Apply a gate with an explicitly bound angle.
    void apply_bound(GateKind kind, std::uint32_t a, std::uint32_t b, double angle);

    /// <psi| obs |psi> for a Hermitian observable; throws ContractError when a
    /// coefficient has an imaginary part above 1e-10.
    double expectation(const PauliSum& obs) const;

    /// <psi| P |psi> for a single string (complex in general).
    complexd expectation(const PauliString& p) const;

    std::vector<double> probabilities() const;

    /// Multinomial sample of measurement outcomes; deterministic per seed.
    std::map<std::string, std::uint64_t> sample_counts(std::uint64_t shots,
                                                       std::uint64_t seed) const;

    /// Total probability outside the given particle-number sector
    /// (basis states whose popcount differs from n_electrons).
    double sector_leakage(std::uint32_t n_electrons) const;

    /// Project onto the fixed particle-number sector and renormalize;
    /// returns the retained probability weight.
    double project_particle_sector(std::uint32_t n_electrons);

  private:
    void apply_1q(const double m_re[2][2], const double m_im[2][2], std::uint32_t q);
    void apply_2q(const double m_re[4][4], const double m_im[4][4], std::uint32_t a,
                  std::uint32_t b);

    std::uint32_t n_ = 0;
    std::vector<complexd> amps_;
};

/// Run a circuit left to right on an initial state (|0...0> by default).
Statevector run(const Circuit& circuit, std::span<const double> parameters);
Statevector run(const Circuit& circuit, std::span<const double> parameters,
                Statevector initial);

/// Sampled outcome distribution helpers.
std::string index_to_bitstring(std::uint64_t index, std::uint32_t n_qubits);
std::uint64_t bitstring_to_index(const std::string& bits);

/// Multinomial draw from an explicit distribution; deterministic per seed.
std::vector<std::uint64_t> sample_distribution(std::span<const double> probabilities,
                                               std::uint64_t shots, std::uint64_t seed);

} // namespace vqebench
