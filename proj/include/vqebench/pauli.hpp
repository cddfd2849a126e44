#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vqebench {

using complexd = std::complex<double>;

/// n-qubit Pauli string stored as two bitmasks: bit q of `x` is set when the
/// letter on qubit q is X or Y, bit q of `z` when it is Z or Y. The identity
/// has both masks zero.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::uint32_t n_qubits);
    PauliString(std::uint32_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

    /// Parse a letter string like "XIZY"; qubit 0 is the leftmost character.
    static PauliString from_letters(const std::string& letters);

    std::uint32_t n_qubits() const { return n_; }
    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }
    bool is_identity() const { return x_ == 0 && z_ == 0; }

    /// Letter on one qubit as a character in {I,X,Y,Z}.
    char letter(std::uint32_t q) const;
    /// Letter string, qubit 0 leftmost.
    std::string letters() const;

    /// Number of qubits carrying Y.
    int y_count() const;
    /// Qubits where the letter is not I (support mask).
    std::uint64_t support() const { return x_ | z_; }

    bool operator==(const PauliString& o) const {
        return n_ == o.n_ && x_ == o.x_ && z_ == o.z_;
    }
    /// Canonical term order: lexicographic on the (x, z) bitmask pair.
    bool operator<(const PauliString& o) const {
        if (x_ != o.x_) return x_ < o.x_;
        return z_ < o.z_;
    }

  private:
    std::uint32_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

/// Product of two Pauli strings: a * b = phase * product with phase one of
/// {1, i, -1, -i}.
struct PauliProduct {
    complexd phase;
    PauliString string;
};
PauliProduct multiply(const PauliString& a, const PauliString& b);

struct PauliTerm {
    complexd coefficient;
    PauliString string;
};

/// Weighted sum of Pauli strings over a common qubit count.
class PauliSum {
  public:
    PauliSum() = default;
    explicit PauliSum(std::uint32_t n_qubits) : n_(n_qubits) {}

    static PauliSum identity(std::uint32_t n_qubits, complexd coefficient = 1.0);

    std::uint32_t n_qubits() const { return n_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add_term(complexd coefficient, const PauliString& s);

    PauliSum& operator+=(const PauliSum& o);
    PauliSum& operator-=(const PauliSum& o);
    PauliSum& operator*=(complexd scale);
    friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
    friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
    friend PauliSum operator*(PauliSum a, complexd s) { return a *= s; }
    friend PauliSum operator*(complexd s, PauliSum a) { return a *= s; }
    /// Operator product; terms are multiplied pairwise and the result simplified.
    friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

    /// Merge like terms, drop |coefficient| <= threshold, sort canonically.
    PauliSum simplified(double threshold = 1e-12) const;

    /// True when every coefficient is real within tol.
    bool is_hermitian(double tol = 1e-12) const;

    /// Coefficient of the identity string (0 if absent).
    complexd identity_coefficient() const;

    /// Dense matrix in little-endian basis order (qubit 0 = least significant
    /// bit). Throws ResourceError above the qubit cap.
    Eigen::MatrixXcd to_dense_matrix(std::uint32_t max_qubits = 12) const;

    /// One term per line: "<re> <im> <letters>" with qubit 0 leftmost.
    std::string to_text() const;
    static PauliSum from_text(const std::string& text);

  private:
    std::uint32_t n_ = 0;
    std::vector<PauliTerm> terms_;
};

std::ostream& operator<<(std::ostream& os, const PauliSum& s);

} // namespace vqebench
