#include "vqebench/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "vqebench/errors.hpp"
#include "vqebench/rng.hpp"

namespace vqebench {

namespace {

constexpr std::uint32_t kMaxSimQubits = 26; // amplitude array cap, well above need

void matrix_to_re_im_2(const Eigen::Matrix2cd& m, double re[2][2], double im[2][2]) {
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            re[r][c] = m(r, c).real();
            im[r][c] = m(r, c).imag();
        }
}

void matrix_to_re_im_4(const Eigen::Matrix4cd& m, double re[4][4], double im[4][4]) {
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            re[r][c] = m(r, c).real();
            im[r][c] = m(r, c).imag();
        }
}

} // namespace

Statevector::Statevector(std::uint32_t n_qubits) : n_(n_qubits) {
    if (n_qubits > kMaxSimQubits)
        throw ResourceError("statevector limited to " + std::to_string(kMaxSimQubits) +
                            " qubits");
    amps_.assign(std::uint64_t(1) << n_, complexd(0, 0));
}

Statevector Statevector::zero_state(std::uint32_t n_qubits) {
    return basis_state(n_qubits, 0);
}

Statevector Statevector::basis_state(std::uint32_t n_qubits, std::uint64_t index) {
    Statevector s(n_qubits);
    if (index >= s.dim()) throw SizeError("basis index out of range");
    s.amps_[index] = 1.0;
    return s;
}

double Statevector::norm() const {
    double acc = 0;
    for (const auto& a : amps_) acc += std::norm(a);
    return std::sqrt(acc);
}

void Statevector::apply_1q(const double m_re[2][2], const double m_im[2][2],
                           std::uint32_t q) {
    const std::uint64_t mask = std::uint64_t(1) << q;
    const std::uint64_t lo = mask - 1;
    const std::uint64_t hi = ~lo;
    const std::uint64_t half = dim() >> 1;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = ((i & hi) << 1) | (i & lo);
        const std::uint64_t i1 = i0 | mask;
        const complexd a0 = amps_[i0];
        const complexd a1 = amps_[i1];
        amps_[i0] = complexd(m_re[0][0], m_im[0][0]) * a0 + complexd(m_re[0][1], m_im[0][1]) * a1;
        amps_[i1] = complexd(m_re[1][0], m_im[1][0]) * a0 + complexd(m_re[1][1], m_im[1][1]) * a1;
    }
}

void Statevector::apply_2q(const double m_re[4][4], const double m_im[4][4],
                           std::uint32_t a, std::uint32_t b) {
    const std::uint64_t mask_a = std::uint64_t(1) << a;
    const std::uint64_t mask_b = std::uint64_t(1) << b;
    const std::uint32_t qmin = std::min(a, b), qmax = std::max(a, b);
    const std::uint64_t lo = (std::uint64_t(1) << qmin) - 1;
    const std::uint64_t mid = ((std::uint64_t(1) << (qmax - 1)) - 1) & ~lo;
    const std::uint64_t hi = ~(lo | mid);
    const std::uint64_t quarter = dim() >> 2;
    for (std::uint64_t i = 0; i < quarter; ++i) {
        const std::uint64_t base = ((i & hi) << 2) | ((i & mid) << 1) | (i & lo);
        // internal index = bit(a) + 2*bit(b)
        const std::uint64_t idx[4] = {base, base | mask_a, base | mask_b,
                                      base | mask_a | mask_b};
        complexd in[4];
        for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
        for (int r = 0; r < 4; ++r) {
            complexd acc(0, 0);
            for (int c = 0; c < 4; ++c)
                acc += complexd(m_re[r][c], m_im[r][c]) * in[c];
            amps_[idx[r]] = acc;
        }
    }
}

void Statevector::apply_bound(GateKind kind, std::uint32_t a, std::uint32_t b,
                              double angle) {
    if (gate_arity(kind) == 1) {
        if (a >= n_) throw SizeError("gate target out of range");
        double re[2][2], im[2][2];
        matrix_to_re_im_2(gate_matrix_1q(kind, angle), re, im);
        apply_1q(re, im, a);
    } else {
        if (a >= n_ || b >= n_ || a == b) throw SizeError("bad two-qubit targets");
        double re[4][4], im[4][4];
        matrix_to_re_im_4(gate_matrix_2q(kind, angle), re, im);
        apply_2q(re, im, a, b);
    }
}

void Statevector::apply(const Gate& g, const Circuit& owner,
                        std::span<const double> parameters) {
    apply_bound(g.kind, g.targets[0], g.targets[1], owner.bound_angle(g, parameters));
}

double Statevector::expectation(const PauliSum& obs) const {
    if (obs.n_qubits() != n_)
        throw SizeError("observable qubit count does not match state");
    if (!obs.is_hermitian(1e-10))
        throw ContractError("expectation requires a Hermitian observable");
    complexd acc(0, 0);
    for (const auto& t : obs.terms()) acc += t.coefficient * expectation(t.string);
    return acc.real();
}

complexd Statevector::expectation(const PauliString& p) const {
    if (p.n_qubits() != n_) throw SizeError("string qubit count does not match state");
    const std::uint64_t x = p.x_mask(), z = p.z_mask();
    static constexpr complexd ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const complexd base = ipow[p.y_count() & 3];
    complexd acc(0, 0);
    for (std::uint64_t j = 0; j < dim(); ++j) {
        const double sign = (std::popcount(j & z) & 1) ? -1.0 : 1.0;
        acc += std::conj(amps_[j ^ x]) * base * sign * amps_[j];
    }
    return acc;
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> p(dim());
    for (std::uint64_t i = 0; i < dim(); ++i) p[i] = std::norm(amps_[i]);
    return p;
}

std::map<std::string, std::uint64_t> Statevector::sample_counts(
    std::uint64_t shots, std::uint64_t seed) const {
    const auto probs = probabilities();
    const auto counts = sample_distribution(probs, shots, seed);
    std::map<std::string, std::uint64_t> out;
    for (std::uint64_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0) out[index_to_bitstring(i, n_)] = counts[i];
    return out;
}

double Statevector::sector_leakage(std::uint32_t n_electrons) const {
    double leak = 0;
    for (std::uint64_t i = 0; i < dim(); ++i)
        if (std::popcount(i) != static_cast<int>(n_electrons)) leak += std::norm(amps_[i]);
    return leak;
}

double Statevector::project_particle_sector(std::uint32_t n_electrons) {
    double kept = 0;
    for (std::uint64_t i = 0; i < dim(); ++i) {
        if (std::popcount(i) != static_cast<int>(n_electrons)) {
            amps_[i] = 0;
        } else {
            kept += std::norm(amps_[i]);
        }
    }
    if (kept > 0) {
        const double inv = 1.0 / std::sqrt(kept);
        for (auto& a : amps_) a *= inv;
    }
    return kept;
}

Statevector run(const Circuit& circuit, std::span<const double> parameters,
                Statevector initial) {
    if (initial.n_qubits() != circuit.n_qubits())
        throw SizeError("initial state qubit count does not match circuit");
    if (parameters.size() != circuit.n_parameters())
        throw BindingError("parameter vector length does not match circuit");
    for (const auto& g : circuit.gates()) initial.apply(g, circuit, parameters);
    return initial;
}

Statevector run(const Circuit& circuit, std::span<const double> parameters) {
    return run(circuit, parameters, Statevector::zero_state(circuit.n_qubits()));
}

std::string index_to_bitstring(std::uint64_t index, std::uint32_t n_qubits) {
    std::string s(n_qubits, '0');
    for (std::uint32_t q = 0; q < n_qubits; ++q)
        if ((index >> q) & 1) s[n_qubits - 1 - q] = '1'; // qubit 0 rightmost
    return s;
}

std::uint64_t bitstring_to_index(const std::string& bits) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == '1') idx |= std::uint64_t(1) << (bits.size() - 1 - i);
    return idx;
}

std::vector<std::uint64_t> sample_distribution(std::span<const double> probabilities,
                                               std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) throw ContractError("shots must be >= 1");
    std::vector<double> cdf(probabilities.size());
    double acc = 0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        acc += std::max(0.0, probabilities[i]);
        cdf[i] = acc;
    }
    if (acc <= 0) throw ContractError("distribution has no weight");
    std::mt19937_64 eng(seed);
    std::vector<std::uint64_t> counts(probabilities.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uniform_double(eng) * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
        if (idx >= counts.size()) idx = counts.size() - 1;
        ++counts[idx];
    }
    return counts;
}

} // namespace vqebench
