#include "vqebench/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "vqebench/errors.hpp"

namespace vqebench {

namespace {

constexpr std::uint32_t kMaxStringQubits = 64;

// Letter code: x + 2z, i.e. I=0, X=1, Z=2, Y=3.
inline int letter_code(std::uint64_t x, std::uint64_t z, std::uint32_t q) {
    return static_cast<int>((x >> q) & 1) + 2 * static_cast<int>((z >> q) & 1);
}

// i-exponent of the single-qubit product table: row * col = i^e * (row xor col).
// Rows/cols indexed by letter code I=0, X=1, Z=2, Y=3.
constexpr int kPhaseExp[4][4] = {
    {0, 0, 0, 0},  // I *
    {0, 0, 3, 1},  // X * {I,X,Z,Y}: XZ=-iY, XY=iZ
    {0, 1, 0, 3},  // Z * {I,X,Z,Y}: ZX=iY,  ZY=-iX
    {0, 3, 1, 0},  // Y * {I,X,Z,Y}: YX=-iZ, YZ=iX
};

constexpr complexd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

struct MaskKey {
    std::uint64_t x, z;
    bool operator==(const MaskKey& o) const { return x == o.x && z == o.z; }
};
struct MaskKeyHash {
    std::size_t operator()(const MaskKey& k) const {
        std::uint64_t h = k.x * 0x9e3779b97f4a7c15ULL;
        h ^= k.z + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

} // namespace

PauliString::PauliString(std::uint32_t n_qubits) : n_(n_qubits) {
    if (n_qubits > kMaxStringQubits)
        throw SizeError("PauliString supports at most 64 qubits");
}

PauliString::PauliString(std::uint32_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_(n_qubits), x_(x_mask), z_(z_mask) {
    if (n_qubits > kMaxStringQubits)
        throw SizeError("PauliString supports at most 64 qubits");
    const std::uint64_t valid = n_qubits == 64 ? ~0ULL : (1ULL << n_qubits) - 1;
    if ((x_mask & ~valid) || (z_mask & ~valid))
        throw SizeError("Pauli mask references qubit beyond n_qubits");
}

PauliString PauliString::from_letters(const std::string& letters) {
    PauliString s(static_cast<std::uint32_t>(letters.size()));
    for (std::uint32_t q = 0; q < letters.size(); ++q) {
        switch (letters[q]) {
            case 'I': break;
            case 'X': s.x_ |= 1ULL << q; break;
            case 'Y': s.x_ |= 1ULL << q; s.z_ |= 1ULL << q; break;
            case 'Z': s.z_ |= 1ULL << q; break;
            default:
                throw ParseError(std::string("invalid Pauli letter '") + letters[q] + "'");
        }
    }
    return s;
}

char PauliString::letter(std::uint32_t q) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[letter_code(x_, z_, q)];
}

std::string PauliString::letters() const {
    std::string out(n_, 'I');
    for (std::uint32_t q = 0; q < n_; ++q) out[q] = letter(q);
    return out;
}

int PauliString::y_count() const {
    return std::popcount(x_ & z_);
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
    if (a.n_qubits() != b.n_qubits())
        throw SizeError("Pauli product over mismatched qubit counts");
    int exp = 0;
    for (std::uint32_t q = 0; q < a.n_qubits(); ++q)
        exp += kPhaseExp[letter_code(a.x_mask(), a.z_mask(), q)]
                        [letter_code(b.x_mask(), b.z_mask(), q)];
    PauliString prod(a.n_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask());
    return {kIPow[exp & 3], prod};
}

PauliSum PauliSum::identity(std::uint32_t n_qubits, complexd coefficient) {
    PauliSum s(n_qubits);
    s.add_term(coefficient, PauliString(n_qubits));
    return s;
}

void PauliSum::add_term(complexd coefficient, const PauliString& s) {
    if (s.n_qubits() != n_)
        throw SizeError("term qubit count does not match sum");
    terms_.push_back({coefficient, s});
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
    if (o.n_ != n_) throw SizeError("PauliSum addition over mismatched qubit counts");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) {
    if (o.n_ != n_) throw SizeError("PauliSum subtraction over mismatched qubit counts");
    terms_.reserve(terms_.size() + o.terms_.size());
    for (const auto& t : o.terms_) terms_.push_back({-t.coefficient, t.string});
    return *this;
}

PauliSum& PauliSum::operator*=(complexd scale) {
    for (auto& t : terms_) t.coefficient *= scale;
    return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
    if (a.n_ != b.n_) throw SizeError("PauliSum product over mismatched qubit counts");
    PauliSum out(a.n_);
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            auto [phase, prod] = multiply(ta.string, tb.string);
            out.terms_.push_back({ta.coefficient * tb.coefficient * phase, prod});
        }
    return out.simplified();
}

PauliSum PauliSum::simplified(double threshold) const {
    if (threshold < 0) throw ContractError("simplify threshold must be >= 0");
    std::unordered_map<MaskKey, complexd, MaskKeyHash> acc;
    acc.reserve(terms_.size());
    for (const auto& t : terms_)
        acc[{t.string.x_mask(), t.string.z_mask()}] += t.coefficient;
    PauliSum out(n_);
    out.terms_.reserve(acc.size());
    for (const auto& [key, coeff] : acc) {
        if (std::abs(coeff) <= threshold) continue;
        out.terms_.push_back({coeff, PauliString(n_, key.x, key.z)});
    }
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const PauliTerm& a, const PauliTerm& b) { return a.string < b.string; });
    return out;
}

bool PauliSum::is_hermitian(double tol) const {
    for (const auto& t : terms_)
        if (std::abs(t.coefficient.imag()) > tol) return false;
    return true;
}

complexd PauliSum::identity_coefficient() const {
    complexd c = 0.0;
    for (const auto& t : terms_)
        if (t.string.is_identity()) c += t.coefficient;
    return c;
}

Eigen::MatrixXcd PauliSum::to_dense_matrix(std::uint32_t max_qubits) const {
    if (n_ > max_qubits)
        throw ResourceError("dense matrix requested for " + std::to_string(n_) +
                            " qubits (cap " + std::to_string(max_qubits) + ")");
    const std::uint64_t dim = 1ULL << n_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : terms_) {
        const std::uint64_t x = t.string.x_mask();
        const std::uint64_t z = t.string.z_mask();
        const complexd base = t.coefficient * kIPow[t.string.y_count() & 3];
        for (std::uint64_t col = 0; col < dim; ++col) {
            const int sign = std::popcount(col & z) & 1 ? -1 : 1;
            m(col ^ x, col) += base * static_cast<double>(sign);
        }
    }
    return m;
}

std::string PauliSum::to_text() const {
    std::ostringstream os;
    os.precision(17);
    for (const auto& t : terms_)
        os << t.coefficient.real() << " " << t.coefficient.imag() << " "
           << t.string.letters() << "\n";
    return os.str();
}

PauliSum PauliSum::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<PauliTerm> terms;
    std::uint32_t n = 0;
    long line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        double re, im;
        std::string letters;
        if (!(ls >> re >> im >> letters))
            throw ParseError("expected '<re> <im> <letters>'", line_no);
        PauliString s = PauliString::from_letters(letters);
        if (terms.empty()) {
            n = s.n_qubits();
        } else if (s.n_qubits() != n) {
            throw ParseError("inconsistent string length", line_no);
        }
        terms.push_back({{re, im}, s});
    }
    PauliSum out(n);
    for (const auto& t : terms) out.add_term(t.coefficient, t.string);
    return out;
}

std::ostream& operator<<(std::ostream& os, const PauliSum& s) {
    return os << s.to_text();
}

} // namespace vqebench
