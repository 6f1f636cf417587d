#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hurwitz {

/// Square +-1 matrix with H H^T = m I. The invariant is checked exactly on construction.
class HadamardMatrix {
public:
    using Row = std::vector<int>;

    explicit HadamardMatrix(std::vector<Row> rows) : rows_(std::move(rows))
    {
        const std::size_t m = rows_.size();
        if (m == 0) throw DomainError("empty Hadamard matrix");
        for (const auto& r : rows_) {
            if (r.size() != m) throw DomainError("Hadamard matrix must be square");
            for (int v : r)
                if (v != 1 && v != -1) throw DomainError("Hadamard entries must be +1 or -1");
        }
        if (!satisfies_orthogonality(rows_)) throw DomainError("rows are not orthogonal: H H^T != m I");
    }

    int order() const { return static_cast<int>(rows_.size()); }
    const std::vector<Row>& rows() const { return rows_; }
    int operator()(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    /// Exact test of H H^T = m I.
    static bool satisfies_orthogonality(const std::vector<Row>& rows)
    {
        const std::size_t m = rows.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                long long dot = 0;
                for (std::size_t k = 0; k < m; ++k) dot += rows[i][k] * rows[j][k];
                if (dot != (i == j ? static_cast<long long>(m) : 0)) return false;
            }
        return true;
    }

    /// Negates every row whose first entry is -1, making the first column all +1.
    HadamardMatrix row_normalized() const
    {
        auto rows = rows_;
        for (auto& r : rows)
            if (r.front() == -1)
                for (int& v : r) v = -v;
        return HadamardMatrix(std::move(rows));
    }

    friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

private:
    std::vector<Row> rows_;
};

/// Sylvester doubling: order 2^k.
inline HadamardMatrix hadamard_sylvester(int k)
{
    if (k < 0 || k > 12) throw DomainError("Sylvester order exponent must be in 0..12");
    std::vector<HadamardMatrix::Row> h{{1}};
    for (int step = 0; step < k; ++step) {
        const std::size_t m = h.size();
        std::vector<HadamardMatrix::Row> next(2 * m, HadamardMatrix::Row(2 * m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                next[i][j] = next[i][j + m] = next[i + m][j] = h[i][j];
                next[i + m][j + m] = -h[i][j];
            }
        h = std::move(next);
    }
    return HadamardMatrix(std::move(h));
}

inline bool is_prime(long long q)
{
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

/// Paley type I construction for a prime q = 3 (mod 4): order q + 1.
///
/// H = I + S with S = [[0, 1^T], [-1, Q]] and Q_ij = chi(j - i), chi the quadratic
/// character mod q. S is skew-symmetric because chi(-1) = -1.
inline HadamardMatrix hadamard_paley(int q)
{
    if (!is_prime(q) || q % 4 != 3) throw DomainError("Paley construction needs a prime q = 3 mod 4");
    if (q > 4093) throw DomainError("Paley order too large");
    std::vector<int> chi(static_cast<std::size_t>(q), -1);
    chi[0] = 0;
    for (long long x = 1; x < q; ++x) chi[static_cast<std::size_t>(x * x % q)] = 1;

    const std::size_t m = static_cast<std::size_t>(q) + 1;
    std::vector<HadamardMatrix::Row> h(m, HadamardMatrix::Row(m));
    for (std::size_t j = 1; j < m; ++j) {
        h[0][j] = 1;
        h[j][0] = -1;
    }
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 1; j < m; ++j) {
            const auto diff = (static_cast<long long>(j) - static_cast<long long>(i) + q) % q;
            h[i][j] = chi[static_cast<std::size_t>(diff)];
        }
    for (std::size_t i = 0; i < m; ++i) h[i][i] += 1;
    return HadamardMatrix(std::move(h));
}

/// One row per line of '+' and '-'; whitespace inside a line is ignored and '#' starts a comment.
inline HadamardMatrix read_hadamard(std::istream& in)
{
    std::vector<HadamardMatrix::Row> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        HadamardMatrix::Row row;
        for (char c : line) {
            if (c == '+') row.push_back(1);
            else if (c == '-') row.push_back(-1);
            else if (c != ' ' && c != '\t' && c != '\r') throw ParseError(std::string("unexpected character '") + c + "' in Hadamard row");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    try {
        return HadamardMatrix(std::move(rows));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

inline std::string write_hadamard(const HadamardMatrix& h)
{
    std::string out;
    for (const auto& r : h.rows()) {
        for (int v : r) out += v > 0 ? '+' : '-';
        out += '\n';
    }
    return out;
}

} // namespace hurwitz
