#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitvec.hpp"

namespace hurwitz {

/// Index set of a monomial, 1-based and strictly increasing.
using IndexSet = std::vector<int>;

/// Mask of the coordinates in `idx`; repeated indices collapse (x_i^2 = x_i).
inline std::uint64_t index_mask(int n, std::span<const int> idx)
{
    std::uint64_t m = 0;
    for (int i : idx) {
        if (i < 1 || i > n)
            throw DomainError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        m |= std::uint64_t{1} << coord_bit(n, i);
    }
    return m;
}

inline IndexSet mask_indices(int n, std::uint64_t mask)
{
    IndexSet out;
    for (int i = 1; i <= n; ++i)
        if ((mask >> coord_bit(n, i)) & 1U) out.push_back(i);
    return out;
}

namespace detail {

// Degree descending, then index lists in lexicographic order.
inline void sort_monomials(int n, std::vector<std::uint64_t>& ms)
{
    std::sort(ms.begin(), ms.end(), [n](std::uint64_t a, std::uint64_t b) {
        const int da = std::popcount(a), db = std::popcount(b);
        if (da != db) return da > db;
        return mask_indices(n, a) < mask_indices(n, b);
    });
}

// Sorts and cancels pairs of equal entries (sum over F_2).
template <class T, class Less>
void xor_reduce(std::vector<T>& v, Less less)
{
    std::sort(v.begin(), v.end(), less);
    std::vector<T> out;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && !less(v[i], v[j]) && !less(v[j], v[i])) ++j;
        if ((j - i) % 2 == 1) out.push_back(v[i]);
        i = j;
    }
    v = std::move(out);
}

inline void skip_spaces(std::string_view s, std::size_t& pos)
{
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

// Reads a run of "<var><digits>" factors, e.g. "x1x2y3".
inline std::vector<std::pair<char, int>> parse_factors(std::string_view term, std::string_view vars)
{
    std::vector<std::pair<char, int>> out;
    std::size_t pos = 0;
    skip_spaces(term, pos);
    while (pos < term.size()) {
        const char v = term[pos];
        if (vars.find(v) == std::string_view::npos)
            throw ParseError("unexpected '" + std::string(1, v) + "' in term '" + std::string(term) + "'");
        ++pos;
        std::size_t start = pos;
        while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
        if (start == pos || pos - start > 3)
            throw ParseError("missing or oversized index in term '" + std::string(term) + "'");
        out.emplace_back(v, std::stoi(std::string(term.substr(start, pos - start))));
        if (pos < term.size() && term[pos] == '*') ++pos;
        skip_spaces(term, pos);
    }
    if (out.empty()) throw ParseError("empty term");
    return out;
}

inline std::vector<std::string_view> split_terms(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '+') {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline bool is_zero_text(std::string_view s)
{
    std::size_t pos = 0;
    skip_spaces(s, pos);
    if (pos == s.size()) return true;
    if (s[pos] != '0') return false;
    ++pos;
    skip_spaces(s, pos);
    return pos == s.size();
}

} // namespace detail

/// Boolean function of degree <= 3 without constant term, in algebraic normal form.
///
/// Monomials are stored as coordinate masks, sorted by degree descending and then by
/// index list, so two forms are equal iff they define the same function.
class CubicForm {
public:
    explicit CubicForm(int n) : n_(n)
    {
        if (n < 1 || n > kMaxDim) throw DomainError("dimension must be in 1..64");
    }

    /// Builds the form from index lists, reducing x_i^2 = x_i and cancelling duplicates.
    static CubicForm from_index_sets(int n, const std::vector<IndexSet>& monomials)
    {
        CubicForm f(n);
        for (const auto& idx : monomials) {
            if (idx.empty()) throw DomainError("constant monomial not allowed in a cubic form");
            const auto m = index_mask(n, idx);
            if (std::popcount(m) > 3) throw DomainError("monomial of degree > 3");
            f.monos_.push_back(m);
        }
        f.canonicalize();
        return f;
    }

    /// Builds the form from coordinate masks (each of popcount 1..3).
    static CubicForm from_masks(int n, std::vector<std::uint64_t> masks)
    {
        CubicForm f(n);
        for (auto m : masks) {
            const int d = std::popcount(m);
            if (d < 1 || d > 3 || (m & ~low_mask(n)) != 0) throw DomainError("invalid monomial mask");
        }
        f.monos_ = std::move(masks);
        f.canonicalize();
        return f;
    }

    int dim() const { return n_; }
    const std::vector<std::uint64_t>& masks() const { return monos_; }
    std::size_t size() const { return monos_.size(); }
    bool empty() const { return monos_.empty(); }

    std::vector<IndexSet> index_sets() const
    {
        std::vector<IndexSet> out;
        out.reserve(monos_.size());
        for (auto m : monos_) out.push_back(mask_indices(n_, m));
        return out;
    }

    int degree() const
    {
        int d = 0;
        for (auto m : monos_) d = std::max(d, std::popcount(m));
        return d;
    }

    bool operator()(BitVec x) const
    {
        require_same_dim(n_, x.dim());
        return eval_bits(x.bits());
    }

    /// Evaluation on a raw n-bit word; no dimension check.
    bool eval_bits(std::uint64_t x) const
    {
        bool acc = false;
        for (auto m : monos_) acc ^= (x & m) == m;
        return acc;
    }

    /// Values on all of F_2^n, indexed by numeric value. Requires n <= 26.
    std::vector<std::uint8_t> truth_table() const
    {
        if (n_ > 26) throw BudgetExceeded("truth table of dimension > 26");
        std::vector<std::uint8_t> t(std::size_t{1} << n_);
        for (std::size_t v = 0; v < t.size(); ++v) t[v] = eval_bits(v);
        return t;
    }

    friend bool operator==(const CubicForm&, const CubicForm&) = default;

private:
    void canonicalize()
    {
        detail::xor_reduce(monos_, std::less<>{});
        detail::sort_monomials(n_, monos_);
    }

    int n_;
    std::vector<std::uint64_t> monos_;
};

inline bool eval_cubic(const CubicForm& f, BitVec x) { return f(x); }

/// The counting form: every triple, every pair and every singleton.
inline CubicForm make_alpha_O(int n)
{
    std::vector<IndexSet> ms;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) ms.push_back({i, j, k});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) ms.push_back({i, j});
    for (int i = 1; i <= n; ++i) ms.push_back({i});
    return CubicForm::from_index_sets(n, ms);
}

/// Closed form of alpha_O: 0 iff wt(x) is a multiple of 4.
constexpr bool alpha_O_closed(BitVec x) { return wt(x) % 4 != 0; }

/// "x1x2x3+x1x2+x1"; the empty form renders as "0".
inline std::string to_text(const CubicForm& f)
{
    if (f.empty()) return "0";
    std::string s;
    for (const auto& idx : f.index_sets()) {
        if (!s.empty()) s += '+';
        for (int i : idx) s += "x" + std::to_string(i);
    }
    return s;
}

/// Parses the '+'-joined monomial text; "0" or blank is the empty form.
inline CubicForm parse_cubic(std::string_view text, int n)
{
    if (detail::is_zero_text(text)) return CubicForm(n);
    std::vector<IndexSet> ms;
    for (auto term : detail::split_terms(text)) {
        IndexSet idx;
        for (auto [v, i] : detail::parse_factors(term, "x")) idx.push_back(i);
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        if (idx.size() > 3) throw ParseError("term '" + std::string(term) + "' has degree > 3");
        for (int i : idx)
            if (i < 1 || i > n) throw ParseError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        ms.push_back(std::move(idx));
    }
    return CubicForm::from_index_sets(n, ms);
}

/// Every monomial of degree 1..3 in canonical order. Subsets of this list are
/// exactly the cubic forms on F_2^n.
inline std::vector<std::uint64_t> all_cubic_monomials(int n)
{
    return make_alpha_O(n).masks();
}

} // namespace hurwitz
