#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bitvec.hpp"
#include "cubic_form.hpp"

namespace hurwitz {

/// Monomial prod_{i in I} x_i * prod_{j in J} y_j, as coordinate masks.
struct TwistMonomial {
    std::uint64_t x_mask = 0;
    std::uint64_t y_mask = 0;

    friend bool operator==(const TwistMonomial&, const TwistMonomial&) = default;
    friend auto operator<=>(const TwistMonomial&, const TwistMonomial&) = default;
};

/// Twisting function f : F_2^n x F_2^n -> F_2 given by monomials with at least one
/// factor from each argument and total degree at most 3.
class TwistFn {
public:
    explicit TwistFn(int n) : n_(n)
    {
        if (n < 1 || n > kMaxDim) throw DomainError("dimension must be in 1..64");
    }

    static TwistFn from_monomials(int n, std::vector<TwistMonomial> ms)
    {
        TwistFn f(n);
        for (const auto& m : ms) {
            const int dx = std::popcount(m.x_mask), dy = std::popcount(m.y_mask);
            if (dx < 1 || dy < 1 || dx + dy > 3)
                throw DomainError("twist monomial needs a factor from each argument and degree <= 3");
            if (((m.x_mask | m.y_mask) & ~low_mask(n)) != 0) throw DomainError("twist monomial index out of range");
        }
        f.monos_ = std::move(ms);
        f.canonicalize();
        return f;
    }

    static TwistFn from_index_sets(int n, const std::vector<std::pair<IndexSet, IndexSet>>& ms)
    {
        std::vector<TwistMonomial> out;
        out.reserve(ms.size());
        for (const auto& [i, j] : ms) out.push_back({index_mask(n, i), index_mask(n, j)});
        return from_monomials(n, std::move(out));
    }

    int dim() const { return n_; }
    const std::vector<TwistMonomial>& monomials() const { return monos_; }
    std::size_t size() const { return monos_.size(); }
    bool empty() const { return monos_.empty(); }

    bool operator()(BitVec x, BitVec y) const
    {
        require_same_dim(n_, x.dim());
        require_same_dim(n_, y.dim());
        return eval_bits(x.bits(), y.bits());
    }

    bool eval_bits(std::uint64_t x, std::uint64_t y) const
    {
        bool acc = false;
        for (const auto& m : monos_) acc ^= ((x & m.x_mask) == m.x_mask) && ((y & m.y_mask) == m.y_mask);
        return acc;
    }

    /// Table of f(x, y) at index (x << n) | y. Requires n <= 12.
    std::vector<std::uint8_t> table() const
    {
        if (n_ > 12) throw BudgetExceeded("twist table of dimension > 12");
        const std::size_t size = std::size_t{1} << n_;
        std::vector<std::uint8_t> t(size * size);
        for (std::size_t x = 0; x < size; ++x)
            for (std::size_t y = 0; y < size; ++y) t[(x << n_) | y] = eval_bits(x, y);
        return t;
    }

    /// Drops the monomial at position i; used for mutation tests.
    TwistFn without(std::size_t i) const
    {
        TwistFn f = *this;
        f.monos_.erase(f.monos_.begin() + static_cast<std::ptrdiff_t>(i));
        return f;
    }

    friend bool operator==(const TwistFn&, const TwistFn&) = default;

private:
    void canonicalize()
    {
        detail::xor_reduce(monos_, std::less<>{});
        const int n = n_;
        std::sort(monos_.begin(), monos_.end(), [n](const TwistMonomial& a, const TwistMonomial& b) {
            const int da = std::popcount(a.x_mask) + std::popcount(a.y_mask);
            const int db = std::popcount(b.x_mask) + std::popcount(b.y_mask);
            if (da != db) return da > db;
            const auto ax = mask_indices(n, a.x_mask), bx = mask_indices(n, b.x_mask);
            if (ax != bx) return ax < bx;
            return mask_indices(n, a.y_mask) < mask_indices(n, b.y_mask);
        });
    }

    int n_;
    std::vector<TwistMonomial> monos_;
};

/// Substitutes every monomial of alpha:
///   x_i x_j x_k -> x_i x_j y_k + x_i y_j x_k + y_i x_j x_k,
///   x_i x_j     -> x_i y_j,
///   x_i         -> x_i y_i       (i < j < k).
inline TwistFn twist_from_cubic(const CubicForm& alpha)
{
    const int n = alpha.dim();
    std::vector<TwistMonomial> out;
    for (const auto& idx : alpha.index_sets()) {
        auto bit = [n](int i) { return std::uint64_t{1} << coord_bit(n, i); };
        switch (idx.size()) {
        case 3: {
            const auto i = bit(idx[0]), j = bit(idx[1]), k = bit(idx[2]);
            out.push_back({i | j, k});
            out.push_back({i | k, j});
            out.push_back({j | k, i});
            break;
        }
        case 2: out.push_back({bit(idx[0]), bit(idx[1])}); break;
        case 1: out.push_back({bit(idx[0]), bit(idx[0])}); break;
        default: throw DomainError("non-canonical cubic form");
        }
    }
    return TwistFn::from_monomials(n, std::move(out));
}

/// "x1x2y3+x1y1"; x factors precede y factors in each term.
inline std::string to_text(const TwistFn& f)
{
    if (f.empty()) return "0";
    std::string s;
    for (const auto& m : f.monomials()) {
        if (!s.empty()) s += '+';
        for (int i : mask_indices(f.dim(), m.x_mask)) s += "x" + std::to_string(i);
        for (int j : mask_indices(f.dim(), m.y_mask)) s += "y" + std::to_string(j);
    }
    return s;
}

inline TwistFn parse_twist(std::string_view text, int n)
{
    if (detail::is_zero_text(text)) return TwistFn(n);
    std::vector<std::pair<IndexSet, IndexSet>> ms;
    for (auto term : detail::split_terms(text)) {
        IndexSet xs, ys;
        for (auto [v, i] : detail::parse_factors(term, "xy")) {
            if (i < 1 || i > n) throw ParseError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
            (v == 'x' ? xs : ys).push_back(i);
        }
        ms.emplace_back(std::move(xs), std::move(ys));
    }
    try {
        return TwistFn::from_index_sets(n, ms);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

/// First polarization alpha(x+y) + alpha(x) + alpha(y).
inline bool beta(const CubicForm& alpha, BitVec x, BitVec y)
{
    return alpha(x + y) ^ alpha(x) ^ alpha(y);
}

/// Second polarization: alpha over x+y+z, the three pairwise sums and the three singletons.
inline bool second_polarization(const CubicForm& alpha, BitVec x, BitVec y, BitVec z)
{
    return alpha(x + y + z) ^ alpha(x + y) ^ alpha(x + z) ^ alpha(y + z) ^ alpha(x) ^ alpha(y) ^ alpha(z);
}

/// Non-associativity defect f(y,z) + f(x+y,z) + f(x,y+z) + f(x,y).
inline bool delta_f(const TwistFn& f, BitVec x, BitVec y, BitVec z)
{
    return f(y, z) ^ f(x + y, z) ^ f(x, y + z) ^ f(x, y);
}

struct PropertyCheck {
    bool holds = true;
    bool exhaustive = true;
    std::uint64_t cases = 0;
};

/// Outcome of checking the four defining properties of a twist built from alpha:
/// (a) f(x,y)+f(y,x) = beta, (b) delta_f = second polarization,
/// (c) f is linear in its second argument, (d) f(x,x) = alpha(x).
struct PropertyReport {
    PropertyCheck commutator;       // (a)
    PropertyCheck associator;       // (b)
    PropertyCheck linear_second;    // (c)
    PropertyCheck diagonal;         // (d)

    bool all() const { return commutator.holds && associator.holds && linear_second.holds && diagonal.holds; }
};

struct PropertyOptions {
    int exhaustive_pairs_max_n = 10;    // (a)
    int exhaustive_triples_max_n = 8;   // (b), (c)
    int exhaustive_single_max_n = 20;   // (d)
    std::uint64_t samples = 200000;
    std::uint64_t seed = 0;
};

/// Verifies (a)-(d). Each property is exhaustive up to its threshold and sampled with a
/// seeded generator beyond it.
inline PropertyReport check_properties(const CubicForm& alpha, const TwistFn& f, const PropertyOptions& opt = {})
{
    require_same_dim(alpha.dim(), f.dim());
    const int n = alpha.dim();
    PropertyReport rep;
    std::mt19937_64 rng(opt.seed);
    const std::uint64_t mask = low_mask(n);
    auto draw = [&] { return rng() & mask; };

    // Tables make the cubic loops cheap at small n.
    const bool tabulate = n <= 10;
    std::vector<std::uint8_t> at, ft;
    if (tabulate) {
        at = alpha.truth_table();
        ft = f.table();
    }
    auto A = [&](std::uint64_t x) -> bool { return tabulate ? at[x] != 0 : alpha.eval_bits(x); };
    auto F = [&](std::uint64_t x, std::uint64_t y) -> bool {
        return tabulate ? ft[(x << n) | y] != 0 : f.eval_bits(x, y);
    };

    auto run2 = [&](PropertyCheck& pc, int max_n, auto&& pred) {
        if (n <= max_n) {
            const std::uint64_t end = std::uint64_t{1} << n;
            for (std::uint64_t x = 0; x < end && pc.holds; ++x)
                for (std::uint64_t y = 0; y < end && pc.holds; ++y, ++pc.cases) pc.holds = pred(x, y);
        } else {
            pc.exhaustive = false;
            for (std::uint64_t s = 0; s < opt.samples && pc.holds; ++s, ++pc.cases) pc.holds = pred(draw(), draw());
        }
    };
    auto run3 = [&](PropertyCheck& pc, int max_n, auto&& pred) {
        if (n <= max_n) {
            const std::uint64_t end = std::uint64_t{1} << n;
            for (std::uint64_t x = 0; x < end && pc.holds; ++x)
                for (std::uint64_t y = 0; y < end && pc.holds; ++y)
                    for (std::uint64_t z = 0; z < end && pc.holds; ++z, ++pc.cases) pc.holds = pred(x, y, z);
        } else {
            pc.exhaustive = false;
            for (std::uint64_t s = 0; s < opt.samples && pc.holds; ++s, ++pc.cases)
                pc.holds = pred(draw(), draw(), draw());
        }
    };

    run2(rep.commutator, opt.exhaustive_pairs_max_n, [&](std::uint64_t x, std::uint64_t y) {
        return (F(x, y) ^ F(y, x)) == (A(x ^ y) ^ A(x) ^ A(y));
    });
    run3(rep.associator, opt.exhaustive_triples_max_n, [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        const bool df = F(y, z) ^ F(x ^ y, z) ^ F(x, y ^ z) ^ F(x, y);
        const bool sp = A(x ^ y ^ z) ^ A(x ^ y) ^ A(x ^ z) ^ A(y ^ z) ^ A(x) ^ A(y) ^ A(z);
        return df == sp;
    });
    run3(rep.linear_second, opt.exhaustive_triples_max_n, [&](std::uint64_t x, std::uint64_t y, std::uint64_t y2) {
        return F(x, y ^ y2) == (F(x, y) ^ F(x, y2));
    });

    auto& d = rep.diagonal;
    if (n <= opt.exhaustive_single_max_n) {
        const std::uint64_t end = std::uint64_t{1} << n;
        for (std::uint64_t x = 0; x < end && d.holds; ++x, ++d.cases) d.holds = F(x, x) == A(x);
    } else {
        d.exhaustive = false;
        for (std::uint64_t s = 0; s < opt.samples && d.holds; ++s, ++d.cases) {
            const auto x = draw();
            d.holds = F(x, x) == A(x);
        }
    }
    return rep;
}

/// Values of an arbitrary Boolean function on F_2^n, indexed by numeric value.
class TruthTable {
public:
    TruthTable(int n, std::vector<std::uint8_t> values) : n_(n), values_(std::move(values))
    {
        if (n < 1 || n > 26) throw DomainError("truth table dimension must be in 1..26");
        if (values_.size() != (std::size_t{1} << n)) throw DomainError("truth table length must be 2^n");
        for (auto& v : values_) v = v != 0;
    }

    static TruthTable of(const CubicForm& f) { return TruthTable(f.dim(), f.truth_table()); }

    /// Truth table of the single monomial prod_{i in idx} x_i, any degree.
    static TruthTable monomial(int n, const IndexSet& idx)
    {
        const auto m = index_mask(n, idx);
        std::vector<std::uint8_t> v(std::size_t{1} << n);
        for (std::size_t x = 0; x < v.size(); ++x) v[x] = (x & m) == m;
        return TruthTable(n, std::move(v));
    }

    int dim() const { return n_; }
    bool operator[](std::uint64_t x) const { return values_[x] != 0; }
    const std::vector<std::uint8_t>& values() const { return values_; }

    friend TruthTable operator+(const TruthTable& a, const TruthTable& b)
    {
        require_same_dim(a.n_, b.n_);
        auto v = a.values_;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= b.values_[i];
        return TruthTable(a.n_, std::move(v));
    }

private:
    int n_;
    std::vector<std::uint8_t> values_;
};

/// Algebraic normal form coefficients (binary Moebius transform), indexed by monomial mask.
inline std::vector<std::uint8_t> anf_coefficients(const TruthTable& g)
{
    auto c = g.values();
    for (int b = 0; b < g.dim(); ++b) {
        const std::size_t step = std::size_t{1} << b;
        for (std::size_t x = 0; x < c.size(); ++x)
            if (x & step) c[x] ^= c[x ^ step];
    }
    return c;
}

/// True iff the 15-term sum of g over all nonempty sub-sums of (x, y, z, t) vanishes
/// for every quadruple. That holds exactly when g(0) = 0 and the algebraic degree of g
/// is at most 3, which is what the transform below tests. Dimensions below 4 return true.
inline bool is_degree_le3(const TruthTable& g)
{
    if (g.dim() < 4) return true;
    if (g[0]) return false;
    const auto c = anf_coefficients(g);
    for (std::size_t m = 0; m < c.size(); ++m)
        if (c[m] && std::popcount(m) > 3) return false;
    return true;
}

} // namespace hurwitz
