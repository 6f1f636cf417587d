#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bitvec.hpp"
#include "cubic_form.hpp"
#include "exact_int.hpp"
#include "polarization.hpp"
#include "vecset.hpp"

namespace hurwitz {

/// Element sum_x a_x e_x of the twisted group algebra with exact integer coefficients.
/// Zero coefficients are never stored.
template <class Int = std::int64_t>
class AlgebraElement {
public:
    explicit AlgebraElement(int n) : n_(n)
    {
        if (n < 1 || n > kMaxDim) throw DomainError("dimension must be in 1..64");
    }

    /// The basis element e_x with coefficient c.
    static AlgebraElement basis_element(BitVec x, Int c = Int{1})
    {
        AlgebraElement a(x.dim());
        a.set(x, c);
        return a;
    }

    static AlgebraElement unit(int n) { return basis_element(BitVec::zero(n)); }

    int dim() const { return n_; }
    const std::map<std::uint64_t, Int>& coeffs() const { return coeffs_; }
    std::size_t support_size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }

    Int operator[](BitVec x) const
    {
        require_same_dim(n_, x.dim());
        auto it = coeffs_.find(x.bits());
        return it == coeffs_.end() ? Int{0} : it->second;
    }

    void set(BitVec x, Int c)
    {
        require_same_dim(n_, x.dim());
        if (c == Int{0}) coeffs_.erase(x.bits());
        else coeffs_[x.bits()] = c;
    }

    /// Adds c to the coefficient of e_x.
    void add(BitVec x, Int c) { add_bits(x.bits(), c); }

    void add_bits(std::uint64_t x, Int c)
    {
        if (c == Int{0}) return;
        auto [it, inserted] = coeffs_.try_emplace(x, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == Int{0}) coeffs_.erase(it);
        }
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b)
    {
        require_same_dim(a.n_, b.n_);
        for (const auto& [x, c] : b.coeffs_) a.add_bits(x, c);
        return a;
    }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    template <class Other>
    AlgebraElement<Other> convert() const
    {
        AlgebraElement<Other> out(n_);
        for (const auto& [x, c] : coeffs_) out.add_bits(x, Other(c));
        return out;
    }

private:
    int n_;
    std::map<std::uint64_t, Int> coeffs_;
};

/// Sign (-1)^f(x,y) of e_x * e_y = sign * e_{x+y}.
inline int basis_sign(const TwistFn& f, BitVec x, BitVec y) { return f(x, y) ? -1 : 1; }

/// Bilinear product: coefficient of e_z is sum over x+y=z of sign(x,y) a_x b_y.
template <class Int>
AlgebraElement<Int> product(const TwistFn& f, const AlgebraElement<Int>& a, const AlgebraElement<Int>& b)
{
    require_same_dim(f.dim(), a.dim());
    require_same_dim(f.dim(), b.dim());
    AlgebraElement<Int> out(f.dim());
    for (const auto& [x, ax] : a.coeffs())
        for (const auto& [y, by] : b.coeffs()) {
            Int t = checked_mul(ax, by);
            if (f.eval_bits(x, y)) t = checked_neg(t);
            out.add_bits(x ^ y, t);
        }
    return out;
}

/// Sum of squared coefficients.
template <class Int>
Int norm_sq(const AlgebraElement<Int>& a)
{
    Int s{0};
    for (const auto& [x, c] : a.coeffs()) s = checked_add(s, checked_mul(c, c));
    return s;
}

namespace detail {

inline std::unordered_set<std::uint64_t> nonzero_pair_sums(const VecSet& s)
{
    std::unordered_set<std::uint64_t> out;
    const auto& e = s.elems();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) out.insert(e[i].bits() ^ e[j].bits());
    return out;
}

} // namespace detail

/// Combinatorial side of the norm condition: whenever distinct x, x' in A and distinct
/// y, y' in B satisfy x + x' = y + y', alpha(x + x') = 1.
inline bool lemma_condition(const CubicForm& alpha, const VecSet& a, const VecSet& b)
{
    require_same_dim(alpha.dim(), a.dim());
    require_same_dim(alpha.dim(), b.dim());
    const auto sa = detail::nonzero_pair_sums(a);
    // B = F_2^n realizes every nonzero sum; skip building its pair-sum set.
    const bool b_full = a.dim() < 64 && b.size() == (std::size_t{1} << b.dim());
    const auto sb = b_full ? std::unordered_set<std::uint64_t>{} : detail::nonzero_pair_sums(b);
    for (auto s : sa)
        if ((b_full || sb.contains(s)) && !alpha.eval_bits(s)) return false;
    return true;
}

/// Outcome of a randomized check of |a|^2 |b|^2 = |ab|^2.
struct NormCheck {
    bool holds = true;
    std::size_t trials_run = 0;
    bool used_bigint = false;
    /// Coefficient vectors (over A, then B, in set order) of the first violation.
    std::optional<std::pair<std::vector<long long>, std::vector<long long>>> counterexample;
};

namespace detail {

template <class Int>
bool norm_multiplicative(const TwistFn& f, const VecSet& a_set, const VecSet& b_set,
                         const std::vector<long long>& ca, const std::vector<long long>& cb)
{
    AlgebraElement<Int> a(f.dim()), b(f.dim());
    for (std::size_t i = 0; i < ca.size(); ++i) a.set(a_set[i], Int(ca[i]));
    for (std::size_t i = 0; i < cb.size(); ++i) b.set(b_set[i], Int(cb[i]));
    return checked_mul(norm_sq(a), norm_sq(b)) == norm_sq(product(f, a, b));
}

inline bool norm_multiplicative_exact(const TwistFn& f, const VecSet& a, const VecSet& b,
                                      const std::vector<long long>& ca, const std::vector<long long>& cb,
                                      bool& used_bigint)
{
    try {
        return norm_multiplicative<std::int64_t>(f, a, b, ca, cb);
    } catch (const Overflow&) {
        used_bigint = true;
        return norm_multiplicative<BigInt>(f, a, b, ca, cb);
    }
}

} // namespace detail

/// Draws `trials` integer coefficient pairs uniformly from [-bound, bound], a supported on
/// A and b on B, and compares the norms exactly. Machine integers are used until one
/// overflows, then the trial is redone with arbitrary precision.
inline NormCheck norm_mult_check(const TwistFn& f, const VecSet& a, const VecSet& b, std::size_t trials = 100,
                                 std::uint64_t seed = 0, int bound = 9)
{
    require_same_dim(f.dim(), a.dim());
    require_same_dim(f.dim(), b.dim());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coeff(-bound, bound);
    NormCheck out;
    std::vector<long long> ca(a.size()), cb(b.size());
    for (std::size_t t = 0; t < trials; ++t) {
        for (auto& c : ca) c = coeff(rng);
        for (auto& c : cb) c = coeff(rng);
        ++out.trials_run;
        if (!detail::norm_multiplicative_exact(f, a, b, ca, cb, out.used_bigint)) {
            out.holds = false;
            out.counterexample = {ca, cb};
            break;
        }
    }
    return out;
}

/// Deterministic search over all +-1 coefficient vectors. The norm defect is a
/// multilinear polynomial, so it vanishes on {-1,1}^(|A|+|B|) only if it is zero;
/// returns the first violating pair or nothing. Requires |A| + |B| <= 24.
inline std::optional<std::pair<std::vector<long long>, std::vector<long long>>>
find_norm_counterexample_pm1(const TwistFn& f, const VecSet& a, const VecSet& b)
{
    const std::size_t k = a.size() + b.size();
    if (k > 24) throw BudgetExceeded("+-1 enumeration limited to |A|+|B| <= 24");
    std::vector<long long> ca(a.size()), cb(b.size());
    bool big = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (mask >> i) & 1U ? -1 : 1;
        for (std::size_t i = 0; i < cb.size(); ++i) cb[i] = (mask >> (i + ca.size())) & 1U ? -1 : 1;
        if (!detail::norm_multiplicative_exact(f, a, b, ca, cb, big)) return std::pair{ca, cb};
    }
    return std::nullopt;
}

} // namespace hurwitz
