#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "cubic_form.hpp"
#include "vecset.hpp"

namespace hurwitz {

/// m(s) = number of unordered pairs {x, x'} of distinct elements with x + x' = s.
inline std::unordered_map<std::uint64_t, std::uint64_t> pair_sum_histogram(const VecSet& s)
{
    std::unordered_map<std::uint64_t, std::uint64_t> m;
    const auto& e = s.elems();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) ++m[e[i].bits() ^ e[j].bits()];
    return m;
}

enum class QuadrupleCount { unordered, ordered };

/// Proper additive quadruples: x + x' = y + y' != 0 with x != x' in A, y != y' in B.
/// Unordered counting treats {x, x'} and {y, y'} as sets, i.e. sum_s m_A(s) m_B(s);
/// ordered counting is four times that.
inline std::uint64_t count_proper_quadruples(const VecSet& a, const VecSet& b,
                                             QuadrupleCount mode = QuadrupleCount::unordered)
{
    require_same_dim(a.dim(), b.dim());
    const auto ma = pair_sum_histogram(a);
    const auto mb = pair_sum_histogram(b);
    std::uint64_t total = 0;
    for (const auto& [s, ca] : ma)
        if (auto it = mb.find(s); it != mb.end()) total += ca * it->second;
    return mode == QuadrupleCount::ordered ? 4 * total : total;
}

/// Every proper additive quadruple lands on alpha(x + x') = 1.
inline bool hypothesis_check(const CubicForm& alpha, const VecSet& a, const VecSet& b)
{
    require_same_dim(alpha.dim(), a.dim());
    require_same_dim(alpha.dim(), b.dim());
    const auto ma = pair_sum_histogram(a);
    const auto mb = pair_sum_histogram(b);
    for (const auto& [s, ca] : ma)
        if (mb.contains(s) && !alpha.eval_bits(s)) return false;
    return true;
}

struct QuadrupleReport {
    std::uint64_t proper_count = 0;
    QuadrupleCount mode = QuadrupleCount::unordered;
    bool hypothesis_holds = false;
    std::uint64_t sumset_size = 0;
    std::size_t size_a = 0;          // after reordering, size_a <= size_b
    std::size_t size_b = 0;
    double ratio = 0.0;              // sumset_size / size_a^(6/5), informational only
    bool swapped = false;            // inputs were given with |A| > |B|
    bool unequal_sizes = false;      // the identity-size argument assumes |A| = |B|
};

inline QuadrupleReport quadruple_report(const CubicForm& alpha, const VecSet& a_in, const VecSet& b_in,
                                        QuadrupleCount mode = QuadrupleCount::unordered)
{
    require_same_dim(a_in.dim(), b_in.dim());
    const bool swap = a_in.size() > b_in.size();
    const VecSet& a = swap ? b_in : a_in;
    const VecSet& b = swap ? a_in : b_in;
    QuadrupleReport r;
    r.mode = mode;
    r.proper_count = count_proper_quadruples(a, b, mode);
    r.hypothesis_holds = hypothesis_check(alpha, a, b);
    r.sumset_size = sumset(a, b).size();
    r.size_a = a.size();
    r.size_b = b.size();
    r.ratio = static_cast<double>(r.sumset_size) / std::pow(static_cast<double>(r.size_a), 1.2);
    r.swapped = swap;
    r.unequal_sizes = a.size() != b.size();
    return r;
}

} // namespace hurwitz
