#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <vector>

#include "bitvec.hpp"
#include "cubic_form.hpp"
#include "hadamard.hpp"
#include "max_clique.hpp"
#include "vecset.hpp"

namespace hurwitz {

/// Hurwitz-Radon function. With N = 2^n (2m+1): 2n+1 if n = 0, 2n if n = 1,2 and
/// 2n+2 if n = 3 (mod 4).
constexpr int rho(std::uint64_t N)
{
    if (N == 0) throw DomainError("rho is defined on positive integers");
    const int n = std::countr_zero(N);
    switch (n % 4) {
    case 0: return 2 * n + 1;
    case 3: return 2 * n + 2;
    default: return 2 * n;
    }
}

/// Upper bound on |A| for alpha_O: 2n+2 when n = 3 (mod 4), otherwise 2n.
constexpr int alpha_O_bound(int n) { return n % 4 == 3 ? 2 * n + 2 : 2 * n; }

/// alpha(x + x') = 1 for every pair of distinct elements.
inline bool is_hurwitzian(const CubicForm& alpha, const VecSet& a)
{
    require_same_dim(alpha.dim(), a.dim());
    const auto& e = a.elems();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (!alpha.eval_bits(e[i].bits() ^ e[j].bits())) return false;
    return true;
}

/// Weights of the nonzero pairwise sums.
inline std::set<int> pair_sum_weights(const VecSet& a)
{
    std::set<int> out;
    const auto& e = a.elems();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) out.insert(wt(e[i] + e[j]));
    return out;
}

/// {0, e_1, ..., e_n, e_1+e_2, ..., e_1+e_n} for n = 1, 2 (mod 4); size 2n.
inline VecSet construct_mod12(int n)
{
    if (n < 1 || (n % 4 != 1 && n % 4 != 2)) throw DomainError("construct_mod12 needs n = 1 or 2 mod 4");
    VecSet a(n);
    a.insert(BitVec::zero(n));
    for (int i = 1; i <= n; ++i) a.insert(basis(n, i));
    for (int i = 2; i <= n; ++i) a.insert(basis(n, 1) + basis(n, i));
    return a;
}

/// {0, w, e_1, ..., e_n, e_1+w, ..., e_n+w} for n = 3 (mod 4); size 2n+2.
inline VecSet construct_mod3(int n)
{
    if (n < 3 || n % 4 != 3) throw DomainError("construct_mod3 needs n = 3 mod 4");
    const BitVec w = omega(n);
    VecSet a(n);
    a.insert(BitVec::zero(n));
    a.insert(w);
    for (int i = 1; i <= n; ++i) a.insert(basis(n, i));
    for (int i = 1; i <= n; ++i) a.insert(basis(n, i) + w);
    return a;
}

/// construct_mod3(n-1) with a trailing zero coordinate, for n = 0 (mod 4); size 2n.
inline VecSet construct_mod0(int n)
{
    if (n < 4 || n % 4 != 0) throw DomainError("construct_mod0 needs n = 0 mod 4");
    VecSet a(n);
    for (auto x : construct_mod3(n - 1)) a.insert(BitVec(n, x.bits() << 1));
    return a;
}

/// Largest explicit alpha_O-Hurwitzian set known for n: size rho(2^n), or 2n when n = 0 (mod 4).
inline VecSet best_construction(int n)
{
    switch (n % 4) {
    case 0: return construct_mod0(n);
    case 3: return construct_mod3(n);
    default: return construct_mod12(n);
    }
}

/// Rows of H_1 and H_2 built from a Hadamard matrix of order m = 4s, s odd.
///
/// Rows are first negated where needed so the first column is +1, then the first column
/// is dropped. H_1 writes -1 as 1 and +1 as 0; H_2 is its complement. The 2m rows lie in
/// F_2^(m-1) and their pairwise sums have weight 2s, 2s-1 or 4s-1.
inline VecSet hurwitzian_from_hadamard(const HadamardMatrix& h)
{
    const int m = h.order();
    if (m % 4 != 0 || (m / 4) % 2 == 0) throw DomainError("Hadamard order must be 4s with s odd");
    const auto norm = h.row_normalized();
    const int n = m - 1;
    std::vector<BitVec> h1, h2;
    for (const auto& row : norm.rows()) {
        std::uint64_t v = 0;
        for (int j = 1; j < m; ++j) v = (v << 1) | static_cast<std::uint64_t>(row[static_cast<std::size_t>(j)] < 0);
        h1.emplace_back(n, v);
        h2.emplace_back(n, v ^ low_mask(n));
    }
    VecSet out(n);
    for (auto x : h1) out.insert(x);
    for (auto x : h2) out.insert(x);
    return out;
}

/// Vectors v with alpha(u + v) = alpha(u) for all u, as a reduced echelon basis.
/// Returned masks have distinct leading bits.
inline std::vector<std::uint64_t> period_basis(const std::vector<std::uint8_t>& table, int n)
{
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::uint64_t> basis_vecs;
    for (std::uint64_t v = 1; v < size; ++v) {
        bool period = true;
        for (std::uint64_t u = 0; u < size && period; ++u) period = table[u] == table[u ^ v];
        if (!period) continue;
        std::uint64_t r = v;
        for (auto b : basis_vecs)
            if (r & std::bit_floor(b)) r ^= b;
        if (r == 0) continue;
        for (auto& b : basis_vecs)
            if (b & std::bit_floor(r)) b ^= r;
        basis_vecs.push_back(r);
        std::sort(basis_vecs.begin(), basis_vecs.end(), std::greater<>{});
    }
    return basis_vecs;
}

struct MaxSetOptions {
    int max_exhaustive_n = 8;
    std::uint64_t node_limit = std::uint64_t{1} << 34;
    bool deterministic = true;
    bool period_reduction = true;
};

struct MaxSetResult {
    int size = 0;
    VecSet witness{1};
    bool exact = true;         // false: size is only a lower bound
    bool canonical = false;    // witness is the lexicographically smallest maximum set
    std::uint64_t nodes = 0;
    int period_dim = 0;
};

namespace detail {

struct SumGraph {
    Graph graph{0};
    std::vector<std::uint64_t> label;   // vertex -> vector bits
};

// Vertices: the nonzero s in `pool` with alpha(s) = 1, ordered by degree descending and
// then numeric value ascending. Edges join u, v when alpha(u + v) = 1.
inline SumGraph build_sum_graph(const std::vector<std::uint8_t>& table, const std::vector<std::uint64_t>& pool)
{
    std::vector<std::uint64_t> verts;
    for (auto s : pool)
        if (s != 0 && table[s]) verts.push_back(s);
    std::vector<int> deg(verts.size(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (i != j && table[verts[i] ^ verts[j]]) ++deg[i];
    std::vector<std::size_t> idx(verts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (deg[a] != deg[b]) return deg[a] > deg[b];
        return verts[a] < verts[b];
    });
    SumGraph sg;
    sg.graph = Graph(static_cast<int>(verts.size()));
    for (auto i : idx) sg.label.push_back(verts[i]);
    for (int i = 0; i < sg.graph.size(); ++i)
        for (int j = i + 1; j < sg.graph.size(); ++j)
            if (table[sg.label[static_cast<std::size_t>(i)] ^ sg.label[static_cast<std::size_t>(j)]]) sg.graph.add_edge(i, j);
    return sg;
}

// Lexicographically smallest clique of size k, comparing vertex labels in ascending order.
inline std::vector<std::uint64_t> lex_smallest_clique(const SumGraph& sg, int k, CliqueSearch& search)
{
    const int size = sg.graph.size();
    std::vector<int> by_label(static_cast<std::size_t>(size));
    std::iota(by_label.begin(), by_label.end(), 0);
    std::sort(by_label.begin(), by_label.end(), [&](int a, int b) { return sg.label[static_cast<std::size_t>(a)] < sg.label[static_cast<std::size_t>(b)]; });

    std::vector<std::uint64_t> chosen;
    VertexSet cand = sg.graph.all();
    int need = k;
    while (need > 0) {
        bool found = false;
        for (std::size_t pos = 0; pos < by_label.size() && !found; ++pos) {
            const int v = by_label[pos];
            if (!cand.test(v)) continue;
            VertexSet next = cand & sg.graph.neighbours(v);
            for (std::size_t q = 0; q <= pos; ++q) next.reset(by_label[q]);
            if (next.count() < need - 1 || !search.has_clique(next, need - 1)) {
                if (search.aborted()) throw BudgetExceeded("node budget exhausted during witness selection");
                continue;
            }
            chosen.push_back(sg.label[static_cast<std::size_t>(v)]);
            cand = std::move(next);
            --need;
            found = true;
        }
        if (!found) throw Error("internal: no clique of the established size");
    }
    return chosen;
}

} // namespace detail

/// Exact maximum |A| with alpha = 1 on (A + A) \ {0}, plus a witness.
///
/// Pairwise sums are translation invariant, so A is taken to contain 0 and the rest of A
/// is a clique in the graph on {s != 0 : alpha(s) = 1} with edges alpha(u + v) = 1. When
/// alpha has periods (alpha(u + v) = alpha(u) for all u) any element may be shifted by a
/// period without changing pair-sum values, which restricts the search to vectors that
/// vanish on the pivot coordinates of the period space. For alpha_O with n = 0 (mod 4)
/// the period is w.
///
/// Deterministic mode returns the lexicographically smallest maximum set (sorted). Above
/// `max_exhaustive_n`, or when the node budget runs out, the result is a lower bound with
/// `exact = false`.
inline MaxSetResult max_hurwitzian(const CubicForm& alpha, const MaxSetOptions& opt = {})
{
    const int n = alpha.dim();
    MaxSetResult res;
    res.witness = VecSet(n);
    res.witness.insert(BitVec::zero(n));
    res.size = 1;

    const bool is_alpha_O = alpha == make_alpha_O(n);
    if (is_alpha_O) {
        auto c = best_construction(n);
        res.witness = c.sorted();
        res.size = static_cast<int>(c.size());
    }
    if (n > opt.max_exhaustive_n || n > 20) {
        res.exact = false;
        return res;
    }

    const auto table = alpha.truth_table();
    const std::uint64_t space = std::uint64_t{1} << n;
    std::uint64_t pivot_mask = 0;
    if (opt.period_reduction) {
        const auto periods = period_basis(table, n);
        res.period_dim = static_cast<int>(periods.size());
        for (auto b : periods) pivot_mask |= std::bit_floor(b);
    }
    std::vector<std::uint64_t> pool;
    for (std::uint64_t v = 0; v < space; ++v)
        if ((v & pivot_mask) == 0) pool.push_back(v);

    const auto sg = detail::build_sum_graph(table, pool);
    CliqueSearch search(sg.graph, opt.node_limit);
    const int known = res.size - 1;
    auto clique = search.run(sg.graph.all(), known);
    res.nodes = search.nodes();
    if (search.aborted()) {
        if (static_cast<int>(clique.size()) > known) {
            VecSet w(n);
            w.insert(BitVec::zero(n));
            for (int v : clique) w.insert(BitVec(n, sg.label[static_cast<std::size_t>(v)]));
            res.witness = w.sorted();
            res.size = static_cast<int>(w.size());
        }
        res.exact = false;
        return res;
    }
    if (static_cast<int>(clique.size()) > known) {
        VecSet w(n);
        w.insert(BitVec::zero(n));
        for (int v : clique) w.insert(BitVec(n, sg.label[static_cast<std::size_t>(v)]));
        res.witness = w.sorted();
        res.size = static_cast<int>(w.size());
    }

    if (opt.deterministic && res.size > 1) {
        std::vector<std::uint64_t> everything(space);
        std::iota(everything.begin(), everything.end(), 0);
        const auto full = pivot_mask == 0 ? sg : detail::build_sum_graph(table, everything);
        CliqueSearch lex_search(full.graph, opt.node_limit);
        try {
            const auto chosen = detail::lex_smallest_clique(full, res.size - 1, lex_search);
            VecSet w(n);
            w.insert(BitVec::zero(n));
            for (auto v : chosen) w.insert(BitVec(n, v));
            res.witness = w;
            res.canonical = true;
        } catch (const BudgetExceeded&) {
            // The size stays exact; only the choice of witness is left to the search order.
        }
        res.nodes += lex_search.nodes();
    } else if (res.size == 1) {
        res.canonical = true;
    }
    return res;
}

struct ConjectureReport {
    int n = 4;
    std::uint64_t forms = 0;
    int global_max = 0;
    std::map<int, std::uint64_t> distribution;   // maximum size -> number of forms
    int alpha_O_max = 0;
    int zero_form_max = 0;
    bool holds = false;                          // no form admits a set of size 2n+1
};

/// Maximum Hurwitzian-set size for every cubic form on F_2^4.
inline ConjectureReport conjecture_check_n4(unsigned threads = 1)
{
    constexpr int n = 4;
    const auto monos = all_cubic_monomials(n);
    const std::uint64_t total = std::uint64_t{1} << monos.size();
    std::vector<int> maxima(total);

    MaxSetOptions opt;
    opt.deterministic = false;
    opt.period_reduction = true;
    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t subset = begin; subset < end; ++subset) {
            std::vector<std::uint64_t> ms;
            for (std::size_t b = 0; b < monos.size(); ++b)
                if ((subset >> b) & 1U) ms.push_back(monos[b]);
            const auto alpha = CubicForm::from_masks(n, std::move(ms));
            maxima[subset] = max_hurwitzian(alpha, opt).size;
        }
    };
    threads = std::max(1U, threads);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const auto b = std::min(total, t * chunk), e = std::min(total, (t + 1) * chunk);
        if (t + 1 == threads) work(b, e);
        else pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();

    ConjectureReport rep;
    rep.forms = total;
    for (int m : maxima) {
        rep.global_max = std::max(rep.global_max, m);
        ++rep.distribution[m];
    }
    rep.zero_form_max = maxima[0];
    rep.alpha_O_max = maxima[total - 1];
    rep.holds = rep.global_max <= 2 * n;
    return rep;
}

} // namespace hurwitz
