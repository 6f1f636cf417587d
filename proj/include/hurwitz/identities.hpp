#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bitvec.hpp"
#include "cubic_form.hpp"
#include "exact_int.hpp"
#include "hurwitzian_sets.hpp"
#include "polarization.hpp"
#include "vecset.hpp"

namespace hurwitz {

/// One bilinear term sign * a_x * b_y.
struct SignedTerm {
    int sign = 1;
    BitVec x;
    BitVec y;

    friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

/// Sum-of-squares identity (sum_x a_x^2)(sum_y b_y^2) = sum_z c_z^2 where
/// c_z = sum over x + y = z of sign * a_x * b_y.
///
/// A and B are kept sorted; every (x, y) in A x B sits in exactly one bucket z = x + y,
/// and terms inside a bucket are ordered by x then y.
class Identity {
public:
    using Buckets = std::map<BitVec, std::vector<SignedTerm>>;

    Identity(VecSet a, VecSet b, Buckets buckets) : a_(a.sorted()), b_(b.sorted()), buckets_(std::move(buckets))
    {
        require_same_dim(a_.dim(), b_.dim());
        const std::unordered_set<BitVec> in_a(a_.begin(), a_.end()), in_b(b_.begin(), b_.end());
        std::size_t total = 0;
        for (auto& [z, terms] : buckets_) {
            std::sort(terms.begin(), terms.end(), [](const SignedTerm& s, const SignedTerm& t) {
                return s.x != t.x ? s.x < t.x : s.y < t.y;
            });
            for (const auto& t : terms) {
                if (t.sign != 1 && t.sign != -1) throw DomainError("term sign must be +1 or -1");
                if (!in_a.contains(t.x) || !in_b.contains(t.y)) throw DomainError("term index outside A or B");
                if (t.x + t.y != z) throw DomainError("term " + to_string(t.x) + "," + to_string(t.y) + " in wrong bucket");
            }
            for (std::size_t i = 1; i < terms.size(); ++i)
                if (terms[i].x == terms[i - 1].x && terms[i].y == terms[i - 1].y) throw DomainError("repeated term");
            total += terms.size();
        }
        if (total != a_.size() * b_.size()) throw DomainError("buckets do not partition A x B");
    }

    int dim() const { return a_.dim(); }
    const VecSet& a() const { return a_; }
    const VecSet& b() const { return b_; }
    const Buckets& buckets() const { return buckets_; }

    /// [|A|, |B|, |A+B|].
    std::array<std::size_t, 3> size() const { return {a_.size(), b_.size(), buckets_.size()}; }

    std::size_t term_count() const
    {
        std::size_t t = 0;
        for (const auto& [z, terms] : buckets_) t += terms.size();
        return t;
    }

    /// Copy with the sign of the k-th term (in bucket order) negated.
    Identity with_flipped_sign(std::size_t k) const
    {
        Identity out = *this;
        for (auto& [z, terms] : out.buckets_) {
            if (k < terms.size()) {
                terms[k].sign = -terms[k].sign;
                return out;
            }
            k -= terms.size();
        }
        throw DomainError("term index out of range");
    }

    friend bool operator==(const Identity&, const Identity&) = default;

private:
    VecSet a_;
    VecSet b_;
    Buckets buckets_;
};

/// c_z = sum_{x in A, y in B, x + y = z} (-1)^f(x,y) a_x b_y.
inline Identity build_identity(const TwistFn& f, const VecSet& a, const VecSet& b)
{
    require_same_dim(f.dim(), a.dim());
    require_same_dim(f.dim(), b.dim());
    Identity::Buckets buckets;
    for (auto x : a)
        for (auto y : b) buckets[x + y].push_back({f.eval_bits(x.bits(), y.bits()) ? -1 : 1, x, y});
    return Identity(a, b, std::move(buckets));
}

/// Flips `count` distinct term signs chosen by a seeded generator.
inline Identity mutate_signs(const Identity& id, std::size_t count, std::uint64_t seed)
{
    const std::size_t total = id.term_count();
    if (count > total) throw DomainError("more mutations than terms");
    std::vector<std::size_t> idx(total);
    for (std::size_t i = 0; i < total; ++i) idx[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    Identity out = id;
    for (std::size_t i = 0; i < count; ++i) out = out.with_flipped_sign(idx[i]);
    return out;
}

/// Result of expanding sum_z c_z^2 - (sum a_x^2)(sum b_y^2).
struct SymbolicCheck {
    bool holds = false;                   // the difference is the zero polynomial
    std::uint64_t products = 0;           // term products expanded
    std::size_t monomials = 0;            // distinct monomials touched
    std::size_t nonzero = 0;              // monomials left with nonzero coefficient
    std::optional<std::string> witness;   // one surviving monomial, e.g. "+4*a00*a11*b01*b10"
};

namespace detail {

struct QuadKey {
    std::uint64_t x0, x1, y0, y1;
    friend bool operator==(const QuadKey&, const QuadKey&) = default;
};

struct QuadKeyHash {
    std::size_t operator()(const QuadKey& k) const noexcept
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto v : {k.x0, k.x1, k.y0, k.y1}) {
            h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// Commuting indeterminates: a_x a_x' b_y b_y' is keyed by the sorted index pairs.
inline QuadKey quad_key(std::uint64_t x, std::uint64_t x2, std::uint64_t y, std::uint64_t y2)
{
    return {std::min(x, x2), std::max(x, x2), std::min(y, y2), std::max(y, y2)};
}

} // namespace detail

/// Decides the identity exactly by expanding it as a polynomial over the integers in the
/// indeterminates a_x, b_y. Throws BudgetExceeded when more than `max_products` term
/// products would be expanded.
inline SymbolicCheck verify_symbolic(const Identity& id, std::uint64_t max_products = 200'000'000)
{
    SymbolicCheck out;
    std::uint64_t planned = 0;
    for (const auto& [z, terms] : id.buckets()) planned += static_cast<std::uint64_t>(terms.size()) * terms.size();
    if (planned > max_products) throw BudgetExceeded("symbolic expansion needs " + std::to_string(planned) + " products");

    std::unordered_map<detail::QuadKey, std::int64_t, detail::QuadKeyHash> poly;
    poly.reserve(static_cast<std::size_t>(planned / 2 + id.a().size() * id.b().size()));
    for (const auto& [z, terms] : id.buckets()) {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const auto& s = terms[i];
            poly[detail::quad_key(s.x.bits(), s.x.bits(), s.y.bits(), s.y.bits())] += 1;
            for (std::size_t j = i + 1; j < terms.size(); ++j) {
                const auto& t = terms[j];
                auto& c = poly[detail::quad_key(s.x.bits(), t.x.bits(), s.y.bits(), t.y.bits())];
                c = checked_add<std::int64_t>(c, 2 * s.sign * t.sign);
            }
        }
        out.products += static_cast<std::uint64_t>(terms.size()) * terms.size();
    }
    for (auto x : id.a())
        for (auto y : id.b()) poly[detail::quad_key(x.bits(), x.bits(), y.bits(), y.bits())] -= 1;

    out.monomials = poly.size();
    std::optional<std::pair<detail::QuadKey, std::int64_t>> least;
    auto as_tuple = [](const detail::QuadKey& k) { return std::tuple{k.x0, k.x1, k.y0, k.y1}; };
    for (const auto& [k, c] : poly) {
        if (c == 0) continue;
        ++out.nonzero;
        if (!least || as_tuple(k) < as_tuple(least->first)) least = {k, c};
    }
    if (least) {
        const int n = id.dim();
        const auto& [k, c] = *least;
        std::string w = (c > 0 ? "+" : "") + std::to_string(c);
        for (auto v : {k.x0, k.x1}) w += "*a" + to_string(BitVec(n, v));
        for (auto v : {k.y0, k.y1}) w += "*b" + to_string(BitVec(n, v));
        out.witness = std::move(w);
    }
    out.holds = out.nonzero == 0;
    return out;
}

/// Identity of size [|A|, 2^n, 2^n] from alpha_O and an alpha_O-Hurwitzian set A.
inline Identity identity_for_set(const VecSet& a)
{
    return build_identity(twist_from_cubic(make_alpha_O(a.dim())), a, VecSet::full(a.dim()));
}

/// The [rho(2^n), 2^n, 2^n] identity (size [2n, 2^n, 2^n] when n = 0 mod 4) from the
/// explicit Hurwitzian constructions.
inline Identity hurwitz_radon_identity(int n, int max_n = 11)
{
    if (n < 1) throw DomainError("dimension must be positive");
    if (n > max_n) throw BudgetExceeded("identity dimension " + std::to_string(n) + " above limit " + std::to_string(max_n));
    return identity_for_set(best_construction(n));
}

/// One line per c_z in increasing z: "c01 = a00*b01 + a01*b00".
inline std::string render_text(const Identity& id)
{
    std::string out;
    for (const auto& [z, terms] : id.buckets()) {
        out += "c" + to_string(z) + " =";
        bool first = true;
        for (const auto& t : terms) {
            if (first) out += t.sign < 0 ? " -" : " ";
            else out += t.sign < 0 ? " - " : " + ";
            out += "a" + to_string(t.x) + "*b" + to_string(t.y);
            first = false;
        }
        out += "\n";
    }
    return out;
}

/// Inverse of render_text. A and B are the indices that occur.
inline Identity parse_text(std::string_view text)
{
    Identity::Buckets buckets;
    std::vector<BitVec> xs, ys;
    int n = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    auto fail = [](const std::string& why) -> void { throw ParseError("identity text: " + why); };
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string lhs, eq;
        if (!(ls >> lhs)) continue;
        if (lhs.size() < 2 || lhs[0] != 'c' || !(ls >> eq) || eq != "=") fail("expected 'cZ =' in '" + line + "'");
        const BitVec z = parse_bitvec(lhs.substr(1));
        if (n == 0) n = z.dim();
        if (z.dim() != n) fail("inconsistent vector lengths");
        auto& terms = buckets[z];
        if (!terms.empty()) fail("bucket " + lhs + " repeated");
        std::string tok;
        int sign = 1;
        bool expect_term = true;
        while (ls >> tok) {
            if (tok == "+" || tok == "-") {
                if (expect_term && !terms.empty()) fail("dangling operator");
                sign = tok == "-" ? -1 : 1;
                expect_term = true;
                continue;
            }
            if (!expect_term) fail("missing operator before '" + tok + "'");
            if (tok[0] == '-') {
                sign = -sign;
                tok.erase(0, 1);
            }
            const auto star = tok.find('*');
            if (star == std::string::npos || tok[0] != 'a' || star + 1 >= tok.size() || tok[star + 1] != 'b')
                fail("bad term '" + tok + "'");
            const BitVec x = parse_bitvec(tok.substr(1, star - 1));
            const BitVec y = parse_bitvec(tok.substr(star + 2));
            if (x.dim() != n || y.dim() != n) fail("inconsistent vector lengths");
            terms.push_back({sign, x, y});
            xs.push_back(x);
            ys.push_back(y);
            sign = 1;
            expect_term = false;
        }
        if (terms.empty() || expect_term) fail("incomplete line '" + line + "'");
    }
    if (buckets.empty()) fail("no lines");
    auto uniq = [n](std::vector<BitVec> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return VecSet(n, v);
    };
    try {
        return Identity(uniq(xs), uniq(ys), std::move(buckets));
    } catch (const DomainError& e) {
        throw ParseError(std::string("identity text: ") + e.what());
    }
}

} // namespace hurwitz
