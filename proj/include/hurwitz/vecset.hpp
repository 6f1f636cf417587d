#pragma once

#include <algorithm>
#include <initializer_list>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "bitvec.hpp"

namespace hurwitz {

/// Duplicate-free list of vectors of one dimension. Insertion order is kept.
class VecSet {
public:
    explicit VecSet(int n) : n_(n)
    {
        if (n < 1 || n > kMaxDim) throw DomainError("dimension must be in 1..64");
    }

    VecSet(int n, const std::vector<BitVec>& elems) : VecSet(n)
    {
        for (auto x : elems) insert(x);
    }

    VecSet(int n, std::initializer_list<BitVec> elems) : VecSet(n, std::vector<BitVec>(elems)) {}

    /// All of F_2^n in numeric order.
    static VecSet full(int n)
    {
        VecSet s(n);
        for_each_vector(n, [&](BitVec x) { s.elems_.push_back(x); });
        return s;
    }

    /// Inserts x; throws if it is already present or has the wrong dimension.
    void insert(BitVec x)
    {
        require_same_dim(n_, x.dim());
        if (contains(x)) throw DomainError("duplicate element " + to_string(x));
        elems_.push_back(x);
    }

    bool contains(BitVec x) const { return std::find(elems_.begin(), elems_.end(), x) != elems_.end(); }

    int dim() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<BitVec>& elems() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    BitVec operator[](std::size_t i) const { return elems_[i]; }

    VecSet sorted() const
    {
        VecSet s = *this;
        std::sort(s.elems_.begin(), s.elems_.end());
        return s;
    }

    /// A + v.
    VecSet translated(BitVec v) const
    {
        VecSet s(n_);
        for (auto x : elems_) s.elems_.push_back(x + v);
        return s;
    }

    /// Same elements regardless of order.
    bool same_elements(const VecSet& other) const
    {
        return n_ == other.n_ && sorted().elems_ == other.sorted().elems_;
    }

    friend bool operator==(const VecSet&, const VecSet&) = default;

private:
    int n_;
    std::vector<BitVec> elems_;
};

/// Sumset {x + y : x in A, y in B}, sorted.
inline std::vector<BitVec> sumset(const VecSet& a, const VecSet& b)
{
    require_same_dim(a.dim(), b.dim());
    std::unordered_set<BitVec> seen;
    for (auto x : a)
        for (auto y : b) seen.insert(x + y);
    std::vector<BitVec> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// Reads one binary row per line; '#' starts a comment, blank lines are skipped.
inline VecSet read_vecset(std::istream& in)
{
    std::vector<BitVec> elems;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) elems.push_back(parse_bitvec(tok));
    }
    if (elems.empty()) throw ParseError("vector set file has no vectors");
    const int n = elems.front().dim();
    for (auto x : elems)
        if (x.dim() != n) throw ParseError("vectors of different lengths in set file");
    try {
        return VecSet(n, elems);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

inline std::string write_vecset(const VecSet& s)
{
    std::string out;
    for (auto x : s) out += to_string(x) + "\n";
    return out;
}

} // namespace hurwitz
