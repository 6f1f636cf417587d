#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "errors.hpp"

namespace hurwitz {

/// Fixed-width bitset over graph vertices 0..size-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int size) : words_(static_cast<std::size_t>((size + 63) / 64), 0) {}

    void set(int v) { words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64); }
    void reset(int v) { words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    bool test(int v) const { return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U; }

    bool any() const
    {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    int count() const
    {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    /// Lowest member, or -1.
    int first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& subtract(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    template <class Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (auto w = words_[i]; w; w &= w - 1) fn(static_cast<int>(i * 64) + std::countr_zero(w));
    }

private:
    std::vector<std::uint64_t> words_;
};

/// Undirected simple graph with bitset adjacency.
class Graph {
public:
    explicit Graph(int size) : size_(size), adj_(static_cast<std::size_t>(size), VertexSet(size)) {}

    int size() const { return size_; }

    void add_edge(int u, int v)
    {
        if (u == v) return;
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
    }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }
    const VertexSet& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return neighbours(v).count(); }

    VertexSet all() const
    {
        VertexSet s(size_);
        for (int v = 0; v < size_; ++v) s.set(v);
        return s;
    }

private:
    int size_;
    std::vector<VertexSet> adj_;
};

/// Branch-and-bound maximum clique with greedy colouring bounds.
///
/// Candidates are coloured greedily in index order, so callers control the branching
/// order through the vertex numbering. The search stops early once `stop_at` is reached
/// or the node budget runs out.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g, std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max())
        : g_(g), node_limit_(node_limit)
    {
    }

    /// Largest clique inside `candidates` that beats `lower_bound`; empty if none does.
    std::vector<int> run(const VertexSet& candidates, int lower_bound = 0,
                         int stop_at = std::numeric_limits<int>::max())
    {
        best_size_ = lower_bound;
        stop_at_ = stop_at;
        best_.clear();
        current_.clear();
        expand(candidates);
        return best_;
    }

    /// True if `candidates` contains a clique of size k; `witness` receives one.
    bool has_clique(const VertexSet& candidates, int k, std::vector<int>* witness = nullptr)
    {
        if (k <= 0) return true;
        auto c = run(candidates, k - 1, k);
        if (static_cast<int>(c.size()) < k) return false;
        if (witness) *witness = std::move(c);
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool aborted() const { return aborted_; }

private:
    void expand(VertexSet p)
    {
        if (aborted_ || best_size_ >= stop_at_) return;
        if (++nodes_ > node_limit_) {
            aborted_ = true;
            return;
        }
        std::vector<int> order, colour;
        colour_sort(p, order, colour);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current_.size()) + colour[static_cast<std::size_t>(i)] <= best_size_) return;
            const int v = order[static_cast<std::size_t>(i)];
            current_.push_back(v);
            VertexSet next = p & g_.neighbours(v);
            if (next.any()) {
                expand(std::move(next));
            } else if (static_cast<int>(current_.size()) > best_size_) {
                best_size_ = static_cast<int>(current_.size());
                best_ = current_;
            }
            current_.pop_back();
            if (aborted_ || best_size_ >= stop_at_) return;
            p.reset(v);
        }
    }

    // Sequential greedy colouring; colour[i] bounds the clique size within order[0..i].
    void colour_sort(const VertexSet& p, std::vector<int>& order, std::vector<int>& colour) const
    {
        VertexSet uncoloured = p;
        int k = 0;
        while (uncoloured.any()) {
            ++k;
            VertexSet q = uncoloured;
            for (int v = q.first(); v >= 0; v = q.first()) {
                uncoloured.reset(v);
                q.reset(v);
                q.subtract(g_.neighbours(v));
                order.push_back(v);
                colour.push_back(k);
            }
        }
    }

    const Graph& g_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    int best_size_ = 0;
    int stop_at_ = 0;
    std::vector<int> best_;
    std::vector<int> current_;
};

} // namespace hurwitz
