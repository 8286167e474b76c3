#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "field.hpp"

namespace kneserlab {

/// Fixed-length bit vector, one bit per vertex.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int n, bool fill = false) : n_(n), words_(static_cast<std::size_t>((n + 63) / 64), fill ? ~0ULL : 0ULL)
    {
        trim();
    }

    int size() const { return n_; }
    bool test(int i) const { return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1ULL; }
    void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= 1ULL << (i & 63); }
    void reset(int i) { words_[static_cast<std::size_t>(i >> 6)] &= ~(1ULL << (i & 63)); }

    int count() const
    {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool none() const
    {
        for (auto w : words_) {
            if (w) return false;
        }
        return true;
    }
    bool any() const { return !none(); }

    /// Index of the first set bit at or after `from`, or -1.
    int next(int from = 0) const
    {
        if (from >= n_) return -1;
        std::size_t w = static_cast<std::size_t>(from >> 6);
        std::uint64_t cur = words_[w] & (~0ULL << (from & 63));
        while (true) {
            if (cur) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(cur)));
            if (++w >= words_.size()) return -1;
            cur = words_[w];
        }
    }

    /// True when this and o share a set bit.
    bool intersects(const BitRow& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) return true;
        }
        return false;
    }

    /// First index set in both, or -1.
    int first_common(const BitRow& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (auto w = words_[i] & o.words_[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        }
        return -1;
    }

    BitRow& operator&=(const BitRow& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    BitRow& operator|=(const BitRow& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// this &= ~o
    BitRow& subtract(const BitRow& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    BitRow complement() const
    {
        BitRow out = *this;
        for (auto& w : out.words_) w = ~w;
        out.trim();
        return out;
    }

    std::vector<int> indices() const
    {
        std::vector<int> out;
        for (int i = next(0); i >= 0; i = next(i + 1)) out.push_back(i);
        return out;
    }

    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    void trim()
    {
        if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (1ULL << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph with bit-vector adjacency rows (row i, bit j).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : rows_(static_cast<std::size_t>(n), BitRow(n)) {}

    int order() const { return static_cast<int>(rows_.size()); }
    const BitRow& neighbours(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
    int degree(int v) const { return neighbours(v).count(); }

    void add_edge(int u, int v)
    {
        if (u == v) throw UsageError("self-loops are not allowed");
        rows_[static_cast<std::size_t>(u)].set(v);
        rows_[static_cast<std::size_t>(v)].set(u);
    }

    long long edge_count() const
    {
        long long total = 0;
        for (const auto& r : rows_) total += r.count();
        return total / 2;
    }

    bool is_symmetric_irreflexive() const
    {
        for (int u = 0; u < order(); ++u) {
            if (adjacent(u, u)) return false;
            for (int v : neighbours(u).indices()) {
                if (!adjacent(v, u)) return false;
            }
        }
        return true;
    }

    /// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
    Graph induced(const std::vector<int>& vertices) const
    {
        Graph g(static_cast<int>(vertices.size()));
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < vertices.size(); ++j) {
                if (adjacent(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
        return g;
    }

    /// True when every vertex has degree `k`.
    bool is_regular(int k) const
    {
        for (int v = 0; v < order(); ++v) {
            if (degree(v) != k) return false;
        }
        return true;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<BitRow> rows_;
};

/// Set Kneser graph K(n,k): k-subsets of {0..n-1} (as bitmasks, increasing), adjacent when disjoint.
inline Graph set_kneser(int n, int k, std::vector<std::uint32_t>* subsets = nullptr)
{
    std::vector<std::uint32_t> sets;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) == k) sets.push_back(s);
    }
    Graph g(static_cast<int>(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if ((sets[i] & sets[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    if (subsets) *subsets = std::move(sets);
    return g;
}

} // namespace kneserlab
