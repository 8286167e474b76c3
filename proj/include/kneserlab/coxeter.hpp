#pragma once

#include <algorithm>
#include <compare>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "family.hpp"
#include "graph.hpp"

namespace kneserlab {

/// A (signed) permutation of {1..m}: images[i-1] = w(i), with w(-i) = -w(i).
struct WeylElement {
    std::vector<int> images;

    static WeylElement identity(int m)
    {
        WeylElement w;
        for (int i = 1; i <= m; ++i) w.images.push_back(i);
        return w;
    }

    int degree() const { return static_cast<int>(images.size()); }

    int operator()(int i) const { return i > 0 ? images[static_cast<std::size_t>(i - 1)] : -images[static_cast<std::size_t>(-i - 1)]; }

    /// (a * b)(i) = a(b(i))
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b)
    {
        WeylElement out;
        out.images.reserve(b.images.size());
        for (int x : b.images) out.images.push_back(a(x));
        return out;
    }

    WeylElement inverse() const
    {
        WeylElement out;
        out.images.assign(images.size(), 0);
        for (std::size_t i = 0; i < images.size(); ++i) {
            const int x = images[i];
            const int sign = x > 0 ? 1 : -1;
            out.images[static_cast<std::size_t>(std::abs(x) - 1)] = sign * static_cast<int>(i + 1);
        }
        return out;
    }

    int sign_changes() const
    {
        return static_cast<int>(std::count_if(images.begin(), images.end(), [](int x) { return x < 0; }));
    }

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
    friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < images.size(); ++i) s += (i ? " " : "") + std::to_string(images[i]);
        return s + "]";
    }
};

/// A finite Weyl group of type A_n, B_n (= C_n) or D_n with its simple
/// reflections s_1..s_n, fully enumerated with Coxeter lengths.
class WeylGroup {
public:
    WeylGroup(Family family, int n) : family_(family == Family::C ? Family::B : family), n_(n)
    {
        if (family_ != Family::A && family_ != Family::B && family_ != Family::D) {
            throw UsageError("Weyl groups are available for families A, B/C and D");
        }
        if (n < 1 || n > 5) throw UsageError("Weyl group rank must be in 1..5 for full enumeration");
        if (family_ == Family::D && n < 2) throw UsageError("D_n needs n >= 2");
        const int m = family_ == Family::A ? n + 1 : n;
        for (int i = 1; i <= n; ++i) {
            WeylElement s = WeylElement::identity(m);
            if (i < m && !(family_ != Family::A && i == n)) {
                std::swap(s.images[static_cast<std::size_t>(i - 1)], s.images[static_cast<std::size_t>(i)]);
            } else if (family_ == Family::B) {
                s.images[static_cast<std::size_t>(n - 1)] = -n;
            } else {
                // D_n: e_{n-1} -> -e_n, e_n -> -e_{n-1}
                s.images[static_cast<std::size_t>(n - 2)] = -n;
                s.images[static_cast<std::size_t>(n - 1)] = -(n - 1);
            }
            generators_.push_back(std::move(s));
        }
        // breadth-first search from the identity gives Coxeter lengths
        elements_.push_back(WeylElement::identity(m));
        lengths_.push_back(0);
        index_.emplace(elements_.front(), 0);
        for (std::size_t head = 0; head < elements_.size(); ++head) {
            for (const auto& s : generators_) {
                WeylElement next = elements_[head] * s;
                if (index_.contains(next)) continue;
                index_.emplace(next, static_cast<int>(elements_.size()));
                elements_.push_back(std::move(next));
                lengths_.push_back(lengths_[head] + 1);
            }
        }
        longest_ = static_cast<int>(std::max_element(lengths_.begin(), lengths_.end()) - lengths_.begin());
    }

    Family family() const { return family_; }
    int rank() const { return n_; }
    int degree() const { return elements_.front().degree(); }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const WeylElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    int length(int i) const { return lengths_[static_cast<std::size_t>(i)]; }
    int length(const WeylElement& w) const { return length(index_of(w)); }
    /// Simple reflection s_i, i in 1..n.
    const WeylElement& generator(int i) const { return generators_.at(static_cast<std::size_t>(i - 1)); }

    int index_of(const WeylElement& w) const
    {
        auto it = index_.find(w);
        if (it == index_.end()) throw UsageError("element " + w.to_string() + " is not in the group");
        return it->second;
    }

    const WeylElement& longest_element() const { return elements_[static_cast<std::size_t>(longest_)]; }
    int longest_index() const { return longest_; }

    /// Number of positive roots, n(n+1)/2, n^2, n(n-1) for A, B, D.
    int positive_roots() const
    {
        switch (family_) {
        case Family::A: return n_ * (n_ + 1) / 2;
        case Family::B: return n_ * n_;
        default: return n_ * (n_ - 1);
        }
    }

    /// Indices of the parabolic subgroup generated by {s_i : i not in J}.
    std::vector<int> parabolic_subgroup(const std::vector<int>& types) const
    {
        std::vector<const WeylElement*> gens;
        for (int i = 1; i <= n_; ++i) {
            if (!std::binary_search(types.begin(), types.end(), i)) gens.push_back(&generator(i));
        }
        std::vector<int> out{index_of(WeylElement::identity(degree()))};
        std::vector<bool> seen(elements_.size(), false);
        seen[static_cast<std::size_t>(out.front())] = true;
        for (std::size_t head = 0; head < out.size(); ++head) {
            for (const auto* s : gens) {
                const int j = index_of(element(out[head]) * *s);
                if (!seen[static_cast<std::size_t>(j)]) {
                    seen[static_cast<std::size_t>(j)] = true;
                    out.push_back(j);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// True when conjugation by w0 permutes {s_i : i not in J}, i.e. J^{w0} = J.
    bool is_self_opposite(const std::vector<int>& types) const
    {
        const WeylElement& w0 = longest_element();
        std::vector<WeylElement> complement;
        for (int i = 1; i <= n_; ++i) {
            if (!std::binary_search(types.begin(), types.end(), i)) complement.push_back(generator(i));
        }
        for (const auto& s : complement) {
            const WeylElement c = w0 * s * w0;
            if (std::find(complement.begin(), complement.end(), c) == complement.end()) return false;
        }
        return true;
    }

private:
    Family family_;
    int n_;
    std::vector<WeylElement> generators_;
    std::vector<WeylElement> elements_;
    std::vector<int> lengths_;
    std::map<WeylElement, int> index_;
    int longest_ = 0;
};

/// W/X for X = <R \ J>, with the coset-level Kneser adjacency
/// wX ~ vX iff v^{-1} w ∈ X w0 X.
class ParabolicQuotient {
public:
    ParabolicQuotient(const WeylGroup& group, std::vector<int> types) : group_(&group), types_(std::move(types))
    {
        std::sort(types_.begin(), types_.end());
        for (int j : types_) {
            if (j < 1 || j > group.rank()) throw UsageError("type outside the diagram");
        }
        subgroup_ = group.parabolic_subgroup(types_);

        std::vector<int> order(static_cast<std::size_t>(group.size()));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (group.length(a) != group.length(b)) return group.length(a) < group.length(b);
            return group.element(a) < group.element(b);
        });
        coset_of_.assign(static_cast<std::size_t>(group.size()), -1);
        for (int w : order) {
            if (coset_of_[static_cast<std::size_t>(w)] >= 0) continue;
            const int id = static_cast<int>(reps_.size());
            reps_.push_back(w);
            for (int x : subgroup_) coset_of_[static_cast<std::size_t>(group.index_of(group.element(w) * group.element(x)))] = id;
        }

        // cosets x w0 X, x in X
        std::vector<bool> opposite(reps_.size(), false);
        const WeylElement& w0 = group.longest_element();
        for (int x : subgroup_) opposite[static_cast<std::size_t>(coset_of(group.element(x) * w0))] = true;

        const int c = size();
        adjacency_ = Graph(c);
        for (int a = 0; a < c; ++a) {
            for (int b = a + 1; b < c; ++b) {
                const WeylElement rel = representative(b).inverse() * representative(a);
                if (opposite[static_cast<std::size_t>(coset_of(rel))]) adjacency_.add_edge(a, b);
            }
        }
    }

    const WeylGroup& group() const { return *group_; }
    const std::vector<int>& types() const { return types_; }
    int size() const { return static_cast<int>(reps_.size()); }
    int subgroup_order() const { return static_cast<int>(subgroup_.size()); }
    const std::vector<int>& subgroup() const { return subgroup_; }
    const Graph& graph() const { return adjacency_; }

    /// Minimal-length representative of coset `id`.
    const WeylElement& representative(int id) const { return group_->element(reps_[static_cast<std::size_t>(id)]); }
    int coset_of(const WeylElement& w) const { return coset_of_[static_cast<std::size_t>(group_->index_of(w))]; }
    int coset_of_index(int element_index) const { return coset_of_[static_cast<std::size_t>(element_index)]; }

private:
    const WeylGroup* group_;
    std::vector<int> types_;
    std::vector<int> subgroup_;
    std::vector<int> reps_;
    std::vector<int> coset_of_;
    Graph adjacency_;
};

/// Shortest element of X w0 X for X = <R \ J>.
inline WeylElement shortest_double_coset(const WeylGroup& group, const std::vector<int>& types)
{
    const auto x = group.parabolic_subgroup(types);
    const WeylElement& w0 = group.longest_element();
    int best = -1;
    for (int a : x) {
        const WeylElement left = group.element(a) * w0;
        for (int b : x) {
            const int idx = group.index_of(left * group.element(b));
            if (best < 0 || group.length(idx) < group.length(best) ||
                (group.length(idx) == group.length(best) && group.element(idx) < group.element(best))) {
                best = idx;
            }
        }
    }
    return group.element(best);
}

/// The canonical map W/X' -> W/X, wX' -> wX, for J ⊆ J'.
struct PhiMap {
    std::vector<int> image;
    bool homomorphism = true;
    /// First edge (a', b') of the fine quotient whose image is not an edge.
    std::optional<std::pair<int, int>> bad_edge;
};

inline bool is_subset(const std::vector<int>& small, const std::vector<int>& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline PhiMap phi_map(const ParabolicQuotient& fine, const ParabolicQuotient& coarse)
{
    if (&fine.group() != &coarse.group()) throw UsageError("quotients of different groups");
    if (!is_subset(coarse.types(), fine.types())) throw UsageError("phi_map needs J ⊆ J'");
    PhiMap out;
    for (int a = 0; a < fine.size(); ++a) out.image.push_back(coarse.coset_of(fine.representative(a)));
    for (int a = 0; a < fine.size() && out.homomorphism; ++a) {
        for (int b : fine.graph().neighbours(a).indices()) {
            if (!coarse.graph().adjacent(out.image[static_cast<std::size_t>(a)], out.image[static_cast<std::size_t>(b)])) {
                out.homomorphism = false;
                out.bad_edge = std::make_pair(a, b);
                break;
            }
        }
    }
    return out;
}

enum class LiftingStatus { holds, fails, hypothesis_unmet };

struct LiftingResult {
    LiftingStatus status = LiftingStatus::holds;
    /// (a', b) with a' fine, b coarse adjacent to phi(a'), and no lift of b next to a'.
    std::optional<std::pair<int, int>> counterexample;
};

/// Checks that every edge (phi(a'), b) of the coarse quotient lifts to an edge (a', b').
inline LiftingResult check_lifting(const ParabolicQuotient& fine, const ParabolicQuotient& coarse)
{
    LiftingResult out;
    if (!fine.group().is_self_opposite(coarse.types())) {
        out.status = LiftingStatus::hypothesis_unmet;
        return out;
    }
    const PhiMap phi = phi_map(fine, coarse);
    for (int a = 0; a < fine.size(); ++a) {
        const int image = phi.image[static_cast<std::size_t>(a)];
        BitRow lifted(coarse.size());
        for (int b : fine.graph().neighbours(a).indices()) lifted.set(phi.image[static_cast<std::size_t>(b)]);
        for (int b : coarse.graph().neighbours(image).indices()) {
            if (!lifted.test(b)) {
                out.status = LiftingStatus::fails;
                out.counterexample = std::make_pair(a, b);
                return out;
            }
        }
    }
    return out;
}

} // namespace kneserlab
