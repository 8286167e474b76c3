#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subspace.hpp"

namespace kneserlab {

/// Index subset of {0..d-1}, bit i set for e_i.
using IndexMask = std::uint32_t;

inline IndexMask mask_of(const std::vector<int>& indices)
{
    IndexMask m = 0;
    for (int i : indices) {
        if (i < 0 || i >= 32) throw UsageError("exterior index out of range");
        const IndexMask bit = IndexMask{1} << i;
        if (m & bit) throw UsageError("repeated index in exterior basis element");
        m |= bit;
    }
    return m;
}

inline std::vector<int> indices_of(IndexMask m)
{
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1) {
        if (m & 1u) out.push_back(i);
    }
    return out;
}

/// Sparse element of the exterior algebra of F_p^d: a map e_S -> nonzero coefficient.
class Multivector {
public:
    Multivector(int ambient, int p) : ambient_(ambient), field_(p)
    {
        if (ambient < 0 || ambient > 31) throw UsageError("exterior algebra ambient dimension must be in [0,31]");
    }

    /// The grade-1 element sum v_i e_i.
    static Multivector vector(std::span<const std::uint8_t> v, int p)
    {
        Multivector out(static_cast<int>(v.size()), p);
        for (std::size_t i = 0; i < v.size(); ++i) out.add_term(IndexMask{1} << i, v[i]);
        return out;
    }

    static Multivector basis_element(const std::vector<int>& indices, int ambient, int p)
    {
        Multivector out(ambient, p);
        out.add_term(mask_of(indices), 1);
        return out;
    }

    int ambient() const { return ambient_; }
    int modulus() const { return field_.order(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<IndexMask, std::uint8_t>& terms() const { return terms_; }

    /// Common grade of all terms, or nullopt for zero / mixed-grade elements.
    std::optional<int> grade() const
    {
        if (terms_.empty()) return std::nullopt;
        const int g = std::popcount(terms_.begin()->first);
        for (const auto& [mask, c] : terms_) {
            if (std::popcount(mask) != g) return std::nullopt;
        }
        return g;
    }

    std::uint8_t coefficient(IndexMask s) const
    {
        auto it = terms_.find(s);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(IndexMask s, std::uint8_t c)
    {
        if (s >> ambient_) throw UsageError("exterior index out of range");
        c = static_cast<std::uint8_t>(c % modulus());
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(s, c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    Multivector& operator+=(const Multivector& o)
    {
        check(o);
        for (const auto& [s, c] : o.terms_) add_term(s, c);
        return *this;
    }
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }

    Multivector scaled(std::uint8_t c) const
    {
        Multivector out(ambient_, modulus());
        for (const auto& [s, x] : terms_) out.add_term(s, field_.mul(x, c));
        return out;
    }

    friend bool operator==(const Multivector& a, const Multivector& b)
    {
        return a.ambient_ == b.ambient_ && a.modulus() == b.modulus() && a.terms_ == b.terms_;
    }

    friend Multivector wedge(const Multivector& a, const Multivector& b)
    {
        a.check(b);
        Multivector out(a.ambient_, a.modulus());
        for (const auto& [sa, ca] : a.terms_) {
            for (const auto& [sb, cb] : b.terms_) {
                if (sa & sb) continue;
                // parity of the merge: pairs (i in A, j in B) with i > j
                int inversions = 0;
                for (IndexMask rest = sb; rest; rest &= rest - 1) {
                    const int j = std::countr_zero(rest);
                    inversions += std::popcount(sa >> (j + 1));
                }
                std::uint8_t c = a.field_.mul(ca, cb);
                if (inversions & 1) c = a.field_.neg(c);
                out.add_term(sa | sb, c);
            }
        }
        return out;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [mask, c] : terms_) {
            if (!s.empty()) s += " + ";
            if (c != 1) s += std::to_string(c) + "*";
            s += "e";
            for (int i : indices_of(mask)) s += std::to_string(i + 1);
        }
        return s;
    }

private:
    void check(const Multivector& o) const
    {
        if (ambient_ != o.ambient_) throw UsageError("multivector ambient mismatch");
        if (modulus() != o.modulus()) throw UsageError("multivector field mismatch");
    }

    int ambient_;
    Field field_;
    std::map<IndexMask, std::uint8_t> terms_;
};

/// Plücker image of U: the wedge of its RREF basis rows.
inline Multivector plucker(const Subspace& u)
{
    if (u.dim() == 0) throw UsageError("Plücker map is undefined on the zero subspace");
    Multivector acc = Multivector::vector(u.row(0), u.modulus());
    for (int r = 1; r < u.dim(); ++r) acc = wedge(acc, Multivector::vector(u.row(r), u.modulus()));
    return acc;
}

inline std::uint8_t coefficient(const Multivector& m, const std::vector<int>& indices) { return m.coefficient(mask_of(indices)); }

/// Incremental row echelon basis for a span of multivectors.
class MultivectorSpan {
public:
    MultivectorSpan(int ambient, int p) : ambient_(ambient), field_(p) {}

    /// Adds m to the span; returns false if it was already a member.
    bool insert(const Multivector& m)
    {
        auto r = reduce(m);
        if (r.empty()) return false;
        const IndexMask lead = r.begin()->first;
        const std::uint8_t iv = field_.inv(r.begin()->second);
        for (auto& [s, c] : r) c = field_.mul(c, iv);
        rows_.emplace(lead, std::move(r));
        return true;
    }

    bool contains(const Multivector& m) const
    {
        if (m.ambient() != ambient_ || m.modulus() != field_.order()) throw UsageError("multivector span mismatch");
        return reduce(m).empty();
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    using Row = std::map<IndexMask, std::uint8_t>;

    Row reduce(const Multivector& m) const
    {
        Row r = m.terms();
        // rows_ keyed by leading (smallest) mask; each stored row is monic there
        for (const auto& [lead, row] : rows_) {
            auto it = r.find(lead);
            if (it == r.end()) continue;
            const std::uint8_t factor = it->second;
            for (const auto& [s, c] : row) {
                auto& x = r[s];
                x = field_.sub(x, field_.mul(factor, c));
                if (x == 0) r.erase(s);
            }
        }
        return r;
    }

    int ambient_;
    Field field_;
    std::map<IndexMask, Row> rows_;
};

/// Decides m ∈ span(generators) by rank comparison.
inline bool span_membership(const Multivector& m, const std::vector<Multivector>& generators)
{
    MultivectorSpan span(m.ambient(), m.modulus());
    for (const auto& g : generators) span.insert(g);
    return span.contains(m);
}

} // namespace kneserlab
