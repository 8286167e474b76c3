#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "subspace.hpp"

namespace kneserlab {

/// Subset of the ground set {0..n-1}.
using ElementSet = std::uint32_t;

/// Matroid on the columns of a matrix over F_p: r(S) is the rank of the
/// column submatrix indexed by S.
class ColumnMatroid {
public:
    explicit ColumnMatroid(Matrix source) : source_(std::move(source))
    {
        if (source_.cols() > 20) throw UsageError("column matroid ground set limited to 20 elements");
    }

    /// M_U, built from the RREF basis rows of U.
    static ColumnMatroid of(const Subspace& u) { return ColumnMatroid(u.basis()); }

    int ground_size() const { return source_.cols(); }
    ElementSet ground() const { return ground_size() == 0 ? 0 : (ElementSet{1} << ground_size()) - 1; }
    const Matrix& source() const { return source_; }

    int rank(ElementSet s) const
    {
        if (s & ~ground()) throw UsageError("element index outside the ground set");
        const int k = std::popcount(s);
        if (k == 0 || source_.rows() == 0) return 0;
        // transpose: one row per selected column
        std::vector<std::uint8_t> buf(static_cast<std::size_t>(k * source_.rows()));
        int r = 0;
        for (ElementSet rest = s; rest; rest &= rest - 1, ++r) {
            const int c = std::countr_zero(rest);
            for (int i = 0; i < source_.rows(); ++i) buf[static_cast<std::size_t>(r * source_.rows() + i)] = source_.at(i, c);
        }
        return rank_in_place(buf.data(), k, source_.rows(), Field(source_.modulus()));
    }

    int rank() const { return rank(ground()); }

    bool is_independent(ElementSet s) const { return rank(s) == std::popcount(s); }

    /// All bases, as element sets in increasing numeric order.
    std::vector<ElementSet> bases() const
    {
        const int r = rank();
        std::vector<ElementSet> out;
        for (ElementSet s = 0; s <= ground(); ++s) {
            if (std::popcount(s) == r && is_independent(s)) out.push_back(s);
            if (s == ground()) break;
        }
        return out;
    }

private:
    Matrix source_;
};

inline void check_same_ground(const ColumnMatroid& a, const ColumnMatroid& b)
{
    if (a.ground_size() != b.ground_size()) throw UsageError("matroids on different ground sets");
}

/// Rank of K in the union matroid: min over L ⊆ K of |K \ L| + r1(L) + r2(L).
inline int union_rank(const ColumnMatroid& m1, const ColumnMatroid& m2, ElementSet k)
{
    check_same_ground(m1, m2);
    if (k & ~m1.ground()) throw UsageError("element index outside the ground set");
    int best = std::numeric_limits<int>::max();
    // iterate all submasks L of K, including the empty set
    ElementSet l = k;
    while (true) {
        best = std::min(best, std::popcount(k & ~l) + m1.rank(l) + m2.rank(l));
        if (l == 0) break;
        l = (l - 1) & k;
    }
    return best;
}

inline bool have_disjoint_bases(const ColumnMatroid& m1, const ColumnMatroid& m2)
{
    check_same_ground(m1, m2);
    return union_rank(m1, m2, m1.ground()) == m1.rank() + m2.rank();
}

} // namespace kneserlab
