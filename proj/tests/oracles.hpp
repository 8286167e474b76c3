#pragma once

// Independent reference computations used to check the library; none of
// these call into the code paths they are compared against.

#include <algorithm>
#include <bit>
#include <vector>

#include "kneserlab/enumerate.hpp"
#include "kneserlab/matroid.hpp"

namespace kneserlab::oracles {

/// max |I1 ∪ I2| over I1 independent in m1, I2 independent in m2, both inside k.
inline int brute_force_union_rank(const ColumnMatroid& m1, const ColumnMatroid& m2, ElementSet k)
{
    std::vector<ElementSet> ind1, ind2;
    ElementSet s = k;
    while (true) {
        if (m1.is_independent(s)) ind1.push_back(s);
        if (m2.is_independent(s)) ind2.push_back(s);
        if (s == 0) break;
        s = (s - 1) & k;
    }
    int best = 0;
    for (ElementSet a : ind1) {
        for (ElementSet b : ind2) best = std::max(best, std::popcount(a | b));
    }
    return best;
}

/// Column matroids of all F_2 matrices with at most `max_rows` rows and `cols`
/// columns, one per row space (the column matroid depends only on the row space).
inline std::vector<ColumnMatroid> all_f2_column_matroids(int max_rows, int cols)
{
    std::vector<ColumnMatroid> out;
    for (int k = 0; k <= std::min(max_rows, cols); ++k) {
        for (const Subspace& s : enumerate_subspaces(cols, k, 2)) out.emplace_back(s.basis());
    }
    return out;
}

inline long long binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace kneserlab::oracles
