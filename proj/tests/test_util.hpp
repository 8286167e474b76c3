#pragma once

#include <random>
#include <vector>

#include "kneserlab/subspace.hpp"

namespace kneserlab::testing {

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, int p)
{
    Matrix m(rows, cols, p);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m.at(r, c) = static_cast<std::uint8_t>(rng() % static_cast<unsigned>(p));
    }
    return m;
}

/// Random subspace of dimension exactly k.
inline Subspace random_subspace(std::mt19937_64& rng, int d, int k, int p)
{
    while (true) {
        Subspace s = Subspace::span(random_matrix(rng, k, d, p));
        if (s.dim() == k) return s;
    }
}

inline std::vector<std::uint8_t> vec(std::initializer_list<int> xs, int p)
{
    std::vector<std::uint8_t> v;
    for (int x : xs) v.push_back(static_cast<std::uint8_t>(((x % p) + p) % p));
    return v;
}

/// e_{i} (1-based) sums as a row, e.g. unit_sum({1,2}, 4) = e1+e2 in F^4.
inline std::vector<long long> unit_sum(std::initializer_list<int> idx, int d)
{
    std::vector<long long> v(static_cast<std::size_t>(d), 0);
    for (int i : idx) v[static_cast<std::size_t>(i - 1)] += 1;
    return v;
}

} // namespace kneserlab::testing
