#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "form.hpp"

namespace kneserlab {

/// Gaussian binomial [d k]_q.
inline std::uint64_t gaussian_binomial(int d, int k, int q)
{
    if (k < 0 || k > d) return 0;
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    std::uint64_t qd = 1;
    for (int i = 0; i < d - k; ++i) qd *= static_cast<std::uint64_t>(q);
    // prod_{i=1..k} (q^{d-k+i} - 1) / (q^i - 1)
    std::uint64_t qi = 1;
    for (int i = 1; i <= k; ++i) {
        qd *= static_cast<std::uint64_t>(q);
        qi *= static_cast<std::uint64_t>(q);
        num *= qd - 1;
        den *= qi - 1;
        const std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

namespace detail {

inline bool next_combination(std::vector<int>& c, int n)
{
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

/// Free (non-pivot) columns to the right of each row's pivot.
inline std::vector<std::vector<int>> free_columns(const std::vector<int>& pivots, int d)
{
    std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<int>> out(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        for (int c = pivots[r] + 1; c < d; ++c) {
            if (!is_pivot[static_cast<std::size_t>(c)]) out[r].push_back(c);
        }
    }
    return out;
}

/// Advances the entries of `row` at `cols` like an odometer; false on wrap-around.
inline bool next_assignment(std::span<std::uint8_t> row, const std::vector<int>& cols, int p)
{
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        std::uint8_t& x = row[static_cast<std::size_t>(*it)];
        if (++x < p) return true;
        x = 0;
    }
    return false;
}

} // namespace detail

/// Calls fn on every k-subspace of F_p^d, presented as its RREF basis matrix.
/// The matrix is reused between calls.
inline void for_each_rref(int d, int k, int p, const std::function<void(const Matrix&)>& fn)
{
    if (k < 0 || k > d) throw UsageError("subspace dimension out of range");
    Matrix m(k, d, p);
    if (k == 0) {
        fn(m);
        return;
    }
    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;
    do {
        const auto free = detail::free_columns(pivots, d);
        std::fill(m.row(0).data(), m.row(0).data() + static_cast<std::ptrdiff_t>(k * d), 0);
        for (int r = 0; r < k; ++r) m.at(r, pivots[static_cast<std::size_t>(r)]) = 1;
        // One odometer over all free cells, row-major.
        std::vector<std::uint8_t*> cells;
        for (int r = 0; r < k; ++r) {
            for (int c : free[static_cast<std::size_t>(r)]) cells.push_back(&m.at(r, c));
        }
        auto advance = [&] {
            for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
                if (++**it < p) return true;
                **it = 0;
            }
            return false;
        };
        do {
            fn(m);
        } while (advance());
    } while (detail::next_combination(pivots, d));
}

/// All k-subspaces of F_p^d in lexicographic RREF order.
inline std::vector<Subspace> enumerate_subspaces(int d, int k, int p)
{
    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(gaussian_binomial(d, k, p)));
    for_each_rref(d, k, p, [&](const Matrix& m) { out.push_back(Subspace::from_canonical(m)); });
    std::sort(out.begin(), out.end());
    return out;
}

/// All totally singular (quadratic) / totally isotropic (bilinear) k-subspaces.
///
/// Builds RREF bases row by row and discards a partial basis as soon as the
/// newest row is singular-incompatible with the rows above it.
inline std::vector<Subspace> enumerate_singular_subspaces(const Form& form, int k)
{
    const int d = form.ambient();
    const int p = form.modulus();
    if (k < 0 || k > d) throw UsageError("subspace dimension out of range");
    std::vector<Subspace> out;
    if (form.witt_index() && k > *form.witt_index()) return out;
    Matrix m(k, d, p);
    if (k == 0) {
        out.push_back(Subspace::from_canonical(m));
        return out;
    }
    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;
    do {
        const auto free = detail::free_columns(pivots, d);
        std::function<void(int)> fill_row = [&](int r) {
            if (r == k) {
                out.push_back(Subspace::from_canonical(m));
                return;
            }
            auto row = m.row(r);
            std::fill(row.begin(), row.end(), 0);
            row[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
            const auto& cols = free[static_cast<std::size_t>(r)];
            do {
                if (form.value(row) != 0) continue;
                bool ok = true;
                for (int j = 0; j < r && ok; ++j) ok = form.bilinear(m.row(j), row) == 0;
                if (ok) fill_row(r + 1);
            } while (detail::next_assignment(row, cols, p));
        };
        fill_row(0);
    } while (detail::next_combination(pivots, d));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace kneserlab
