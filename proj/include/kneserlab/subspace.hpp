#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace kneserlab {

/// A subspace of F_p^d held by its reduced row echelon basis.
///
/// The RREF basis is unique, so two Subspace values describe the same subspace
/// exactly when their bytes agree. Ordering is lexicographic on
/// (ambient, modulus, rank, row-major entries).
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(int ambient, int p) { return Subspace(Matrix(0, ambient, p)); }

    static Subspace full(int ambient, int p)
    {
        Matrix m(ambient, ambient, p);
        for (int i = 0; i < ambient; ++i) m.at(i, i) = 1;
        return Subspace(std::move(m));
    }

    /// Canonical span of the rows of an arbitrary matrix.
    static Subspace span(Matrix m)
    {
        m.reduce_in_place();
        return Subspace(std::move(m));
    }

    static Subspace span(const std::vector<std::vector<long long>>& rows, int ambient, int p)
    {
        return span(Matrix::from_rows(rows, ambient, p));
    }

    /// Span of standard basis vectors e_i for the given 0-based coordinates.
    static Subspace coordinate(const std::vector<int>& coords, int ambient, int p)
    {
        Matrix m(0, ambient, p);
        std::vector<std::uint8_t> v(static_cast<std::size_t>(ambient));
        for (int c : coords) {
            if (c < 0 || c >= ambient) throw UsageError("coordinate index out of range");
            std::fill(v.begin(), v.end(), 0);
            v[static_cast<std::size_t>(c)] = 1;
            m.append_row(v);
        }
        return span(std::move(m));
    }

    /// Wraps rows already known to be in RREF; used by the enumerators.
    static Subspace from_canonical(Matrix m) { return Subspace(std::move(m)); }

    int ambient() const { return basis_.cols(); }
    int modulus() const { return basis_.modulus(); }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::span<const std::uint8_t> row(int r) const { return basis_.row(r); }

    /// Pivot column of each basis row.
    std::vector<int> pivots() const
    {
        std::vector<int> out;
        for (int r = 0; r < dim(); ++r) {
            for (int c = 0; c < ambient(); ++c) {
                if (basis_.at(r, c) != 0) {
                    out.push_back(c);
                    break;
                }
            }
        }
        return out;
    }

    /// True when every basis row is a standard unit vector.
    bool is_coordinate() const
    {
        for (int r = 0; r < dim(); ++r) {
            int nz = 0;
            for (std::uint8_t x : row(r)) nz += (x != 0);
            if (nz != 1) return false;
        }
        return true;
    }

    bool contains(std::span<const std::uint8_t> v) const
    {
        if (static_cast<int>(v.size()) != ambient()) throw UsageError("vector length mismatch");
        Matrix m = basis_;
        m.append_row(v);
        return m.rank() == dim();
    }

    bool contains(const Subspace& w) const
    {
        check_compatible(*this, w);
        for (int r = 0; r < w.dim(); ++r) {
            if (!contains(w.row(r))) return false;
        }
        return true;
    }

    /// Annihilator under the standard dot product: {x : u.x = 0 for all u in U}.
    Subspace annihilator() const { return Subspace(basis_.nullspace()); }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.basis_.cols() == b.basis_.cols() && a.basis_.modulus() == b.basis_.modulus() &&
               a.basis_.rows() == b.basis_.rows() && a.basis_.data() == b.basis_.data();
    }

    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b)
    {
        if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
        if (auto c = a.modulus() <=> b.modulus(); c != 0) return c;
        if (auto c = a.dim() <=> b.dim(); c != 0) return c;
        const auto& x = a.basis_.data();
        const auto& y = b.basis_.data();
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (auto c = x[i] <=> y[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const
    {
        std::size_t h = static_cast<std::size_t>(ambient() * 131 + modulus() * 17 + dim());
        for (std::uint8_t x : basis_.data()) h = h * 1099511628211ULL + x;
        return h;
    }

    std::string to_string() const
    {
        std::string s = "<";
        for (int r = 0; r < dim(); ++r) {
            if (r) s += ",";
            for (std::uint8_t x : row(r)) s += static_cast<char>('0' + x);
        }
        return s + ">";
    }

    static void check_compatible(const Subspace& u, const Subspace& w)
    {
        if (u.ambient() != w.ambient()) throw UsageError("ambient dimension mismatch");
        if (u.modulus() != w.modulus()) throw UsageError("field mismatch");
    }

private:
    explicit Subspace(Matrix m) : basis_(std::move(m)) {}
    Matrix basis_;
};

inline Subspace sum(const Subspace& u, const Subspace& w)
{
    Subspace::check_compatible(u, w);
    Matrix m = u.basis();
    for (int r = 0; r < w.dim(); ++r) m.append_row(w.row(r));
    return Subspace::span(std::move(m));
}

/// U ∩ W computed as ann(ann U + ann W).
inline Subspace intersect(const Subspace& u, const Subspace& w)
{
    Subspace::check_compatible(u, w);
    return sum(u.annihilator(), w.annihilator()).annihilator();
}

/// dim(U ∩ W) via the rank of the stacked bases.
inline int intersection_dim(const Subspace& u, const Subspace& w)
{
    Subspace::check_compatible(u, w);
    const int d = u.ambient();
    const int rows = u.dim() + w.dim();
    std::vector<std::uint8_t> buf(static_cast<std::size_t>(rows * d));
    std::copy(u.basis().data().begin(), u.basis().data().end(), buf.begin());
    std::copy(w.basis().data().begin(), w.basis().data().end(), buf.begin() + u.dim() * d);
    return rows - rank_in_place(buf.data(), rows, d, Field(u.modulus()));
}

} // namespace kneserlab

template <>
struct std::hash<kneserlab::Subspace> {
    std::size_t operator()(const kneserlab::Subspace& s) const noexcept { return s.hash(); }
};
