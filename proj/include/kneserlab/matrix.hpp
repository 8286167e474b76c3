#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "field.hpp"

namespace kneserlab {

/// Dense row-major matrix over F_p.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p), data_(static_cast<std::size_t>(rows * cols), 0)
    {
        if (!is_supported_prime(p)) throw UsageError("unsupported field order " + std::to_string(p));
        if (rows < 0 || cols < 0) throw UsageError("negative matrix shape");
    }

    /// Builds a matrix from integer rows; entries are reduced mod p (so -1 is p-1).
    static Matrix from_rows(const std::vector<std::vector<long long>>& rows, int cols, int p)
    {
        Matrix m(static_cast<int>(rows.size()), cols, p);
        Field f(p);
        for (int r = 0; r < m.rows_; ++r) {
            if (static_cast<int>(rows[r].size()) != cols) throw UsageError("ragged matrix rows");
            for (int c = 0; c < cols; ++c) m.at(r, c) = f.reduce(rows[r][c]);
        }
        return m;
    }

    /// Builds a matrix from Scalars; all entries must share one modulus.
    static Matrix from_scalars(const std::vector<std::vector<Scalar>>& rows)
    {
        if (rows.empty()) throw UsageError("cannot infer modulus of an empty scalar matrix");
        const int cols = static_cast<int>(rows.front().size());
        if (cols == 0) throw UsageError("cannot infer modulus of an empty scalar matrix");
        const int p = rows.front().front().p;
        Matrix m(static_cast<int>(rows.size()), cols, p);
        for (int r = 0; r < m.rows_; ++r) {
            if (static_cast<int>(rows[r].size()) != cols) throw UsageError("ragged matrix rows");
            for (int c = 0; c < cols; ++c) {
                if (rows[r][c].p != p) throw UsageError("mixed moduli in matrix");
                m.at(r, c) = rows[r][c].value;
            }
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int modulus() const { return p_; }

    std::uint8_t& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    std::uint8_t at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

    std::span<std::uint8_t> row(int r) { return {data_.data() + static_cast<std::size_t>(r * cols_), static_cast<std::size_t>(cols_)}; }
    std::span<const std::uint8_t> row(int r) const
    {
        return {data_.data() + static_cast<std::size_t>(r * cols_), static_cast<std::size_t>(cols_)};
    }

    void append_row(std::span<const std::uint8_t> v)
    {
        if (static_cast<int>(v.size()) != cols_) throw UsageError("row length mismatch");
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    const std::vector<std::uint8_t>& data() const { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    /// Row-reduces in place to reduced row echelon form, dropping zero rows.
    /// Returns the pivot columns.
    std::vector<int> reduce_in_place()
    {
        Field f(p_);
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int sel = -1;
            for (int i = r; i < rows_; ++i) {
                if (at(i, c) != 0) {
                    sel = i;
                    break;
                }
            }
            if (sel < 0) continue;
            if (sel != r) {
                for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
            }
            const std::uint8_t iv = f.inv(at(r, c));
            for (int j = c; j < cols_; ++j) at(r, j) = f.mul(at(r, j), iv);
            for (int i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                const std::uint8_t factor = at(i, c);
                for (int j = c; j < cols_; ++j) at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        rows_ = r;
        data_.resize(static_cast<std::size_t>(rows_ * cols_));
        return pivots;
    }

    int rank() const
    {
        Matrix copy = *this;
        return static_cast<int>(copy.reduce_in_place().size());
    }

    /// Basis (as rows) of the right kernel {x : M x = 0}.
    Matrix nullspace() const
    {
        Matrix red = *this;
        const std::vector<int> pivots = red.reduce_in_place();
        std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
        for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
        Field f(p_);
        Matrix out(0, cols_, p_);
        std::vector<std::uint8_t> v(static_cast<std::size_t>(cols_));
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[static_cast<std::size_t>(free)]) continue;
            std::fill(v.begin(), v.end(), 0);
            v[static_cast<std::size_t>(free)] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                v[static_cast<std::size_t>(pivots[r])] = f.neg(red.at(static_cast<int>(r), free));
            }
            out.append_row(v);
        }
        return out;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    int p_ = 2;
    std::vector<std::uint8_t> data_;
};

/// Rank of a small row-major block held in a caller buffer; the buffer is destroyed.
inline int rank_in_place(std::uint8_t* a, int rows, int cols, const Field& f)
{
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i * cols + c] != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != r) {
            for (int j = c; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
        }
        const std::uint8_t iv = f.inv(a[r * cols + c]);
        for (int i = r + 1; i < rows; ++i) {
            const std::uint8_t factor = f.mul(a[i * cols + c], iv);
            if (factor == 0) continue;
            for (int j = c; j < cols; ++j) a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
        }
        ++r;
    }
    return r;
}

} // namespace kneserlab
