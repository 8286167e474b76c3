#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subspace.hpp"

namespace kneserlab {

enum class FormKind { symmetric, alternating, quadratic };

inline std::string to_string(FormKind k)
{
    switch (k) {
    case FormKind::symmetric: return "symmetric";
    case FormKind::alternating: return "alternating";
    case FormKind::quadratic: return "quadratic";
    }
    return "?";
}

/// A bilinear or quadratic form on F_p^d.
///
/// For bilinear kinds `gram` is the Gram matrix, b(x,y) = x^T G y. For the
/// quadratic kind `gram` is the upper-triangular coefficient matrix C with
/// Q(x) = sum_{i<=j} C_ij x_i x_j; its polar form is
/// b(x,y) = Q(x+y) - Q(x) - Q(y), whose Gram matrix is C + C^T.
class Form {
public:
    static Form symmetric(Matrix gram) { return Form(FormKind::symmetric, std::move(gram)); }
    static Form alternating(Matrix gram) { return Form(FormKind::alternating, std::move(gram)); }
    static Form quadratic(Matrix coeffs) { return Form(FormKind::quadratic, std::move(coeffs)); }

    /// Q(x) = x_1 x_1' + ... + x_n x_n' on F_p^{2n}, coordinates ordered 1,1',2,2',...
    static Form hyperbolic(int n, int p)
    {
        Matrix c(2 * n, 2 * n, p);
        for (int i = 0; i < n; ++i) c.at(2 * i, 2 * i + 1) = 1;
        Form f = quadratic(std::move(c));
        f.witt_ = n;
        return f;
    }

    /// f(x,y) = sum_i (x_{2i-1} y_{2i} - x_{2i} y_{2i-1}) on F_p^{2n}.
    static Form symplectic(int n, int p)
    {
        Field fld(p);
        Matrix g(2 * n, 2 * n, p);
        for (int i = 0; i < n; ++i) {
            g.at(2 * i, 2 * i + 1) = 1;
            g.at(2 * i + 1, 2 * i) = fld.reduce(-1);
        }
        Form f = alternating(std::move(g));
        f.witt_ = n;
        return f;
    }

    /// Q(x) = x_1 x_2 + ... + x_{2n-1} x_{2n} - x_{2n+1}^2 on F_p^{2n+1}.
    static Form parabolic(int n, int p)
    {
        Field fld(p);
        Matrix c(2 * n + 1, 2 * n + 1, p);
        for (int i = 0; i < n; ++i) c.at(2 * i, 2 * i + 1) = 1;
        c.at(2 * n, 2 * n) = fld.reduce(-1);
        Form f = quadratic(std::move(c));
        f.witt_ = n;
        return f;
    }

    FormKind kind() const { return kind_; }
    const Matrix& gram() const { return gram_; }
    const Matrix& polar_gram() const { return polar_; }
    int ambient() const { return gram_.cols(); }
    int modulus() const { return gram_.modulus(); }
    const Field& field() const { return field_; }

    /// Witt index when known from construction (standard forms).
    std::optional<int> witt_index() const { return witt_; }

    /// Dimension of the radical of the polar (or bilinear) form.
    int radical_dim() const { return ambient() - polar_.rank(); }

    void require_nondegenerate() const
    {
        const int rad = radical_dim();
        if (rad != 0) {
            throw ConstructionError("degenerate " + to_string(kind_) + " form over F_" + std::to_string(modulus()) +
                                    ": radical has dimension " + std::to_string(rad));
        }
    }

    std::uint8_t bilinear(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) const
    {
        const int d = ambient();
        unsigned acc = 0;
        for (int i = 0; i < d; ++i) {
            if (x[static_cast<std::size_t>(i)] == 0) continue;
            unsigned row = 0;
            for (int j = 0; j < d; ++j) row += static_cast<unsigned>(polar_.at(i, j)) * y[static_cast<std::size_t>(j)];
            acc += static_cast<unsigned>(x[static_cast<std::size_t>(i)]) * (row % static_cast<unsigned>(modulus()));
        }
        return static_cast<std::uint8_t>(acc % static_cast<unsigned>(modulus()));
    }

    /// Q(x) for the quadratic kind; b(x,x) otherwise.
    std::uint8_t value(std::span<const std::uint8_t> x) const
    {
        if (kind_ != FormKind::quadratic) return bilinear(x, x);
        const int d = ambient();
        unsigned acc = 0;
        for (int i = 0; i < d; ++i) {
            if (x[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = i; j < d; ++j) {
                acc += static_cast<unsigned>(gram_.at(i, j)) * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
            }
        }
        return static_cast<std::uint8_t>(acc % static_cast<unsigned>(modulus()));
    }

private:
    Form(FormKind kind, Matrix gram) : kind_(kind), gram_(std::move(gram)), field_(gram_.modulus())
    {
        const int d = gram_.cols();
        if (gram_.rows() != d) throw UsageError("form matrix must be square");
        polar_ = Matrix(d, d, modulus());
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                const std::uint8_t gij = gram_.at(i, j);
                const std::uint8_t gji = gram_.at(j, i);
                switch (kind_) {
                case FormKind::symmetric:
                    if (gij != gji) throw UsageError("symmetric form requires G = G^T");
                    polar_.at(i, j) = gij;
                    break;
                case FormKind::alternating:
                    if (gij != field_.neg(gji) || (i == j && gij != 0)) {
                        throw UsageError("alternating form requires G = -G^T with zero diagonal");
                    }
                    polar_.at(i, j) = gij;
                    break;
                case FormKind::quadratic:
                    if (i > j && gij != 0) throw UsageError("quadratic form coefficients must be upper-triangular");
                    polar_.at(i, j) = field_.add(gij, gji);
                    break;
                }
            }
        }
    }

    FormKind kind_;
    Matrix gram_;
    Matrix polar_;
    Field field_;
    std::optional<int> witt_;
};

inline void check_form_compatible(const Subspace& u, const Form& form)
{
    if (u.ambient() != form.ambient()) throw UsageError("subspace and form have different ambient dimensions");
    if (u.modulus() != form.modulus()) throw UsageError("subspace and form over different fields");
}

/// U^⊥ with respect to the polar form; the form must be nondegenerate.
inline Subspace perp(const Subspace& u, const Form& form)
{
    check_form_compatible(u, form);
    form.require_nondegenerate();
    const int d = u.ambient();
    Matrix ug(u.dim(), d, u.modulus());
    const Field& f = form.field();
    for (int r = 0; r < u.dim(); ++r) {
        for (int j = 0; j < d; ++j) {
            std::uint8_t acc = 0;
            for (int i = 0; i < d; ++i) acc = f.add(acc, f.mul(u.basis().at(r, i), form.polar_gram().at(i, j)));
            ug.at(r, j) = acc;
        }
    }
    return Subspace::span(ug.nullspace());
}

inline bool is_totally_singular(const Subspace& u, const Form& form)
{
    check_form_compatible(u, form);
    for (int i = 0; i < u.dim(); ++i) {
        if (form.value(u.row(i)) != 0) return false;
        for (int j = i + 1; j < u.dim(); ++j) {
            if (form.bilinear(u.row(i), u.row(j)) != 0) return false;
        }
    }
    return true;
}

/// dim(X^⊥ ∩ Y) = dim Y - rank[b(x_i, y_j)].
inline int perp_meet_dim(const Subspace& x, const Subspace& y, const Form& form)
{
    const int rows = x.dim();
    const int cols = y.dim();
    std::vector<std::uint8_t> m(static_cast<std::size_t>(rows * cols));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m[static_cast<std::size_t>(i * cols + j)] = form.bilinear(x.row(i), y.row(j));
    }
    return cols - rank_in_place(m.data(), rows, cols, form.field());
}

} // namespace kneserlab
