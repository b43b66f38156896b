/**
 * Exact dense linear algebra over a field: row reduction, rank, kernels,
 * images and linear solves with inconsistency certificates.
 */
#ifndef FINDIM_LINALG_HPP
#define FINDIM_LINALG_HPP

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "findim/scalar.hpp"

namespace findim {

using Index = Eigen::Index;

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <typename S>
bool is_zero(const Mat<S>& m)
{
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != S(0)) return false;
    return true;
}

template <typename S>
bool is_zero(const Vec<S>& v)
{
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) != S(0)) return false;
    return true;
}

template <typename S>
Mat<S> zeros(Index r, Index c)
{
    return Mat<S>::Constant(r, c, S(0));
}

template <typename S>
Mat<S> identity(Index n)
{
    Mat<S> m = zeros<S>(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
}

/** Horizontal concatenation; tolerates empty operands. */
template <typename S>
Mat<S> hcat(const Mat<S>& a, const Mat<S>& b)
{
    const Index rows = a.cols() > 0 ? a.rows() : b.rows();
    Mat<S> r(rows, a.cols() + b.cols());
    if (a.cols() > 0) r.leftCols(a.cols()) = a;
    if (b.cols() > 0) r.rightCols(b.cols()) = b;
    return r;
}

template <typename S>
Mat<S> vcat(const Mat<S>& a, const Mat<S>& b)
{
    const Index cols = a.rows() > 0 ? a.cols() : b.cols();
    Mat<S> r(a.rows() + b.rows(), cols);
    if (a.rows() > 0) r.topRows(a.rows()) = a;
    if (b.rows() > 0) r.bottomRows(b.rows()) = b;
    return r;
}

/** Block diagonal sum. */
template <typename S>
Mat<S> block_diag(const Mat<S>& a, const Mat<S>& b)
{
    Mat<S> r = zeros<S>(a.rows() + b.rows(), a.cols() + b.cols());
    r.topLeftCorner(a.rows(), a.cols()) = a;
    r.bottomRightCorner(b.rows(), b.cols()) = b;
    return r;
}

template <ExactField F>
struct Echelon
{
    Mat<F> reduced;               // reduced row echelon form
    std::vector<Index> pivots;    // pivot column of each nonzero row
    Mat<F> transform;             // invertible, transform * input == reduced
};

/**
 * Reduced row echelon form by Gauss-Jordan elimination.  Pivots are taken
 * as the first nonzero entry in each column, scanning rows top-down.
 */
template <ExactField F>
Echelon<F> rref(const Mat<F>& m, bool track_transform = false)
{
    Echelon<F> e;
    e.reduced = m;
    if (track_transform) e.transform = identity<F>(m.rows());
    Mat<F>& a = e.reduced;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col)
    {
        Index piv = -1;
        for (Index i = row; i < a.rows(); ++i)
            if (a(i, col) != F(0)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
        {
            a.row(piv).swap(a.row(row));
            if (track_transform) e.transform.row(piv).swap(e.transform.row(row));
        }
        const F inv = F(1) / a(row, col);
        for (Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
        if (track_transform)
            for (Index j = 0; j < e.transform.cols(); ++j) e.transform(row, j) *= inv;
        for (Index i = 0; i < a.rows(); ++i)
        {
            if (i == row || a(i, col) == F(0)) continue;
            const F f = a(i, col);
            for (Index j = col; j < a.cols(); ++j)
                if (a(row, j) != F(0)) a(i, j) -= f * a(row, j);
            if (track_transform)
                for (Index j = 0; j < e.transform.cols(); ++j)
                    if (e.transform(row, j) != F(0)) e.transform(i, j) -= f * e.transform(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

template <ExactField F>
Index rank(const Mat<F>& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<Index>(rref(m).pivots.size());
}

template <ExactField F>
struct KernelResult
{
    Index rank = 0;
    Mat<F> basis;    // columns span the right kernel
};

/** Rank and a basis of the right kernel {v : m v = 0}. */
template <ExactField F>
KernelResult<F> rank_and_kernel(const Mat<F>& m)
{
    KernelResult<F> out;
    const Index n = m.cols();
    if (m.rows() == 0)
    {
        out.basis = identity<F>(n);
        return out;
    }
    auto e = rref(m);
    out.rank = static_cast<Index>(e.pivots.size());
    std::vector<bool> is_pivot(n, false);
    for (Index p : e.pivots) is_pivot[p] = true;
    out.basis = zeros<F>(n, n - out.rank);
    Index k = 0;
    for (Index free = 0; free < n; ++free)
    {
        if (is_pivot[free]) continue;
        out.basis(free, k) = F(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            out.basis(e.pivots[r], k) = -e.reduced(static_cast<Index>(r), free);
        ++k;
    }
    return out;
}

template <ExactField F>
Mat<F> kernel(const Mat<F>& m)
{
    return rank_and_kernel(m).basis;
}

/** Basis of the left kernel {y : y^T m = 0}, as columns. */
template <ExactField F>
Mat<F> left_kernel(const Mat<F>& m)
{
    return kernel<F>(m.transpose());
}

/** The pivot columns of m: an independent subset spanning the column space. */
template <ExactField F>
Mat<F> image_basis(const Mat<F>& m)
{
    if (m.cols() == 0) return Mat<F>(m.rows(), 0);
    auto e = rref(m);
    Mat<F> out(m.rows(), static_cast<Index>(e.pivots.size()));
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
        out.col(static_cast<Index>(k)) = m.col(e.pivots[k]);
    return out;
}

/**
 * Standard basis vectors completing the column span of b to the whole
 * space; returned as columns.
 */
template <ExactField F>
Mat<F> complement_basis(const Mat<F>& b)
{
    const Index n = b.rows();
    Mat<F> aug = hcat<F>(b, identity<F>(n));
    auto e = rref(aug);
    std::vector<Index> extra;
    for (Index p : e.pivots)
        if (p >= b.cols()) extra.push_back(p - b.cols());
    Mat<F> out = zeros<F>(n, static_cast<Index>(extra.size()));
    for (std::size_t k = 0; k < extra.size(); ++k) out(extra[k], static_cast<Index>(k)) = F(1);
    return out;
}

template <ExactField F>
struct SolveResult
{
    std::optional<Vec<F>> solution;
    // When inconsistent: y with y^T A = 0 and y^T b != 0.
    Vec<F> certificate;

    bool solvable() const { return solution.has_value(); }
};

/** Solve A x = b exactly, or return a certificate of inconsistency. */
template <ExactField F>
SolveResult<F> solve_linear(const Mat<F>& a, const Vec<F>& b)
{
    if (a.rows() != b.size())
        throw DomainError("solve_linear: shape mismatch");
    SolveResult<F> out;
    const Index n = a.cols();
    Mat<F> aug(a.rows(), n + 1);
    if (n > 0) aug.leftCols(n) = a;
    aug.col(n) = b;
    auto e = rref(aug, true);
    if (!e.pivots.empty() && e.pivots.back() == n)
    {
        const Index r = static_cast<Index>(e.pivots.size()) - 1;
        out.certificate = e.transform.row(r).transpose();
        return out;
    }
    Vec<F> x = Vec<F>::Constant(n, F(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x(e.pivots[r]) = e.reduced(static_cast<Index>(r), n);
    out.solution = std::move(x);
    return out;
}

/** Solve A X = B column by column; nullopt if any column is inconsistent. */
template <ExactField F>
std::optional<Mat<F>> solve_matrix(const Mat<F>& a, const Mat<F>& b)
{
    const Index n = a.cols();
    Mat<F> aug = hcat<F>(a, b);
    auto e = rref(aug);
    for (Index p : e.pivots)
        if (p >= n) return std::nullopt;
    Mat<F> x = zeros<F>(n, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (Index j = 0; j < b.cols(); ++j)
            x(e.pivots[r], j) = e.reduced(static_cast<Index>(r), n + j);
    return x;
}

/** Product that skips zero entries of a; action matrices are mostly zero. */
template <typename S>
Mat<S> mul(const Mat<S>& a, const Mat<S>& b)
{
    Mat<S> c = zeros<S>(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index k = 0; k < a.cols(); ++k)
        {
            if (a(i, k) == S(0)) continue;
            const S f = a(i, k);
            for (Index j = 0; j < b.cols(); ++j)
                if (b(k, j) != S(0)) c(i, j) += f * b(k, j);
        }
    return c;
}

/** L with L * basis = I; basis must have independent columns. */
template <ExactField F>
Mat<F> left_inverse(const Mat<F>& basis)
{
    auto e = rref(basis, true);
    if (static_cast<Index>(e.pivots.size()) != basis.cols()) throw DomainError("left_inverse: dependent columns");
    return e.transform.topRows(basis.cols());
}

/** Coordinates X with basis * X == v; basis must have independent columns. */
template <ExactField F>
Mat<F> coordinates(const Mat<F>& basis, const Mat<F>& v)
{
    auto x = solve_matrix<F>(basis, v);
    if (!x) throw DomainError("coordinates: vector outside span");
    return *x;
}

/** Basis of the intersection of two column spans. */
template <ExactField F>
Mat<F> intersect_spans(const Mat<F>& a, const Mat<F>& b)
{
    if (a.cols() == 0 || b.cols() == 0) return Mat<F>(a.rows(), 0);
    Mat<F> k = kernel<F>(hcat<F>(a, Mat<F>(-b)));
    Mat<F> inter = a * k.topRows(a.cols());
    return image_basis<F>(inter);
}

/** Whether every column of v lies in the column span of basis. */
template <ExactField F>
bool in_span(const Mat<F>& basis, const Mat<F>& v)
{
    if (v.cols() == 0) return true;
    if (basis.cols() == 0) return is_zero<F>(v);
    return rank<F>(hcat<F>(basis, v)) == rank<F>(basis);
}

}   // namespace findim

#endif
