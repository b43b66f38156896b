/**
 * Smith normal form over a Euclidean domain and the lattice operations built
 * on it (kernels, images, solving).
 */
#ifndef FINDIM_SMITH_HPP
#define FINDIM_SMITH_HPP

#include <optional>
#include <string>
#include <vector>

#include "findim/domain.hpp"
#include "findim/linalg.hpp"

namespace findim {

template <typename S>
struct SmithForm
{
    Mat<S> U, D, V;          // U * m * V == D
    Mat<S> Uinv, Vinv;
    Index rank = 0;

    std::vector<S> invariant_factors() const
    {
        std::vector<S> out;
        for (Index i = 0; i < rank; ++i) out.push_back(D(i, i));
        return out;
    }
};

/**
 * Smith normal form.  The pivot at each stage is the entry of minimal
 * Euclidean norm in the remaining block, ties broken by lowest (row, col);
 * diagonal entries are normalized to canonical associates.
 */
template <EuclideanDomain Dom>
SmithForm<typename Dom::Scalar> smith_normal_form(const Mat<typename Dom::Scalar>& m, const Dom& dom)
{
    using S = typename Dom::Scalar;
    const Index rows = m.rows(), cols = m.cols();
    SmithForm<S> sf;
    sf.D = m;
    sf.U = identity<S>(rows);
    sf.Uinv = identity<S>(rows);
    sf.V = identity<S>(cols);
    sf.Vinv = identity<S>(cols);
    Mat<S>& d = sf.D;

    auto row_axpy = [&](Index target, Index source, const S& q) {   // row_t -= q row_s
        if (q == S(0)) return;
        for (Index j = 0; j < cols; ++j) if (d(source, j) != S(0)) d(target, j) -= q * d(source, j);
        for (Index j = 0; j < rows; ++j) if (sf.U(source, j) != S(0)) sf.U(target, j) -= q * sf.U(source, j);
        for (Index i = 0; i < rows; ++i) if (sf.Uinv(i, target) != S(0)) sf.Uinv(i, source) += q * sf.Uinv(i, target);
    };
    auto col_axpy = [&](Index target, Index source, const S& q) {   // col_t -= q col_s
        if (q == S(0)) return;
        for (Index i = 0; i < rows; ++i) if (d(i, source) != S(0)) d(i, target) -= q * d(i, source);
        for (Index i = 0; i < cols; ++i) if (sf.V(i, source) != S(0)) sf.V(i, target) -= q * sf.V(i, source);
        for (Index j = 0; j < cols; ++j) if (sf.Vinv(target, j) != S(0)) sf.Vinv(source, j) += q * sf.Vinv(target, j);
    };
    auto swap_rows = [&](Index a, Index b) {
        if (a == b) return;
        d.row(a).swap(d.row(b));
        sf.U.row(a).swap(sf.U.row(b));
        sf.Uinv.col(a).swap(sf.Uinv.col(b));
    };
    auto swap_cols = [&](Index a, Index b) {
        if (a == b) return;
        d.col(a).swap(d.col(b));
        sf.V.col(a).swap(sf.V.col(b));
        sf.Vinv.row(a).swap(sf.Vinv.row(b));
    };

    Index t = 0;
    for (; t < std::min(rows, cols); ++t)
    {
        while (true)
        {
            Index pr = -1, pc = -1;
            Integer best;
            for (Index i = t; i < rows; ++i)
                for (Index j = t; j < cols; ++j)
                {
                    if (d(i, j) == S(0)) continue;
                    Integer n = dom.norm(d(i, j));
                    if (pr < 0 || n < best) { best = n; pr = i; pc = j; }
                }
            if (pr < 0) goto done;
            swap_rows(t, pr);
            swap_cols(t, pc);

            bool dirty = false;
            for (Index i = t + 1; i < rows; ++i)
            {
                if (d(i, t) == S(0)) continue;
                auto [q, r] = dom.divmod(d(i, t), d(t, t));
                row_axpy(i, t, q);
                if (r != S(0)) dirty = true;
            }
            for (Index j = t + 1; j < cols; ++j)
            {
                if (d(t, j) == S(0)) continue;
                auto [q, r] = dom.divmod(d(t, j), d(t, t));
                col_axpy(j, t, q);
                if (r != S(0)) dirty = true;
            }
            if (dirty) continue;

            Index bad = -1;
            for (Index i = t + 1; i < rows && bad < 0; ++i)
                for (Index j = t + 1; j < cols; ++j)
                    if (d(i, j) != S(0) && dom.divmod(d(i, j), d(t, t)).second != S(0)) { bad = i; break; }
            if (bad < 0) break;
            row_axpy(t, bad, S(-1));
        }

        const S u = dom.unit_part(d(t, t));
        if (u != S(1))
        {
            const S uinv = dom.unit_inverse(u);
            for (Index j = 0; j < cols; ++j) d(t, j) *= uinv;
            for (Index j = 0; j < rows; ++j) sf.U(t, j) *= uinv;
            for (Index i = 0; i < rows; ++i) sf.Uinv(i, t) *= u;
        }
    }
done:
    sf.rank = t;
    return sf;
}

/** Nonzero invariant factors of a matrix, normalized. */
template <EuclideanDomain Dom>
std::vector<typename Dom::Scalar> invariant_factors(const Mat<typename Dom::Scalar>& m, const Dom& dom)
{
    return smith_normal_form(m, dom).invariant_factors();
}

template <typename S>
struct LatticeSolve
{
    std::optional<Vec<S>> solution;
    // When no solution exists: the SNF coordinate where divisibility fails
    // (or where a zero diagonal meets a nonzero right-hand side).
    Index failing_coordinate = -1;
    std::string reason;

    bool solvable() const { return solution.has_value(); }
};

/** Solve A x = b over the domain using the Smith form of A. */
template <EuclideanDomain Dom>
LatticeSolve<typename Dom::Scalar> solve_lattice(const Mat<typename Dom::Scalar>& a,
                                                 const Vec<typename Dom::Scalar>& b,
                                                 const Dom& dom)
{
    using S = typename Dom::Scalar;
    if (a.rows() != b.size()) throw DomainError("solve_lattice: shape mismatch");
    LatticeSolve<S> out;
    auto sf = smith_normal_form(a, dom);
    Vec<S> c = sf.U * b;
    Vec<S> y = Vec<S>::Constant(a.cols(), S(0));
    for (Index i = 0; i < c.size(); ++i)
    {
        if (i < sf.rank)
        {
            auto [q, r] = dom.divmod(c(i), sf.D(i, i));
            if (r != S(0))
            {
                out.failing_coordinate = i;
                out.reason = "invariant factor " + dom.format(sf.D(i, i)) + " does not divide "
                           + dom.format(c(i));
                return out;
            }
            y(i) = q;
        }
        else if (c(i) != S(0))
        {
            out.failing_coordinate = i;
            out.reason = "right-hand side has nonzero component " + dom.format(c(i))
                       + " outside the image";
            return out;
        }
    }
    out.solution = sf.V * y;
    return out;
}

/** Solve A X = B column by column. */
template <EuclideanDomain Dom>
std::optional<Mat<typename Dom::Scalar>> solve_lattice_matrix(const Mat<typename Dom::Scalar>& a,
                                                              const Mat<typename Dom::Scalar>& b,
                                                              const Dom& dom)
{
    using S = typename Dom::Scalar;
    auto sf = smith_normal_form(a, dom);
    Mat<S> c = sf.U * b;
    Mat<S> y = zeros<S>(a.cols(), b.cols());
    for (Index j = 0; j < b.cols(); ++j)
        for (Index i = 0; i < c.rows(); ++i)
        {
            if (i < sf.rank)
            {
                auto [q, r] = dom.divmod(c(i, j), sf.D(i, i));
                if (r != S(0)) return std::nullopt;
                y(i, j) = q;
            }
            else if (c(i, j) != S(0))
                return std::nullopt;
        }
    return Mat<S>(sf.V * y);
}

/** Basis (columns) of the kernel lattice {v : m v = 0}. */
template <EuclideanDomain Dom>
Mat<typename Dom::Scalar> lattice_kernel(const Mat<typename Dom::Scalar>& m, const Dom& dom)
{
    auto sf = smith_normal_form(m, dom);
    return sf.V.rightCols(m.cols() - sf.rank);
}

/** Basis (columns) of the image lattice of m. */
template <EuclideanDomain Dom>
Mat<typename Dom::Scalar> lattice_image(const Mat<typename Dom::Scalar>& m, const Dom& dom)
{
    using S = typename Dom::Scalar;
    auto sf = smith_normal_form(m, dom);
    Mat<S> out(m.rows(), sf.rank);
    for (Index i = 0; i < sf.rank; ++i) out.col(i) = sf.Uinv.col(i) * sf.D(i, i);
    return out;
}

}   // namespace findim

#endif
