/**
 * Finite-dimensional left modules over a finite-dimensional algebra, stored
 * as one action matrix per basis element of the algebra.
 */
#ifndef FINDIM_REP_HPP
#define FINDIM_REP_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "findim/algebra.hpp"

namespace findim {

template <ExactField F>
class Rep
{
    public:
        using AlgPtr = typename Algebra<F>::Ptr;

    private:
        AlgPtr alg_;
        Index dim_ = 0;
        std::vector<Mat<F>> act_;

    public:
        Rep() = default;

        /** Unchecked constructor; use create() for validated input. */
        Rep(AlgPtr alg, Index dim, std::vector<Mat<F>> act)
            : alg_(std::move(alg)), dim_(dim), act_(std::move(act)) {}

        static Rep create(AlgPtr alg, Index dim, std::vector<Mat<F>> act)
        {
            Rep r(std::move(alg), dim, std::move(act));
            r.validate();
            return r;
        }

        static Rep zero(AlgPtr alg)
        {
            return Rep(alg, 0, std::vector<Mat<F>>(alg->dim(), Mat<F>(0, 0)));
        }

        static Rep regular(AlgPtr alg)
        {
            std::vector<Mat<F>> act;
            for (Index i = 0; i < alg->dim(); ++i) act.push_back(alg->left(i));
            return Rep(alg, alg->dim(), std::move(act));
        }

        /** The indecomposable projective A e_t. */
        static Rep projective(AlgPtr alg, Index vertex)
        {
            Mat<F> b = alg->projective_basis(vertex);
            std::vector<Mat<F>> act;
            for (Index i = 0; i < alg->dim(); ++i) act.push_back(coordinates<F>(b, Mat<F>(alg->left(i) * b)));
            return Rep(alg, b.cols(), std::move(act));
        }

        /** Direct sum of indecomposable projectives at the listed vertices. */
        static Rep projective_sum(AlgPtr alg, const std::vector<Index>& vertices)
        {
            Rep out = zero(alg);
            for (Index v : vertices) out = direct_sum(out, projective(alg, v));
            return out;
        }

        /** The simple top of A e_t. */
        static Rep simple(AlgPtr alg, Index vertex)
        {
            Rep p = projective(alg, vertex);
            return p.quotient(p.radical_basis());
        }

        static Rep direct_sum(const Rep& a, const Rep& b)
        {
            std::vector<Mat<F>> act;
            for (Index i = 0; i < a.alg_->dim(); ++i) act.push_back(block_diag<F>(a.act_[i], b.act_[i]));
            return Rep(a.alg_, a.dim_ + b.dim_, std::move(act));
        }

        const AlgPtr& algebra() const { return alg_; }
        Index dim() const { return dim_; }
        const Mat<F>& act(Index i) const { return act_[i]; }
        const std::vector<Mat<F>>& actions() const { return act_; }

        Mat<F> act_of(const Vec<F>& a) const
        {
            Mat<F> m = zeros<F>(dim_, dim_);
            for (Index i = 0; i < a.size(); ++i)
                if (a(i) != F(0)) m += a(i) * act_[i];
            return m;
        }

        void validate() const
        {
            const Index d = alg_->dim();
            if (static_cast<Index>(act_.size()) != d)
                throw AlgebraError("module needs one action matrix per basis element of " + alg_->name());
            for (const auto& m : act_)
                if (m.rows() != dim_ || m.cols() != dim_)
                    throw AlgebraError("action matrix has wrong shape");
            if (act_of(alg_->unit()) != identity<F>(dim_))
                throw AlgebraError("module axiom fails: unit does not act as identity");
            for (Index i = 0; i < d; ++i)
                for (Index j = 0; j < d; ++j)
                    if (act_of(Vec<F>(alg_->left(i).col(j))) != act_[i] * act_[j])
                        throw AlgebraError("module axiom fails on (" + alg_->labels()[i] + ", "
                                           + alg_->labels()[j] + ")");
        }

        /** Submodule generated by the columns of v, as a basis. */
        Mat<F> closure(const Mat<F>& v) const
        {
            Mat<F> span = image_basis<F>(v);
            while (true)
            {
                Mat<F> grown = span;
                for (const auto& g : alg_->generators()) grown = hcat<F>(grown, Mat<F>(act_of(g) * span));
                Mat<F> next = image_basis<F>(grown);
                if (next.cols() == span.cols()) return span;
                span = next;
            }
        }

        bool is_submodule(const Mat<F>& basis) const
        {
            for (const auto& g : alg_->generators())
                if (!in_span<F>(basis, Mat<F>(act_of(g) * basis))) return false;
            return true;
        }

        /** The module structure on an invariant subspace with the given basis. */
        Rep restrict_to(const Mat<F>& basis) const
        {
            std::vector<Mat<F>> act;
            const Mat<F> l = left_inverse<F>(basis);
            for (const auto& m : act_) act.push_back(mul<F>(l, mul<F>(m, basis)));
            return Rep(alg_, basis.cols(), std::move(act));
        }

        struct QuotientMap
        {
            Mat<F> complement;   // representatives of a basis of X / U
            Mat<F> projection;   // X -> X / U in those coordinates
        };

        QuotientMap quotient_map(const Mat<F>& sub) const
        {
            QuotientMap q;
            Mat<F> s = image_basis<F>(sub);
            q.complement = complement_basis<F>(s);
            Mat<F> inv = *solve_matrix<F>(hcat<F>(s, q.complement), identity<F>(dim_));
            q.projection = inv.bottomRows(q.complement.cols());
            return q;
        }

        Rep quotient(const Mat<F>& sub) const
        {
            auto q = quotient_map(sub);
            std::vector<Mat<F>> act;
            for (const auto& m : act_) act.push_back(mul<F>(q.projection, mul<F>(m, q.complement)));
            return Rep(alg_, q.complement.cols(), std::move(act));
        }

        /** Basis of rad X = J X. */
        Mat<F> radical_basis() const
        {
            const Mat<F>& j = alg_->radical();
            Mat<F> all(dim_, 0);
            for (Index c = 0; c < j.cols(); ++c) all = hcat<F>(all, act_of(Vec<F>(j.col(c))));
            return image_basis<F>(all);
        }

        /** Dimensions of rad^k X / rad^{k+1} X. */
        std::vector<Index> radical_layers() const
        {
            std::vector<Index> out;
            Rep cur = *this;
            Mat<F> inclusion = identity<F>(dim_);
            while (cur.dim() > 0)
            {
                Mat<F> r = cur.radical_basis();
                out.push_back(cur.dim() - r.cols());
                if (r.cols() == cur.dim()) break;   // cannot happen for a nilpotent radical
                cur = cur.restrict_to(r);
            }
            return out;
        }

        /** Basis of e_t X. */
        Mat<F> vertex_part(Index vertex) const
        {
            return image_basis<F>(act_of(alg_->idempotents()[vertex]));
        }

        std::vector<Index> vertex_dims() const
        {
            std::vector<Index> out;
            for (Index t = 0; t < alg_->vertex_count(); ++t) out.push_back(rank<F>(act_of(alg_->idempotents()[t])));
            return out;
        }

        /** Multiplicity of each simple in the top X / rad X. */
        std::vector<Index> top_multiplicities() const
        {
            Mat<F> r = radical_basis();
            std::vector<Index> out;
            for (Index t = 0; t < alg_->vertex_count(); ++t)
            {
                Mat<F> e = act_of(alg_->idempotents()[t]);
                out.push_back(rank<F>(hcat<F>(r, e)) - r.cols());
            }
            return out;
        }

        /** The vector-space dual, a left module over the opposite algebra. */
        Rep dual() const
        {
            std::vector<Mat<F>> act;
            for (const auto& m : act_) act.push_back(m.transpose());
            return Rep(alg_->opposite(), dim_, std::move(act));
        }

        /** The same action matrices reinterpreted over another algebra with identical structure. */
        Rep rebase(AlgPtr other) const
        {
            if (!other->same_structure(*alg_)) throw DomainError("rebase: algebras differ");
            return Rep(std::move(other), dim_, act_);
        }

        /** Whether f: X -> Y (matrix Y.dim x X.dim) commutes with the action. */
        static bool is_morphism(const Rep& x, const Rep& y, const Mat<F>& f)
        {
            if (f.rows() != y.dim_ || f.cols() != x.dim_) return false;
            for (const auto& g : x.alg_->generators())
                if (mul<F>(f, x.act_of(g)) != mul<F>(y.act_of(g), f)) return false;
            return true;
        }
};

template <ExactField F>
bool same_algebra(const Algebra<F>& a, const Algebra<F>& b)
{
    return &a == &b || a.same_structure(b);
}

namespace detail {

/** Basis change adapted to X = (+)_t e_t X, columns grouped by vertex. */
template <ExactField F>
Mat<F> vertex_adapted_basis(const Rep<F>& x, std::vector<Index>& sizes)
{
    sizes.clear();
    Mat<F> p(x.dim(), 0);
    for (Index t = 0; t < x.algebra()->vertex_count(); ++t)
    {
        Mat<F> b = x.vertex_part(t);
        sizes.push_back(b.cols());
        p = hcat<F>(p, b);
    }
    return p;
}

}   // namespace detail

/**
 * Basis of Hom_A(X, Y) as matrices Y.dim x X.dim.  A homomorphism maps
 * e_t X into e_t Y, so only the vertex-diagonal blocks are unknowns and
 * only the non-idempotent generators impose constraints.
 */
template <ExactField F>
std::vector<Mat<F>> hom_basis(const Rep<F>& x, const Rep<F>& y)
{
    if (!same_algebra(*x.algebra(), *y.algebra())) throw DomainError("hom: modules over different algebras");
    std::vector<Index> sx, sy;
    Mat<F> px = detail::vertex_adapted_basis(x, sx);
    Mat<F> py = detail::vertex_adapted_basis(y, sy);
    Mat<F> py_inv = *solve_matrix<F>(py, identity<F>(y.dim()));
    Mat<F> px_inv = *solve_matrix<F>(px, identity<F>(x.dim()));

    struct Unknown { Index row, col; };
    std::vector<Unknown> unknowns;
    Index ox = 0, oy = 0;
    for (std::size_t t = 0; t < sx.size(); ++t)
    {
        for (Index r = 0; r < sy[t]; ++r)
            for (Index c = 0; c < sx[t]; ++c) unknowns.push_back({oy + r, ox + c});
        ox += sx[t];
        oy += sy[t];
    }
    const Index u = static_cast<Index>(unknowns.size());
    Mat<F> sol = identity<F>(u);

    const auto& idem = x.algebra()->idempotents();
    for (const auto& g : x.algebra()->generators())
    {
        if (std::find(idem.begin(), idem.end(), g) != idem.end()) continue;
        if (sol.cols() == 0) break;
        Mat<F> ag = px_inv * x.act_of(g) * px;
        Mat<F> bg = py_inv * y.act_of(g) * py;
        // residual of H: H ag - bg H, entry (r, c)
        Mat<F> cons = zeros<F>(y.dim() * x.dim(), u);
        for (Index k = 0; k < u; ++k)
        {
            const Index a = unknowns[k].row, b = unknowns[k].col;
            for (Index c = 0; c < x.dim(); ++c)
                if (ag(b, c) != F(0)) cons(a * x.dim() + c, k) += ag(b, c);
            for (Index r = 0; r < y.dim(); ++r)
                if (bg(r, a) != F(0)) cons(r * x.dim() + b, k) -= bg(r, a);
        }
        Mat<F> reduced = cons * sol;
        if (is_zero<F>(reduced)) continue;
        sol = sol * kernel<F>(reduced);
    }

    std::vector<Mat<F>> out;
    for (Index k = 0; k < sol.cols(); ++k)
    {
        Mat<F> h = zeros<F>(y.dim(), x.dim());
        for (Index j = 0; j < u; ++j)
            if (sol(j, k) != F(0)) h(unknowns[j].row, unknowns[j].col) = sol(j, k);
        out.push_back(py * h * px_inv);
    }
    return out;
}

template <ExactField F>
Index hom_dim(const Rep<F>& x, const Rep<F>& y)
{
    return static_cast<Index>(hom_basis(x, y).size());
}

enum class IsoVerdict { Isomorphic, NotIsomorphic, Unknown };

template <ExactField F>
struct IsoResult
{
    IsoVerdict verdict = IsoVerdict::Unknown;
    Mat<F> iso;   // when isomorphic: an invertible module map X -> Y
    std::string reason;
};

/** Cheap isomorphism invariants: dimension, radical layers, vertex dimensions. */
template <ExactField F>
std::vector<Index> iso_fingerprint(const Rep<F>& x)
{
    std::vector<Index> fp{x.dim()};
    auto layers = x.radical_layers();
    fp.push_back(static_cast<Index>(layers.size()));
    fp.insert(fp.end(), layers.begin(), layers.end());
    auto vd = x.vertex_dims();
    fp.insert(fp.end(), vd.begin(), vd.end());
    auto top = x.top_multiplicities();
    fp.insert(fp.end(), top.begin(), top.end());
    return fp;
}

/**
 * Isomorphism test.  Fingerprints are compared first; when they agree an
 * invertible element of Hom(X, Y) is searched for: exhaustively when the hom
 * space is small and finite, otherwise by seeded random combinations.
 */
template <ExactField F>
IsoResult<F> isomorphism(const Rep<F>& x, const Rep<F>& y, std::uint64_t seed = 0x5eed)
{
    IsoResult<F> out;
    if (iso_fingerprint(x) != iso_fingerprint(y))
    {
        out.verdict = IsoVerdict::NotIsomorphic;
        out.reason = "fingerprints differ";
        return out;
    }
    if (x.dim() == 0)
    {
        out.verdict = IsoVerdict::Isomorphic;
        out.iso = Mat<F>(0, 0);
        return out;
    }
    auto basis = hom_basis(x, y);
    const Index h = static_cast<Index>(basis.size());
    if (h == 0)
    {
        out.verdict = IsoVerdict::NotIsomorphic;
        out.reason = "no nonzero homomorphism";
        return out;
    }
    auto accept = [&](const Mat<F>& f) {
        if (rank<F>(f) == x.dim())
        {
            out.verdict = IsoVerdict::Isomorphic;
            out.iso = f;
            return true;
        }
        return false;
    };
    for (const auto& b : basis)
        if (accept(b)) return out;

    constexpr int p = FieldTraits<F>::characteristic;
    if constexpr (p > 0)
    {
        double total = 1;
        for (Index i = 0; i < h; ++i) total *= p;
        if (total <= 4096)
        {
            const auto n = static_cast<std::uint64_t>(total);
            for (std::uint64_t code = 1; code < n; ++code)
            {
                Mat<F> f = zeros<F>(y.dim(), x.dim());
                std::uint64_t c = code;
                for (Index i = 0; i < h; ++i, c /= p)
                    if (c % p) f += F(static_cast<long long>(c % p)) * basis[i];
                if (accept(f)) return out;
            }
            out.verdict = IsoVerdict::NotIsomorphic;
            out.reason = "exhaustive search over Hom found no isomorphism";
            return out;
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-7, 7);
    for (int attempt = 0; attempt < 64; ++attempt)
    {
        Mat<F> f = zeros<F>(y.dim(), x.dim());
        for (Index i = 0; i < h; ++i) f += F(coeff(rng)) * basis[i];
        if (accept(f)) return out;
    }
    out.reason = "random search inconclusive";
    return out;
}

/** A projective cover P -> X built from a basis of the top X / rad X. */
template <ExactField F>
struct ProjectiveCover
{
    Rep<F> cover;
    Mat<F> map;                     // X.dim x P.dim
    std::vector<Index> vertices;    // vertex of each indecomposable summand
    std::vector<Vec<F>> generators; // image of e_t in each summand
};

template <ExactField F>
ProjectiveCover<F> projective_cover(const Rep<F>& x)
{
    const auto& alg = x.algebra();
    ProjectiveCover<F> pc;
    Mat<F> rad = x.radical_basis();
    for (Index t = 0; t < alg->vertex_count(); ++t)
    {
        Mat<F> et = x.act_of(alg->idempotents()[t]);
        Mat<F> er = et * rad;                    // e_t rad X
        Mat<F> ex = image_basis<F>(et);
        auto e = rref(hcat<F>(image_basis<F>(er), ex));
        const Index off = rank<F>(er);
        for (Index piv : e.pivots)
            if (piv >= off)
            {
                pc.vertices.push_back(t);
                pc.generators.push_back(ex.col(piv - off));
            }
    }
    pc.cover = Rep<F>::projective_sum(alg, pc.vertices);
    pc.map = zeros<F>(x.dim(), pc.cover.dim());
    Index off = 0;
    for (std::size_t k = 0; k < pc.vertices.size(); ++k)
    {
        Mat<F> b = alg->projective_basis(pc.vertices[k]);
        for (Index j = 0; j < b.cols(); ++j) pc.map.col(off + j) = x.act_of(Vec<F>(b.col(j))) * pc.generators[k];
        off += b.cols();
    }
    return pc;
}

/** A module is projective iff its projective cover has zero kernel. */
template <ExactField F>
bool is_projective(const Rep<F>& x)
{
    auto pc = projective_cover(x);
    return pc.cover.dim() == x.dim();
}

/** Socle: common kernel of the radical action. */
template <ExactField F>
Mat<F> socle_basis(const Rep<F>& x)
{
    const Mat<F>& j = x.algebra()->radical();
    Mat<F> stacked(0, x.dim());
    for (Index c = 0; c < j.cols(); ++c) stacked = vcat<F>(stacked, x.act_of(Vec<F>(j.col(c))));
    if (stacked.rows() == 0) return identity<F>(x.dim());
    return kernel<F>(stacked);
}

}   // namespace findim

#endif
