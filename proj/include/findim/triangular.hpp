/**
 * Triangular matrix algebras T = (R M; 0 S) and the triple description of
 * their modules.  A T-module is stored as a Rep over T whose underlying space
 * is A (+) B with A = eN and B = fN.
 */
#ifndef FINDIM_TRIANGULAR_HPP
#define FINDIM_TRIANGULAR_HPP

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "findim/fd_resolution.hpp"

namespace findim {

/** An (R, S)-bimodule: left[i] is m -> r_i m, right[k] is m -> m s_k. */
template <ExactField F>
struct Bimodule
{
    Index dim = 0;
    std::vector<Mat<F>> left;
    std::vector<Mat<F>> right;
};

template <ExactField F>
struct TriangularData
{
    typename Algebra<F>::Ptr R, S, T;
    Bimodule<F> M;
    Vec<F> e, f;
    Index dR = 0, dM = 0, dS = 0;
    // Matrix positions (row, col, base index) of each basis element when T = UT_n(base).
    std::vector<std::tuple<int, int, Index>> ut_positions;
    int ut_n = 0;
    typename Algebra<F>::Ptr ut_base;
    // For UT_n with n >= 3: the data of the corner R = UT_(n-1).
    std::shared_ptr<const TriangularData> r_tri;

    Vec<F> embed_r(const Vec<F>& r) const
    {
        Vec<F> v = Vec<F>::Constant(T->dim(), F(0));
        v.segment(0, dR) = r;
        return v;
    }
    Vec<F> embed_m(const Vec<F>& m) const
    {
        Vec<F> v = Vec<F>::Constant(T->dim(), F(0));
        v.segment(dR, dM) = m;
        return v;
    }
    Vec<F> embed_s(const Vec<F>& s) const
    {
        Vec<F> v = Vec<F>::Constant(T->dim(), F(0));
        v.segment(dR + dM, dS) = s;
        return v;
    }
};

template <ExactField F>
using TriPtr = std::shared_ptr<const TriangularData<F>>;

/** The bimodule's left structure as an R-module. */
template <ExactField F>
Rep<F> bimodule_left(const typename Algebra<F>::Ptr& r, const Bimodule<F>& m)
{
    return Rep<F>(r, m.dim, m.left);
}

/** The bimodule's right structure, as a module over S^op. */
template <ExactField F>
Rep<F> bimodule_right(const typename Algebra<F>::Ptr& s, const Bimodule<F>& m)
{
    return Rep<F>(s->opposite(), m.dim, m.right);
}

/**
 * Build T = (R M; 0 S).  Validates the bimodule axioms and the hypothesis
 * that M is projective as a left R-module and as a right S-module, each by
 * computing a projective cover and checking its kernel is zero.
 */
template <ExactField F>
TriPtr<F> make_triangular(typename Algebra<F>::Ptr r, typename Algebra<F>::Ptr s, Bimodule<F> m,
                          std::string name)
{
    const Index dr = r->dim(), ds = s->dim(), dm = m.dim;
    if (static_cast<Index>(m.left.size()) != dr || static_cast<Index>(m.right.size()) != ds)
        throw AlgebraError("bimodule needs one left matrix per R basis element and one right matrix per S basis element");
    Rep<F> lm = bimodule_left<F>(r, m);
    Rep<F> rm = bimodule_right<F>(s, m);
    try
    {
        lm.validate();
    }
    catch (const AlgebraError& e)
    {
        throw AlgebraError(std::string("bimodule axiom (left action): ") + e.what());
    }
    try
    {
        rm.validate();
    }
    catch (const AlgebraError& e)
    {
        throw AlgebraError(std::string("bimodule axiom (right action): ") + e.what());
    }
    for (Index i = 0; i < dr; ++i)
        for (Index k = 0; k < ds; ++k)
            if (m.left[i] * m.right[k] != m.right[k] * m.left[i])
                throw AlgebraError("bimodule axiom: left action of " + r->labels()[i]
                                   + " does not commute with right action of " + s->labels()[k]);
    if (!is_projective(lm))
        throw HypothesisError(HypothesisError::Side::Left,
                              "hypothesis violated: M is not projective as a left R-module (projective cover has nonzero kernel)");
    if (!is_projective(rm))
        throw HypothesisError(HypothesisError::Side::Right,
                              "hypothesis violated: M is not projective as a right S-module (projective cover has nonzero kernel)");

    const Index d = dr + dm + ds;
    std::vector<Mat<F>> left;
    for (Index i = 0; i < dr; ++i)
    {
        Mat<F> l = zeros<F>(d, d);
        l.block(0, 0, dr, dr) = r->left(i);
        l.block(dr, dr, dm, dm) = m.left[i];
        left.push_back(l);
    }
    for (Index j = 0; j < dm; ++j)
    {
        Mat<F> l = zeros<F>(d, d);
        Vec<F> ej = Vec<F>::Constant(dm, F(0));
        ej(j) = F(1);
        for (Index k = 0; k < ds; ++k) l.block(dr, dr + dm + k, dm, 1) = m.right[k] * ej;
        left.push_back(l);
    }
    for (Index k = 0; k < ds; ++k)
    {
        Mat<F> l = zeros<F>(d, d);
        l.block(dr + dm, dr + dm, ds, ds) = s->left(k);
        left.push_back(l);
    }
    std::vector<std::string> labels;
    for (const auto& x : r->labels()) labels.push_back("r:" + x);
    for (Index j = 0; j < dm; ++j) labels.push_back("m" + std::to_string(j + 1));
    for (const auto& x : s->labels()) labels.push_back("s:" + x);

    Vec<F> unit = Vec<F>::Constant(d, F(0));
    unit.segment(0, dr) = r->unit();
    unit.segment(dr + dm, ds) = s->unit();

    Mat<F> rad = zeros<F>(d, r->radical().cols() + dm + s->radical().cols());
    rad.block(0, 0, dr, r->radical().cols()) = r->radical();
    for (Index j = 0; j < dm; ++j) rad(dr + j, r->radical().cols() + j) = F(1);
    rad.block(dr + dm, r->radical().cols() + dm, ds, s->radical().cols()) = s->radical();

    std::vector<Vec<F>> idem;
    for (const auto& x : r->idempotents())
    {
        Vec<F> v = Vec<F>::Constant(d, F(0));
        v.segment(0, dr) = x;
        idem.push_back(v);
    }
    for (const auto& x : s->idempotents())
    {
        Vec<F> v = Vec<F>::Constant(d, F(0));
        v.segment(dr + dm, ds) = x;
        idem.push_back(v);
    }

    typename Algebra<F>::Options opts;
    opts.radical_hint = rad;
    opts.idempotent_hint = idem;
    auto data = std::make_shared<TriangularData<F>>();
    data->T = Algebra<F>::create(std::move(labels), std::move(left), unit, std::move(name), opts);
    data->R = std::move(r);
    data->S = std::move(s);
    data->M = std::move(m);
    data->dR = dr;
    data->dM = dm;
    data->dS = ds;
    data->e = Vec<F>::Constant(d, F(0));
    data->e.segment(0, dr) = data->R->unit();
    data->f = Vec<F>::Constant(d, F(0));
    data->f.segment(dr + dm, ds) = data->S->unit();
    return data;
}

template <ExactField F>
struct CornerPair
{
    Vec<F> e, f;
};

/** The stored corner idempotents, with e^2 = e, f^2 = f, ef = fe = 0, e + f = 1 re-verified. */
template <ExactField F>
CornerPair<F> corner_idempotents(const TriangularData<F>& t)
{
    const auto& T = *t.T;
    if (T.mul(t.e, t.e) != t.e || T.mul(t.f, t.f) != t.f || !is_zero<F>(T.mul(t.e, t.f))
        || !is_zero<F>(T.mul(t.f, t.e)) || Vec<F>(t.e + t.f) != T.unit())
        throw AlgebraError("corner idempotent identities fail");
    return {t.e, t.f};
}

/**
 * UT_n(R), built recursively as (U  Ue; 0  R) with U = UT_{n-1}(R) and e the
 * last diagonal idempotent of U.
 */
template <ExactField F>
TriPtr<F> make_utn(typename Algebra<F>::Ptr base, int n, const std::string& name)
{
    if (n < 2) throw PreconditionError("make_utn: triangular form needs n >= 2");
    const Index db = base->dim();
    Bimodule<F> m;
    typename Algebra<F>::Ptr u;
    std::vector<std::tuple<int, int, Index>> pos;
    TriPtr<F> prev;
    if (n == 2)
    {
        u = base;
        m.dim = db;
        for (Index i = 0; i < db; ++i) m.left.push_back(base->left(i));
        for (Index k = 0; k < db; ++k) m.right.push_back(base->right(k));
        for (Index i = 0; i < db; ++i) pos.emplace_back(1, 1, i);
        for (Index i = 0; i < db; ++i) pos.emplace_back(1, 2, i);
    }
    else
    {
        prev = make_utn<F>(base, n - 1, "UT" + std::to_string(n - 1) + "(" + base->name() + ")");
        u = prev->T;
        pos = prev->ut_positions;
        Mat<F> mb = image_basis<F>(u->right_of(prev->f));
        m.dim = mb.cols();
        for (Index i = 0; i < u->dim(); ++i) m.left.push_back(coordinates<F>(mb, Mat<F>(u->left(i) * mb)));
        for (Index k = 0; k < db; ++k)
        {
            Vec<F> rk = Vec<F>::Constant(db, F(0));
            rk(k) = F(1);
            m.right.push_back(coordinates<F>(mb, Mat<F>(u->right_of(prev->embed_s(rk)) * mb)));
        }
        // Each M basis element is a U basis element of column n-1, moved to column n.
        const auto upos = prev->ut_positions;
        for (Index c = 0; c < mb.cols(); ++c)
        {
            Index j = 0;
            while (mb(j, c) == F(0)) ++j;
            pos.emplace_back(std::get<0>(upos[j]), n, std::get<2>(upos[j]));
        }
    }
    for (Index i = 0; i < db; ++i) pos.emplace_back(n, n, i);
    auto t = make_triangular<F>(u, base, std::move(m), name);
    auto data = std::make_shared<TriangularData<F>>(*t);
    if (n > 2) data->r_tri = prev;
    data->ut_positions = std::move(pos);
    data->ut_n = n;
    data->ut_base = base;
    return data;
}

// ---------------------------------------------------------------------------
// Triples

/** A T-module in triple coordinates: (A, B, Phi) with Phi[j] = phi(m_j (x) -): B -> A. */
template <ExactField F>
struct Triple
{
    Rep<F> A;   // over R
    Rep<F> B;   // over S
    std::vector<Mat<F>> phi;
};

/** Verify that Phi is balanced over S and left R-linear. */
template <ExactField F>
void validate_triple(const TriangularData<F>& t, const Triple<F>& x)
{
    const auto& m = t.M;
    if (static_cast<Index>(x.phi.size()) != m.dim) throw AlgebraError("triple: need one phi matrix per basis element of M");
    for (const auto& p : x.phi)
        if (p.rows() != x.A.dim() || p.cols() != x.B.dim()) throw AlgebraError("triple: phi has wrong shape");
    for (Index j = 0; j < m.dim; ++j)
    {
        for (Index k = 0; k < t.dS; ++k)
        {
            Mat<F> lhs = zeros<F>(x.A.dim(), x.B.dim());
            for (Index l = 0; l < m.dim; ++l)
                if (m.right[k](l, j) != F(0)) lhs += m.right[k](l, j) * x.phi[l];
            if (lhs != x.phi[j] * x.B.act(k)) throw AlgebraError("triple: phi is not balanced over S");
        }
        for (Index i = 0; i < t.dR; ++i)
        {
            Mat<F> lhs = zeros<F>(x.A.dim(), x.B.dim());
            for (Index l = 0; l < m.dim; ++l)
                if (m.left[i](l, j) != F(0)) lhs += m.left[i](l, j) * x.phi[l];
            if (lhs != x.A.act(i) * x.phi[j]) throw AlgebraError("triple: phi is not left R-linear");
        }
    }
}

/** The T-module on A (+) B: (r, m, s)(a, b) = (r a + phi(m (x) b), s b). */
template <ExactField F>
Rep<F> from_triple(const TriangularData<F>& t, const Triple<F>& x, bool check = true)
{
    if (check) validate_triple(t, x);
    const Index da = x.A.dim(), db = x.B.dim(), d = da + db;
    std::vector<Mat<F>> act;
    for (Index i = 0; i < t.dR; ++i)
    {
        Mat<F> a = zeros<F>(d, d);
        a.block(0, 0, da, da) = x.A.act(i);
        act.push_back(a);
    }
    for (Index j = 0; j < t.dM; ++j)
    {
        Mat<F> a = zeros<F>(d, d);
        a.block(0, da, da, db) = x.phi[j];
        act.push_back(a);
    }
    for (Index k = 0; k < t.dS; ++k)
    {
        Mat<F> a = zeros<F>(d, d);
        a.block(da, da, db, db) = x.B.act(k);
        act.push_back(a);
    }
    return Rep<F>(t.T, d, std::move(act));
}

/** Basis change [E | F] adapting a T-module to eN (+) fN. */
template <ExactField F>
Mat<F> triple_basis(const TriangularData<F>& t, const Rep<F>& n)
{
    return hcat<F>(image_basis<F>(n.act_of(t.e)), image_basis<F>(n.act_of(t.f)));
}

template <ExactField F>
Triple<F> to_triple(const TriangularData<F>& t, const Rep<F>& n)
{
    Mat<F> eb = image_basis<F>(n.act_of(t.e));
    Mat<F> fb = image_basis<F>(n.act_of(t.f));
    Triple<F> x;
    std::vector<Mat<F>> a, b;
    for (Index i = 0; i < t.dR; ++i)
        a.push_back(coordinates<F>(eb, Mat<F>(n.act(i) * eb)));
    for (Index k = 0; k < t.dS; ++k)
        b.push_back(coordinates<F>(fb, Mat<F>(n.act(t.dR + t.dM + k) * fb)));
    for (Index j = 0; j < t.dM; ++j)
        x.phi.push_back(coordinates<F>(eb, Mat<F>(n.act(t.dR + j) * fb)));
    x.A = Rep<F>(t.R, eb.cols(), std::move(a));
    x.B = Rep<F>(t.S, fb.cols(), std::move(b));
    return x;
}

/** The same module re-expressed in triple coordinates A (+) B. */
template <ExactField F>
Rep<F> normalize_triple(const TriangularData<F>& t, const Rep<F>& n)
{
    return from_triple(t, to_triple(t, n), false);
}

template <ExactField F>
Rep<F> corner_e(const TriangularData<F>& t, const Rep<F>& n)
{
    return to_triple(t, n).A;
}

template <ExactField F>
Rep<F> corner_f(const TriangularData<F>& t, const Rep<F>& n)
{
    return to_triple(t, n).B;
}

/** (X, 0, 0). */
template <ExactField F>
Rep<F> induce_left(const TriangularData<F>& t, const Rep<F>& x)
{
    if (!same_algebra(*x.algebra(), *t.R)) throw DomainError("induceLeft: module is not over the left corner");
    Triple<F> tr{x.rebase(t.R), Rep<F>::zero(t.S), std::vector<Mat<F>>(t.dM, Mat<F>(x.dim(), 0))};
    return from_triple(t, tr, false);
}

/** M (x)_S Y as the quotient of M (x)_k Y by (m s) (x) y - m (x) (s y); with the maps y -> [m_j (x) y]. */
template <ExactField F>
std::pair<Rep<F>, std::vector<Mat<F>>> tensor_over_s(const TriangularData<F>& t, const Rep<F>& y)
{
    const auto& m = t.M;
    const Index dm = m.dim, dy = y.dim(), d = dm * dy;
    auto idx = [&](Index j, Index b) { return j * dy + b; };
    Mat<F> rel(d, 0);
    for (Index k = 0; k < t.dS; ++k)
        for (Index j = 0; j < dm; ++j)
            for (Index b = 0; b < dy; ++b)
            {
                Vec<F> v = Vec<F>::Constant(d, F(0));
                for (Index l = 0; l < dm; ++l) v(idx(l, b)) += m.right[k](l, j);
                for (Index c = 0; c < dy; ++c) v(idx(j, c)) -= y.act(k)(c, b);
                if (!is_zero<F>(v)) rel = hcat<F>(rel, Mat<F>(v));
            }
    std::vector<Mat<F>> left;
    for (Index i = 0; i < t.dR; ++i)
    {
        Mat<F> a = zeros<F>(d, d);
        for (Index j = 0; j < dm; ++j)
            for (Index l = 0; l < dm; ++l)
                if (m.left[i](l, j) != F(0))
                    for (Index b = 0; b < dy; ++b) a(idx(l, b), idx(j, b)) += m.left[i](l, j);
        left.push_back(a);
    }
    Rep<F> full(t.R, d, std::move(left));
    auto q = full.quotient_map(rel);
    Rep<F> tensor = full.quotient(rel);
    std::vector<Mat<F>> phi;
    for (Index j = 0; j < dm; ++j)
    {
        Mat<F> p = zeros<F>(tensor.dim(), dy);
        for (Index b = 0; b < dy; ++b) p.col(b) = q.projection.col(idx(j, b));
        phi.push_back(p);
    }
    return {tensor, phi};
}

/** (M (x)_S Y, Y, id). */
template <ExactField F>
Rep<F> induce_right(const TriangularData<F>& t, const Rep<F>& y)
{
    if (!same_algebra(*y.algebra(), *t.S)) throw DomainError("induceRight: module is not over the right corner");
    Rep<F> yy = y.rebase(t.S);
    auto [tensor, phi] = tensor_over_s(t, yy);
    Triple<F> tr{tensor, yy, phi};
    return from_triple(t, tr, false);
}

/** (r, m, s) acting on (a, b) in triple coordinates. */
template <ExactField F>
Vec<F> triple_action(const TriangularData<F>& t, const Rep<F>& n, const Vec<F>& elem, const Vec<F>& x)
{
    if (elem.size() != t.T->dim() || x.size() != n.dim()) throw DomainError("tripleAction: shape mismatch");
    return n.act_of(elem) * x;
}

/** 0 -> (A, 0, 0) -> (A, B, phi) -> (0, B, 0) -> 0, for a module in triple coordinates. */
template <ExactField F>
struct TripleSES
{
    Rep<F> a, b, c;
    Mat<F> iota, pi;
};

template <ExactField F>
TripleSES<F> triple_ses(const TriangularData<F>& t, const Rep<F>& n)
{
    Triple<F> tr = to_triple(t, n);
    TripleSES<F> s;
    s.b = from_triple(t, tr, false);
    s.a = induce_left(t, tr.A);
    Triple<F> right{Rep<F>::zero(t.R), tr.B, std::vector<Mat<F>>(t.dM, Mat<F>(0, tr.B.dim()))};
    s.c = from_triple(t, right, false);
    const Index da = tr.A.dim(), db = tr.B.dim();
    s.iota = zeros<F>(da + db, da);
    s.iota.topRows(da) = identity<F>(da);
    s.pi = zeros<F>(db, da + db);
    s.pi.rightCols(db) = identity<F>(db);
    return s;
}

/** Whether (u, v) is a triple morphism: u Phi_j = Phi'_j v for every j. */
template <ExactField F>
bool triple_compatible(const Triple<F>& x, const Triple<F>& y, const Mat<F>& u, const Mat<F>& v)
{
    for (std::size_t j = 0; j < x.phi.size(); ++j)
        if (u * x.phi[j] != y.phi[j] * v) return false;
    return true;
}

}   // namespace findim

#endif
