/**
 * Projective resolutions over finite-dimensional algebras: minimal
 * resolutions with periodicity detection, exactness certificates, Ext, Tor,
 * the Horseshoe construction, pullbacks and split tests.
 */
#ifndef FINDIM_FD_RESOLUTION_HPP
#define FINDIM_FD_RESOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "findim/rep.hpp"

namespace findim {

enum class ResolutionStatus { Finite, InfiniteCertified, UnknownAbove };

inline std::string to_string(ResolutionStatus s)
{
    switch (s)
    {
        case ResolutionStatus::Finite: return "Finite";
        case ResolutionStatus::InfiniteCertified: return "InfiniteCertified";
        case ResolutionStatus::UnknownAbove: return "UnknownAbove";
    }
    return "?";
}

constexpr Index default_cap = 32;

/**
 * Covers stop once a syzygy exceeds this dimension, or four times the module's
 * dimension if larger (Betti numbers can grow exponentially).
 */
constexpr Index syzygy_dim_budget = 64;

/** Block layout of a direct sum of indecomposable projectives. */
template <ExactField F>
struct ProjectiveLayout
{
    std::vector<Index> vertices;
    std::vector<Index> offsets;
    std::vector<Mat<F>> bases;        // basis of A e_t as algebra elements
    std::vector<Vec<F>> generators;   // coordinates of e_t in that basis
    Index dim = 0;

    ProjectiveLayout() = default;

    ProjectiveLayout(const Algebra<F>& alg, std::vector<Index> vs) : vertices(std::move(vs))
    {
        for (Index v : vertices)
        {
            Mat<F> b = alg.projective_basis(v);
            offsets.push_back(dim);
            generators.push_back(coordinates<F>(b, Mat<F>(alg.idempotents()[v])).col(0));
            bases.push_back(std::move(b));
            dim += bases.back().cols();
        }
    }

    Index count() const { return static_cast<Index>(vertices.size()); }

    /** Position of the k-th generator as a vector of the sum. */
    Vec<F> generator(Index k) const
    {
        Vec<F> g = Vec<F>::Constant(dim, F(0));
        g.segment(offsets[k], bases[k].cols()) = generators[k];
        return g;
    }

    /** The k-th component of z, as an element of the algebra. */
    Vec<F> component(const Vec<F>& z, Index k) const
    {
        return bases[k] * z.segment(offsets[k], bases[k].cols());
    }
};

/** The module map P -> Y sending the k-th generator to images[k]. */
template <ExactField F>
Mat<F> map_from_generators(const ProjectiveLayout<F>& layout, const Rep<F>& y, const std::vector<Vec<F>>& images)
{
    Mat<F> m = zeros<F>(y.dim(), layout.dim);
    for (Index k = 0; k < layout.count(); ++k)
        for (Index j = 0; j < layout.bases[k].cols(); ++j)
            m.col(layout.offsets[k] + j) = y.act_of(Vec<F>(layout.bases[k].col(j))) * images[k];
    return m;
}

/**
 * Lift through phi: Q -> Y from a projective.  For each generator (vertex t)
 * find q in e_t Q with phi q = rhs[k]; returns the induced map P -> Q, or
 * nullopt when some right-hand side is outside the image.
 */
template <ExactField F>
std::optional<Mat<F>> lift_from_projective(const ProjectiveLayout<F>& layout, const Rep<F>& q,
                                           const Mat<F>& phi, const std::vector<Vec<F>>& rhs)
{
    const auto& alg = *q.algebra();
    std::vector<Vec<F>> images;
    for (Index k = 0; k < layout.count(); ++k)
    {
        Mat<F> et = q.act_of(alg.idempotents()[layout.vertices[k]]);
        auto sol = solve_linear<F>(Mat<F>(phi * et), rhs[k]);
        if (!sol.solvable()) return std::nullopt;
        images.push_back(et * *sol.solution);
    }
    return map_from_generators(layout, q, images);
}

template <ExactField F>
struct FdResolution
{
    Rep<F> target;
    std::vector<ProjectiveLayout<F>> layouts;   // P_0, P_1, ...
    std::vector<Rep<F>> terms;
    Mat<F> augmentation;                        // P_0 -> target
    std::vector<Mat<F>> differentials;          // d_i: P_i -> P_{i-1}, stored at i-1
    std::vector<Rep<F>> syzygies;               // Omega_0 = target, Omega_1, ...
    std::vector<Mat<F>> syzygy_inclusions;      // Omega_{i+1} -> P_i
    ResolutionStatus status = ResolutionStatus::UnknownAbove;
    Index period_start = -1;
    Index period_length = 0;
    Index cap = default_cap;
    bool minimal = false;
    bool over_budget = false;   // stopped by syzygy_dim_budget rather than the cap

    /** Number of computed terms minus one; -1 for the zero module. */
    Index length() const { return static_cast<Index>(terms.size()) - 1; }

    /** d_i for i >= 1; d_i for i beyond the computed range is zero. */
    Mat<F> differential(Index i) const
    {
        if (i >= 1 && i - 1 < static_cast<Index>(differentials.size())) return differentials[i - 1];
        const Index rows = i - 1 < static_cast<Index>(terms.size()) && i >= 1 ? terms[i - 1].dim() : 0;
        const Index cols = i < static_cast<Index>(terms.size()) ? terms[i].dim() : 0;
        return zeros<F>(rows, cols);
    }

    Index term_dim(Index i) const { return i < static_cast<Index>(terms.size()) ? terms[i].dim() : 0; }
};

namespace detail {

template <ExactField F>
void append_step(FdResolution<F>& res, const Rep<F>& omega)
{
    auto pc = projective_cover(omega);
    Mat<F> k = kernel<F>(pc.map);
    ProjectiveLayout<F> layout(*omega.algebra(), pc.vertices);
    const Index i = static_cast<Index>(res.terms.size());
    if (i == 0) res.augmentation = pc.map;
    else res.differentials.push_back(Mat<F>(res.syzygy_inclusions[i - 1] * pc.map));
    res.layouts.push_back(std::move(layout));
    res.terms.push_back(pc.cover);
    res.syzygy_inclusions.push_back(k);
    res.syzygies.push_back(pc.cover.restrict_to(k));
}

}   // namespace detail

/**
 * Minimal projective resolution.  Stops when a syzygy vanishes (Finite), when
 * a syzygy is isomorphic to an earlier one (InfiniteCertified), or after cap
 * covers or once a syzygy outgrows syzygy_dim_budget (UnknownAbove).  When min_terms is given, covers continue past a
 * detected period until that many terms exist, so degree-wise computations can
 * use them.
 */
template <ExactField F>
FdResolution<F> minimal_resolution(const Rep<F>& m, Index cap = default_cap, Index min_terms = 0)
{
    FdResolution<F> res;
    res.target = m;
    res.cap = cap;
    res.minimal = true;
    res.syzygies.push_back(m);
    res.augmentation = Mat<F>(m.dim(), 0);
    bool decided = false;
    for (Index i = 0;; ++i)
    {
        const Rep<F>& omega = res.syzygies.back();
        if (omega.dim() == 0)
        {
            res.status = ResolutionStatus::Finite;
            return res;
        }
        if (!decided && i >= 1)
            for (Index j = 0; j < i && !decided; ++j)
            {
                if (res.syzygies[j].dim() != omega.dim()) continue;
                if (isomorphism(res.syzygies[j], omega).verdict == IsoVerdict::Isomorphic)
                {
                    res.status = ResolutionStatus::InfiniteCertified;
                    res.period_start = j;
                    res.period_length = i - j;
                    decided = true;
                }
            }
        if (decided && i >= min_terms) return res;
        if (i >= 1 && omega.dim() > std::max<Index>(syzygy_dim_budget, 4 * m.dim()))
        {
            if (!decided) res.status = ResolutionStatus::UnknownAbove;
            res.over_budget = true;
            return res;
        }
        if (!decided && i > cap)
        {
            res.status = ResolutionStatus::UnknownAbove;
            if (i >= min_terms) return res;
        }
        if (i > cap + min_terms + 1) return res;
        detail::append_step(res, Rep<F>(omega));
    }
}

template <ExactField F>
struct ExactnessCertificate
{
    bool ok = true;
    std::vector<std::string> checks;   // one line per verified condition
    std::string failure;

    void record(bool cond, const std::string& what)
    {
        checks.push_back(what + (cond ? ": ok" : ": FAILED"));
        if (!cond && ok)
        {
            ok = false;
            failure = what;
        }
    }
};

/**
 * Rank certificate for an augmented resolution: surjective augmentation,
 * d_i d_{i+1} = 0, rank conditions giving exactness at every computed
 * position, equivariance of every map, and (if flagged) minimality.
 */
template <ExactField F>
ExactnessCertificate<F> certify(const FdResolution<F>& res)
{
    ExactnessCertificate<F> cert;
    const Index n = static_cast<Index>(res.terms.size());
    if (n == 0)
    {
        cert.record(res.target.dim() == 0, "target is zero");
        return cert;
    }
    cert.record(Rep<F>::is_morphism(res.terms[0], res.target, res.augmentation), "augmentation equivariant");
    Index prev_rank = rank<F>(res.augmentation);
    cert.record(prev_rank == res.target.dim(), "augmentation surjective");
    Mat<F> prev = res.augmentation;
    for (Index i = 1; i < n; ++i)
    {
        const Mat<F>& d = res.differentials[i - 1];
        cert.record(Rep<F>::is_morphism(res.terms[i], res.terms[i - 1], d),
                    "d" + std::to_string(i) + " equivariant");
        cert.record(is_zero<F>(mul<F>(prev, d)), "d" + std::to_string(i - 1) + "*d" + std::to_string(i) + " = 0");
        const Index r = rank<F>(d);
        cert.record(r == res.terms[i - 1].dim() - prev_rank, "exact at P" + std::to_string(i - 1));
        if (res.minimal)
        {
            Mat<F> rad = res.terms[i - 1].radical_basis();
            cert.record(in_span<F>(rad, d), "image of d" + std::to_string(i) + " in radical");
        }
        prev_rank = r;
        prev = d;
    }
    if (res.status == ResolutionStatus::Finite)
        cert.record(prev_rank == res.terms[n - 1].dim(), "last differential injective");
    return cert;
}

/** Raise IndeterminateError unless degree n is within the computed range. */
template <ExactField F>
void require_degree(const FdResolution<F>& res, Index n)
{
    if (res.status == ResolutionStatus::Finite) return;
    if (static_cast<Index>(res.terms.size()) <= n + 1)
    {
        if (res.over_budget)
            throw IndeterminateError("syzygy " + std::to_string(res.syzygies.size() - 1)
                                     + " outgrew the size budget before degree " + std::to_string(n + 1));
        throw IndeterminateError("resolution reached the cap of " + std::to_string(res.cap)
                                 + " steps before degree " + std::to_string(n + 1));
    }
}

/** Blocks of the induced map on e_t N: component k of d(gen_{k'}) acting on N. */
template <ExactField F>
Mat<F> induced_vertex_map(const ProjectiveLayout<F>& src, const ProjectiveLayout<F>& dst, const Mat<F>& d,
                          const Rep<F>& n, const std::vector<Mat<F>>& vbasis, bool contravariant)
{
    auto size_of = [&](const ProjectiveLayout<F>& l) {
        Index s = 0;
        for (Index v : l.vertices) s += vbasis[v].cols();
        return s;
    };
    const Index ssz = size_of(src), dsz = size_of(dst);
    Mat<F> out = contravariant ? zeros<F>(ssz, dsz) : zeros<F>(dsz, ssz);
    Index so = 0;
    for (Index kp = 0; kp < src.count(); ++kp)
    {
        const Mat<F>& vs = vbasis[src.vertices[kp]];
        Vec<F> image = d * src.generator(kp);
        Index dof = 0;
        for (Index k = 0; k < dst.count(); ++k)
        {
            const Mat<F>& vd = vbasis[dst.vertices[k]];
            Vec<F> z = dst.component(image, k);
            if (!is_zero<F>(z))
            {
                Mat<F> a = n.act_of(z);
                if (contravariant)
                    out.block(so, dof, vs.cols(), vd.cols()) = coordinates<F>(vs, Mat<F>(a * vd));
                else
                    out.block(dof, so, vd.cols(), vs.cols()) = coordinates<F>(vd, Mat<F>(a * vs));
            }
            dof += vd.cols();
        }
        so += vs.cols();
    }
    return out;
}

template <ExactField F>
std::vector<Mat<F>> vertex_bases(const Rep<F>& n)
{
    std::vector<Mat<F>> out;
    for (Index t = 0; t < n.algebra()->vertex_count(); ++t) out.push_back(n.vertex_part(t));
    return out;
}

/** dim Ext^k(M, N) from a resolution of M. */
template <ExactField F>
Index ext_dim(const FdResolution<F>& res, Index k, const Rep<F>& n)
{
    require_degree(res, k);
    auto vb = vertex_bases(n);
    auto cochain_dim = [&](Index i) {
        if (i >= static_cast<Index>(res.layouts.size())) return Index(0);
        Index s = 0;
        for (Index v : res.layouts[i].vertices) s += vb[v].cols();
        return s;
    };
    auto delta_rank = [&](Index i) {   // delta^i: C^i -> C^{i+1}
        if (i < 0 || i + 1 >= static_cast<Index>(res.layouts.size())) return Index(0);
        return rank<F>(induced_vertex_map(res.layouts[i + 1], res.layouts[i], res.differentials[i], n, vb, true));
    };
    return cochain_dim(k) - delta_rank(k) - delta_rank(k - 1);
}

/** dim Tor_k(X, N): res resolves X as a module over the opposite algebra of N's. */
template <ExactField F>
Index tor_dim(const FdResolution<F>& res, Index k, const Rep<F>& n)
{
    require_degree(res, k);
    auto vb = vertex_bases(n);
    auto chain_dim = [&](Index i) {
        if (i >= static_cast<Index>(res.layouts.size())) return Index(0);
        Index s = 0;
        for (Index v : res.layouts[i].vertices) s += vb[v].cols();
        return s;
    };
    auto d_rank = [&](Index i) {   // P_i (x) N -> P_{i-1} (x) N
        if (i < 1 || i >= static_cast<Index>(res.layouts.size())) return Index(0);
        return rank<F>(induced_vertex_map(res.layouts[i], res.layouts[i - 1], res.differentials[i - 1], n, vb, false));
    };
    return chain_dim(k) - d_rank(k) - d_rank(k + 1);
}

/** Reinterpret a module over A as a right module (a module over A^op) when A is commutative. */
template <ExactField F>
Rep<F> as_right_module(const Rep<F>& x)
{
    if (!x.algebra()->is_commutative()) throw DomainError("module is not over a commutative algebra");
    return x;
}

/**
 * Horseshoe: resolutions of A and C along 0 -> A -> B -> C -> 0 give one of B
 * with terms P^A_i (+) P^C_i.
 */
template <ExactField F>
FdResolution<F> horseshoe(const Rep<F>& b, const Mat<F>& iota, const Mat<F>& pi,
                          const FdResolution<F>& ra, const FdResolution<F>& rc)
{
    const auto& alg = *b.algebra();
    FdResolution<F> res;
    res.target = b;
    res.minimal = false;
    const Index len = std::max(ra.length(), rc.length());
    const bool finite = ra.status == ResolutionStatus::Finite && rc.status == ResolutionStatus::Finite;
    res.status = finite ? ResolutionStatus::Finite : ResolutionStatus::UnknownAbove;
    res.cap = std::min(ra.cap, rc.cap);

    auto layout_at = [&](const FdResolution<F>& r, Index i) {
        return i <= r.length() ? r.layouts[i] : ProjectiveLayout<F>(alg, {});
    };
    auto term_at = [&](const FdResolution<F>& r, Index i) {
        return i <= r.length() ? r.terms[i] : Rep<F>::zero(b.algebra());
    };

    // epsilon_B = [iota eps_A | sigma], pi sigma = eps_C
    auto lc0 = layout_at(rc, 0);
    std::vector<Vec<F>> rhs;
    for (Index k = 0; k < lc0.count(); ++k) rhs.push_back(rc.augmentation * lc0.generator(k));
    auto sigma = lift_from_projective(lc0, b, pi, rhs);
    if (!sigma) throw AlgebraError("horseshoe: augmentation lift failed");
    Mat<F> iea = ra.length() >= 0 ? Mat<F>(iota * ra.augmentation) : Mat<F>(b.dim(), 0);

    Mat<F> tau_prev;
    for (Index i = 0; i <= len; ++i)
    {
        auto la = layout_at(ra, i);
        auto lc = layout_at(rc, i);
        std::vector<Index> vs = la.vertices;
        vs.insert(vs.end(), lc.vertices.begin(), lc.vertices.end());
        res.layouts.emplace_back(alg, vs);
        res.terms.push_back(Rep<F>::direct_sum(term_at(ra, i), term_at(rc, i)));
        if (i == 0)
        {
            res.augmentation = hcat<F>(iea, *sigma);
            continue;
        }
        Mat<F> da = ra.differential(i), dc = rc.differential(i);
        Mat<F> lhs, target_rhs;
        if (i == 1)
        {
            lhs = iea;
            target_rhs = -(*sigma * dc);
        }
        else
        {
            lhs = ra.differential(i - 1);
            target_rhs = -(tau_prev * dc);
        }
        std::vector<Vec<F>> r;
        for (Index k = 0; k < lc.count(); ++k) r.push_back(target_rhs * lc.generator(k));
        auto tau = lift_from_projective(lc, term_at(ra, i - 1), lhs, r);
        if (!tau) throw AlgebraError("horseshoe: comparison lift failed at degree " + std::to_string(i));
        Mat<F> d = zeros<F>(da.rows() + dc.rows(), da.cols() + dc.cols());
        d.topLeftCorner(da.rows(), da.cols()) = da;
        d.topRightCorner(da.rows(), dc.cols()) = *tau;
        d.bottomRightCorner(dc.rows(), dc.cols()) = dc;
        res.differentials.push_back(d);
        tau_prev = *tau;
    }
    return res;
}

template <ExactField F>
struct FdPullback
{
    Rep<F> module;
    Mat<F> to_p, to_a;
};

/** P x_B A as the kernel of [p | -a] on P (+) A. */
template <ExactField F>
FdPullback<F> pullback(const Rep<F>& p_mod, const Rep<F>& a_mod, const Mat<F>& p, const Mat<F>& a)
{
    if (p.rows() != a.rows()) throw DomainError("pullback: maps have different targets");
    Rep<F> sum = Rep<F>::direct_sum(p_mod, a_mod);
    Mat<F> k = kernel<F>(hcat<F>(p, Mat<F>(-a)));
    FdPullback<F> out;
    out.module = sum.restrict_to(k);
    out.to_p = k.topRows(p_mod.dim());
    out.to_a = k.bottomRows(a_mod.dim());
    return out;
}

template <ExactField F>
struct SplitResult
{
    bool split = false;
    Mat<F> section;         // C -> B with pi * section = 1
    Vec<F> certificate;     // y with y^T A = 0, y^T b != 0 for the linear system below
    Index equations = 0;
    Index unknowns = 0;
};

/**
 * Search for a module section s: C -> B of pi.  Unknowns are the entries of s
 * (column-major); equations are s act_C(g) = act_B(g) s for the algebra
 * generators and pi s = 1.
 */
template <ExactField F>
SplitResult<F> find_section(const Rep<F>& b, const Rep<F>& c, const Mat<F>& pi)
{
    const Index bd = b.dim(), cd = c.dim();
    const Index u = bd * cd;
    auto idx = [&](Index r, Index col) { return col * bd + r; };
    std::vector<Vec<F>> rows;
    std::vector<F> rhs;
    for (const auto& g : b.algebra()->generators())
    {
        Mat<F> ac = c.act_of(g), ab = b.act_of(g);
        for (Index r = 0; r < bd; ++r)
            for (Index col = 0; col < cd; ++col)
            {
                Vec<F> row = Vec<F>::Constant(u, F(0));
                for (Index t = 0; t < cd; ++t) row(idx(r, t)) += ac(t, col);
                for (Index t = 0; t < bd; ++t) row(idx(t, col)) -= ab(r, t);
                if (!is_zero<F>(row)) { rows.push_back(row); rhs.push_back(F(0)); }
            }
    }
    for (Index r = 0; r < cd; ++r)
        for (Index col = 0; col < cd; ++col)
        {
            Vec<F> row = Vec<F>::Constant(u, F(0));
            for (Index t = 0; t < bd; ++t) row(idx(t, col)) = pi(r, t);
            rows.push_back(row);
            rhs.push_back(r == col ? F(1) : F(0));
        }
    Mat<F> a(static_cast<Index>(rows.size()), u);
    Vec<F> bb(static_cast<Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        a.row(static_cast<Index>(i)) = rows[i].transpose();
        bb(static_cast<Index>(i)) = rhs[i];
    }
    SplitResult<F> out;
    out.equations = a.rows();
    out.unknowns = u;
    auto sol = solve_linear<F>(a, bb);
    if (sol.solvable())
    {
        out.split = true;
        out.section = Eigen::Map<const Mat<F>>(sol.solution->data(), bd, cd);
    }
    else
        out.certificate = sol.certificate;
    return out;
}

}   // namespace findim

#endif
