/**
 * Finitely presented modules over principal ideal domains (the integers,
 * the integers localized at a prime, k[x]) and over Z/n, with SNF-based
 * resolutions and homology of complexes of presented modules.
 */
#ifndef FINDIM_PID_MODULE_HPP
#define FINDIM_PID_MODULE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "findim/smith.hpp"

namespace findim {

/** Invariant-factor description: D^free (+) (+)_i D/(torsion_i). */
template <typename S>
struct ModuleStructure
{
    std::vector<S> torsion;   // non-unit, normalized, each divides the next
    Index free_rank = 0;

    bool is_zero() const { return torsion.empty() && free_rank == 0; }
    bool operator==(const ModuleStructure&) const = default;
};

/** The cokernel of a relations matrix (generators x relations). */
template <EuclideanDomain Dom>
class PresentedModule
{
    public:
        using S = typename Dom::Scalar;

    private:
        Dom dom_;
        Mat<S> rel_;

    public:
        PresentedModule(Dom dom, Mat<S> relations) : dom_(std::move(dom)), rel_(std::move(relations)) {}

        static PresentedModule free(Dom dom, Index n) { return PresentedModule(std::move(dom), Mat<S>(n, 0)); }

        static PresentedModule cyclic(Dom dom, const S& a)
        {
            Mat<S> r(1, 1);
            r(0, 0) = a;
            return PresentedModule(std::move(dom), r);
        }

        static PresentedModule from_structure(Dom dom, const ModuleStructure<S>& st)
        {
            const Index t = static_cast<Index>(st.torsion.size());
            Mat<S> r = zeros<S>(t + st.free_rank, t);
            for (Index i = 0; i < t; ++i) r(i, i) = st.torsion[i];
            return PresentedModule(std::move(dom), r);
        }

        const Dom& domain() const { return dom_; }
        Index gens() const { return rel_.rows(); }
        const Mat<S>& relations() const { return rel_; }

        ModuleStructure<S> structure() const
        {
            ModuleStructure<S> st;
            auto sf = smith_normal_form(rel_, dom_);
            for (Index i = 0; i < sf.rank; ++i)
                if (!dom_.is_unit(sf.D(i, i))) st.torsion.push_back(dom_.normalize(sf.D(i, i)));
            st.free_rank = gens() - sf.rank;
            return st;
        }

        bool is_zero() const { return structure().is_zero(); }
        bool is_free() const { return structure().torsion.empty(); }

        static PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b)
        {
            return PresentedModule(a.dom_, block_diag<S>(a.rel_, b.rel_));
        }

        /** Whether the generator matrix f (target.gens x gens) defines a homomorphism to target. */
        bool maps_to(const PresentedModule& target, const Mat<S>& f) const
        {
            if (f.rows() != target.gens() || f.cols() != gens()) return false;
            if (rel_.cols() == 0) return true;
            Mat<S> img = f * rel_;
            if (findim::is_zero<S>(img)) return true;
            return solve_lattice_matrix(target.rel_, img, dom_).has_value();
        }

        /** Whether the column v of generator coordinates is zero in the module. */
        bool is_zero_element(const Vec<S>& v) const
        {
            if (findim::is_zero<S>(v)) return true;
            if (rel_.cols() == 0) return false;
            return solve_lattice(rel_, v, dom_).solvable();
        }

        /** The same module with a reduced (Smith) presentation. */
        PresentedModule reduced() const { return from_structure(dom_, structure()); }
};

template <EuclideanDomain Dom>
std::string format_structure(const ModuleStructure<typename Dom::Scalar>& st, const Dom& dom)
{
    if (st.is_zero()) return "0";
    std::string out;
    auto add = [&](const std::string& s) { out += (out.empty() ? "" : " + ") + s; };
    for (const auto& t : st.torsion)
    {
        const std::string g = dom.format(t);
        const bool plain = g.find_first_not_of("0123456789") == std::string::npos;
        add(dom.name() + (plain ? "/" + g : "/(" + g + ")"));
    }
    if (st.free_rank == 1) add(dom.name());
    else if (st.free_rank > 1) add(dom.name() + "^" + std::to_string(st.free_rank));
    return out;
}

// ---------------------------------------------------------------------------
// Sublattices and homology

/** A basis of the lattice {v : f v in im q}, i.e. the preimage of a submodule. */
template <EuclideanDomain Dom>
Mat<typename Dom::Scalar> preimage_lattice(const Mat<typename Dom::Scalar>& f, const Mat<typename Dom::Scalar>& q,
                                           const Dom& dom)
{
    using S = typename Dom::Scalar;
    const Index n = f.cols();
    if (n == 0) return Mat<S>(0, 0);
    Mat<S> k = lattice_kernel(hcat<S>(f, Mat<S>(-q)), dom);
    Mat<S> proj = k.topRows(n);
    return lattice_image(proj, dom);
}

/**
 * The subquotient K / (im rel) where K is a lattice with basis kb and rel
 * lies in K.
 */
template <EuclideanDomain Dom>
PresentedModule<Dom> subquotient(const Mat<typename Dom::Scalar>& kb, const Mat<typename Dom::Scalar>& rel,
                                 const Dom& dom)
{
    using S = typename Dom::Scalar;
    if (kb.cols() == 0) return PresentedModule<Dom>::free(dom, 0);
    if (rel.cols() == 0) return PresentedModule<Dom>(dom, Mat<S>(kb.cols(), 0));
    auto coords = solve_lattice_matrix(kb, rel, dom);
    if (!coords) throw DomainError("subquotient: relations do not lie in the lattice");
    return PresentedModule<Dom>(dom, *coords);
}

/**
 * A chain complex of presented modules C_i with maps d_i: C_i -> C_{i-1}
 * (matrices on generators).  maps[i] is d_i; maps[0] is ignored.
 */
template <EuclideanDomain Dom>
struct PresentedComplex
{
    std::vector<Mat<typename Dom::Scalar>> terms;   // relation matrices
    std::vector<Mat<typename Dom::Scalar>> maps;
};

template <EuclideanDomain Dom>
PresentedModule<Dom> complex_homology(const PresentedComplex<Dom>& c, Index i, const Dom& dom)
{
    using S = typename Dom::Scalar;
    const Index n = static_cast<Index>(c.terms.size());
    if (i < 0 || i >= n) return PresentedModule<Dom>::free(dom, 0);
    const Mat<S>& q = c.terms[i];
    const Index g = q.rows();
    Mat<S> kb;
    if (i == 0 || c.terms[i - 1].rows() == 0) kb = identity<S>(g);
    else kb = preimage_lattice(c.maps[i], c.terms[i - 1], dom);
    Mat<S> rel = q;
    if (i + 1 < n && c.maps[i + 1].cols() > 0) rel = hcat<S>(rel, c.maps[i + 1]);
    return subquotient(kb, rel, dom);
}

/** Kronecker product d (x) I_g. */
template <typename S>
Mat<S> kron_identity(const Mat<S>& d, Index g)
{
    Mat<S> out = zeros<S>(d.rows() * g, d.cols() * g);
    for (Index a = 0; a < d.rows(); ++a)
        for (Index b = 0; b < d.cols(); ++b)
            if (d(a, b) != S(0))
                for (Index x = 0; x < g; ++x) out(a * g + x, b * g + x) = d(a, b);
    return out;
}

/** (+)_s N / q_s N as a presented module (relations of N plus q_s on each copy). */
template <EuclideanDomain Dom>
Mat<typename Dom::Scalar> tensor_term(const std::vector<typename Dom::Scalar>& moduli, const PresentedModule<Dom>& n)
{
    using S = typename Dom::Scalar;
    const Index g = n.gens();
    Mat<S> rel(0, 0);
    for (const auto& q : moduli)
    {
        Mat<S> block = n.relations();
        if (q != S(0)) block = hcat<S>(block, Mat<S>(q * identity<S>(g)));
        rel = block_diag<S>(rel, block);
    }
    return rel;
}

// ---------------------------------------------------------------------------
// Resolutions

/**
 * A resolution by (generalized) free modules.  Term i is (+)_s D/(q_s) where
 * q_s = 0 except over Z/n, where the summands Z/p^k are the indecomposable
 * projectives.
 */
template <EuclideanDomain Dom>
struct PidResolution
{
    using S = typename Dom::Scalar;
    std::optional<PresentedModule<Dom>> target;
    std::vector<std::vector<S>> moduli;
    Mat<S> augmentation;          // target.gens x rank P_0
    std::vector<Mat<S>> differentials;   // d_i at i-1
    bool complete = true;         // false when truncated at a cap
    Index period_start = -1, period_length = 0;

    Index length() const { return static_cast<Index>(moduli.size()) - 1; }
    Index rank(Index i) const { return i < static_cast<Index>(moduli.size()) ? static_cast<Index>(moduli[i].size()) : 0; }
};

/** Minimal resolution over a PID: 0 -> D^t -> D^(t+r) -> M -> 0, dropping unit invariant factors. */
template <EuclideanDomain Dom>
PidResolution<Dom> pid_resolution(const PresentedModule<Dom>& m)
{
    using S = typename Dom::Scalar;
    const Dom& dom = m.domain();
    auto sf = smith_normal_form(m.relations(), dom);
    PidResolution<Dom> res;
    res.target = m;
    std::vector<Index> tors, frees;
    for (Index i = 0; i < sf.rank; ++i)
        if (!dom.is_unit(sf.D(i, i))) tors.push_back(i);
    for (Index i = sf.rank; i < m.gens(); ++i) frees.push_back(i);
    const Index t = static_cast<Index>(tors.size()), p0 = t + static_cast<Index>(frees.size());
    if (p0 == 0)
    {
        res.augmentation = Mat<S>(m.gens(), 0);
        return res;
    }
    res.augmentation = Mat<S>(m.gens(), p0);
    Index c = 0;
    for (Index i : tors) res.augmentation.col(c++) = sf.Uinv.col(i);
    for (Index i : frees) res.augmentation.col(c++) = sf.Uinv.col(i);
    res.moduli.push_back(std::vector<S>(p0, S(0)));
    if (t > 0)
    {
        Mat<S> d = zeros<S>(p0, t);
        for (Index k = 0; k < t; ++k) d(k, k) = sf.D(tors[k], tors[k]);
        res.moduli.push_back(std::vector<S>(t, S(0)));
        res.differentials.push_back(d);
    }
    return res;
}

/** The augmented complex P_len -> ... -> P_0 -> M as a presented complex (M at index 0). */
template <EuclideanDomain Dom>
PresentedComplex<Dom> augmented_complex(const PidResolution<Dom>& res)
{
    using S = typename Dom::Scalar;
    PresentedComplex<Dom> c;
    c.terms.push_back(res.target->relations());
    c.maps.push_back(Mat<S>(0, 0));
    for (Index i = 0; i <= res.length(); ++i)
    {
        const Index r = res.rank(i);
        Mat<S> rel(r, 0);
        for (Index s = 0; s < r; ++s)
            if (res.moduli[i][s] != S(0))
            {
                Vec<S> v = Vec<S>::Constant(r, S(0));
                v(s) = res.moduli[i][s];
                rel = hcat<S>(rel, Mat<S>(v));
            }
        c.terms.push_back(rel);
        c.maps.push_back(i == 0 ? res.augmentation : res.differentials[i - 1]);
    }
    return c;
}

/** Exactness of the augmented complex at every position (all homology zero). */
template <EuclideanDomain Dom>
bool certify_exact(const PidResolution<Dom>& res)
{
    using S = typename Dom::Scalar;
    auto c = augmented_complex(res);
    const Dom& dom = res.target->domain();
    const Index n = static_cast<Index>(c.terms.size());
    for (Index i = 2; i < n; ++i)
    {
        Mat<S> dd = c.maps[i - 1] * c.maps[i];
        if (is_zero<S>(dd)) continue;
        if (c.terms[i - 2].cols() == 0 || !solve_lattice_matrix(c.terms[i - 2], dd, dom)) return false;
    }
    for (Index i = 0; i < n; ++i)
    {
        if (!res.complete && i == n - 1) break;
        if (!complex_homology(c, i, dom).is_zero()) return false;
    }
    return true;
}

/** Tor_n(M, N) from a resolution of M: homology of P (x) N. */
template <EuclideanDomain Dom>
PresentedModule<Dom> tor_from_resolution(const PidResolution<Dom>& res, Index n, const PresentedModule<Dom>& nmod)
{
    using S = typename Dom::Scalar;
    const Dom& dom = nmod.domain();
    if (!res.complete && n + 1 > res.length())
        throw IndeterminateError("resolution truncated before degree " + std::to_string(n + 1));
    PresentedComplex<Dom> c;
    const Index g = nmod.gens();
    for (Index i = 0; i <= std::max<Index>(res.length(), n + 1); ++i)
    {
        if (i <= res.length())
        {
            c.terms.push_back(tensor_term(res.moduli[i], nmod));
            c.maps.push_back(i == 0 ? Mat<S>(0, 0) : kron_identity<S>(res.differentials[i - 1], g));
        }
        else
        {
            c.terms.push_back(Mat<S>(0, 0));
            c.maps.push_back(Mat<S>(c.terms[i - 1].rows(), 0));
        }
    }
    return complex_homology(c, n, dom);
}

/** Ext^n(M, N) from a resolution of M: cohomology of Hom(P, N) = (+) N/q N with transposed maps. */
template <EuclideanDomain Dom>
PresentedModule<Dom> ext_from_resolution(const PidResolution<Dom>& res, Index n, const PresentedModule<Dom>& nmod)
{
    using S = typename Dom::Scalar;
    const Dom& dom = nmod.domain();
    if (!res.complete && n + 1 > res.length())
        throw IndeterminateError("resolution truncated before degree " + std::to_string(n + 1));
    // Reindex the cochain complex C^0 -> C^1 -> ... as a chain complex in reverse.
    const Index top = std::max<Index>(res.length(), n) + 1;
    const Index g = nmod.gens();
    auto term = [&](Index i) { return i <= res.length() ? tensor_term(res.moduli[i], nmod) : Mat<S>(0, 0); };
    PresentedComplex<Dom> c;   // chain index j corresponds to cochain degree top - j
    for (Index j = 0; j <= top; ++j)
    {
        const Index deg = top - j;
        c.terms.push_back(term(deg));
        if (j == 0) { c.maps.push_back(Mat<S>(0, 0)); continue; }
        // delta^{deg}: C^deg -> C^{deg+1} is d_{deg+1}^T (x) I
        const Index src = deg <= res.length() ? res.rank(deg) * g : 0;
        const Index dst = deg + 1 <= res.length() ? res.rank(deg + 1) * g : 0;
        if (deg + 1 <= res.length()) c.maps.push_back(kron_identity<S>(Mat<S>(res.differentials[deg].transpose()), g));
        else c.maps.push_back(zeros<S>(dst, src));
    }
    return complex_homology(c, top - n, dom);
}

template <EuclideanDomain Dom>
struct PresentedPullback
{
    PresentedModule<Dom> module;
    Mat<typename Dom::Scalar> to_p, to_a;
};

/** P x_B A = {(x, y) : p x = a y in B}, presented on a basis of the preimage lattice. */
template <EuclideanDomain Dom>
PresentedPullback<Dom> pullback(const PresentedModule<Dom>& pm, const PresentedModule<Dom>& am,
                                const PresentedModule<Dom>& bm, const Mat<typename Dom::Scalar>& p,
                                const Mat<typename Dom::Scalar>& a)
{
    using S = typename Dom::Scalar;
    const Dom& dom = pm.domain();
    if (p.rows() != bm.gens() || a.rows() != bm.gens()) throw DomainError("pullback: maps have different targets");
    Mat<S> f = hcat<S>(p, Mat<S>(-a));
    Mat<S> kb = preimage_lattice(f, bm.relations(), dom);
    Mat<S> rel = block_diag<S>(pm.relations(), am.relations());
    PresentedPullback<Dom> out{subquotient(kb, rel, dom), kb.topRows(pm.gens()), kb.bottomRows(am.gens())};
    return out;
}

/** Kernel of f: M -> N as a presented module, with its inclusion on generators. */
template <EuclideanDomain Dom>
std::pair<PresentedModule<Dom>, Mat<typename Dom::Scalar>> kernel_module(const PresentedModule<Dom>& m,
                                                                           const PresentedModule<Dom>& n,
                                                                           const Mat<typename Dom::Scalar>& f)
{
    using S = typename Dom::Scalar;
    const Dom& dom = m.domain();
    Mat<S> kb = preimage_lattice(f, n.relations(), dom);
    return {subquotient(kb, m.relations(), dom), kb};
}

/**
 * Horseshoe over a PID: from resolutions of A and C along
 * 0 -> A -> B -> C -> 0, a resolution of B with terms P^A_i (+) P^C_i.
 */
template <EuclideanDomain Dom>
PidResolution<Dom> horseshoe(const PresentedModule<Dom>& b, const Mat<typename Dom::Scalar>& iota,
                             const Mat<typename Dom::Scalar>& pi, const PidResolution<Dom>& ra,
                             const PidResolution<Dom>& rc)
{
    using S = typename Dom::Scalar;
    const Dom& dom = b.domain();
    const auto& qb = b.relations();
    const auto& qc = rc.target->relations();
    PidResolution<Dom> res;
    res.target = b;
    const Index len = std::max(ra.length(), rc.length());
    Mat<S> iea = iota * ra.augmentation;
    if (ra.length() < 0) iea = Mat<S>(b.gens(), 0);

    auto solve_mod = [&](const Mat<S>& lhs, const Mat<S>& q, const Mat<S>& rhs) {
        Mat<S> sys = hcat<S>(lhs, q);
        auto x = solve_lattice_matrix(sys, rhs, dom);
        if (!x) throw DomainError("horseshoe: lifting failed");
        return Mat<S>(x->topRows(lhs.cols()));
    };

    Mat<S> sigma = rc.rank(0) > 0 ? solve_mod(pi, qc, rc.augmentation) : Mat<S>(b.gens(), 0);
    Mat<S> tau_prev;
    for (Index i = 0; i <= len; ++i)
    {
        std::vector<S> mod(ra.rank(i) + rc.rank(i), S(0));
        res.moduli.push_back(mod);
        if (i == 0)
        {
            res.augmentation = hcat<S>(iea, sigma);
            continue;
        }
        auto diff = [](const PidResolution<Dom>& r, Index k) {
            if (k >= 1 && k <= r.length()) return r.differentials[k - 1];
            return zeros<S>(r.rank(k - 1), r.rank(k));
        };
        Mat<S> da = diff(ra, i), dc = diff(rc, i);
        Mat<S> tau;
        if (dc.cols() == 0) tau = zeros<S>(ra.rank(i - 1), 0);
        else if (i == 1) tau = solve_mod(iea, qb, Mat<S>(-(sigma * dc)));
        else
        {
            Mat<S> rhs = -(tau_prev * dc);
            if (ra.rank(i - 1) == 0)
            {
                if (!is_zero<S>(rhs)) throw DomainError("horseshoe: lifting failed");
                tau = zeros<S>(0, dc.cols());
            }
            else
            {
                auto x = solve_lattice_matrix(diff(ra, i - 1), rhs, dom);
                if (!x) throw DomainError("horseshoe: lifting failed");
                tau = *x;
            }
        }
        Mat<S> d = zeros<S>(da.rows() + dc.rows(), da.cols() + dc.cols());
        d.topLeftCorner(da.rows(), da.cols()) = da;
        d.topRightCorner(da.rows(), dc.cols()) = tau;
        d.bottomRightCorner(dc.rows(), dc.cols()) = dc;
        res.differentials.push_back(d);
        tau_prev = tau;
    }
    return res;
}

/** M localized at p: keep the p-primary parts of the invariant factors. */
inline PresentedModule<LocalIntegerDomain> localize_at_prime(const PresentedModule<IntegerDomain>& m, const Integer& p)
{
    LocalIntegerDomain loc(p);
    auto st = m.structure();
    ModuleStructure<Rational> ls;
    for (const auto& t : st.torsion)
    {
        int v = 0;
        Integer x = t;
        while (x % p == 0) { x /= p; ++v; }
        if (v == 0) continue;
        Integer pv = 1;
        for (int i = 0; i < v; ++i) pv *= p;
        ls.torsion.push_back(Rational(pv));
    }
    ls.free_rank = st.free_rank;
    return PresentedModule<LocalIntegerDomain>::from_structure(loc, ls);
}

/** Invariant factors of an integer module localized at p (as integers p^v). */
inline ModuleStructure<Integer> localize_structure(const ModuleStructure<Integer>& st, const Integer& p)
{
    ModuleStructure<Integer> out;
    out.free_rank = st.free_rank;
    for (const auto& t : st.torsion)
    {
        Integer x = t, pv = 1;
        while (x % p == 0) { x /= p; pv *= p; }
        if (pv != 1) out.torsion.push_back(pv);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Z/n

/** Prime factorization by trial division, primes ascending. */
inline std::vector<std::pair<Integer, int>> factorize(Integer n)
{
    std::vector<std::pair<Integer, int>> out;
    for (Integer p = 2; p * p <= n; ++p)
    {
        int k = 0;
        while (n % p == 0) { n /= p; ++k; }
        if (k > 0) out.emplace_back(p, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/** Whether an integer-presented module is annihilated by n. */
inline bool annihilated_by(const PresentedModule<IntegerDomain>& m, const Integer& n)
{
    for (const auto& t : m.structure().torsion)
        if (n % t != 0) return false;
    return m.structure().free_rank == 0;
}

/**
 * The p-primary cyclic components Z/p^j of a Z/n-module, as (p, j, k) with
 * p^k the exact power of p in n.
 */
struct PrimaryComponent
{
    Integer p;
    int j = 0, k = 0;
};

inline std::vector<PrimaryComponent> primary_components(const PresentedModule<IntegerDomain>& m, const Integer& n)
{
    std::vector<PrimaryComponent> out;
    auto fac = factorize(n);
    for (const auto& t : m.structure().torsion)
        for (const auto& [p, k] : fac)
        {
            int j = 0;
            Integer x = t;
            while (x % p == 0) { x /= p; ++j; }
            if (j > 0) out.push_back({p, j, k});
        }
    return out;
}

inline Integer ipow(const Integer& p, int e)
{
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

/**
 * Minimal resolution over Z/n, presented over Z: a component Z/p^j with
 * 0 < j < k resolves periodically by Z/p^k with maps p^j, p^(k-j), ...; the
 * resolution is truncated after min_terms terms when infinite.
 */
inline PidResolution<IntegerDomain> modint_resolution(const PresentedModule<IntegerDomain>& m, const Integer& n,
                                                       Index min_terms)
{
    IntegerDomain dom;
    auto comps = primary_components(m, n);
    PidResolution<IntegerDomain> res;
    res.target = m;
    // Generators of M adapted to its cyclic decomposition.
    auto sf = smith_normal_form(m.relations(), dom);
    std::vector<Vec<Integer>> gen_of_comp;
    {
        auto fac = factorize(n);
        for (Index i = 0; i < sf.rank; ++i)
        {
            Integer t = abs(sf.D(i, i));
            if (t == 1) continue;
            for (const auto& [p, k] : fac)
            {
                Integer x = t, pj = 1;
                while (x % p == 0) { x /= p; pj *= p; }
                if (pj == 1) continue;
                // t / p^j times the generator generates the p-part
                gen_of_comp.push_back(Vec<Integer>(sf.Uinv.col(i) * (t / pj)));
            }
        }
    }
    bool infinite = false, any_period2 = false;
    for (const auto& c : comps)
        if (c.j < c.k)
        {
            infinite = true;
            if (2 * c.j != c.k) any_period2 = true;
        }
    std::vector<Integer> base;
    for (const auto& c : comps) base.push_back(ipow(c.p, c.k));
    const Index r = static_cast<Index>(comps.size());
    res.augmentation = Mat<Integer>(m.gens(), r);
    for (Index s = 0; s < r; ++s) res.augmentation.col(s) = gen_of_comp[s];
    if (r == 0) return res;
    res.moduli.push_back(base);

    // Active summands: those that are not projective over Z/n.
    std::vector<Index> active;
    for (Index s = 0; s < r; ++s)
        if (comps[s].j < comps[s].k) active.push_back(s);
    if (!infinite) return res;
    res.complete = false;
    res.period_start = 1;
    res.period_length = any_period2 ? 2 : 1;
    Index prev_size = r;
    std::vector<Index> prev_index(r);
    for (Index s = 0; s < r; ++s) prev_index[s] = s;
    for (Index i = 1; i < std::max<Index>(min_terms, 2); ++i)
    {
        std::vector<Integer> mod;
        Mat<Integer> d = zeros<Integer>(prev_size, static_cast<Index>(active.size()));
        for (std::size_t a = 0; a < active.size(); ++a)
        {
            const auto& c = comps[active[a]];
            mod.push_back(base[active[a]]);
            const int e = (i % 2 == 1) ? c.j : c.k - c.j;
            const Index row = i == 1 ? active[a] : static_cast<Index>(a);
            d(row, static_cast<Index>(a)) = ipow(c.p, e);
        }
        res.moduli.push_back(mod);
        res.differentials.push_back(d);
        prev_size = static_cast<Index>(active.size());
    }
    return res;
}

/** Z/n is a product of local self-injective rings: FPR(Z/n) consists of the projectives. */
inline bool modint_projective(const PresentedModule<IntegerDomain>& m, const Integer& n)
{
    for (const auto& c : primary_components(m, n))
        if (c.j < c.k) return false;
    return true;
}

}   // namespace findim

#endif
