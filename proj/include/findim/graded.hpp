/**
 * Multigraded modules over k[x_1, ..., x_m].  A module is presented by
 * generator and relation degrees and a scalar matrix C; the relation j has
 * polynomial entries C(i, j) x^(r_j - g_i).  Every computation happens degree
 * by degree inside a finite box beyond which all multiplication maps are
 * isomorphisms.
 */
#ifndef FINDIM_GRADED_HPP
#define FINDIM_GRADED_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "findim/linalg.hpp"

namespace findim {

using Degree = std::vector<int>;

inline bool deg_leq(const Degree& a, const Degree& b)
{
    for (std::size_t l = 0; l < a.size(); ++l)
        if (a[l] > b[l]) return false;
    return true;
}

inline Degree deg_max(const Degree& a, const Degree& b)
{
    Degree r(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) r[l] = std::max(a[l], b[l]);
    return r;
}

inline Degree deg_add(const Degree& a, const Degree& b)
{
    Degree r(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) r[l] = a[l] + b[l];
    return r;
}

inline Degree deg_sub(const Degree& a, const Degree& b)
{
    Degree r(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) r[l] = a[l] - b[l];
    return r;
}

inline int deg_total(const Degree& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline std::string monomial_string(const Degree& d)
{
    std::string out;
    for (std::size_t l = 0; l < d.size(); ++l)
    {
        if (d[l] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(l + 1);
        if (d[l] > 1) out += "^" + std::to_string(d[l]);
    }
    return out.empty() ? "1" : out;
}

template <ExactField F>
class GradedModule
{
    private:
        int m_ = 1;
        std::vector<Degree> gens_, rels_;
        Mat<F> c_;

    public:
        GradedModule() = default;

        GradedModule(int nvars, std::vector<Degree> gens, std::vector<Degree> rels, Mat<F> c)
            : m_(nvars), gens_(std::move(gens)), rels_(std::move(rels)), c_(std::move(c))
        {
            validate();
        }

        void validate() const
        {
            if (m_ < 1) throw DomainError("polynomial ring needs at least one variable");
            if (c_.rows() != static_cast<Index>(gens_.size()) || c_.cols() != static_cast<Index>(rels_.size()))
                throw DomainError("graded presentation: matrix shape does not match degrees");
            for (const auto& d : gens_)
                if (static_cast<int>(d.size()) != m_ || *std::min_element(d.begin(), d.end()) < 0)
                    throw DomainError("graded presentation: degrees must be nonnegative vectors of length m");
            for (const auto& d : rels_)
                if (static_cast<int>(d.size()) != m_) throw DomainError("graded presentation: bad relation degree");
            for (Index i = 0; i < c_.rows(); ++i)
                for (Index j = 0; j < c_.cols(); ++j)
                    if (c_(i, j) != F(0) && !deg_leq(gens_[i], rels_[j]))
                        throw DomainError("graded presentation: relation degree below generator degree");
        }

        static GradedModule free(int nvars, std::vector<Degree> degs)
        {
            const Index n = static_cast<Index>(degs.size());
            return GradedModule(nvars, std::move(degs), {}, Mat<F>(n, 0));
        }

        /** k[x]/(x_s : s in subset). */
        static GradedModule variable_quotient(int nvars, const std::vector<int>& subset)
        {
            std::vector<Degree> rels;
            for (int s : subset)
            {
                Degree d(nvars, 0);
                d[s] = 1;
                rels.push_back(d);
            }
            Mat<F> c = Mat<F>::Constant(1, static_cast<Index>(subset.size()), F(1));
            return GradedModule(nvars, {Degree(nvars, 0)}, rels, c);
        }

        /** k[x]/I for a monomial ideal I. */
        static GradedModule monomial_quotient(int nvars, const std::vector<Degree>& monomials)
        {
            Mat<F> c = Mat<F>::Constant(1, static_cast<Index>(monomials.size()), F(1));
            return GradedModule(nvars, {Degree(nvars, 0)}, monomials, c);
        }

        /** The monomial ideal I as a module, presented by its pairwise syzygies. */
        static GradedModule monomial_ideal(int nvars, const std::vector<Degree>& monomials)
        {
            const Index r = static_cast<Index>(monomials.size());
            std::vector<Degree> rels;
            std::vector<Vec<F>> cols;
            for (Index a = 0; a < r; ++a)
                for (Index b = a + 1; b < r; ++b)
                {
                    rels.push_back(deg_max(monomials[a], monomials[b]));
                    Vec<F> v = Vec<F>::Constant(r, F(0));
                    v(a) = F(1);
                    v(b) = F(-1);
                    cols.push_back(v);
                }
            Mat<F> c(r, static_cast<Index>(cols.size()));
            for (std::size_t j = 0; j < cols.size(); ++j) c.col(static_cast<Index>(j)) = cols[j];
            return GradedModule(nvars, monomials, rels, c);
        }

        static GradedModule direct_sum(const GradedModule& a, const GradedModule& b)
        {
            if (a.m_ != b.m_) throw DomainError("direct sum over different polynomial rings");
            auto g = a.gens_;
            g.insert(g.end(), b.gens_.begin(), b.gens_.end());
            auto r = a.rels_;
            r.insert(r.end(), b.rels_.begin(), b.rels_.end());
            return GradedModule(a.m_, g, r, block_diag<F>(a.c_, b.c_));
        }

        int nvars() const { return m_; }
        const std::vector<Degree>& gen_degrees() const { return gens_; }
        const std::vector<Degree>& rel_degrees() const { return rels_; }
        const Mat<F>& matrix() const { return c_; }

        /** Componentwise maximum of all generator and relation degrees. */
        Degree bound() const
        {
            Degree b(m_, 0);
            for (const auto& d : gens_) b = deg_max(b, d);
            for (const auto& d : rels_) b = deg_max(b, d);
            return b;
        }
};

/**
 * A graded module restricted to the box [0, B] with its multiplication
 * maps; outside the box in direction l (coordinates >= B_l) the maps are
 * identities.  Points are stored in mixed-radix order.
 */
template <ExactField F>
struct BoxModule
{
    int m = 1;
    Degree box;
    std::vector<Index> dims;
    std::vector<std::vector<Mat<F>>> mult;   // mult[p][l]: M_p -> M_{p + e_l}, for p_l < box_l

    Index point_count() const
    {
        Index n = 1;
        for (int b : box) n *= b + 1;
        return n;
    }

    Index index_of(const Degree& a) const
    {
        Index idx = 0;
        for (int l = m - 1; l >= 0; --l) idx = idx * (box[l] + 1) + std::min(a[l], box[l]);
        return idx;
    }

    Degree degree_of(Index idx) const
    {
        Degree a(m);
        for (int l = 0; l < m; ++l)
        {
            a[l] = static_cast<int>(idx % (box[l] + 1));
            idx /= box[l] + 1;
        }
        return a;
    }

    /** Dimension at any degree (zero if some coordinate is negative). */
    Index dim_at(const Degree& a) const
    {
        for (int v : a)
            if (v < 0) return 0;
        return dims[index_of(a)];
    }

    /** Multiplication by x^delta from degree a (clamped at the box). */
    Mat<F> monomial_map(const Degree& a, const Degree& delta) const
    {
        Degree cur = a;
        for (int l = 0; l < m; ++l) cur[l] = std::min(cur[l], box[l]);
        Mat<F> acc = identity<F>(dims[index_of(cur)]);
        for (int l = 0; l < m; ++l)
            for (int t = 0; t < delta[l]; ++t)
            {
                if (cur[l] >= box[l]) break;
                acc = mult[index_of(cur)][l] * acc;
                ++cur[l];
            }
        return acc;
    }

    /** All box points ordered by total degree, then index. */
    std::vector<Index> graded_order() const
    {
        std::vector<Index> pts(point_count());
        std::iota(pts.begin(), pts.end(), 0);
        std::stable_sort(pts.begin(), pts.end(), [&](Index a, Index b) {
            return deg_total(degree_of(a)) < deg_total(degree_of(b));
        });
        return pts;
    }
};

template <ExactField F>
BoxModule<F> to_box(const GradedModule<F>& mod, const Degree& box)
{
    BoxModule<F> bm;
    bm.m = mod.nvars();
    bm.box = box;
    const Index n = bm.point_count();
    bm.dims.assign(n, 0);
    bm.mult.assign(n, std::vector<Mat<F>>(bm.m));
    const auto& gens = mod.gen_degrees();
    const auto& rels = mod.rel_degrees();
    std::vector<std::vector<Index>> gidx(n);
    std::vector<Mat<F>> proj(n), lift(n);
    for (Index p = 0; p < n; ++p)
    {
        Degree a = bm.degree_of(p);
        for (Index i = 0; i < static_cast<Index>(gens.size()); ++i)
            if (deg_leq(gens[i], a)) gidx[p].push_back(i);
        const Index g = static_cast<Index>(gidx[p].size());
        Mat<F> r(g, 0);
        for (Index j = 0; j < static_cast<Index>(rels.size()); ++j)
        {
            if (!deg_leq(rels[j], a)) continue;
            Vec<F> v(g);
            for (Index k = 0; k < g; ++k) v(k) = mod.matrix()(gidx[p][k], j);
            r = hcat<F>(r, Mat<F>(v));
        }
        Mat<F> rb = image_basis<F>(r);
        Mat<F> comp = complement_basis<F>(rb);
        Mat<F> inv = *solve_matrix<F>(hcat<F>(rb, comp), identity<F>(g));
        proj[p] = inv.bottomRows(comp.cols());
        lift[p] = comp;
        bm.dims[p] = comp.cols();
    }
    for (Index p = 0; p < n; ++p)
    {
        Degree a = bm.degree_of(p);
        for (int l = 0; l < bm.m; ++l)
        {
            if (a[l] >= box[l]) continue;
            Degree b = a;
            ++b[l];
            const Index q = bm.index_of(b);
            Mat<F> incl = zeros<F>(static_cast<Index>(gidx[q].size()), static_cast<Index>(gidx[p].size()));
            for (std::size_t k = 0, t = 0; k < gidx[p].size(); ++k)
            {
                while (gidx[q][t] != gidx[p][k]) ++t;
                incl(static_cast<Index>(t), static_cast<Index>(k)) = F(1);
            }
            bm.mult[p][l] = proj[q] * incl * lift[p];
        }
    }
    return bm;
}

/** A map of graded free modules: d(e_s) = sum_t c(t, s) x^(src_s - dst_t) e_t. */
template <ExactField F>
struct GradedFreeMap
{
    std::vector<Degree> src, dst;
    Mat<F> c;
};

/** Minimal multigraded free resolution; terms[i] are generator degrees of F_i. */
template <ExactField F>
struct GradedResolution
{
    int m = 1;
    GradedModule<F> target;
    std::vector<std::vector<Degree>> terms;
    std::vector<GradedFreeMap<F>> differentials;   // d_i at i-1
    Degree box;
    bool exact = false;
    std::vector<std::string> checks;

    Index length() const { return static_cast<Index>(terms.size()) - 1; }
    std::vector<Index> ranks() const
    {
        std::vector<Index> r;
        for (const auto& t : terms) r.push_back(static_cast<Index>(t.size()));
        return r;
    }
};

namespace detail {

/** Box module of a graded free module with the given generator degrees. */
template <ExactField F>
BoxModule<F> free_box(int m, const std::vector<Degree>& degs, const Degree& box,
                      std::vector<std::vector<Index>>* members = nullptr)
{
    BoxModule<F> bm;
    bm.m = m;
    bm.box = box;
    const Index n = bm.point_count();
    bm.dims.assign(n, 0);
    bm.mult.assign(n, std::vector<Mat<F>>(m));
    std::vector<std::vector<Index>> mem(n);
    for (Index p = 0; p < n; ++p)
    {
        Degree a = bm.degree_of(p);
        for (Index s = 0; s < static_cast<Index>(degs.size()); ++s)
            if (deg_leq(degs[s], a)) mem[p].push_back(s);
        bm.dims[p] = static_cast<Index>(mem[p].size());
    }
    for (Index p = 0; p < n; ++p)
    {
        Degree a = bm.degree_of(p);
        for (int l = 0; l < m; ++l)
        {
            if (a[l] >= box[l]) continue;
            Degree b = a;
            ++b[l];
            const Index q = bm.index_of(b);
            Mat<F> incl = zeros<F>(bm.dims[q], bm.dims[p]);
            for (std::size_t k = 0, t = 0; k < mem[p].size(); ++k)
            {
                while (mem[q][t] != mem[p][k]) ++t;
                incl(static_cast<Index>(t), static_cast<Index>(k)) = F(1);
            }
            bm.mult[p][l] = incl;
        }
    }
    if (members) *members = std::move(mem);
    return bm;
}

/** Minimal generators of a box module: (degree index, vector) pairs in graded order. */
template <ExactField F>
std::vector<std::pair<Index, Vec<F>>> minimal_generators(const BoxModule<F>& bm)
{
    std::vector<std::pair<Index, Vec<F>>> out;
    for (Index p : bm.graded_order())
    {
        if (bm.dims[p] == 0) continue;
        Degree a = bm.degree_of(p);
        Mat<F> img(bm.dims[p], 0);
        for (int l = 0; l < bm.m; ++l)
        {
            if (a[l] == 0) continue;
            Degree b = a;
            --b[l];
            const Index q = bm.index_of(b);
            if (bm.dims[q] == 0) continue;
            img = hcat<F>(img, bm.mult[q][l]);
        }
        Mat<F> comp = complement_basis<F>(image_basis<F>(img));
        for (Index c = 0; c < comp.cols(); ++c) out.emplace_back(p, Vec<F>(comp.col(c)));
    }
    return out;
}

}   // namespace detail

/**
 * Minimal free resolution, computed degree by degree in the box [0, B] where
 * B bounds every generator and relation degree.  Each kernel is again a box
 * module; its minimal generators give the next term and differential.
 */
template <ExactField F>
GradedResolution<F> graded_resolution(const GradedModule<F>& mod)
{
    GradedResolution<F> res;
    res.m = mod.nvars();
    res.target = mod;
    res.box = mod.bound();
    const int m = res.m;
    BoxModule<F> cur = to_box(mod, res.box);
    // cur_embed[p]: basis of cur_p inside the previous free module (empty at step 0)
    std::vector<Mat<F>> cur_embed;
    std::vector<std::vector<Index>> prev_members;
    bool ok = true;
    for (int step = 0; step <= m + 1; ++step)
    {
        auto gens = detail::minimal_generators(cur);
        if (gens.empty()) break;
        if (step == m + 1) throw AlgebraError("graded resolution exceeded the syzygy bound");
        std::vector<Degree> degs;
        for (const auto& g : gens) degs.push_back(cur.degree_of(g.first));
        if (step > 0)
        {
            GradedFreeMap<F> d;
            d.src = degs;
            d.dst = res.terms.back();
            d.c = zeros<F>(static_cast<Index>(d.dst.size()), static_cast<Index>(degs.size()));
            for (std::size_t s = 0; s < gens.size(); ++s)
            {
                Vec<F> v = cur_embed[gens[s].first] * gens[s].second;
                const auto& mem = prev_members[gens[s].first];
                for (std::size_t k = 0; k < mem.size(); ++k) d.c(mem[k], static_cast<Index>(s)) = v(static_cast<Index>(k));
            }
            res.differentials.push_back(d);
        }
        res.terms.push_back(degs);

        // phi: F -> cur, degree by degree
        std::vector<std::vector<Index>> members;
        BoxModule<F> fb = detail::free_box<F>(m, degs, res.box, &members);
        const Index n = fb.point_count();
        std::vector<Mat<F>> phi(n);
        for (Index p : fb.graded_order())
        {
            Degree a = fb.degree_of(p);
            Mat<F> ph = zeros<F>(cur.dims[p], fb.dims[p]);
            for (std::size_t k = 0; k < members[p].size(); ++k)
            {
                const Index s = members[p][k];
                if (degs[s] == a)
                {
                    ph.col(static_cast<Index>(k)) = gens[s].second;
                    continue;
                }
                int l = 0;
                while (degs[s][l] >= a[l]) ++l;
                Degree b = a;
                --b[l];
                const Index q = fb.index_of(b);
                const auto& mq = members[q];
                const Index kk = static_cast<Index>(std::find(mq.begin(), mq.end(), s) - mq.begin());
                ph.col(static_cast<Index>(k)) = cur.mult[q][l] * phi[q].col(kk);
            }
            phi[p] = ph;
            if (rank<F>(ph) != cur.dims[p]) ok = false;
        }
        // kernel box module
        BoxModule<F> ker;
        ker.m = m;
        ker.box = res.box;
        ker.dims.assign(n, 0);
        ker.mult.assign(n, std::vector<Mat<F>>(m));
        std::vector<Mat<F>> kb(n);
        for (Index p = 0; p < n; ++p)
        {
            kb[p] = kernel<F>(phi[p]);
            ker.dims[p] = kb[p].cols();
        }
        for (Index p = 0; p < n; ++p)
        {
            Degree a = fb.degree_of(p);
            for (int l = 0; l < m; ++l)
            {
                if (a[l] >= res.box[l]) continue;
                Degree b = a;
                ++b[l];
                const Index q = fb.index_of(b);
                ker.mult[p][l] = coordinates<F>(kb[q], Mat<F>(fb.mult[p][l] * kb[p]));
            }
        }
        cur = std::move(ker);
        cur_embed = std::move(kb);
        prev_members = std::move(members);
    }
    res.exact = ok;
    res.checks.push_back(std::string("augmentation surjective in every box degree: ") + (ok ? "ok" : "FAILED"));
    return res;
}

/** Box module of (F_i (x) N) or Hom(F_i, N) pieces: dims of N at shifted degrees. */
template <ExactField F>
struct GradedValue
{
    Index dim = 0;
    bool infinite = false;
};

namespace detail {

/**
 * Homology at degree `deg` of a complex of sums of shifted copies of N.  For
 * Tor the chain term i at degree a is (+)_s N_{a - src_s}; for Ext the
 * cochain term i is (+)_s N_{a + src_s}.
 */
template <ExactField F>
Index chain_dim(const BoxModule<F>& n, const std::vector<Degree>& gens, const Degree& a, int sign)
{
    Index d = 0;
    for (const auto& g : gens) d += n.dim_at(sign > 0 ? deg_add(a, g) : deg_sub(a, g));
    return d;
}

template <ExactField F>
Mat<F> tor_block_map(const BoxModule<F>& n, const GradedFreeMap<F>& d, const Degree& a)
{
    // (+)_s N_{a - src_s} -> (+)_t N_{a - dst_t}; block (t, s) = c(t, s) x^(src_s - dst_t)
    std::vector<Index> so, to;
    Index rows = 0, cols = 0;
    for (const auto& g : d.src) { so.push_back(cols); cols += n.dim_at(deg_sub(a, g)); }
    for (const auto& g : d.dst) { to.push_back(rows); rows += n.dim_at(deg_sub(a, g)); }
    Mat<F> out = zeros<F>(rows, cols);
    for (Index s = 0; s < static_cast<Index>(d.src.size()); ++s)
    {
        Degree from = deg_sub(a, d.src[s]);
        const Index sd = n.dim_at(from);
        if (sd == 0) continue;
        for (Index t = 0; t < static_cast<Index>(d.dst.size()); ++t)
        {
            if (d.c(t, s) == F(0)) continue;
            const Index td = n.dim_at(deg_sub(a, d.dst[t]));
            if (td == 0) continue;
            out.block(to[t], so[s], td, sd) = d.c(t, s) * n.monomial_map(from, deg_sub(d.src[s], d.dst[t]));
        }
    }
    return out;
}

template <ExactField F>
Mat<F> ext_block_map(const BoxModule<F>& n, const GradedFreeMap<F>& d, const Degree& a)
{
    // Hom(F_{i}, N)_a = (+)_t N_{a + dst_t} -> Hom(F_{i+1}, N)_a = (+)_s N_{a + src_s}
    std::vector<Index> so, to;
    Index rows = 0, cols = 0;
    for (const auto& g : d.dst) { to.push_back(cols); cols += n.dim_at(deg_add(a, g)); }
    for (const auto& g : d.src) { so.push_back(rows); rows += n.dim_at(deg_add(a, g)); }
    Mat<F> out = zeros<F>(rows, cols);
    for (Index t = 0; t < static_cast<Index>(d.dst.size()); ++t)
    {
        Degree from = deg_add(a, d.dst[t]);
        const Index td = n.dim_at(from);
        if (td == 0) continue;
        for (Index s = 0; s < static_cast<Index>(d.src.size()); ++s)
        {
            if (d.c(t, s) == F(0)) continue;
            const Index sd = n.dim_at(deg_add(a, d.src[s]));
            if (sd == 0) continue;
            out.block(so[s], to[t], sd, td) = d.c(t, s) * n.monomial_map(from, deg_sub(d.src[s], d.dst[t]));
        }
    }
    return out;
}

inline std::vector<Degree> box_points(const Degree& lo, const Degree& hi)
{
    std::vector<Degree> out;
    Degree cur = lo;
    while (true)
    {
        out.push_back(cur);
        std::size_t l = 0;
        while (l < cur.size())
        {
            if (cur[l] < hi[l]) { ++cur[l]; break; }
            cur[l] = lo[l];
            ++l;
        }
        if (l == cur.size()) break;
    }
    return out;
}

}   // namespace detail

/** dim_k Tor_i(M, N) from a resolution of M, with an infinite flag. */
template <ExactField F>
GradedValue<F> graded_tor(const GradedResolution<F>& res, Index i, const GradedModule<F>& n)
{
    GradedValue<F> out;
    if (i > res.length()) return out;
    const Degree nb = n.bound();
    BoxModule<F> nbox = to_box(n, nb);
    const Degree hi = deg_add(res.box, nb);
    const auto& gi = res.terms[i];
    for (const auto& a : detail::box_points(Degree(res.m, 0), hi))
    {
        const Index ci = detail::chain_dim(nbox, gi, a, -1);
        if (ci == 0) continue;
        Index r_out = 0, r_in = 0;
        if (i >= 1) r_out = rank<F>(detail::tor_block_map(nbox, res.differentials[i - 1], a));
        if (i + 1 <= res.length()) r_in = rank<F>(detail::tor_block_map(nbox, res.differentials[i], a));
        const Index h = ci - r_out - r_in;
        if (h == 0) continue;
        out.dim += h;
        for (int l = 0; l < res.m; ++l)
            if (a[l] == hi[l]) out.infinite = true;
    }
    return out;
}

/** dim_k Ext^i(M, N) from a resolution of M, with an infinite flag. */
template <ExactField F>
GradedValue<F> graded_ext(const GradedResolution<F>& res, Index i, const GradedModule<F>& n)
{
    GradedValue<F> out;
    if (i > res.length()) return out;
    const Degree nb = n.bound();
    BoxModule<F> nbox = to_box(n, nb);
    Degree lo(res.m);
    for (int l = 0; l < res.m; ++l) lo[l] = -res.box[l];
    const auto& gi = res.terms[i];
    for (const auto& a : detail::box_points(lo, nb))
    {
        const Index ci = detail::chain_dim(nbox, gi, a, +1);
        if (ci == 0) continue;
        Index r_out = 0, r_in = 0;
        if (i + 1 <= res.length()) r_out = rank<F>(detail::ext_block_map(nbox, res.differentials[i], a));
        if (i >= 1) r_in = rank<F>(detail::ext_block_map(nbox, res.differentials[i - 1], a));
        const Index h = ci - r_out - r_in;
        if (h == 0) continue;
        out.dim += h;
        for (int l = 0; l < res.m; ++l)
            if (a[l] == nb[l]) out.infinite = true;
    }
    return out;
}

/** The k-th syzygy module of the minimal resolution, presented by the next differential. */
template <ExactField F>
GradedModule<F> graded_syzygy(const GradedResolution<F>& res, Index k)
{
    if (k < 1) throw PreconditionError("syzygy index must be at least 1");
    if (k > res.length()) return GradedModule<F>::free(res.m, {});
    const auto& gens = res.terms[k];
    if (k + 1 > res.length()) return GradedModule<F>::free(res.m, gens);
    const auto& d = res.differentials[k];
    return GradedModule<F>(res.m, gens, d.src, d.c);
}

/**
 * The Koszul complex on the variables in `subset`: F_i has a generator e_T of
 * degree sum_{t in T} e_t for each i-subset T, and
 * d(e_T) = sum_j (-1)^j x_{t_j} e_{T minus t_j}.
 */
template <ExactField F>
GradedResolution<F> koszul_resolution(int m, std::vector<int> subset)
{
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (int s : subset)
        if (s < 0 || s >= m) throw DomainError("koszul: variable index out of range");
    const int r = static_cast<int>(subset.size());
    GradedResolution<F> res;
    res.m = m;
    res.target = GradedModule<F>::variable_quotient(m, subset);
    res.box = res.target.bound();
    std::vector<std::vector<unsigned>> by_size(r + 1);
    for (unsigned mask = 0; mask < (1u << r); ++mask) by_size[__builtin_popcount(mask)].push_back(mask);
    auto degree_of = [&](unsigned mask) {
        Degree d(m, 0);
        for (int j = 0; j < r; ++j)
            if (mask & (1u << j)) d[subset[j]] = 1;
        return d;
    };
    for (int i = 0; i <= r; ++i)
    {
        std::vector<Degree> degs;
        for (unsigned mask : by_size[i]) degs.push_back(degree_of(mask));
        res.terms.push_back(degs);
        if (i == 0) continue;
        GradedFreeMap<F> d;
        d.src = degs;
        d.dst = res.terms[i - 1];
        d.c = zeros<F>(static_cast<Index>(d.dst.size()), static_cast<Index>(d.src.size()));
        for (std::size_t s = 0; s < by_size[i].size(); ++s)
        {
            const unsigned mask = by_size[i][s];
            int pos = 0;
            for (int j = 0; j < r; ++j)
            {
                if (!(mask & (1u << j))) continue;
                const unsigned sub = mask & ~(1u << j);
                const auto& lower = by_size[i - 1];
                const Index t = static_cast<Index>(std::find(lower.begin(), lower.end(), sub) - lower.begin());
                d.c(t, static_cast<Index>(s)) = (pos % 2 == 0) ? F(1) : F(-1);
                ++pos;
            }
        }
        res.differentials.push_back(d);
    }
    return res;
}

/** Evaluate a graded free map at the point x = (1, ..., 1). */
template <ExactField F>
Mat<F> evaluate_at_ones(const GradedFreeMap<F>& d)
{
    return d.c;
}

/**
 * Exactness certificate for a graded resolution: d_{i} d_{i+1} = 0 as
 * polynomial matrices, degree-wise exactness of the augmented complex at
 * every point of the box (which implies exactness everywhere), and the rank
 * conditions of the complex specialized at x = (1, ..., 1).
 */
template <ExactField F>
struct GradedCertificate
{
    bool ok = true;
    std::vector<std::string> checks;
    void record(bool cond, const std::string& what)
    {
        checks.push_back(what + (cond ? ": ok" : ": FAILED"));
        ok = ok && cond;
    }
};

template <ExactField F>
GradedCertificate<F> certify(const GradedResolution<F>& res)
{
    GradedCertificate<F> cert;
    const Index len = res.length();
    for (Index i = 1; i < len; ++i)
    {
        // homogeneity makes every term of (t, s) carry the monomial x^(src_s - dst_t)
        const bool zero = is_zero<F>(Mat<F>(res.differentials[i - 1].c * res.differentials[i].c));
        cert.record(zero, "d" + std::to_string(i) + "*d" + std::to_string(i + 1) + " = 0");
    }
    // degree-wise exactness: homology of F (x) k-free pieces, i.e. Tor against the ring itself
    BoxModule<F> tbox = to_box(res.target, res.box);
    const int m = res.m;
    bool exact = true;
    for (const auto& a : detail::box_points(Degree(m, 0), res.box))
    {
        auto fdim = [&](Index i) {
            Index d = 0;
            for (const auto& g : res.terms[i]) d += deg_leq(g, a) ? 1 : 0;
            return d;
        };
        auto dmap = [&](Index i) {   // d_i at degree a on the free pieces
            const auto& d = res.differentials[i - 1];
            std::vector<Index> rows, cols;
            for (Index t = 0; t < static_cast<Index>(d.dst.size()); ++t)
                if (deg_leq(d.dst[t], a)) rows.push_back(t);
            for (Index s = 0; s < static_cast<Index>(d.src.size()); ++s)
                if (deg_leq(d.src[s], a)) cols.push_back(s);
            Mat<F> out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
            for (std::size_t x = 0; x < rows.size(); ++x)
                for (std::size_t y = 0; y < cols.size(); ++y) out(x, y) = d.c(rows[x], cols[y]);
            return out;
        };
        std::vector<Index> ranks(len + 2, 0);
        for (Index i = 1; i <= len; ++i) ranks[i] = rank<F>(dmap(i));
        const Index target_dim = tbox.dim_at(a);
        const Index aug_rank = fdim(0) - ranks[1];
        if (aug_rank != target_dim) exact = false;
        for (Index i = 1; i <= len; ++i)
            if (fdim(i) - ranks[i] != ranks[i + 1]) exact = false;
    }
    cert.record(exact, "degree-wise exactness on the box");
    // at x = (1, ..., 1) the module is locally free, so F_len -> ... -> F_1 -> F_0 stays exact in positive degrees
    if (len >= 1)
    {
        Index prev = 0;
        bool rk = true;
        for (Index i = len; i >= 1; --i)
        {
            const Index r = rank<F>(evaluate_at_ones(res.differentials[i - 1]));
            if (r + prev != static_cast<Index>(res.terms[i].size())) rk = false;
            prev = r;
        }
        cert.record(rk, "ranks at x = (1, ..., 1)");
    }
    return cert;
}

}   // namespace findim

#endif
