#include "findim/random.hpp"

#include "internal.hpp"

namespace findim::gen {

using internal::with_field;

long long uniform(Rng& g, long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(g);
}

namespace {

std::string random_poly(Rng& g, int max_deg, bool monic)
{
    const int d = static_cast<int>(uniform(g, 0, max_deg));
    std::string s;
    for (int i = d; i >= 0; --i)
    {
        long long c = i == d && monic ? 1 : uniform(g, -2, 2);
        if (c == 0) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        std::string coeff = std::to_string(c < 0 ? -c : c);
        std::string term = mono.empty() ? coeff : (c == 1 || c == -1 ? mono : coeff + "*" + mono);
        s += s.empty() ? (c < 0 ? "-" + term : term) : (c < 0 ? " - " : " + ") + term;
    }
    return s.empty() ? "1" : s;
}

std::string random_monomial(Rng& g, int m)
{
    std::string s;
    for (int v = 1; v <= m; ++v)
    {
        const auto e = uniform(g, 0, 2);
        if (e == 0) continue;
        s += (s.empty() ? "" : "*") + ("x" + std::to_string(v)) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    return s.empty() ? "x1" : s;
}

template <ExactField F>
F small(Rng& g)
{
    return F(static_cast<long long>(uniform(g, -1, 1)));
}

template <ExactField F>
Module random_fd(const RingPtr& r, const FdData<F>& d, Rng& g)
{
    const auto& alg = d.alg;
    const Index nv = alg->vertex_count();
    const auto kind = uniform(g, 0, 5);
    if (kind == 0) return {r, Rep<F>::simple(alg, uniform(g, 0, nv - 1))};
    if (kind == 1) return {r, Rep<F>::projective(alg, uniform(g, 0, nv - 1))};
    if (kind == 2)
        return {r, Rep<F>::direct_sum(Rep<F>::simple(alg, uniform(g, 0, nv - 1)),
                                      Rep<F>::projective(alg, uniform(g, 0, nv - 1)))};
    // quotient of a projective by the submodule generated by random vectors
    std::vector<Index> vs;
    const auto copies = uniform(g, 1, 2);
    for (long long i = 0; i < copies; ++i) vs.push_back(uniform(g, 0, nv - 1));
    Rep<F> p = Rep<F>::projective_sum(alg, vs);
    const auto k = uniform(g, 1, 2);
    Mat<F> gens(p.dim(), k);
    for (Index j = 0; j < k; ++j)
        for (Index i = 0; i < p.dim(); ++i) gens(i, j) = small<F>(g);
    return {r, p.quotient(p.closure(gens))};
}

std::optional<MapData> diag(const std::optional<MapData>& x, const std::optional<MapData>& y)
{
    if (!x || !y) return std::nullopt;
    return std::visit(
        [&](const auto& a) -> MapData {
            using M = std::decay_t<decltype(a)>;
            return MapData(block_diag(a, std::get<M>(*y)));
        },
        *x);
}

// 0 -> R/(a) -> R/(ab) -> R/(b) -> 0, iota = b, pi = 1
Ses multiplication_ses(const RingPtr& r, Rng& g)
{
    if (r->kind == RingKind::PolyPID)
    {
        const std::string a = uniform(g, 0, 4) == 0 ? "0" : random_poly(g, 2, true);
        const std::string b = random_poly(g, 2, true);
        return with_field(r->field, [&](auto f) -> Ses {
            using F = decltype(f);
            using P = Polynomial<F>;
            const P pa = internal::parse_poly<F>(a), pb = internal::parse_poly<F>(b);
            std::ostringstream ab;
            ab << pa * pb;
            Mat<P> iota(1, 1), pi(1, 1);
            iota(0, 0) = pb;
            pi(0, 0) = P(F(1));
            return Ses{module_cyclic(r, {a}), module_cyclic(r, {ab.str()}), module_cyclic(r, {b}), MapData(iota),
                       MapData(pi), "multiplication"};
        });
    }
    const long long a = uniform(g, 0, 4) == 0 ? 0 : uniform(g, 2, 6);
    const long long b = uniform(g, 2, 6);
    Mat<Integer> iota(1, 1), pi(1, 1);
    iota(0, 0) = b;
    pi(0, 0) = 1;
    return Ses{module_cyclic(r, {std::to_string(a)}), module_cyclic(r, {std::to_string(a * b)}),
               module_cyclic(r, {std::to_string(b)}), MapData(iota), MapData(pi), "multiplication"};
}

Ses atomic_ses(const RingPtr& r, Rng& g)
{
    const bool pid = r->kind == RingKind::Integers || r->kind == RingKind::PolyPID;
    const auto kind = uniform(g, 0, 3);
    if (kind == 0) return ses_split(random_module(r, g), random_module(r, g));
    if (kind == 1) return ses_syzygy(random_module(r, g));
    if (pid) return multiplication_ses(r, g);
    if (r->kind == RingKind::Triangular && kind == 2) return ses_triple(random_module(r, g));
    if (r->is_fd()) return ses_radical(random_module(r, g));
    return ses_syzygy(random_module(r, g));
}

}   // namespace

Module random_module(const RingPtr& r, Rng& g)
{
    switch (r->kind)
    {
        case RingKind::Integers:
        {
            if (uniform(g, 0, 2) == 0) return module_cyclic(r, {std::to_string(uniform(g, 0, 12))});
            const auto gens = uniform(g, 1, 2), rels = uniform(g, 1, 2);
            std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(gens));
            for (auto& row : rows)
                for (long long j = 0; j < rels; ++j) row.push_back(std::to_string(uniform(g, -6, 6)));
            return module_presented(r, rows);
        }
        case RingKind::LocalIntegers:
        case RingKind::ModIntegers: return module_cyclic(r, {std::to_string(uniform(g, 0, 12))});
        case RingKind::PolyPID:
            if (uniform(g, 0, 5) == 0) return module_free(r, uniform(g, 1, 2));
            return module_cyclic(r, {random_poly(g, 3, true)});
        case RingKind::Koszul:
        {
            const auto kind = uniform(g, 0, 4);
            if (kind == 0) return module_residue(r);
            if (kind == 1) return module_regular(r);
            std::vector<std::string> mons;
            for (long long i = uniform(g, 1, 3); i > 0; --i) mons.push_back(random_monomial(g, r->nvars));
            return module_monomial_quotient(r, mons);
        }
        case RingKind::Field: return module_free(r, uniform(g, 0, 3));
        default: break;
    }
    return visit_fd(*r, [&](const auto& d) { return random_fd(r, d, g); });
}

Module random_fpr_module(const RingPtr& r, Rng& g, Index cap)
{
    for (int tries = 0; tries < 50; ++tries)
    {
        Module m = random_module(r, g);
        if (fpr_membership(m, cap).verdict == Membership::Yes) return m;
    }
    return module_regular(r);
}

Ses sum_ses(const Ses& x, const Ses& y)
{
    return Ses{direct_sum({x.a, y.a}), direct_sum({x.b, y.b}), direct_sum({x.c, y.c}), diag(x.iota, y.iota),
               diag(x.pi, y.pi), "sum(" + x.origin + ", " + y.origin + ")"};
}

Ses random_ses(const RingPtr& r, Rng& g)
{
    Ses s = atomic_ses(r, g);
    if (uniform(g, 0, 3) == 0) s = sum_ses(s, atomic_ses(r, g));
    return s;
}

std::vector<AlgebraTable> corner_catalogue(FieldKind k)
{
    auto table = [&](std::string name, std::vector<std::string> labels,
                     const std::vector<std::tuple<int, int, int>>& products, std::vector<int> unit) {
        AlgebraTable t;
        t.field = k;
        t.name = std::move(name);
        const std::size_t d = labels.size();
        t.labels = std::move(labels);
        t.c.assign(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
        for (const auto& [i, j, l] : products) t.c[i][j][l] = 1;
        for (int u : unit) t.unit.push_back(u);
        return t;
    };
    // products (i, j, l): b_i b_j = b_l
    auto truncated = [&](std::string name, int n) {
        std::vector<std::string> labels{"1"};
        for (int i = 1; i < n; ++i) labels.push_back(i == 1 ? "x" : "x" + std::to_string(i));
        std::vector<std::tuple<int, int, int>> p;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i + j < n) p.emplace_back(i, j, i + j);
        std::vector<int> u(static_cast<std::size_t>(n), 0);
        u[0] = 1;
        return table(std::move(name), labels, p, u);
    };
    std::vector<AlgebraTable> out;
    out.push_back(table("k", {"1"}, {{0, 0, 0}}, {1}));
    out.push_back(truncated("D2", 2));
    out.push_back(table("kxk", {"a", "b"}, {{0, 0, 0}, {1, 1, 1}}, {1, 1}));
    out.push_back(truncated("D3", 3));
    out.push_back(table("UT2k", {"e1", "u", "e2"}, {{0, 0, 0}, {0, 1, 1}, {1, 2, 1}, {2, 2, 2}}, {1, 0, 1}));
    out.push_back(table("E2", {"1", "x", "y"}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {0, 2, 2}, {2, 0, 2}}, {1, 0, 0}));
    out.push_back(truncated("D4", 4));
    out.push_back(table("Ext", {"1", "x", "y", "xy"},
                        {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {0, 2, 2}, {2, 0, 2}, {0, 3, 3}, {3, 0, 3}, {1, 2, 3}, {2, 1, 3}},
                        {1, 0, 0, 0}));
    return out;
}

RingPtr random_triangular(FieldKind k, Rng& g)
{
    const auto cat = corner_catalogue(k);
    const auto pick = [&](std::size_t hi) { return cat[static_cast<std::size_t>(uniform(g, 0, static_cast<long long>(hi)))]; };
    AlgebraTable rt = pick(cat.size() - 1), st = pick(cat.size() - 1);
    // keep M small: when neither corner is a field both have dimension <= 2
    if (rt.labels.size() > 1 && st.labels.size() > 1)
    {
        rt = pick(2);
        st = pick(2);
    }
    const std::size_t dr = rt.labels.size(), ds = st.labels.size();
    RingPtr r = make_fd_algebra(rt), s = make_fd_algebra(st);
    BimoduleSpec spec;
    if (dr == 1 || ds == 1)
        return make_triangular_ring(r, s, spec, "T(" + rt.name + "," + st.name + ")");
    // M = R (x)_k S: left by L_i (x) I, right by I (x) R_k
    spec.regular = false;
    spec.dim = static_cast<Index>(dr * ds);
    auto kron = [&](const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b) {
        std::vector<std::vector<std::string>> m(dr * ds, std::vector<std::string>(dr * ds));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                for (std::size_t p = 0; p < b.size(); ++p)
                    for (std::size_t q = 0; q < b.size(); ++q)
                        m[i * b.size() + p][j * b.size() + q] = (a[i][j] * b[p][q]).str();
        return m;
    };
    auto eye = [](std::size_t n) {
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
        return m;
    };
    for (std::size_t i = 0; i < dr; ++i)
    {
        // left multiplication by b_i on R: column j holds b_i b_j
        std::vector<std::vector<Rational>> l(dr, std::vector<Rational>(dr, Rational(0)));
        for (std::size_t j = 0; j < dr; ++j)
            for (std::size_t t = 0; t < dr; ++t) l[t][j] = rt.c[i][j][t];
        spec.left[rt.labels[i]] = kron(l, eye(ds));
    }
    for (std::size_t k2 = 0; k2 < ds; ++k2)
    {
        // right multiplication by b_k on S: column j holds b_j b_k
        std::vector<std::vector<Rational>> rm(ds, std::vector<Rational>(ds, Rational(0)));
        for (std::size_t j = 0; j < ds; ++j)
            for (std::size_t t = 0; t < ds; ++t) rm[t][j] = st.c[j][k2][t];
        spec.right[st.labels[k2]] = kron(eye(dr), rm);
    }
    return make_triangular_ring(r, s, spec, "T(" + rt.name + "," + st.name + ")");
}

}   // namespace findim::gen
