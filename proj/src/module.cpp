#include "internal.hpp"

namespace findim {

using namespace internal;

namespace {

template <class T>
const T& as(const Module& m)
{
    auto p = std::get_if<T>(&m.data);
    if (!p) throw DomainError("module representation does not match ring " + m.ring->label);
    return *p;
}

void require_same(const RingPtr& a, const RingPtr& b, const std::string& what)
{
    if (!same_ring(*a, *b)) throw DomainError(what + ": modules over different rings (" + a->label + ", " + b->label + ")");
}

template <ExactField F>
Rep<F> rep_of(const Module& m)
{
    return as<Rep<F>>(m);
}

IntModule int_module(const RingPtr& r, Mat<Integer> rel)
{
    if (r->kind == RingKind::ModIntegers)
    {
        const Index g = rel.rows();
        rel = hcat<Integer>(rel, Mat<Integer>(identity<Integer>(g) * r->param));
    }
    return IntModule(IntegerDomain(), rel);
}

}   // namespace

std::string Module::describe() const
{
    return std::visit(
        [&](const auto& d) -> std::string {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, IntModule> || std::is_same_v<D, LocModule>
                          || std::is_same_v<D, PolyModule<Rational>> || std::is_same_v<D, PolyModule<F2>>
                          || std::is_same_v<D, PolyModule<F3>>)
                return format_structure(d.structure(), d.domain());
            else if constexpr (std::is_same_v<D, GradedModule<Rational>> || std::is_same_v<D, GradedModule<F2>>
                               || std::is_same_v<D, GradedModule<F3>>)
            {
                auto fmt = [](const std::vector<Degree>& ds) {
                    std::string out;
                    for (const auto& x : ds) out += (out.empty() ? "" : " ") + monomial_string(x);
                    return "[" + out + "]";
                };
                return "graded module, generators " + fmt(d.gen_degrees()) + ", relations " + fmt(d.rel_degrees());
            }
            else
            {
                std::string out = "dim " + std::to_string(d.dim());
                if (d.dim() == 0) return out;
                auto join = [](const std::vector<Index>& v) {
                    std::string s;
                    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
                    return s;
                };
                out += ", radical layers " + join(d.radical_layers());
                out += ", top " + join(d.top_multiplicities());
                return out;
            }
        },
        data);
}

bool Module::is_zero() const
{
    return std::visit(
        [&](const auto& d) -> bool {
            if constexpr (requires { d.structure(); }) return d.is_zero();
            else if constexpr (requires { d.gen_degrees(); })
                return detail::minimal_generators(to_box(d, d.bound())).empty();
            else return d.dim() == 0;
        },
        data);
}

Module module_free(const RingPtr& r, Index n)
{
    switch (r->kind)
    {
        case RingKind::Integers:
        case RingKind::ModIntegers: return {r, int_module(r, Mat<Integer>(n, 0))};
        case RingKind::LocalIntegers: return {r, LocModule(LocalIntegerDomain(r->param), Mat<Rational>(n, 0))};
        case RingKind::PolyPID:
            return with_field(r->field, [&](auto x) -> Module {
                using F = decltype(x);
                return {r, PolyModule<F>(PolynomialDomain<F>(), Mat<Polynomial<F>>(n, 0))};
            });
        case RingKind::Koszul:
            return with_field(r->field, [&](auto x) -> Module {
                using F = decltype(x);
                return {r, GradedModule<F>::free(r->nvars, std::vector<Degree>(n, Degree(r->nvars, 0)))};
            });
        default: break;
    }
    return visit_fd(*r, [&](const auto& d) -> Module {
        using F = typename std::decay_t<decltype(d)>::Field;
        Rep<F> acc = Rep<F>::zero(d.alg);
        for (Index i = 0; i < n; ++i) acc = Rep<F>::direct_sum(acc, Rep<F>::regular(d.alg));
        return {r, acc};
    });
}

Module module_zero(const RingPtr& r) { return module_free(r, 0); }
Module module_regular(const RingPtr& r) { return module_free(r, 1); }

Module module_cyclic(const RingPtr& r, const std::vector<std::string>& elems)
{
    const Index k = static_cast<Index>(elems.size());
    switch (r->kind)
    {
        case RingKind::Integers:
        case RingKind::ModIntegers:
        {
            Mat<Integer> rel(1, k);
            for (Index j = 0; j < k; ++j) rel(0, j) = parse_integer(elems[j]);
            return {r, int_module(r, rel)};
        }
        case RingKind::LocalIntegers:
        {
            LocalIntegerDomain dom(r->param);
            Mat<Rational> rel(1, k);
            for (Index j = 0; j < k; ++j) rel(0, j) = dom.element(parse_rational(elems[j]));
            return {r, LocModule(dom, rel)};
        }
        case RingKind::PolyPID:
            return with_field(r->field, [&](auto x) -> Module {
                using F = decltype(x);
                Mat<Polynomial<F>> rel(1, k);
                for (Index j = 0; j < k; ++j) rel(0, j) = parse_poly<F>(elems[j]);
                return {r, PolyModule<F>(PolynomialDomain<F>(), rel)};
            });
        case RingKind::Koszul: return module_monomial_quotient(r, elems);
        default: break;
    }
    return visit_fd(*r, [&](const auto& d) -> Module {
        using F = typename std::decay_t<decltype(d)>::Field;
        Rep<F> reg = Rep<F>::regular(d.alg);
        Mat<F> gens(d.alg->dim(), 0);
        for (const auto& e : elems) gens = hcat<F>(gens, Mat<F>(parse_fd_element<F>(*d.alg, e)));
        return {r, reg.quotient(reg.closure(gens))};
    });
}

Module module_presented(const RingPtr& r, const std::vector<std::vector<std::string>>& rows)
{
    const Index g = static_cast<Index>(rows.size());
    const Index c = g ? static_cast<Index>(rows[0].size()) : 0;
    for (const auto& row : rows)
        if (static_cast<Index>(row.size()) != c) throw DomainError("matrix rows have different lengths");
    switch (r->kind)
    {
        case RingKind::Integers:
        case RingKind::ModIntegers:
        {
            Mat<Integer> rel(g, c);
            for (Index i = 0; i < g; ++i)
                for (Index j = 0; j < c; ++j) rel(i, j) = parse_integer(rows[i][j]);
            return {r, int_module(r, rel)};
        }
        case RingKind::LocalIntegers:
        {
            LocalIntegerDomain dom(r->param);
            Mat<Rational> rel(g, c);
            for (Index i = 0; i < g; ++i)
                for (Index j = 0; j < c; ++j) rel(i, j) = dom.element(parse_rational(rows[i][j]));
            return {r, LocModule(dom, rel)};
        }
        case RingKind::PolyPID:
            return with_field(r->field, [&](auto x) -> Module {
                using F = decltype(x);
                Mat<Polynomial<F>> rel(g, c);
                for (Index i = 0; i < g; ++i)
                    for (Index j = 0; j < c; ++j) rel(i, j) = parse_poly<F>(rows[i][j]);
                return {r, PolyModule<F>(PolynomialDomain<F>(), rel)};
            });
        default: break;
    }
    throw UnsupportedError("presentation matrices are supported over Z, Z_(p), Z/n and k[x]");
}

Module module_simple(const RingPtr& r, Index v)
{
    return visit_fd(*r, [&](const auto& d) -> Module {
        using F = typename std::decay_t<decltype(d)>::Field;
        if (v < 0 || v >= d.alg->vertex_count())
            throw DomainError("vertex " + std::to_string(v + 1) + " out of range (" + r->label + " has "
                              + std::to_string(d.alg->vertex_count()) + ")");
        return {r, Rep<F>::simple(d.alg, v)};
    });
}

Module module_projective(const RingPtr& r, Index v)
{
    return visit_fd(*r, [&](const auto& d) -> Module {
        using F = typename std::decay_t<decltype(d)>::Field;
        if (v < 0 || v >= d.alg->vertex_count())
            throw DomainError("vertex " + std::to_string(v + 1) + " out of range (" + r->label + " has "
                              + std::to_string(d.alg->vertex_count()) + ")");
        return {r, Rep<F>::projective(d.alg, v)};
    });
}

Module module_residue(const RingPtr& r)
{
    switch (r->kind)
    {
        case RingKind::Integers: throw PreconditionError("Z is not local: no designated residue field");
        case RingKind::LocalIntegers: return module_cyclic(r, {r->param.str()});
        case RingKind::ModIntegers:
        {
            auto fac = factorize(r->param);
            if (fac.size() != 1) throw PreconditionError(r->label + " is not local: no designated residue field");
            return module_cyclic(r, {fac[0].first.str()});
        }
        case RingKind::PolyPID: return module_cyclic(r, {"x"});
        case RingKind::Koszul:
        {
            std::vector<int> all(r->nvars);
            for (int i = 0; i < r->nvars; ++i) all[i] = i;
            return module_variable_quotient(r, all);
        }
        default: break;
    }
    return visit_fd(*r, [&](const auto& d) -> Module {
        using F = typename std::decay_t<decltype(d)>::Field;
        if (!d.alg->is_local()) throw PreconditionError(r->label + " is not local: no designated residue field");
        return {r, Rep<F>::simple(d.alg, 0)};
    });
}

Module module_variable_quotient(const RingPtr& r, const std::vector<int>& vars)
{
    if (r->kind != RingKind::Koszul) throw DomainError("variable quotients need a polynomial ring k[x1..xm]");
    return with_field(r->field, [&](auto x) -> Module {
        using F = decltype(x);
        for (int v : vars)
            if (v < 0 || v >= r->nvars) throw DomainError("variable x" + std::to_string(v + 1) + " out of range");
        return {r, GradedModule<F>::variable_quotient(r->nvars, vars)};
    });
}

Module module_monomial_quotient(const RingPtr& r, const std::vector<std::string>& monomials)
{
    if (r->kind != RingKind::Koszul) throw DomainError("monomial quotients need a polynomial ring k[x1..xm]");
    std::vector<Degree> ds;
    for (const auto& m : monomials) ds.push_back(parse_monomial(r->nvars, m));
    return with_field(r->field, [&](auto x) -> Module {
        using F = decltype(x);
        return {r, GradedModule<F>::monomial_quotient(r->nvars, ds)};
    });
}

Module module_monomial_ideal(const RingPtr& r, const std::vector<std::string>& monomials)
{
    if (r->kind != RingKind::Koszul) throw DomainError("monomial ideals need a polynomial ring k[x1..xm]");
    if (monomials.empty()) return module_zero(r);
    std::vector<Degree> ds;
    for (const auto& m : monomials) ds.push_back(parse_monomial(r->nvars, m));
    return with_field(r->field, [&](auto x) -> Module {
        using F = decltype(x);
        return {r, GradedModule<F>::monomial_ideal(r->nvars, ds)};
    });
}

Module module_rep(const RingPtr& r, Index dim, const std::map<std::string, std::vector<std::vector<std::string>>>& act)
{
    return visit_fd(*r, [&](const auto& d) -> Module {
        using F = typename std::decay_t<decltype(d)>::Field;
        const auto& alg = *d.alg;
        for (const auto& [k, v] : act)
            if (std::find(alg.labels().begin(), alg.labels().end(), k) == alg.labels().end())
                throw DomainError("unknown basis label '" + k + "' in " + r->label);
        std::vector<Mat<F>> mats;
        for (Index i = 0; i < alg.dim(); ++i)
        {
            auto it = act.find(alg.labels()[i]);
            if (it != act.end())
            {
                Mat<F> m = parse_matrix<F>(it->second, dim);
                if (m.rows() != dim || m.cols() != dim) throw DomainError("action matrix has the wrong shape");
                mats.push_back(m);
            }
            else if (alg.basis(i) == alg.unit())
                mats.push_back(identity<F>(dim));
            else
                throw DomainError("action for basis label '" + alg.labels()[i] + "' is missing");
        }
        return {r, Rep<F>::create(d.alg, dim, mats)};
    });
}

namespace {

template <ExactField F>
const TriangularData<F>& tri_of(const Ring& t)
{
    if (t.kind != RingKind::Triangular) throw DomainError("ring " + t.label + " is not triangular");
    return *std::get<FdData<F>>(*t.fd).tri;
}

}   // namespace

Module module_triple(const RingPtr& t, const Module& a, const Module& b,
                     const std::optional<std::vector<std::vector<std::string>>>& phi)
{
    if (t->kind != RingKind::Triangular) throw DomainError("ring " + t->label + " is not triangular");
    require_same(a.ring, t->corner_r, "triple (A over R)");
    require_same(b.ring, t->corner_s, "triple (B over S)");
    return visit_fd(*t, [&](const auto& d) -> Module {
        using F = typename std::decay_t<decltype(d)>::Field;
        const auto& td = *d.tri;
        Rep<F> ra = rep_of<F>(a), rb = rep_of<F>(b);
        ra = Rep<F>(td.R, ra.dim(), ra.actions());
        rb = Rep<F>(td.S, rb.dim(), rb.actions());
        Triple<F> tr{ra, rb, {}};
        const Index da = ra.dim(), db = rb.dim();
        Mat<F> full = phi ? parse_matrix<F>(*phi, td.dM * db) : zeros<F>(da, td.dM * db);
        if (full.rows() != da || full.cols() != td.dM * db)
            throw DomainError("phi must be " + std::to_string(da) + " x " + std::to_string(td.dM * db));
        for (Index j = 0; j < td.dM; ++j) tr.phi.push_back(full.middleCols(j * db, db));
        return {t, from_triple(td, tr, true)};
    });
}

Module direct_sum(const std::vector<Module>& parts)
{
    if (parts.empty()) throw PreconditionError("direct sum of an empty list");
    Module acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
    {
        require_same(acc.ring, parts[i].ring, "direct sum");
        acc.data = std::visit(
            [&](const auto& x) -> ModuleData {
                using D = std::decay_t<decltype(x)>;
                const D& y = as<D>(parts[i]);
                return D::direct_sum(x, y);
            },
            acc.data);
    }
    return acc;
}

Module restrict_scalars(const Module& m, const RingPtr& target)
{
    const Ring& src = *m.ring;
    if (src.kind == RingKind::ModIntegers && target->kind == RingKind::Integers)
        return {target, IntModule(as<IntModule>(m))};
    if (same_ring(src, *target)) return {target, m.data};
    if (src.kind == RingKind::FdAlgebra && target->kind == RingKind::PolyPID && src.field == target->field)
    {
        return visit_fd(src, [&](const auto& d) -> Module {
            using F = typename std::decay_t<decltype(d)>::Field;
            if (!d.modulus) throw UnsupportedError("restriction to k[x] needs a ring of the form k[x]/(f)");
            const Rep<F>& x = as<Rep<F>>(m);
            const Index n = x.dim();
            const Index deg = d.modulus->degree();
            Vec<F> xc = Vec<F>::Constant(deg, F(0));
            Polynomial<F> xr = Polynomial<F>::x() % *d.modulus;
            for (Index c = 0; c < deg; ++c) xc(c) = xr.coeff(static_cast<int>(c));
            Mat<F> X = x.act_of(xc);
            // coker(x I - X) over k[x]
            Mat<Polynomial<F>> rel(n, n);
            for (Index i = 0; i < n; ++i)
                for (Index j = 0; j < n; ++j)
                    rel(i, j) = Polynomial<F>(F(-X(i, j))) + (i == j ? Polynomial<F>::x() : Polynomial<F>(0));
            return {target, PolyModule<F>(PolynomialDomain<F>(), rel)};
        });
    }
    throw UnsupportedError("restriction of scalars supports (Z, Z/n) and (k[x], k[x]/(f)); got " + src.label + " -> "
                           + target->label);
}

Module localize_at_prime(const Module& m, const Integer& p)
{
    if (m.ring->kind != RingKind::Integers) throw UnsupportedError("localization is implemented for Z-modules");
    return {make_local_integers(p), localize_at_prime(as<IntModule>(m), p)};
}

Module corner_e(const Module& n)
{
    return visit_fd(*n.ring, [&](const auto& d) -> Module {
        using F = typename std::decay_t<decltype(d)>::Field;
        return {n.ring->corner_r, corner_e(tri_of<F>(*n.ring), rep_of<F>(n))};
    });
}

Module corner_f(const Module& n)
{
    return visit_fd(*n.ring, [&](const auto& d) -> Module {
        using F = typename std::decay_t<decltype(d)>::Field;
        return {n.ring->corner_s, corner_f(tri_of<F>(*n.ring), rep_of<F>(n))};
    });
}

Module induce_left(const RingPtr& t, const Module& x)
{
    if (t->kind != RingKind::Triangular) throw DomainError("ring " + t->label + " is not triangular");
    require_same(x.ring, t->corner_r, "induceLeft");
    return visit_fd(*t, [&](const auto& d) -> Module {
        using F = typename std::decay_t<decltype(d)>::Field;
        const auto& td = *d.tri;
        Rep<F> rx = rep_of<F>(x);
        return {t, induce_left(td, Rep<F>(td.R, rx.dim(), rx.actions()))};
    });
}

Module induce_right(const RingPtr& t, const Module& y)
{
    if (t->kind != RingKind::Triangular) throw DomainError("ring " + t->label + " is not triangular");
    require_same(y.ring, t->corner_s, "induceRight");
    return visit_fd(*t, [&](const auto& d) -> Module {
        using F = typename std::decay_t<decltype(d)>::Field;
        const auto& td = *d.tri;
        Rep<F> ry = rep_of<F>(y);
        return {t, induce_right(td, Rep<F>(td.S, ry.dim(), ry.actions()))};
    });
}

Index module_dimension(const Module& m)
{
    return std::visit(
        [](const auto& d) -> Index {
            if constexpr (requires { d.dim(); }) return d.dim();
            else return -1;
        },
        m.data);
}

bool modules_isomorphic(const Module& a, const Module& b)
{
    require_same(a.ring, b.ring, "isomorphism test");
    return std::visit(
        [&](const auto& x) -> bool {
            using D = std::decay_t<decltype(x)>;
            const D& y = as<D>(b);
            if constexpr (requires { x.structure(); }) return x.structure() == y.structure();
            else if constexpr (requires { x.dim(); })
            {
                auto r = isomorphism(x, y);
                if (r.verdict == IsoVerdict::Unknown) throw IndeterminateError("isomorphism search inconclusive");
                return r.verdict == IsoVerdict::Isomorphic;
            }
            else
                throw UnsupportedError("isomorphism testing of graded modules is not implemented");
        },
        a.data);
}

}   // namespace findim
