#include "internal.hpp"

namespace findim {

using namespace internal;

std::string field_name(FieldKind k)
{
    switch (k)
    {
        case FieldKind::Q: return "Q";
        case FieldKind::F2: return "F2";
        case FieldKind::F3: return "F3";
    }
    return "?";
}

FieldKind field_from_name(const std::string& s)
{
    if (s == "Q") return FieldKind::Q;
    if (s == "F2") return FieldKind::F2;
    if (s == "F3") return FieldKind::F3;
    throw UnsupportedError("unknown field '" + s + "' (supported: Q, F2, F3)");
}

std::string to_string(RingKind k)
{
    switch (k)
    {
        case RingKind::Field: return "field";
        case RingKind::Integers: return "integers";
        case RingKind::LocalIntegers: return "localint";
        case RingKind::ModIntegers: return "modint";
        case RingKind::PolyPID: return "polypid";
        case RingKind::Koszul: return "koszul";
        case RingKind::FdAlgebra: return "fdalgebra";
        case RingKind::Triangular: return "triangular";
    }
    return "?";
}

bool Ring::is_commutative() const
{
    if (!fd) return true;
    return visit_fd(*this, [](const auto& d) { return d.alg->is_commutative(); });
}

Index Ring::dimension() const
{
    if (!fd) return -1;
    return visit_fd(*this, [](const auto& d) { return d.alg->dim(); });
}

std::string Ring::describe() const
{
    std::string out = label + " [" + to_string(kind);
    if (fd) out += ", dim " + std::to_string(dimension()) + " over " + field_name(field);
    if (kind == RingKind::Koszul) out += ", m = " + std::to_string(nvars);
    return out + "]";
}

bool same_ring(const Ring& a, const Ring& b)
{
    if (&a == &b) return true;
    if (a.kind != b.kind || a.field != b.field) return false;
    switch (a.kind)
    {
        case RingKind::Integers: return true;
        case RingKind::LocalIntegers:
        case RingKind::ModIntegers: return a.param == b.param;
        case RingKind::PolyPID: return true;
        case RingKind::Koszul: return a.nvars == b.nvars;
        default: break;
    }
    if (!a.fd || !b.fd || a.fd->index() != b.fd->index()) return false;
    return std::visit(
        [&](const auto& da) {
            using D = std::decay_t<decltype(da)>;
            const auto& db = std::get<D>(*b.fd);
            return same_algebra(*da.alg, *db.alg);
        },
        *a.fd);
}

namespace {

std::shared_ptr<Ring> base_ring(RingKind kind, std::string label)
{
    auto r = std::make_shared<Ring>();
    r->kind = kind;
    r->label = std::move(label);
    return r;
}

template <ExactField F>
FieldKind kind_of()
{
    constexpr int p = FieldTraits<F>::characteristic;
    if constexpr (p == 0) return FieldKind::Q;
    else if constexpr (p == 2) return FieldKind::F2;
    else return FieldKind::F3;
}

}   // namespace

RingPtr make_field(FieldKind k)
{
    auto r = base_ring(RingKind::Field, field_name(k));
    r->field = k;
    with_field(k, [&](auto x) {
        using F = decltype(x);
        r->fd = FdData<F>{Algebra<F>::field(field_name(k)), nullptr, std::nullopt};
    });
    return r;
}

RingPtr make_integers() { return base_ring(RingKind::Integers, "Z"); }

RingPtr make_local_integers(const Integer& p)
{
    if (!is_prime(p)) throw DomainError("localization requires a prime, got " + p.str());
    auto r = base_ring(RingKind::LocalIntegers, "Z_(" + p.str() + ")");
    r->param = p;
    return r;
}

RingPtr make_mod_integers(const Integer& n)
{
    if (n < 2) throw DomainError("Z/n needs n >= 2, got " + n.str());
    auto r = base_ring(RingKind::ModIntegers, "Z/" + n.str());
    r->param = n;
    return r;
}

RingPtr make_polypid(FieldKind k)
{
    auto r = base_ring(RingKind::PolyPID, field_name(k) + "[x]");
    r->field = k;
    return r;
}

RingPtr make_koszul(FieldKind k, int m)
{
    if (m < 1) throw DomainError("polynomial ring needs at least one variable");
    std::string vars;
    for (int i = 1; i <= m; ++i) vars += (i > 1 ? "," : "") + std::string("x") + std::to_string(i);
    auto r = base_ring(RingKind::Koszul, field_name(k) + "[" + vars + "]");
    r->field = k;
    r->nvars = m;
    return r;
}

RingPtr make_fd_algebra(const AlgebraTable& t)
{
    const Index d = static_cast<Index>(t.labels.size());
    if (d < 1) throw AlgebraError("algebra dimension must be at least 1");
    if (static_cast<Index>(t.c.size()) != d || static_cast<Index>(t.unit.size()) != d)
        throw AlgebraError("structure constants must be indexed over d^3");
    auto r = base_ring(RingKind::FdAlgebra, t.name.empty() ? "A" : t.name);
    r->field = t.field;
    with_field(t.field, [&](auto x) {
        using F = decltype(x);
        std::vector<std::vector<Vec<F>>> prod(d, std::vector<Vec<F>>(d));
        for (Index i = 0; i < d; ++i)
        {
            if (static_cast<Index>(t.c[i].size()) != d) throw AlgebraError("structure constants must be indexed over d^3");
            for (Index j = 0; j < d; ++j)
            {
                if (static_cast<Index>(t.c[i][j].size()) != d)
                    throw AlgebraError("structure constants must be indexed over d^3");
                prod[i][j] = Vec<F>(d);
                for (Index k = 0; k < d; ++k) prod[i][j](k) = field_from_rational<F>(t.c[i][j][k]);
            }
        }
        Vec<F> u(d);
        for (Index k = 0; k < d; ++k) u(k) = field_from_rational<F>(t.unit[k]);
        r->fd = FdData<F>{Algebra<F>::from_products(t.labels, prod, u, r->label), nullptr, std::nullopt};
    });
    return r;
}

RingPtr make_poly_quotient(FieldKind k, const std::string& fs)
{
    std::shared_ptr<Ring> r;
    with_field(k, [&](auto x) {
        using F = decltype(x);
        Polynomial<F> f = parse_poly<F>(fs);
        if (f.is_zero()) throw PreconditionError("quotient by 0: a must be a non-zero-divisor");
        if (f.degree() == 0) throw PreconditionError("quotient by a unit: a must be a non-unit");
        f = f.monic();
        const int d = f.degree();
        std::vector<std::string> labels;
        for (int i = 0; i < d; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
        std::vector<std::vector<Vec<F>>> prod(d, std::vector<Vec<F>>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
            {
                Polynomial<F> rem = Polynomial<F>::monomial(F(1), i + j) % f;
                prod[i][j] = Vec<F>(d);
                for (int c = 0; c < d; ++c) prod[i][j](c) = rem.coeff(c);
            }
        Vec<F> u = Vec<F>::Constant(d, F(0));
        u(0) = F(1);
        r = base_ring(RingKind::FdAlgebra, field_name(k) + "[x]/(" + f.str() + ")");
        r->field = k;
        r->fd = FdData<F>{Algebra<F>::from_products(labels, prod, u, r->label), nullptr, f};
    });
    return r;
}

RingPtr make_quotient(const RingPtr& r, const std::string& a)
{
    if (r->kind == RingKind::Integers)
    {
        Integer n = parse_integer(a);
        if (n == 0) throw PreconditionError("a = 0 is a zero-divisor");
        if (n == 1 || n == -1) throw PreconditionError("a = " + n.str() + " is a unit");
        return make_mod_integers(abs(n));
    }
    if (r->kind == RingKind::PolyPID) return make_poly_quotient(r->field, a);
    throw UnsupportedError("quotients are supported for Z and k[x] only");
}

namespace {

template <ExactField F>
std::vector<Mat<F>> bimodule_side(const Algebra<F>& alg, Index dim,
                                  const std::map<std::string, std::vector<std::vector<std::string>>>& given,
                                  const std::string& side)
{
    std::vector<Mat<F>> out;
    for (const auto& [k, v] : given)
        if (std::find(alg.labels().begin(), alg.labels().end(), k) == alg.labels().end())
            throw DomainError(side + " action names unknown basis label '" + k + "'");
    for (Index i = 0; i < alg.dim(); ++i)
    {
        auto it = given.find(alg.labels()[i]);
        if (it != given.end())
        {
            Mat<F> m = parse_matrix<F>(it->second, dim);
            if (m.rows() != dim || m.cols() != dim) throw DomainError(side + " action matrix has the wrong shape");
            out.push_back(m);
        }
        else if (alg.basis(i) == alg.unit())
            out.push_back(identity<F>(dim));
        else
            throw DomainError(side + " action for basis label '" + alg.labels()[i] + "' is missing");
    }
    return out;
}

template <ExactField F>
std::shared_ptr<Ring> wrap_triangular(TriPtr<F> t, RingPtr r, RingPtr s, const std::string& label)
{
    auto out = base_ring(RingKind::Triangular, label);
    out->field = r->field;
    out->fd = FdData<F>{t->T, t, std::nullopt};
    out->corner_r = std::move(r);
    out->corner_s = std::move(s);
    return out;
}

template <ExactField F>
RingPtr wrap_ut(TriPtr<F> t, const RingPtr& base, int n)
{
    RingPtr rc = n == 2 ? base : wrap_ut<F>(t->r_tri, base, n - 1);
    auto out = wrap_triangular<F>(t, rc, base, "UT" + std::to_string(n) + "(" + base->label + ")");
    out->ut_base = base;
    out->ut_n = n;
    return out;
}

}   // namespace

RingPtr make_triangular_ring(const RingPtr& r, const RingPtr& s, const BimoduleSpec& spec, const std::string& label)
{
    if (!r->fd || !s->fd) throw DomainError("triangular corners must be fields or finite-dimensional algebras");
    if (r->field != s->field) throw DomainError("triangular corners must share one base field");
    const std::string name = label.empty() ? "T(" + r->label + "," + s->label + ")" : label;
    return std::visit(
        [&](const auto& dr) -> RingPtr {
            using F = typename std::decay_t<decltype(dr)>::Field;
            const auto& ds = std::get<FdData<F>>(*s->fd);
            const auto& R = *dr.alg;
            const auto& S = *ds.alg;
            Bimodule<F> m;
            if (spec.regular)
            {
                if (S.dim() == 1)
                {
                    m.dim = R.dim();
                    for (Index i = 0; i < R.dim(); ++i) m.left.push_back(R.left(i));
                    m.right.push_back(identity<F>(m.dim) * S.unit()(0));
                }
                else if (R.dim() == 1)
                {
                    m.dim = S.dim();
                    m.left.push_back(identity<F>(m.dim) * R.unit()(0));
                    for (Index k = 0; k < S.dim(); ++k) m.right.push_back(S.right(k));
                }
                else if (same_algebra(R, S))
                {
                    m.dim = R.dim();
                    for (Index i = 0; i < R.dim(); ++i) m.left.push_back(R.left(i));
                    for (Index k = 0; k < S.dim(); ++k) m.right.push_back(S.right(k));
                }
                else
                    throw DomainError("regular bimodule needs a field corner or R = S");
            }
            else
            {
                m.dim = spec.dim;
                m.left = bimodule_side<F>(R, spec.dim, spec.left, "left");
                m.right = bimodule_side<F>(S, spec.dim, spec.right, "right");
            }
            auto t = make_triangular<F>(dr.alg, ds.alg, std::move(m), name);
            return wrap_triangular<F>(t, r, s, name);
        },
        *r->fd);
}

RingPtr make_utn_ring(const RingPtr& base, int n)
{
    if (n < 1) throw PreconditionError("UT_n needs n >= 1");
    if (!base->fd) throw DomainError("UT_n needs a field or finite-dimensional algebra");
    if (n == 1) return base;
    return std::visit(
        [&](const auto& d) -> RingPtr {
            using F = typename std::decay_t<decltype(d)>::Field;
            auto t = make_utn<F>(d.alg, n, "UT" + std::to_string(n) + "(" + base->label + ")");
            return wrap_ut<F>(t, base, n);
        },
        *base->fd);
}

RingPtr make_opposite(const RingPtr& r)
{
    if (!r->fd) throw UnsupportedError("opposite rings are defined for finite-dimensional algebras");
    if (r->is_commutative()) return r;
    if (r->opposite_of) return r->opposite_of;
    auto out = base_ring(RingKind::FdAlgebra, r->label + "^op");
    out->field = r->field;
    std::visit(
        [&](const auto& d) {
            using F = typename std::decay_t<decltype(d)>::Field;
            out->fd = FdData<F>{d.alg->opposite(), nullptr, std::nullopt};
        },
        *r->fd);
    out->opposite_of = r;
    return out;
}

CornerInfo corner_idempotents_of(const RingPtr& t)
{
    if (t->kind != RingKind::Triangular) throw DomainError("ring " + t->label + " is not triangular");
    return visit_fd(*t, [&](const auto& d) {
        using F = typename std::decay_t<decltype(d)>::Field;
        const auto& T = *d.alg;
        auto cp = corner_idempotents(*d.tri);
        CornerInfo ci;
        ci.e = format_fd_element(T, cp.e);
        ci.f = format_fd_element(T, cp.f);
        auto span = [&](const Vec<F>& a, const Vec<F>& b) {
            Mat<F> cols(T.dim(), T.dim());
            for (Index i = 0; i < T.dim(); ++i) cols.col(i) = T.mul(T.mul(a, T.basis(i)), b);
            return rank<F>(cols);
        };
        ci.dim_ete = span(cp.e, cp.e);
        ci.dim_etf = span(cp.e, cp.f);
        ci.dim_ftf = span(cp.f, cp.f);
        ci.verified = ci.dim_ete == d.tri->dR && ci.dim_etf == d.tri->dM && ci.dim_ftf == d.tri->dS
                      && Vec<F>(cp.e + cp.f) == T.unit();
        return ci;
    });
}

}   // namespace findim
