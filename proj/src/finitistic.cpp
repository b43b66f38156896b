#include "findim/finitistic.hpp"

#include <algorithm>
#include <random>

#include "internal.hpp"

namespace findim {

using namespace internal;

std::string to_string(UpperRule r)
{
    switch (r)
    {
        case UpperRule::Field: return "field";
        case UpperRule::Pid: return "pid";
        case UpperRule::KoszulSyzygy: return "koszul-syzygy";
        case UpperRule::SelfInjective: return "local-self-injective";
        case UpperRule::LocalArtinian: return "local-artinian";
        case UpperRule::Sandwich: return "sandwich";
        case UpperRule::Unknown: return "unknown";
    }
    return "?";
}

std::string FpdCertificate::interval() const
{
    return "[" + std::to_string(lower) + ", " + (upper ? std::to_string(*upper) : std::string("unknown")) + "]";
}

std::string FpdCertificate::text() const
{
    std::string s = interval() + (exact ? " exact" : "");
    s += "; lower witness " + witness + " with pd " + std::to_string(lower);
    s += "; upper rule " + to_string(rule);
    return s;
}

std::string TheoremReport::certificate_text() const
{
    std::ostringstream os;
    os << "theorem " << theorem << "\ninstance " << instance << "\nassert " << assertion << "\n";
    for (const auto& [k, v] : sides) os << "side " << k << " = " << v << "\n";
    for (const auto& c : certificates) os << "cert " << c << "\n";
    for (const auto& n : notes) os << "note " << n << "\n";
    os << "verdict " << (pass ? "pass" : "fail") << "\n";
    return os.str();
}

namespace {

using Candidates = std::vector<std::pair<std::string, Module>>;

std::string ok(bool c) { return c ? ": ok" : ": FAILED"; }

// ---------------------------------------------------------------------------
// Upper rules

/** Every indecomposable projective has a simple socle (the commutative self-injective test). */
template <ExactField F>
bool simple_socles(const Algebra<F>& alg, const typename Algebra<F>::Ptr& ptr, std::vector<std::string>& ev)
{
    bool all = true;
    for (Index v = 0; v < alg.vertex_count(); ++v)
    {
        Rep<F> p = Rep<F>::projective(ptr, v);
        Rep<F> s = Rep<F>::simple(ptr, v);
        const Index soc = socle_basis(p).cols();
        const bool simple = soc == s.dim();
        ev.push_back("soc P" + std::to_string(v + 1) + " has dimension " + std::to_string(soc) + ", S"
                     + std::to_string(v + 1) + " has dimension " + std::to_string(s.dim())
                     + (simple ? ": simple socle" : ": socle not simple"));
        all = all && simple;
    }
    return all;
}

void upper_rule(const Ring& r, FpdCertificate& c, const FpdOptions& opt,
                std::optional<FpdCertificate>& cr, std::optional<FpdCertificate>& cs)
{
    switch (r.kind)
    {
        case RingKind::Field:
            c.rule = UpperRule::Field;
            c.upper = 0;
            c.rule_evidence.push_back("every module over a field is free");
            return;
        case RingKind::Integers:
        case RingKind::LocalIntegers:
        case RingKind::PolyPID:
            c.rule = UpperRule::Pid;
            c.upper = 1;
            c.rule_evidence.push_back(r.label + " is a principal ideal domain: submodules of free modules are free");
            return;
        case RingKind::Koszul:
            c.rule = UpperRule::KoszulSyzygy;
            c.upper = r.nvars;
            c.rule_evidence.push_back("Hilbert syzygy theorem: every finitely generated module over k[x1..x"
                                      + std::to_string(r.nvars) + "] has pd <= " + std::to_string(r.nvars));
            return;
        case RingKind::ModIntegers:
        {
            // Z/n is the product of the local rings Z/p^k; the socle of Z/p^k is p^(k-1)Z/p^k, of order p
            for (const auto& [p, k] : factorize(r.param))
                c.rule_evidence.push_back("Z/" + ipow(p, k).str() + ": socle p^" + std::to_string(k - 1)
                                          + "Z/p^" + std::to_string(k) + " has order " + p.str() + ", simple: ok");
            c.rule = UpperRule::SelfInjective;
            c.upper = 0;
            return;
        }
        case RingKind::FdAlgebra:
        {
            const Index nv = visit_fd(r, [](const auto& d) { return d.alg->vertex_count(); });
            const std::string local_ev =
                "the last map of a finite minimal resolution lands in the radical and kills the right socle,"
                " so over a local algebra finite pd means projective";
            if (!r.is_commutative())
            {
                if (nv == 1)
                {
                    c.rule = UpperRule::LocalArtinian;
                    c.upper = 0;
                    c.rule_evidence.push_back(r.label + " has one simple module");
                    c.rule_evidence.push_back(local_ev);
                }
                else
                    c.rule_evidence.push_back("noncommutative algebra outside the rule list");
                return;
            }
            std::vector<std::string> ev;
            bool si = visit_fd(r, [&](const auto& d) { return simple_socles(*d.alg, d.alg, ev); });
            c.rule_evidence = ev;
            c.upper = 0;
            if (si)
                c.rule = UpperRule::SelfInjective;
            else
            {
                // a commutative artinian ring is a product of local ones
                c.rule = UpperRule::LocalArtinian;
                c.rule_evidence.push_back("commutative: a product of " + std::to_string(nv) + " local factor(s)");
                c.rule_evidence.push_back(local_ev);
            }
            return;
        }
        case RingKind::Triangular:
        {
            cr = fpd_bounds(r.corner_r, opt);
            cs = fpd_bounds(r.corner_s, opt);
            c.rule_evidence.push_back("corner R = " + r.corner_r->label + ": " + cr->interval() + " by "
                                      + to_string(cr->rule));
            c.rule_evidence.push_back("corner S = " + r.corner_s->label + ": " + cs->interval() + " by "
                                      + to_string(cs->rule));
            if (cr->upper && cs->upper)
            {
                c.rule = UpperRule::Sandwich;
                c.upper = std::max(*cr->upper, *cs->upper) + 1;
            }
            else
                c.rule_evidence.push_back("a corner has no upper bound: sandwich rule not applicable");
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Witness candidates

template <ExactField F>
F random_scalar(std::mt19937_64& rng)
{
    const std::uint64_t q = FieldTraits<F>::characteristic == 0 ? 4 : FieldTraits<F>::characteristic;
    return FieldTraits<F>::from_index(rng() % q);
}

template <ExactField F>
std::pair<std::string, Module> fd_random_cyclic(const RingPtr& r, const FdData<F>& d, std::mt19937_64& rng)
{
    const auto& alg = d.alg;
    Rep<F> reg = Rep<F>::regular(alg);
    const Index k = 1 + static_cast<Index>(rng() % 2);
    Mat<F> g(alg->dim(), k);
    for (Index c = 0; c < k; ++c)
        for (Index j = 0; j < alg->dim(); ++j) g(j, c) = random_scalar<F>(rng);
    std::string label = "A/(";
    for (Index c = 0; c < k; ++c) label += (c ? ", " : "") + format_fd_element(*alg, Vec<F>(g.col(c)));
    return {label + ")", Module{r, reg.quotient(reg.closure(g))}};
}

/** One seeded random cyclic quotient, or nothing for backends without a random catalogue. */
std::optional<std::pair<std::string, Module>> random_candidate(const RingPtr& r, std::mt19937_64& rng)
{
    switch (r->kind)
    {
        case RingKind::Integers:
        {
            const std::string a = std::to_string(2 + rng() % 60);
            return std::make_pair("Z/" + a, module_cyclic(r, {a}));
        }
        case RingKind::PolyPID:
        {
            std::string f = "x^" + std::to_string(1 + rng() % 3) + " + " + std::to_string(rng() % 3);
            return std::make_pair(r->label + "/(" + f + ")", module_cyclic(r, {f}));
        }
        case RingKind::FdAlgebra:
        case RingKind::Triangular:
            return visit_fd(*r, [&](const auto& d) { return fd_random_cyclic(r, d, rng); });
        default: return std::nullopt;
    }
}

Candidates catalogue(const RingPtr& r, const FpdOptions& opt, const std::optional<FpdCertificate>& cr,
                     const std::optional<FpdCertificate>& cs)
{
    Candidates c;
    c.emplace_back(r->label, module_regular(r));
    switch (r->kind)
    {
        case RingKind::Field: break;
        case RingKind::Integers:
            for (const char* p : {"2", "3", "5", "7"}) c.emplace_back(std::string("Z/") + p, module_cyclic(r, {p}));
            break;
        case RingKind::LocalIntegers:
            c.emplace_back(r->label + "/" + r->param.str(), module_residue(r));
            break;
        case RingKind::PolyPID:
            c.emplace_back(r->label + "/(x)", module_residue(r));
            break;
        case RingKind::ModIntegers:
            for (const auto& [p, k] : factorize(r->param))
                c.emplace_back(r->label + "/(" + p.str() + ")", module_cyclic(r, {p.str()}));
            break;
        case RingKind::Koszul:
            c.emplace_back("k", module_residue(r));
            for (int v = 0; v < r->nvars; ++v)
                c.emplace_back("k[x1..]/(x" + std::to_string(v + 1) + ")", module_variable_quotient(r, {v}));
            break;
        case RingKind::FdAlgebra:
        case RingKind::Triangular:
        {
            const Index nv = visit_fd(*r, [](const auto& d) { return d.alg->vertex_count(); });
            for (Index v = 0; v < nv; ++v) c.emplace_back("S" + std::to_string(v + 1), module_simple(r, v));
            if (r->kind == RingKind::Triangular && cr && cs)
            {
                if (cr->witness_module)
                    c.emplace_back("induceLeft(" + cr->witness + ")", induce_left(r, *cr->witness_module));
                if (cs->witness_module)
                    c.emplace_back("induceRight(" + cs->witness + ")", induce_right(r, *cs->witness_module));
            }
            break;
        }
    }
    if (static_cast<Index>(c.size()) > opt.max_candidates) c.erase(c.begin() + opt.max_candidates, c.end());
    return c;
}

template <ExactField F>
bool is_irreducible(const Polynomial<F>& f)
{
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    if constexpr (FieldTraits<F>::characteristic == 0)
    {
        if (d > 3) throw UnsupportedError("irreducibility over Q is decided up to degree 3");
        // rational root test on a primitive integer multiple
        Integer l = 1;
        for (const auto& a : f.coefficients()) l = lcm(l, Integer(boost::multiprecision::denominator(a)));
        std::vector<Integer> z;
        for (const auto& a : f.coefficients()) z.push_back(Integer(boost::multiprecision::numerator(a * Rational(l))));
        if (z.front() == 0) return false;
        auto divisors = [](Integer n) {
            n = abs(n);
            std::vector<Integer> out;
            for (Integer k = 1; k * k <= n; ++k)
                if (n % k == 0)
                {
                    out.push_back(k);
                    if (k * k != n) out.push_back(n / k);
                }
            return out;
        };
        for (const auto& p : divisors(z.front()))
            for (const auto& q : divisors(z.back()))
                for (int s : {1, -1})
                    if (f.evaluate(Rational(p * s, q)) == 0) return false;
        return true;
    }
    else
    {
        constexpr int P = FieldTraits<F>::characteristic;
        // trial division by every monic polynomial of degree <= d/2
        for (int e = 1; 2 * e <= d; ++e)
        {
            Index total = 1;
            for (int i = 0; i < e; ++i) total *= P;
            for (Index code = 0; code < total; ++code)
            {
                std::vector<F> c(static_cast<std::size_t>(e + 1), F(0));
                Index x = code;
                for (int i = 0; i < e; ++i, x /= P) c[static_cast<std::size_t>(i)] = F(static_cast<long long>(x % P));
                c[static_cast<std::size_t>(e)] = F(1);
                if ((f % Polynomial<F>(c)).is_zero()) return false;
            }
        }
        return true;
    }
}

}   // namespace

FpdCertificate fpd_bounds(const RingPtr& r, const FpdOptions& opt)
{
    FpdCertificate c;
    c.ring = r->label;
    std::optional<FpdCertificate> cr, cs;
    upper_rule(*r, c, opt, cr, cs);
    c.lower = -1;
    Candidates fixed = catalogue(r, opt, cr, cs);
    std::mt19937_64 rng(opt.seed);
    for (std::size_t i = 0; c.candidates < opt.max_candidates; ++i)
    {
        std::optional<std::pair<std::string, Module>> next;
        if (i < fixed.size()) next = fixed[i];
        else next = random_candidate(r, rng);
        if (!next) break;
        const auto& [label, m] = *next;
        ++c.candidates;
        auto pd = projective_dimension(m, opt.cap);
        if (pd.finite() && pd.n > c.lower)
        {
            c.lower = pd.n;
            c.witness = label;
            c.witness_module = m;
            c.witness_resolution = pd.certificate;
        }
        if (c.upper && c.lower == *c.upper) break;
    }
    if (c.lower < 0) c.lower = 0;
    if (c.upper && c.lower > *c.upper) throw AlgebraError("internal: witness exceeds the rule bound for " + r->label);
    c.exact = c.upper && c.lower == *c.upper;
    return c;
}

TheoremReport residue_field_criterion(const RingPtr& r, Index n, const FpdOptions& opt)
{
    if (n < 0) throw PreconditionError("the residue field criterion needs n >= 0");
    TheoremReport rep;
    rep.theorem = "residue-field";
    rep.instance = r->label + ", n = " + std::to_string(n);
    rep.assertion = "FT-fd(residue field) <= " + std::to_string(n);
    Module k = module_residue(r);
    auto w = default_family(r, opt.cap);
    auto d = ft_flat_dim(k, w, opt.cap);
    std::string fam;
    for (const auto& m : w.members) fam += (fam.empty() ? "" : ", ") + m.label;
    rep.sides.emplace_back("family", "{" + fam + "}");
    rep.sides.emplace_back("d_W(k)", std::to_string(d.d));
    rep.certificates = d.table;
    rep.notes = w.notes;
    if (d.family_relative) rep.notes.push_back("family-relative");
    rep.pass = d.d <= n;
    return rep;
}

TheoremReport quotient_theorem_check(const RingPtr& r, const std::string& a, const FpdOptions& opt)
{
    TheoremReport rep;
    rep.theorem = "quotient";
    rep.instance = r->label + ", a = " + a;
    rep.assertion = "fPD(R) >= fPD(R/(a)) + 1";
    if (r->kind == RingKind::Integers)
    {
        Integer v = parse_integer(a);
        if (v == 0) throw PreconditionError("a = 0 is a zero-divisor");
        if (abs(v) == 1) throw PreconditionError("a = " + a + " is a unit");
        rep.certificates.push_back("a = " + v.str() + " is nonzero in the domain Z: non-zero-divisor");
    }
    else if (r->kind == RingKind::PolyPID)
    {
        bool unit = with_field(r->field, [&](auto x) {
            using F = decltype(x);
            auto f = parse_poly<F>(a);
            if (f.is_zero()) throw PreconditionError("a = 0 is a zero-divisor");
            return f.degree() == 0;
        });
        if (unit) throw PreconditionError("a = " + a + " is a unit");
        rep.certificates.push_back("a is nonzero in the domain " + r->label + ": non-zero-divisor");
    }
    else
        throw UnsupportedError("the quotient check supports R = Z and R = k[x]");
    RingPtr rbar = make_quotient(r, a);
    auto bbar = fpd_bounds(rbar, opt);
    auto br = fpd_bounds(r, opt);
    rep.sides.emplace_back("fPD(R/(a))", bbar.interval());
    rep.sides.emplace_back("fPD(R)", br.interval());
    rep.certificates.push_back("R/(a) = " + rbar->label + ": " + bbar.text());
    for (const auto& e : bbar.rule_evidence) rep.certificates.push_back("  " + e);
    rep.certificates.push_back("R = " + r->label + ": " + br.text());
    if (!bbar.upper || !bbar.witness_module)
    {
        rep.notes.push_back("fPD(R/(a)) has no certified upper bound");
        rep.pass = false;
        return rep;
    }
    Module c = restrict_scalars(*bbar.witness_module, r);
    auto pdc = projective_dimension(c, opt.cap);
    const Index target = *bbar.upper + 1;
    rep.sides.emplace_back("pd_R(" + bbar.witness + ")", pdc.text());
    const bool shift = pdc.finite() && pdc.n == bbar.lower + 1;
    const bool reaches = pdc.finite() && pdc.n >= target;
    const bool consistent = (!br.upper || *br.upper >= target) && br.lower >= target;
    rep.certificates.push_back("witness C = " + bbar.witness + " with pd over R/(a) = " + std::to_string(bbar.lower));
    rep.certificates.push_back("pd_R(C) = pd_(R/(a))(C) + 1" + ok(shift));
    rep.certificates.push_back("pd_R(C) >= fPD(R/(a)) + 1 = " + std::to_string(target) + ok(reaches));
    rep.certificates.push_back("fpdBounds(R) = " + br.interval() + " is consistent with the witness" + ok(consistent));
    rep.certificates.push_back(pdc.certificate.certificate_text());
    rep.pass = bbar.exact && shift && reaches && consistent;
    return rep;
}

TheoremReport polynomial_theorem_check(FieldKind k, int m, const FpdOptions& opt)
{
    if (m < 1 || m > 4) throw PreconditionError("the polynomial check supports 1 <= m <= 4");
    TheoremReport rep;
    rep.theorem = "polynomial";
    RingPtr s = make_koszul(k, m);
    rep.instance = s->label;
    rep.assertion = "fPD(k[x1..x" + std::to_string(m) + "]) = fPD(k) + " + std::to_string(m);
    auto bk = fpd_bounds(make_field(k), opt);
    auto bs = fpd_bounds(s, opt);
    std::vector<int> all;
    for (int v = 0; v < m; ++v) all.push_back(v);
    auto kos = koszul_resolution_of(s, all);
    Module res = module_residue(s);
    auto pd = projective_dimension(res, opt.cap);
    auto tm = tor(m, res, res, opt.cap);
    auto tm1 = tor(m + 1, res, res, opt.cap);
    std::vector<Index> binom(1, 1);
    for (int i = 1; i <= m; ++i) binom.push_back(binom.back() * (m - i + 1) / i);
    std::string ranks;
    for (auto x : kos.ranks) ranks += (ranks.empty() ? "" : ",") + std::to_string(x);
    rep.sides.emplace_back("fPD(k)", bk.interval());
    rep.sides.emplace_back("fPD(k[x1..xm])", bs.interval());
    rep.sides.emplace_back("Koszul ranks", "(" + ranks + ")");
    rep.sides.emplace_back("tor_" + std::to_string(m) + "(k,k)", tm.text);
    rep.sides.emplace_back("tor_" + std::to_string(m + 1) + "(k,k)", tm1.text);
    const bool kcert = kos.certified && kos.ranks == binom;
    const bool pdm = pd.finite() && pd.n == m;
    const bool exact = bk.exact && bs.exact && bs.lower == bk.lower + m;
    rep.certificates.push_back("Koszul resolution certified with binomial ranks" + ok(kcert));
    rep.certificates.push_back("pd k = " + pd.text() + ok(pdm));
    rep.certificates.push_back("fpdBounds = " + bs.text() + ok(exact));
    rep.certificates.push_back("tor_m(k,k) != 0" + ok(!tm.is_zero()));
    rep.certificates.push_back("tor_(m+1)(k,k) = 0" + ok(tm1.is_zero()));
    rep.certificates.push_back(kos.certificate_text());
    rep.pass = kcert && pdm && exact && !tm.is_zero() && tm1.is_zero();
    return rep;
}

namespace {

/** FPR-certified test modules over a ring: its lower witness, its FPR simples, and the regular module. */
Candidates fpr_witnesses(const RingPtr& r, const FpdCertificate& b, Index cap)
{
    Candidates out;
    if (b.witness_module) out.emplace_back(b.witness, *b.witness_module);
    if (r->is_fd())
    {
        const Index nv = visit_fd(*r, [](const auto& d) { return d.alg->vertex_count(); });
        for (Index v = 0; v < nv; ++v)
        {
            Module s = module_simple(r, v);
            if (projective_dimension(s, cap).finite()) out.emplace_back("S" + std::to_string(v + 1), s);
        }
    }
    out.emplace_back(r->label, module_regular(r));
    Candidates unique;
    for (auto& c : out)
        if (std::none_of(unique.begin(), unique.end(), [&](const auto& u) { return u.first == c.first; }))
            unique.push_back(std::move(c));
    return unique;
}

}   // namespace

TheoremReport triangular_bounds_check(const RingPtr& t, const FpdOptions& opt)
{
    if (t->kind != RingKind::Triangular) throw PreconditionError("ring " + t->label + " is not triangular");
    TheoremReport rep;
    rep.theorem = "triangular";
    rep.instance = t->label;
    rep.assertion = "max(fPD R, fPD S) <= fPD T <= max(fPD R, fPD S) + 1";
    auto bR = fpd_bounds(t->corner_r, opt);
    auto bS = fpd_bounds(t->corner_s, opt);
    auto bT = fpd_bounds(t, opt);
    rep.sides.emplace_back("fPD(R)", bR.interval());
    rep.sides.emplace_back("fPD(S)", bS.interval());
    rep.sides.emplace_back("fPD(T)", bT.interval());
    bool pass = true;
    auto check = [&](bool c, const std::string& what) {
        rep.certificates.push_back(what + ok(c));
        pass = pass && c;
    };
    // corner transport
    for (const auto& [label, x] : fpr_witnesses(t->corner_r, bR, opt.cap))
    {
        auto a = projective_dimension(x, opt.cap), b = projective_dimension(induce_left(t, x), opt.cap);
        check(a.verdict == b.verdict && a.n == b.n,
              "pd_T(induceLeft " + label + ") = " + b.text() + ", pd_R = " + a.text());
    }
    for (const auto& [label, y] : fpr_witnesses(t->corner_s, bS, opt.cap))
    {
        auto a = projective_dimension(y, opt.cap), b = projective_dimension(induce_right(t, y), opt.cap);
        check(a.verdict == b.verdict && a.n == b.n,
              "pd_T(induceRight " + label + ") = " + b.text() + ", pd_S = " + a.text());
    }
    // corner extraction
    for (const auto& [label, n] : fpr_witnesses(t, bT, opt.cap))
    {
        auto e = fpr_membership(corner_e(n), opt.cap), f = fpr_membership(corner_f(n), opt.cap);
        check(e.verdict == Membership::Yes && f.verdict == Membership::Yes,
              "corners of " + label + " in FPR: eN " + e.pd.text() + ", fN " + f.pd.text());
    }
    // sandwich
    const Index lo = std::max(bR.lower, bS.lower);
    check(lo <= bT.lower, "lower: max(" + std::to_string(bR.lower) + ", " + std::to_string(bS.lower)
                              + ") <= " + std::to_string(bT.lower));
    std::optional<Index> hi;
    if (bR.upper && bS.upper) hi = std::max(*bR.upper, *bS.upper) + 1;
    if (hi)
        check(bT.lower <= *hi, "upper: " + std::to_string(bT.lower) + " <= max(" + std::to_string(*bR.upper) + ", "
                                   + std::to_string(*bS.upper) + ") + 1 = " + std::to_string(*hi));
    else
        rep.notes.push_back("a corner has no certified upper bound: upper sandwich side not checked");
    if (bT.exact) rep.sides.emplace_back("exact fPD(T)", std::to_string(bT.lower));
    // corollaries
    if (t->ut_n == 2 && bR.upper)
        check(bT.lower <= *bR.upper + 1, "UT2 corollary: fPD(UT2) <= fPD(base) + 1");
    if (bR.exact && bS.upper && bR.lower >= *bS.upper + 1)
        check(bR.lower <= bT.lower && bT.lower <= bR.lower + 1,
              "diagonal dominance: fPD(R) <= fPD(T) <= fPD(R) + 1");
    if (bR.upper && bS.upper) check(bT.upper.has_value(), "finiteness ascent: fPD(T) finite");
    if (t->ut_n >= 2 && t->ut_base)
    {
        auto bb = fpd_bounds(t->ut_base, opt);
        if (bb.upper)
            check(bT.lower <= *bb.upper + t->ut_n - 1,
                  "UT_n corollary: fPD(UT_" + std::to_string(t->ut_n) + ") <= fPD(base) + "
                      + std::to_string(t->ut_n - 1));
    }
    if (!bT.exact) rep.notes.push_back("interval " + bT.interval() + " is not exact");
    rep.certificates.push_back("T: " + bT.text());
    rep.pass = pass;
    return rep;
}

NonSplitReport non_split_certificate(const Ses& s)
{
    NonSplitReport r;
    bool valid = false;
    r.ses_checks = verify_ses(s, valid);
    if (!valid) throw PreconditionError("the sequence is not exact");
    r.verdict = split_test(s);
    r.split = r.verdict.split;
    return r;
}

TheoremReport localization_inequality_check(const RingPtr& r, const std::vector<std::string>& primes,
                                            const FpdOptions& opt)
{
    if (primes.empty()) throw PreconditionError("the localization check needs a nonempty prime list");
    TheoremReport rep;
    rep.theorem = "localization";
    rep.instance = r->label + " at {" + [&] {
        std::string s;
        for (const auto& p : primes) s += (s.empty() ? "" : ", ") + p;
        return s;
    }() + "}";
    rep.assertion = "fPD(R) <= max over the listed m of fPD(R_m)";
    rep.notes.push_back("finite sample of Max(R)");
    auto br = fpd_bounds(r, opt);
    Index best = -1;
    if (r->kind == RingKind::Integers)
    {
        for (const auto& s : primes)
        {
            Integer p = parse_integer(s);
            auto f = p >= 2 ? factorize(p) : std::vector<std::pair<Integer, int>>{};
            if (f.size() != 1 || f[0].second != 1) throw DomainError(s + " is not prime");
            auto bl = fpd_bounds(make_local_integers(p), opt);
            rep.sides.emplace_back("fPD(Z_(" + s + "))", bl.interval());
            rep.certificates.push_back("Z_(" + s + "): " + bl.text());
            if (bl.upper) best = std::max(best, *bl.upper);
        }
    }
    else if (r->kind == RingKind::PolyPID)
    {
        for (const auto& s : primes)
        {
            with_field(r->field, [&](auto x) {
                using F = decltype(x);
                if (!is_irreducible(parse_poly<F>(s))) throw DomainError(s + " is not irreducible");
            });
            // k[x]_(f) is a local PID; k[x]/(f) keeps pd 1 after localizing its resolution 0 -> k[x] -f-> k[x]
            auto pd = projective_dimension(module_cyclic(r, {s}), opt.cap);
            const Index up = 1;
            rep.sides.emplace_back("fPD(" + r->label + "_(" + s + "))", "[" + std::to_string(pd.n) + ", 1]");
            rep.certificates.push_back(r->label + "_(" + s + ") is a local PID: upper rule pid; witness " + r->label
                                       + "/(" + s + ") with pd " + pd.text());
            best = std::max(best, up);
        }
    }
    else
        throw UnsupportedError("the localization check supports Z and k[x]");
    rep.sides.emplace_back("fPD(R)", br.interval());
    rep.certificates.push_back("R: " + br.text());
    rep.pass = best >= 0 && br.lower <= best;
    return rep;
}

}   // namespace findim
