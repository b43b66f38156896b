#include "findim/derived.hpp"

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

bool needs_right_modules(const Ring& r) { return r.is_fd() && !r.is_commutative(); }

}   // namespace

WitnessFamily make_family(const RingPtr& tested, const std::vector<std::pair<std::string, Module>>& members, Index cap)
{
    if (members.empty()) throw PreconditionError("a witness family must be nonempty");
    WitnessFamily w;
    w.tested = tested;
    w.ring = members.front().second.ring;
    for (const auto& [label, m] : members)
    {
        auto f = fpr_membership(m, cap);
        if (f.verdict != Membership::Yes)
            throw PreconditionError("family member " + label + " is not certified in FPR (" + f.pd.text() + ")");
        w.members.push_back({label, m, f.pd});
    }
    w.family_relative = tested->kind == RingKind::Triangular || needs_right_modules(*tested);
    return w;
}

WitnessFamily default_family(const RingPtr& r, Index cap)
{
    std::vector<std::pair<std::string, Module>> cand;
    std::vector<std::string> notes;
    switch (r->kind)
    {
        case RingKind::Integers:
            for (const char* p : {"2", "3", "5", "7"}) cand.emplace_back(std::string("Z/") + p, module_cyclic(r, {p}));
            cand.emplace_back("Z", module_regular(r));
            break;
        case RingKind::LocalIntegers:
            cand.emplace_back(r->label + "/" + r->param.str(), module_residue(r));
            cand.emplace_back(r->label, module_regular(r));
            break;
        case RingKind::PolyPID:
            cand.emplace_back(r->label + "/(x)", module_residue(r));
            cand.emplace_back(r->label, module_regular(r));
            break;
        case RingKind::ModIntegers: cand.emplace_back(r->label, module_regular(r)); break;
        case RingKind::Koszul: cand.emplace_back("k", module_residue(r)); break;
        case RingKind::Field: cand.emplace_back("k", module_regular(r)); break;
        case RingKind::FdAlgebra:
        case RingKind::Triangular:
        {
            const bool right = needs_right_modules(*r);
            RingPtr base = right ? make_opposite(r) : r;
            const Index nv = visit_fd(*base, [](const auto& d) { return d.alg->vertex_count(); });
            for (Index v = 0; v < nv; ++v)
            {
                Module s = module_simple(base, v);
                auto f = fpr_membership(s, cap);
                std::string label = "S" + std::to_string(v + 1) + (right ? "^op" : "");
                if (f.verdict == Membership::Yes) cand.emplace_back(label, s);
                else notes.push_back(label + " omitted: not certified in FPR (" + f.pd.text() + ")");
            }
            cand.emplace_back(right ? r->label + "^op" : r->label, module_regular(base));
            break;
        }
    }
    WitnessFamily w = make_family(r, cand, cap);
    w.notes = notes;
    return w;
}

FtFlatVerdict ft_flat_test(const Module& m, const WitnessFamily& w, Index cap)
{
    FtFlatVerdict v;
    for (const auto& mem : w.members)
    {
        if (mem.pd.n < 1) continue;
        auto t = tor(1, mem.module, m, cap);
        if (!t.is_zero())
        {
            v.pass = false;
            v.witness = mem.label;
            v.tor1 = t.text;
            return v;
        }
    }
    return v;
}

std::string FtFdResult::text() const
{
    std::string s = std::to_string(d);
    if (d > 0) s += " (witness " + witness + ", Tor_" + std::to_string(d) + " = " + value + ")";
    if (family_relative) s += " family-relative";
    return s;
}

FtFdResult ft_flat_dim(const Module& m, const WitnessFamily& w, Index cap)
{
    FtFdResult r;
    r.family_relative = w.family_relative;
    for (const auto& mem : w.members)
    {
        // Tor_n(N, -) vanishes above pd N
        for (Index n = 1; n <= std::min(mem.pd.n, cap); ++n)
        {
            auto t = tor(n, mem.module, m, cap);
            if (t.is_zero()) continue;
            r.table.push_back("Tor_" + std::to_string(n) + "(" + mem.label + ", M) = " + t.text);
            if (n > r.d)
            {
                r.d = n;
                r.witness = mem.label;
                r.value = t.text;
            }
        }
    }
    return r;
}

WitnessShiftResult witness_shift(const Module& m, const Module& x, Index n, Index cap)
{
    if (n < 1) throw PreconditionError("witness shift needs n >= 1");
    auto f = fpr_membership(x, cap);
    if (f.verdict != Membership::Yes) throw PreconditionError("X is not certified in FPR (" + f.pd.text() + ")");
    auto t = tor(n, m, x, cap);
    if (t.is_zero()) throw PreconditionError("Tor_" + std::to_string(n) + "(M, X) = 0");
    WitnessShiftResult r{syzygy(x, 1, cap), {}, {}, {}};
    auto a = tor(n, m, r.n, cap);
    auto b = tor(n - 1, m, r.n, cap);
    r.tor_n = a.text;
    r.tor_n_minus_1 = b.text;
    r.checks.push_back("Tor_" + std::to_string(n) + "(M, X) = " + t.text);
    r.checks.push_back("N = Omega^1(X) in FPR: " + fpr_membership(r.n, cap).pd.text());
    r.checks.push_back("Tor_" + std::to_string(n) + "(M, N) = " + a.text + (a.is_zero() ? ": ok" : ": FAILED"));
    r.checks.push_back("Tor_" + std::to_string(n - 1) + "(M, N) = " + b.text + (!b.is_zero() ? ": ok" : ": FAILED"));
    if (!a.is_zero() || b.is_zero())
        throw PreconditionError("witness shift postconditions fail: Tor_n(M, N) = " + a.text + ", Tor_(n-1)(M, N) = "
                                + b.text + " (the shift needs Tor_(n+1)(M, X) = 0)");
    return r;
}

TorLocalizationResult check_tor_localization(const Module& m, const Module& n, Index deg, const Integer& p)
{
    if (m.ring->kind != RingKind::Integers || n.ring->kind != RingKind::Integers)
        throw DomainError("Tor localization is checked for Z-modules");
    if (deg < 0) throw PreconditionError("Tor degree must be nonnegative");
    LocalIntegerDomain loc(p);
    const auto& mi = as<IntModule>(m);
    const auto& ni = as<IntModule>(n);
    auto whole = tor_from_resolution(pid_resolution(mi), deg, ni).structure();
    auto ls = localize_structure(whole, p);
    ModuleStructure<Rational> lhs;
    lhs.free_rank = ls.free_rank;
    for (const auto& t : ls.torsion) lhs.torsion.push_back(Rational(t));
    auto lm = localize_at_prime(mi, p), ln = localize_at_prime(ni, p);
    auto rhs = tor_from_resolution(pid_resolution(lm), deg, ln).structure();
    TorLocalizationResult r;
    r.lhs = format_structure(lhs, loc);
    r.rhs = format_structure(rhs, loc);
    r.pass = lhs == rhs;
    return r;
}

}   // namespace findim
