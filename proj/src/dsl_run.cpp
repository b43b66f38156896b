#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "findim/derived.hpp"
#include "findim/dsl.hpp"
#include "findim/finitistic.hpp"
#include "internal.hpp"

namespace findim::dsl {

namespace {

using K = Expr::Kind;
using internal::parse_rational;

struct FamilyDef
{
    RingPtr default_of;   // default(R)
    std::vector<std::pair<std::string, Module>> members;
};

using Value = std::variant<RingPtr, Module, Ses, FamilyDef>;

struct Env
{
    std::map<std::string, Value> values;
    std::map<std::string, std::string> failed;   // name -> reason
    RunOptions opt;
};

class DependencyError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

class Evaluator
{
    public:
        explicit Evaluator(const Env& env) : env_(env) {}

        template <typename T>
        const T& lookup(const Expr& e, const char* what) const
        {
            auto f = env_.failed.find(e.text);
            if (f != env_.failed.end()) throw DependencyError("depends on failed definition '" + e.text + "'");
            auto it = env_.values.find(e.text);
            if (it == env_.values.end() || !std::holds_alternative<T>(it->second))
                throw DomainError("'" + e.text + "' is not " + what);
            return std::get<T>(it->second);
        }

        static Index integer(const Expr& e)
        {
            if (e.kind == K::Neg) return -integer(*e.kids[0]);
            if (e.kind != K::Number) throw DomainError("expected an integer, found " + print_expr(e));
            if (e.text.size() > 18) throw DomainError("integer " + e.text + " is too large here");
            return std::stoll(e.text);
        }

        static std::string element(const Expr& e) { return print_expr(e); }

        static std::vector<std::vector<std::string>> matrix(const Expr& e)
        {
            std::vector<std::vector<std::string>> rows;
            for (const auto& r : e.kids)
            {
                rows.emplace_back();
                for (const auto& x : r->kids) rows.back().push_back(element(*x));
            }
            return rows;
        }

        static const Expr& arg(const Expr& call, std::size_t g, std::size_t i) { return *call.groups[g][i].value; }

        RingPtr ring(const Expr& e, const std::string& label = "") const
        {
            RingPtr r = ring_raw(e, label);
            if (label.empty() || r->label == label) return r;
            auto copy = std::make_shared<Ring>(*r);
            copy->label = label;
            return copy;
        }

        Module module(const Expr& e) const
        {
            const Index cap = env_.opt.cap;
            if (e.kind == K::Ident) return lookup<Module>(e, "a module");
            if (e.kind == K::Div) return module_cyclic(ring(*e.kids[0]), {element(*e.kids[1])});
            if (e.kind != K::Call) throw DomainError("expected a module, found " + print_expr(e));
            const std::string& f = e.text;
            auto R = [&](std::size_t i = 0) { return ring(arg(e, 0, i)); };
            auto M = [&](std::size_t i) { return module(arg(e, 0, i)); };
            auto I = [&](std::size_t i) { return integer(arg(e, 0, i)); };
            auto rest = [&](std::size_t g) {
                std::vector<std::string> v;
                for (const auto& a : e.groups[g]) v.push_back(element(*a.value));
                return v;
            };
            if (f == "zero") return module_zero(R());
            if (f == "regular") return module_regular(R());
            if (f == "free") return module_free(R(), I(1));
            if (f == "cyclic") return module_cyclic(R(), rest(1));
            if (f == "presented") return module_presented(R(), matrix(arg(e, 1, 0)));
            if (f == "simple") return module_simple(R(), I(1) - 1);
            if (f == "projective") return module_projective(R(), I(1) - 1);
            if (f == "residue") return module_residue(R());
            if (f == "quot")
            {
                std::vector<int> vars;
                for (const auto& a : e.groups[1]) vars.push_back(static_cast<int>(integer(*a.value)) - 1);
                return module_variable_quotient(R(), vars);
            }
            if (f == "monomial") return module_monomial_quotient(R(), rest(1));
            if (f == "ideal") return module_monomial_ideal(R(), rest(1));
            if (f == "rep")
            {
                std::map<std::string, std::vector<std::vector<std::string>>> act;
                for (const auto& a : e.groups[2]) act[a.key] = matrix(*a.value);
                return module_rep(R(), integer(arg(e, 1, 0)), act);
            }
            if (f == "triple")
            {
                RingPtr t = R();
                if (t->kind != RingKind::Triangular) throw DomainError("ring " + t->label + " is not triangular");
                auto slot = [&](std::size_t i, const RingPtr& corner) {
                    const Expr& x = arg(e, 1, i);
                    if (x.kind == K::Ident && !env_.values.count(x.text))
                    {
                        if (x.text == "zero") return module_zero(corner);
                        if (x.text == "simple") return module_simple(corner, 0);
                        if (x.text == "regular") return module_regular(corner);
                    }
                    return module(x);
                };
                std::optional<std::vector<std::vector<std::string>>> phi;
                if (e.groups[1].size() > 2 && arg(e, 1, 2).kind == K::List) phi = matrix(arg(e, 1, 2));
                return module_triple(t, slot(0, t->corner_r), slot(1, t->corner_s), phi);
            }
            if (f == "sum")
            {
                std::vector<Module> parts;
                for (std::size_t i = 0; i < e.groups[0].size(); ++i) parts.push_back(M(i));
                return direct_sum(parts);
            }
            if (f == "syzygy") return findim::syzygy(M(0), I(1), cap);
            if (f == "restrict") return restrict_scalars(M(0), ring(arg(e, 0, 1)));
            if (f == "localize") return localize_at_prime(M(0), Integer(I(1)));
            if (f == "cornere") return corner_e(M(0));
            if (f == "cornerf") return corner_f(M(0));
            if (f == "induceleft") return induce_left(R(), M(1));
            if (f == "induceright") return induce_right(R(), M(1));
            throw DomainError("unknown module constructor '" + f + "'");
        }

        Ses ses(const Expr& e) const
        {
            if (e.kind == K::Ident) return lookup<Ses>(e, "a short exact sequence");
            const std::string& f = e.text;
            const Module a = module(arg(e, 0, 0));
            if (f == "tripleses") return ses_triple(a);
            if (f == "radical") return ses_radical(a);
            if (f == "syzygy") return ses_syzygy(a, env_.opt.cap);
            if (f == "split") return ses_split(a, module(arg(e, 0, 1)));
            throw DomainError("unknown ses constructor '" + f + "'");
        }

        FamilyDef family(const Expr& e) const
        {
            if (e.kind == K::Ident) return lookup<FamilyDef>(e, "a family");
            FamilyDef d;
            if (e.kind == K::Call)
            {
                d.default_of = ring(arg(e, 0, 0));
                return d;
            }
            for (const auto& k : e.kids) d.members.emplace_back(print_expr(*k), module(*k));
            return d;
        }

        WitnessFamily witness_family(const std::optional<FamilyDef>& d, const RingPtr& tested) const
        {
            if (!d) return default_family(tested, env_.opt.cap);
            if (d->default_of)
            {
                if (!same_ring(*d->default_of, *tested))
                    throw DomainError("family default(" + d->default_of->label + ") does not test modules over "
                                      + tested->label);
                return default_family(tested, env_.opt.cap);
            }
            return make_family(tested, d->members, env_.opt.cap);
        }

    private:
        const Env& env_;

        RingPtr ring_raw(const Expr& e, const std::string& label) const
        {
            if (e.kind == K::Ident)
            {
                if (env_.values.count(e.text) || env_.failed.count(e.text)) return lookup<RingPtr>(e, "a ring");
                if (e.text == "Z" || e.text == "integers") return make_integers();
                return make_field(field_from_name(e.text));
            }
            if (e.kind == K::Div) return make_quotient(ring(*e.kids[0]), element(*e.kids[1]));
            if (e.kind != K::Call) throw DomainError("expected a ring, found " + print_expr(e));
            const std::string& f = e.text;
            auto F = [&](std::size_t i) { return field_from_name(arg(e, 0, i).text); };
            if (f == "integers") return make_integers();
            if (f == "field") return make_field(F(0));
            if (f == "localint") return make_local_integers(Integer(integer(arg(e, 0, 0))));
            if (f == "modint") return make_mod_integers(Integer(integer(arg(e, 0, 0))));
            if (f == "polypid") return make_polypid(F(0));
            if (f == "koszul") return make_koszul(F(0), static_cast<int>(integer(arg(e, 0, 1))));
            if (f == "fdalgebra") return make_fd_algebra(table(e, label));
            if (f == "triangular")
                return make_triangular_ring(ring(arg(e, 0, 0)), ring(arg(e, 0, 1)), bimodule(arg(e, 0, 2)), label);
            if (f == "utn") return make_utn_ring(ring(arg(e, 0, 0)), static_cast<int>(integer(arg(e, 0, 1))));
            if (f == "quotient") return make_quotient(ring(arg(e, 0, 0)), element(arg(e, 0, 1)));
            if (f == "opposite") return make_opposite(ring(arg(e, 0, 0)));
            if (f == "load") return make_fd_algebra(load(arg(e, 0, 0).text, label));
            throw DomainError("unknown ring constructor '" + f + "'");
        }

        BimoduleSpec bimodule(const Expr& e) const
        {
            BimoduleSpec b;
            if (e.text == "regular")
            {
                ring(arg(e, 0, 0));
                return b;
            }
            b.regular = false;
            b.dim = integer(arg(e, 0, 0));
            for (const auto& a : e.groups[1])
            {
                const auto dot = a.key.find('.');
                const std::string side = a.key.substr(0, dot);
                if (dot == std::string::npos || (side != "left" && side != "right"))
                    throw DomainError("bimodule actions are named left.<label> or right.<label>, got " + a.key);
                (side == "left" ? b.left : b.right)[a.key.substr(dot + 1)] = matrix(*a.value);
            }
            return b;
        }

        // Linear combination of basis labels with rational coefficients.
        static std::vector<Rational> linear(const Expr& e, const std::vector<std::string>& labels,
                                            const std::vector<Rational>& unit)
        {
            const std::size_t d = labels.size();
            auto scalar = [&](const Expr& x, Rational& out) {
                if (x.kind == K::Number)
                {
                    out = parse_rational(x.text);
                    return true;
                }
                if (x.kind == K::Div && x.kids[0]->kind == K::Number && x.kids[1]->kind == K::Number)
                {
                    out = parse_rational(x.kids[0]->text + "/" + x.kids[1]->text);
                    return true;
                }
                return false;
            };
            Rational c;
            if (scalar(e, c))
            {
                if (unit.empty()) throw DomainError("scalar used before the unit is known");
                std::vector<Rational> v(unit);
                for (auto& x : v) x *= c;
                return v;
            }
            std::vector<Rational> v(d, Rational(0));
            switch (e.kind)
            {
                case K::Ident:
                {
                    auto it = std::find(labels.begin(), labels.end(), e.text);
                    if (it == labels.end()) throw DomainError("unknown basis label '" + e.text + "'");
                    v[static_cast<std::size_t>(it - labels.begin())] = 1;
                    return v;
                }
                case K::Neg:
                    v = linear(*e.kids[0], labels, unit);
                    for (auto& x : v) x = -x;
                    return v;
                case K::Add:
                case K::Sub:
                {
                    auto a = linear(*e.kids[0], labels, unit);
                    auto b = linear(*e.kids[1], labels, unit);
                    for (std::size_t i = 0; i < d; ++i) v[i] = e.kind == K::Add ? a[i] + b[i] : a[i] - b[i];
                    return v;
                }
                case K::Mul:
                {
                    Rational s;
                    if (scalar(*e.kids[0], s)) v = linear(*e.kids[1], labels, unit);
                    else if (scalar(*e.kids[1], s)) v = linear(*e.kids[0], labels, unit);
                    else throw DomainError("product " + print_expr(e) + " is not linear; give it its own table entry");
                    for (auto& x : v) x *= s;
                    return v;
                }
                case K::Div:
                {
                    Rational s;
                    if (!scalar(*e.kids[1], s) || s == 0) throw DomainError("cannot divide by " + print_expr(*e.kids[1]));
                    v = linear(*e.kids[0], labels, unit);
                    for (auto& x : v) x /= s;
                    return v;
                }
                default: break;
            }
            throw DomainError("cannot read " + print_expr(e) + " as a linear combination of basis labels");
        }

        static AlgebraTable table(const Expr& e, const std::string& label)
        {
            AlgebraTable t;
            t.field = field_from_name(arg(e, 0, 0).text);
            t.name = label.empty() ? "A" : label;
            const Expr* unit = nullptr;
            for (const auto& b : e.block)
            {
                if (b.kind == BlockEntry::Kind::Basis)
                    for (const auto& x : b.items)
                    {
                        if (x->kind != K::Ident && !(x->kind == K::Number && x->text == "1"))
                            throw DomainError("basis labels are identifiers or 1, got " + print_expr(*x));
                        if (std::find(t.labels.begin(), t.labels.end(), x->text) != t.labels.end())
                            throw DomainError("basis label '" + x->text + "' repeated");
                        t.labels.push_back(x->text);
                    }
                if (b.kind == BlockEntry::Kind::Unit) unit = b.items[0].get();
            }
            const std::size_t d = t.labels.size();
            if (unit) t.unit = linear(*unit, t.labels, {});
            else
            {
                auto it = std::find(t.labels.begin(), t.labels.end(), "1");
                if (it == t.labels.end()) throw DomainError("no basis label 1 and no unit entry");
                t.unit.assign(d, Rational(0));
                t.unit[static_cast<std::size_t>(it - t.labels.begin())] = 1;
            }
            t.c.assign(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
            std::vector<std::vector<bool>> given(d, std::vector<bool>(d, false));
            auto index = [&](const Expr& x) {
                auto it = std::find(t.labels.begin(), t.labels.end(), x.text);
                if ((x.kind != K::Ident && x.kind != K::Number) || it == t.labels.end())
                    throw DomainError("table entries have the form a*b = ..., got " + print_expr(x));
                return static_cast<std::size_t>(it - t.labels.begin());
            };
            for (const auto& b : e.block)
            {
                if (b.kind != BlockEntry::Kind::Product) continue;
                const Expr& lhs = *b.items[0];
                if (lhs.kind != K::Mul) throw DomainError("table entries have the form a*b = ..., got " + print_expr(lhs));
                const std::size_t i = index(*lhs.kids[0]), j = index(*lhs.kids[1]);
                if (given[i][j]) throw DomainError("product " + print_expr(lhs) + " given twice");
                given[i][j] = true;
                t.c[i][j] = linear(*b.items[1], t.labels, t.unit);
            }
            // products with a unit basis label
            bool unit_is_label = false;
            std::size_t u = 0;
            for (std::size_t k = 0; k < d; ++k)
                if (t.unit[k] == 1)
                {
                    bool others = true;
                    for (std::size_t l = 0; l < d; ++l)
                        if (l != k && t.unit[l] != 0) others = false;
                    if (others) unit_is_label = true, u = k;
                }
            if (unit_is_label)
                for (std::size_t k = 0; k < d; ++k)
                {
                    std::vector<Rational> bk(d, Rational(0));
                    bk[k] = 1;
                    if (!given[u][k]) t.c[u][k] = bk;
                    if (!given[k][u]) t.c[k][u] = bk;
                }
            return t;
        }

        AlgebraTable load(const std::string& file, const std::string& label) const
        {
            const std::string path = file.empty() || file[0] == '/' ? file : env_.opt.base_dir + "/" + file;
            std::ifstream in(path);
            if (!in) throw DomainError("cannot open algebra file " + file);
            nlohmann::json j;
            try
            {
                j = nlohmann::json::parse(in);
            }
            catch (const std::exception& ex)
            {
                throw DomainError("algebra file " + file + ": " + ex.what());
            }
            auto q = [&](const nlohmann::json& x) {
                return x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long long>());
            };
            try
            {
                AlgebraTable t;
                t.field = field_from_name(j.at("field").get<std::string>());
                t.name = label.empty() ? j.value("name", std::string("A")) : label;
                t.labels = j.at("basis").get<std::vector<std::string>>();
                const std::size_t d = t.labels.size();
                const auto& c = j.at("structure_constants");
                if (c.size() != d) throw DomainError("structure_constants must be " + std::to_string(d) + "x" + std::to_string(d) + "x" + std::to_string(d));
                t.c.assign(d, std::vector<std::vector<Rational>>(d));
                for (std::size_t a = 0; a < d; ++a)
                {
                    if (c[a].size() != d) throw DomainError("structure_constants has a short row");
                    for (std::size_t b = 0; b < d; ++b)
                    {
                        if (c[a][b].size() != d) throw DomainError("structure_constants has a short entry");
                        for (std::size_t k = 0; k < d; ++k) t.c[a][b].push_back(q(c[a][b][k]));
                    }
                }
                for (const auto& x : j.at("unit")) t.unit.push_back(q(x));
                if (t.unit.size() != d) throw DomainError("unit must have " + std::to_string(d) + " entries");
                return t;
            }
            catch (const nlohmann::json::exception& ex)
            {
                throw DomainError("algebra file " + file + ": " + ex.what());
            }
        }
};

std::string error_kind(const std::exception& ex)
{
    if (dynamic_cast<const DependencyError*>(&ex)) return "dependency";
    if (dynamic_cast<const DomainError*>(&ex)) return "domain";
    if (dynamic_cast<const AlgebraError*>(&ex)) return "algebra";
    if (dynamic_cast<const HypothesisError*>(&ex)) return "hypothesis";
    if (dynamic_cast<const UnsupportedError*>(&ex)) return "unsupported";
    if (dynamic_cast<const PreconditionError*>(&ex)) return "precondition";
    if (dynamic_cast<const IndeterminateError*>(&ex)) return "indeterminate";
    return "internal";
}

struct Outcome
{
    std::string verdict = "ok";
    std::string value;
    std::vector<std::string> details;
    std::string certificate;
};

std::vector<std::string> resolution_details(const ResolutionSummary& s)
{
    std::vector<std::string> d;
    for (std::size_t i = 0; i < s.terms.size(); ++i)
    {
        std::string l = "P" + std::to_string(i) + " = " + s.terms[i];
        if (i < s.dims.size() && s.dims[i] >= 0) l += " (dim " + std::to_string(s.dims[i]) + ")";
        d.push_back(l);
    }
    return d;
}

std::string dim_value(const DimResult& r) { return r.finite() ? std::to_string(r.n) : r.text(); }

Outcome theorem(const TheoremReport& t)
{
    Outcome o;
    o.verdict = t.pass ? "pass" : "fail";
    std::vector<std::string> sides;
    for (const auto& [k, v] : t.sides) sides.push_back(k + " = " + v);
    o.value = join(sides, "; ");
    o.details.push_back("assert " + t.assertion);
    for (const auto& c : t.certificates) o.details.push_back(c);
    for (const auto& n : t.notes) o.details.push_back("note: " + n);
    o.certificate = t.certificate_text();
    return o;
}

const Arg* keyed(const Statement& st, const std::string& key)
{
    for (const auto& a : st.args)
        if (a.style != Arg::Style::Positional && a.key == key) return &a;
    return nullptr;
}

std::vector<const Expr*> positional(const Statement& st)
{
    std::vector<const Expr*> v;
    for (const auto& a : st.args)
        if (a.style == Arg::Style::Positional) v.push_back(a.value.get());
    return v;
}

std::string ses_text(const Ses& s)
{
    return "0 -> " + s.a.describe() + " -> " + s.b.describe() + " -> " + s.c.describe() + " -> 0";
}

Outcome run_check(const Statement& st, const Evaluator& ev, const RunOptions& opt)
{
    const std::string& c = st.check;
    const auto pos = positional(st);
    FpdOptions fo{opt.cap, opt.seed, 200};
    if (c == "quotient")
        return theorem(quotient_theorem_check(ev.ring(*keyed(st, "R")->value), print_expr(*keyed(st, "a")->value), fo));
    if (c == "polynomial")
        return theorem(polynomial_theorem_check(field_from_name(keyed(st, "field")->value->text),
                                                static_cast<int>(Evaluator::integer(*keyed(st, "m")->value)), fo));
    if (c == "triangular") return theorem(triangular_bounds_check(ev.ring(*pos[0]), fo));
    if (c == "localization")
    {
        const Expr& p = *keyed(st, "primes")->value;
        std::vector<std::string> primes;
        if (p.kind == K::Tuple)
            for (const auto& k : p.kids) primes.push_back(print_expr(*k));
        else
            primes.push_back(print_expr(p));
        return theorem(localization_inequality_check(ev.ring(*pos[0]), primes, fo));
    }
    if (c == "residue")
        return theorem(residue_field_criterion(ev.ring(*pos[0]), Evaluator::integer(*keyed(st, "n")->value), fo));
    if (c == "torloc")
    {
        const Module m = ev.module(*pos[0]), n = ev.module(*pos[1]);
        const Index deg = Evaluator::integer(*keyed(st, "n")->value);
        const Integer p(Evaluator::integer(*keyed(st, "p")->value));
        auto r = check_tor_localization(m, n, deg, p);
        Outcome o;
        o.verdict = r.pass ? "pass" : "fail";
        o.value = "Tor_" + std::to_string(deg) + "(M,N)_(" + p.str() + ") = " + r.lhs + "; Tor_" + std::to_string(deg)
                  + "(M_(" + p.str() + "),N_(" + p.str() + ")) = " + r.rhs;
        o.certificate = "M " + m.describe() + "\nN " + n.describe() + "\nlhs " + r.lhs + "\nrhs " + r.rhs + "\n";
        return o;
    }
    if (c == "ses")
    {
        const Ses s = ev.ses(*pos[0]);
        bool ok = false;
        auto checks = verify_ses(s, ok);
        Outcome o;
        o.verdict = ok ? "pass" : "fail";
        o.value = ses_text(s);
        o.details = checks;
        o.certificate = o.value + "\n" + join(checks, "\n") + "\n";
        return o;
    }
    if (c == "nonsplit")
    {
        auto r = non_split_certificate(ev.ses(*pos[0]));
        Outcome o;
        o.verdict = r.split ? "fail" : "pass";
        o.value = r.split ? "split" : "nonsplit";
        o.details = r.ses_checks;
        o.details.push_back("linear system: " + std::to_string(r.verdict.equations) + " equations, "
                            + std::to_string(r.verdict.unknowns) + " unknowns");
        o.certificate = join(r.ses_checks, "\n") + "\n" + (r.split ? "section " : "") + r.verdict.witness
                        + "\n";
        return o;
    }
    if (c == "pd")
    {
        const DimResult d = projective_dimension(ev.module(*pos[0]), opt.cap);
        const Expr& x = *keyed(st, "expect")->value;
        bool pass = false;
        if (x.kind == K::Ident && x.text == "inf") pass = d.verdict == ResolutionStatus::InfiniteCertified;
        else if (x.kind == K::Ident) pass = d.verdict == ResolutionStatus::UnknownAbove;
        else pass = d.finite() && d.n == Evaluator::integer(x);
        Outcome o;
        o.verdict = pass ? "pass" : "fail";
        o.value = d.text();
        o.details = resolution_details(d.certificate);
        o.details.push_back("expected " + print_expr(x));
        o.certificate = d.certificate.certificate_text();
        return o;
    }
    if (c == "fpd")
    {
        const FpdCertificate f = fpd_bounds(ev.ring(*pos[0]), fo);
        const Expr& x = *keyed(st, "expect")->value;
        bool pass = x.kids.size() == 2;
        auto match = [](const Expr& want, std::optional<Index> got) {
            if (want.kind == K::Ident) return !got.has_value();
            return got.has_value() && *got == Evaluator::integer(want);
        };
        if (pass) pass = match(*x.kids[0], f.lower) && match(*x.kids[1], f.upper);
        Outcome o;
        o.verdict = pass ? "pass" : "fail";
        o.value = f.interval() + (f.exact ? " exact" : "");
        o.details.push_back(f.text());
        o.details.push_back("expected " + print_expr(x));
        o.certificate = f.text() + "\n" + join(f.rule_evidence, "\n") + "\n" + f.witness_resolution.certificate_text();
        return o;
    }
    throw DomainError("unknown check '" + c + "'");
}

Outcome run_query(const Statement& st, const Evaluator& ev, const RunOptions& opt)
{
    if (st.keyword == "check") return run_check(st, ev, opt);
    const auto pos = positional(st);
    const std::string& k = st.keyword;
    const Index cap = opt.cap;
    Outcome o;
    if (k == "pd")
    {
        const DimResult d = projective_dimension(ev.module(*pos[0]), cap);
        o.value = dim_value(d);
        o.details.push_back("verdict " + d.text());
        for (auto& l : resolution_details(d.certificate)) o.details.push_back(l);
        o.certificate = d.certificate.certificate_text();
    }
    else if (k == "resolve")
    {
        const ResolutionSummary s = resolve(ev.module(*pos[0]), cap);
        o.value = to_string(s.status) + ", length " + std::to_string(s.length);
        if (s.period_length > 0)
            o.value += ", period " + std::to_string(s.period_length) + " from " + std::to_string(s.period_start);
        o.details = resolution_details(s);
        o.certificate = s.certificate_text();
    }
    else if (k == "fpr")
    {
        const FprResult f = fpr_membership(ev.module(*pos[0]), cap);
        o.value = to_string(f.verdict);
        o.details.push_back("pd " + f.pd.text());
        o.certificate = f.pd.certificate.certificate_text();
    }
    else if (k == "fpd")
    {
        const FpdCertificate f = fpd_bounds(ev.ring(*pos[0]), FpdOptions{cap, opt.seed, 200});
        o.value = f.interval() + (f.exact ? " exact" : "");
        o.details.push_back("lower witness " + f.witness + " (pd " + std::to_string(f.lower) + ")");
        o.details.push_back("upper rule " + to_string(f.rule));
        for (const auto& e : f.rule_evidence) o.details.push_back(e);
        o.details.push_back("candidates examined " + std::to_string(f.candidates));
        o.certificate = f.text() + "\n" + join(f.rule_evidence, "\n") + "\n" + f.witness_resolution.certificate_text();
    }
    else if (k == "tor" || k == "ext")
    {
        const Index n = Evaluator::integer(*pos[0]);
        const Module m = ev.module(*pos[1]), x = ev.module(*pos[2]);
        if (const Arg* over = keyed(st, "over"))
        {
            const RingPtr r = ev.ring(*over->value);
            auto on = [&](const Module& a) {
                return same_ring(*a.ring, *r) || (a.ring->opposite_of && same_ring(*a.ring->opposite_of, *r));
            };
            if (!on(m) || !on(x)) throw DomainError("the modules are not both over " + r->label);
        }
        const TorExtValue v = k == "tor" ? tor(n, m, x, cap) : ext(n, m, x, cap);
        o.value = v.text;
        o.details.push_back("M = " + m.describe());
        o.details.push_back("N = " + x.describe());
        o.certificate = k + " " + std::to_string(n) + "\nM " + m.describe() + "\nN " + x.describe() + "\nvalue "
                        + v.text + "\n";
        if (!v.by_dimension) o.certificate += "factors " + join(v.factors, ",") + "\n";
    }
    else if (k == "ftfd" || k == "ftflat")
    {
        const Module m = ev.module(*pos[0]);
        std::optional<FamilyDef> def;
        if (const Arg* f = keyed(st, "family")) def = ev.family(*f->value);
        const WitnessFamily w = ev.witness_family(def, m.ring);
        std::vector<std::string> labels;
        for (const auto& mem : w.members) labels.push_back(mem.label);
        o.details.push_back("family {" + join(labels, ", ") + "}" + (w.family_relative ? " (family-relative)" : ""));
        for (const auto& n : w.notes) o.details.push_back("note: " + n);
        o.certificate = "family " + join(labels, ", ") + "\n";
        for (const auto& mem : w.members) o.certificate += "member " + mem.label + " pd " + mem.pd.text() + "\n";
        if (k == "ftfd")
        {
            const FtFdResult r = ft_flat_dim(m, w, cap);
            o.value = r.text();
            for (const auto& t : r.table) o.details.push_back(t);
            o.certificate += join(r.table, "\n") + "\nd " + std::to_string(r.d) + "\n";
        }
        else
        {
            const FtFlatVerdict v = ft_flat_test(m, w, cap);
            o.value = v.pass ? "yes" : "no (witness " + v.witness + ", Tor_1 = " + v.tor1 + ")";
            o.certificate += "flat " + std::string(v.pass ? "yes" : "no") + "\n";
        }
    }
    else if (k == "nonsplit")
    {
        auto r = non_split_certificate(ev.ses(*pos[0]));
        o.value = r.split ? "split" : "nonsplit";
        o.details = r.ses_checks;
        o.details.push_back((r.split ? "section " : "") + r.verdict.witness);
        o.certificate = join(r.ses_checks, "\n") + "\n" + (r.split ? "section " : "") + r.verdict.witness
                        + "\n";
    }
    else if (k == "horseshoe")
    {
        const ResolutionSummary s = horseshoe_resolution(ev.ses(*pos[0]), cap);
        o.value = to_string(s.status) + ", length " + std::to_string(s.length);
        o.details = resolution_details(s);
        for (const auto& c : s.checks) o.details.push_back("check " + c);
        o.certificate = s.certificate_text();
    }
    else if (k == "shift")
    {
        const Module m = ev.module(*pos[0]), x = ev.module(*pos[1]);
        const Index n = Evaluator::integer(*pos[2]);
        const WitnessShiftResult r = witness_shift(m, x, n, cap);
        o.value = r.n.describe();
        o.details.push_back("Tor_" + std::to_string(n) + "(M, N) = " + r.tor_n);
        o.details.push_back("Tor_" + std::to_string(n - 1) + "(M, N) = " + r.tor_n_minus_1);
        for (const auto& c : r.checks) o.details.push_back(c);
        o.certificate = "N " + r.n.describe() + "\n" + join(o.details, "\n") + "\n";
    }
    else if (k == "iso")
    {
        const Module a = ev.module(*pos[0]), b = ev.module(*pos[1]);
        const bool y = modules_isomorphic(a, b);
        o.value = y ? "yes" : "no";
        o.certificate = a.describe() + "\n" + b.describe() + "\n" + o.value + "\n";
    }
    else
        throw DomainError("unknown query '" + k + "'");
    return o;
}

Outcome run_definition(const Statement& st, Env& env)
{
    Evaluator ev(env);
    Outcome o;
    const Expr& e = *st.value;
    if (st.keyword == "ring")
    {
        RingPtr r = ev.ring(e, st.name);
        o.value = r->describe();
        env.values[st.name] = r;
    }
    else if (st.keyword == "module")
    {
        Module m = ev.module(e);
        o.value = m.describe();
        env.values[st.name] = m;
    }
    else if (st.keyword == "ses")
    {
        Ses s = ev.ses(e);
        o.value = ses_text(s);
        env.values[st.name] = s;
    }
    else
    {
        FamilyDef f = ev.family(e);
        if (f.default_of) o.value = "default(" + f.default_of->label + ")";
        else
        {
            std::vector<std::string> labels;
            for (const auto& [l, m] : f.members) labels.push_back(l);
            o.value = "{" + join(labels, ", ") + "}";
        }
        env.values[st.name] = f;
    }
    o.certificate = o.value + "\n";
    return o;
}

Record make_record(const Statement& st, int index, Outcome&& o, double ms)
{
    Record r;
    r.index = index;
    r.line = st.span.line;
    r.echo = print_statement(st);
    r.kind = st.kind == Statement::Kind::Definition ? st.keyword
                                                    : (st.keyword == "check" ? "check " + st.check : st.keyword);
    r.verdict = o.verdict;
    r.value = std::move(o.value);
    for (const auto& d : o.details)
        for (auto& l : lines_of(d))
            if (!l.empty()) r.details.push_back(std::move(l));
    r.certificate = std::move(o.certificate);
    r.digest = fnv1a_hex(r.certificate);
    r.ms = ms;
    return r;
}

template <typename Fn>
Outcome guarded(Fn&& fn)
{
    try
    {
        return fn();
    }
    catch (const std::exception& ex)
    {
        Outcome o;
        o.verdict = "error";
        o.value = error_kind(ex) + " error: " + ex.what();
        o.certificate = o.value + "\n";
        return o;
    }
}

double elapsed_ms(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}   // namespace

std::string fnv1a_hex(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int Report::count(const std::string& verdict) const
{
    int n = 0;
    for (const auto& r : records) n += r.verdict == verdict;
    return n;
}

Report run_script(const Script& s, const RunOptions& opt)
{
    Report rep;
    rep.script = opt.script_name;
    rep.options = opt;
    Env env;
    env.opt = opt;
    const std::size_t n = s.statements.size();
    std::vector<std::optional<Record>> out(n);
    std::vector<std::size_t> queries;
    for (std::size_t i = 0; i < n; ++i)
    {
        const Statement& st = s.statements[i];
        if (st.kind == Statement::Kind::Query)
        {
            queries.push_back(i);
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o = guarded([&] { return run_definition(st, env); });
        if (o.verdict == "error") env.failed[st.name] = o.value;
        out[i] = make_record(st, static_cast<int>(i + 1), std::move(o), elapsed_ms(t0));
    }
    // Definitions are immutable from here on; queries only read the environment.
    const Evaluator ev(env);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t q; (q = next++) < queries.size();)
        {
            const std::size_t i = queries[q];
            const Statement& st = s.statements[i];
            const auto t0 = std::chrono::steady_clock::now();
            Outcome o = guarded([&] { return run_query(st, ev, opt); });
            out[i] = make_record(st, static_cast<int>(i + 1), std::move(o), elapsed_ms(t0));
        }
    };
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(queries.size())));
    if (jobs <= 1) worker();
    else
    {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& r : out) rep.records.push_back(std::move(*r));
    return rep;
}

std::string render_text(const Report& r)
{
    std::ostringstream os;
    os << "# findim report for " << r.script << " (cap " << r.options.cap << ", seed " << r.options.seed << ")\n";
    for (const auto& rec : r.records)
    {
        os << "[" << rec.index << "] ";
        if (rec.verdict == "error") os << rec.echo << "\n    " << rec.value << "\n";
        else if (rec.kind == "ring" || rec.kind == "module" || rec.kind == "ses" || rec.kind == "family")
            os << rec.echo << "\n    : " << rec.value << "\n";
        else if (rec.kind.rfind("check", 0) == 0)
            os << rec.echo << ": " << rec.verdict << "\n    " << rec.value << "\n";
        else
            os << rec.echo << " = " << rec.value << "\n";
        for (const auto& d : rec.details) os << "    " << d << "\n";
        os << "    digest " << rec.digest;
        if (r.options.timing) os << "  (" << std::fixed << std::setprecision(1) << rec.ms << " ms)";
        os << "\n";
    }
    os << "# " << r.records.size() << " records: " << r.count("ok") << " ok, " << r.count("pass") << " pass, "
       << r.count("fail") << " fail, " << r.count("error") << " error\n";
    return os.str();
}

std::string render_json(const Report& r)
{
    nlohmann::ordered_json j;
    j["script"] = r.script;
    j["options"] = {{"cap", r.options.cap}, {"seed", r.options.seed}};
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& rec : r.records)
    {
        nlohmann::ordered_json x;
        x["index"] = rec.index;
        x["line"] = rec.line;
        x["kind"] = rec.kind;
        x["echo"] = rec.echo;
        x["verdict"] = rec.verdict;
        x["value"] = rec.value;
        x["details"] = rec.details;
        x["certificate"] = lines_of(rec.certificate);
        x["digest"] = rec.digest;
        if (r.options.timing) x["ms"] = rec.ms;
        j["records"].push_back(std::move(x));
    }
    j["summary"] = {{"records", r.records.size()}, {"ok", r.count("ok")},       {"pass", r.count("pass")},
                    {"fail", r.count("fail")},      {"error", r.count("error")}, {"exit_code", r.exit_code()}};
    return j.dump(2) + "\n";
}

std::string render_error_text(const ScriptError& e, const std::string& script)
{
    std::ostringstream os;
    os << script << ":" << e.span.line << ":" << e.span.col << ": " << e.kind << " error: " << e.what() << "\n";
    if (!e.expected.empty()) os << "  expected one of: " << join(e.expected, ", ") << "\n";
    return os.str();
}

std::string render_error_json(const ScriptError& e, const std::string& script)
{
    nlohmann::ordered_json j;
    j["script"] = script;
    j["error"] = {{"kind", e.kind}, {"line", e.span.line}, {"column", e.span.col}, {"message", e.what()},
                  {"expected", e.expected},  {"found", e.found}};
    return j.dump(2) + "\n";
}

}   // namespace findim::dsl
