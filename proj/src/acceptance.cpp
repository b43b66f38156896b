#include "findim/acceptance.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "findim/derived.hpp"
#include "findim/dsl.hpp"
#include "findim/finitistic.hpp"
#include "findim/random.hpp"

namespace findim {

namespace {

namespace fs = std::filesystem;
using gen::Rng;

std::string fmt_seconds(double s)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(s < 10 ? 2 : 1) << s;
    return os.str();
}

// ---------------------------------------------------------------------------
// Oracle: rank over Q by plain fraction-exact elimination, kept apart from the
// engine's linear algebra.

using QMat = std::vector<std::vector<Rational>>;

QMat to_q(const Mat<Rational>& m)
{
    QMat q(static_cast<std::size_t>(m.rows()), std::vector<Rational>(static_cast<std::size_t>(m.cols())));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) q[i][j] = m(i, j);
    return q;
}

QMat to_q(const Mat<Integer>& m)
{
    QMat q(static_cast<std::size_t>(m.rows()), std::vector<Rational>(static_cast<std::size_t>(m.cols())));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) q[i][j] = Rational(m(i, j));
    return q;
}

std::size_t qrank(QMat a)
{
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c)
    {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r)
        {
            if (r == rank || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

QMat qmul(const QMat& a, const QMat& b, std::size_t inner)
{
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
    QMat c(n, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

bool qzero(const QMat& a)
{
    for (const auto& r : a)
        for (const auto& x : r)
            if (x != 0) return false;
    return true;
}

QMat qhcat(const QMat& a, const QMat& b)
{
    QMat c = a;
    if (c.empty()) return b;
    for (std::size_t i = 0; i < c.size(); ++i) c[i].insert(c[i].end(), b[i].begin(), b[i].end());
    return c;
}

/** Exactness of 0 -> P_n -> ... -> P_0 -> B -> 0 over Q, with equivariance. */
bool fd_horseshoe_oracle(const FdResolution<Rational>& res, const Rep<Rational>& b, std::string& why)
{
    const std::size_t n = res.terms.size();
    const QMat eps = to_q(res.augmentation);
    if (qrank(eps) != static_cast<std::size_t>(b.dim()))
    {
        why = "augmentation not surjective";
        return false;
    }
    std::vector<QMat> d(n + 1);   // d[i]: P_i -> P_{i-1}
    for (std::size_t i = 1; i < n; ++i) d[i] = to_q(res.differential(static_cast<Index>(i)));
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto pi = static_cast<std::size_t>(res.terms[i].dim());
        const std::size_t rank_out = i == 0 ? qrank(eps) : qrank(d[i]);
        const std::size_t rank_in = i + 1 < n ? qrank(d[i + 1]) : 0;
        if (pi - rank_out != rank_in)
        {
            why = "homology at P" + std::to_string(i) + " has dimension " + std::to_string(pi - rank_out - rank_in);
            return false;
        }
        if (i + 1 < n)
        {
            const QMat& out = i == 0 ? eps : d[i];
            if (!qzero(qmul(out, d[i + 1], pi)))
            {
                why = "d^2 != 0 at P" + std::to_string(i);
                return false;
            }
        }
        // equivariance
        const auto& act_p = res.terms[i].actions();
        const auto& act_t = i == 0 ? b.actions() : res.terms[i - 1].actions();
        const QMat& f = i == 0 ? eps : d[i];
        for (std::size_t k = 0; k < act_p.size(); ++k)
        {
            const QMat lhs = qmul(f, to_q(act_p[k]), pi);
            const QMat rhs = qmul(to_q(act_t[k]), f, f.size());
            if (lhs != rhs)
            {
                why = "map at P" + std::to_string(i) + " is not a module map";
                return false;
            }
        }
    }
    return true;
}

/** Exactness after tensoring with Q of a free Z-complex resolving coker(rel). */
bool pid_horseshoe_oracle(const PidResolution<IntegerDomain>& res, const Mat<Integer>& rel, std::string& why)
{
    const std::size_t g = static_cast<std::size_t>(rel.rows());
    const QMat eps = to_q(res.augmentation), q = to_q(rel);
    const std::size_t free_rank = g - qrank(q);
    if (qrank(qhcat(eps, q)) != g)
    {
        why = "augmentation not surjective over Q";
        return false;
    }
    const std::size_t n = static_cast<std::size_t>(res.length() + 1);
    std::vector<QMat> d(n + 1);
    for (std::size_t i = 1; i < n; ++i) d[i] = to_q(res.differentials[i - 1]);
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto pi = static_cast<std::size_t>(res.rank(static_cast<Index>(i)));
        // rank of P_0 -> B (x) Q equals dim B (x) Q when surjective
        const std::size_t rank_out = i == 0 ? free_rank : qrank(d[i]);
        const std::size_t rank_in = i + 1 < n ? qrank(d[i + 1]) : 0;
        if (pi - rank_out != rank_in)
        {
            why = "rational homology at P" + std::to_string(i);
            return false;
        }
        if (i >= 1 && i + 1 < n && !qzero(qmul(d[i], d[i + 1], pi)))
        {
            why = "d^2 != 0";
            return false;
        }
    }
    if (n >= 2)
    {
        // eps * d1 lands in the relation lattice: rank does not grow
        const QMat ed = qmul(eps, d[1], static_cast<std::size_t>(res.rank(0)));
        if (qrank(qhcat(q, ed)) != qrank(q))
        {
            why = "eps d1 not in the relations";
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

RingPtr dual_numbers(FieldKind k, const std::string& name)
{
    AlgebraTable t;
    t.field = k;
    t.name = name;
    t.labels = {"1", "e"};
    t.c.assign(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
    t.c[0][0][0] = 1;
    t.c[0][1][1] = 1;
    t.c[1][0][1] = 1;
    t.unit = {1, 0};
    return make_fd_algebra(t);
}

RingPtr example_ring() { return make_triangular_ring(dual_numbers(FieldKind::Q, "R0"), make_field(FieldKind::Q), {}, "T"); }

Module example_module(const RingPtr& t)
{
    return module_triple(t, module_zero(t->corner_r), module_simple(t->corner_s, 0), std::nullopt);
}

using Check = std::function<void(const std::string&, bool)>;

struct Ctx
{
    const AcceptanceOptions& opt;
    Criterion& c;
    int violations = 0;

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
        {
            ++violations;
            if (c.notes.size() < 8) c.notes.push_back("violated: " + what);
        }
    }
};

void criterion1(Ctx& x)
{
    const RingPtr t = example_ring();
    const Module l = example_module(t);
    const DimResult d = projective_dimension(l, x.opt.cap);
    x.expect(d.finite() && d.n == 1, "pd_T(L) = Finite(1), got " + d.text());
    const auto& terms = d.certificate.terms;
    x.expect(terms.size() == 2 && terms[0] == "P2" && terms[1] == "P1",
             "resolution 0 -> P1 -> P2 -> L -> 0");
    x.expect(d.certificate.certified, "resolution certified");
    const NonSplitReport ns = non_split_certificate(ses_syzygy(l, x.opt.cap));
    x.expect(!ns.split, "0 -> P1 -> P2 -> L -> 0 is nonsplit");
    const FpdCertificate f = fpd_bounds(t, FpdOptions{x.opt.cap, x.opt.seed, 200});
    x.expect(f.lower == 1 && f.upper && *f.upper == 1 && f.exact, "fPD(T) = [1, 1] exact, got " + f.interval());
    x.c.notes.push_back("pd_T(L) = " + d.text() + "; " + (ns.split ? "split" : "nonsplit") + "; fPD(T) = " + f.interval());
}

void criterion2(Ctx& x)
{
    const RingPtr r = dual_numbers(FieldKind::Q, "R0");
    const FpdCertificate f = fpd_bounds(r, FpdOptions{x.opt.cap, x.opt.seed, 200});
    x.expect(f.lower == 0 && f.upper && *f.upper == 0 && f.rule == UpperRule::SelfInjective,
             "fPD(k[e]/(e^2)) = [0, 0] by the socle rule, got " + f.interval() + " by " + to_string(f.rule));
    const ResolutionSummary s = resolve(module_residue(r), x.opt.cap);
    x.expect(s.status == ResolutionStatus::InfiniteCertified && s.period_length == 1,
             "resolution of k is InfiniteCertified with period 1");
    x.c.notes.push_back("fPD = " + f.interval() + " (" + to_string(f.rule) + "); k: " + to_string(s.status) + " period "
                        + std::to_string(s.period_length));
}

void criterion3(Ctx& x)
{
    const FpdOptions fo{x.opt.cap, x.opt.seed, 200};
    for (int m = 1; m <= 3; ++m)
    {
        const RingPtr s = make_koszul(FieldKind::Q, m);
        const TheoremReport rep = polynomial_theorem_check(FieldKind::Q, m, fo);
        x.expect(rep.pass, "polynomial check m = " + std::to_string(m));
        const FpdCertificate f = fpd_bounds(s, fo);
        x.expect(f.exact && f.lower == m, "fPD(Q[x1..x" + std::to_string(m) + "]) = " + std::to_string(m));
        const Module k = module_residue(s);
        x.expect(!tor(m, k, k, x.opt.cap).is_zero(), "tor_m(k, k) != 0");
        x.expect(tor(m + 1, k, k, x.opt.cap).is_zero(), "tor_(m+1)(k, k) = 0");
        const ResolutionSummary res = resolve(k, x.opt.cap);
        std::vector<Index> binom{1};
        for (int i = 1; i <= m; ++i) binom.push_back(binom.back() * (m - i + 1) / i);
        x.expect(res.ranks == binom, "Koszul ranks are binomial for m = " + std::to_string(m));
    }
}

void criterion4(Ctx& x)
{
    const FpdOptions fo{x.opt.cap, x.opt.seed, 200};
    const std::vector<std::pair<RingPtr, std::string>> cases{{make_integers(), "4"},
                                                             {make_polypid(FieldKind::Q), "x"}};
    for (const auto& [r, a] : cases)
    {
        const TheoremReport rep = quotient_theorem_check(r, a, fo);
        x.expect(rep.pass, "quotient check for " + r->label + ", a = " + a);
        const FpdCertificate fbar = fpd_bounds(make_quotient(r, a), fo);
        x.expect(fbar.exact && fbar.lower == 0, "fPD(R/(a)) = 0 certified");
        const DimResult w = projective_dimension(module_cyclic(r, {a}), x.opt.cap);
        x.expect(w.finite() && w.n == 1, "witness R/(a) has pd_R = 1");
        const FpdCertificate f = fpd_bounds(r, fo);
        x.expect(f.exact && f.lower == 1, "fPD(R) = [1, 1]");
    }
}

void criterion5(Ctx& x)
{
    const FpdOptions fo{x.opt.cap, x.opt.seed, 200};
    std::vector<RingPtr> rings{example_ring(), make_utn_ring(make_field(FieldKind::Q), 2),
                               make_utn_ring(make_field(FieldKind::Q), 3)};
    Rng g(x.opt.seed ^ 5);
    for (int i = 0; i < 10; ++i) rings.push_back(gen::random_triangular(i % 2 ? FieldKind::F2 : FieldKind::Q, g));
    int transports = 0;
    for (const auto& t : rings)
    {
        try
        {
            const TheoremReport rep = triangular_bounds_check(t, fo);
            x.expect(rep.pass, "triangular check for " + t->label + " (" + field_name(t->field) + ")");
            for (const auto& c : rep.certificates)
                if (c.find("induce") != std::string::npos)
                {
                    ++transports;
                    x.expect(c.size() >= 4 && c.substr(c.size() - 4) == ": ok", c);
                }
        }
        catch (const std::exception& ex)
        {
            x.expect(false, t->label + ": " + ex.what());
        }
    }
    x.c.notes.push_back(std::to_string(rings.size()) + " rings, " + std::to_string(transports)
                        + " corner-transport equalities");
}

void criterion6(Ctx& x)
{
    const Index cap = x.opt.cap;
    const std::vector<RingPtr> rings{make_integers(), make_polypid(FieldKind::Q),
                                     make_utn_ring(make_field(FieldKind::Q), 2)};
    int oracles = 0, sequences = 0;
    for (std::size_t ri = 0; ri < rings.size(); ++ri)
    {
        const RingPtr& r = rings[ri];
        Rng g(x.opt.seed + 6 * 1000 + ri);
        for (int i = 0; i < 100; ++i)
        {
            const Ses s = gen::random_ses(r, g);
            const std::string tag = r->label + " #" + std::to_string(i) + " (" + s.origin + ")";
            bool ok = false;
            verify_ses(s, ok);
            x.expect(ok, tag + ": generated sequence is exact");
            ++sequences;
            const Membership a = fpr_membership(s.a, cap).verdict, b = fpr_membership(s.b, cap).verdict,
                             c = fpr_membership(s.c, cap).verdict;
            const bool b_proj = [&] {
                const DimResult d = projective_dimension(s.b, cap);
                return d.finite() && d.n <= 0;
            }();
            const auto yes = Membership::Yes;
            if (b_proj && a != Membership::Unknown && c != Membership::Unknown)
                x.expect((a == yes) == (c == yes), tag + ": (1)(a)");
            if (a == yes && c == yes) x.expect(b == yes, tag + ": (1)(b)");
            if (a == yes && b == yes) x.expect(c == yes, tag + ": (1)(c)");
            if (b == yes && c == yes) x.expect(a == yes, tag + ": (1)(d)");
            // horseshoe with an independent exactness oracle
            std::string why;
            if (r->kind == RingKind::Integers)
            {
                const auto& bi = std::get<IntModule>(s.b.data);
                auto res = horseshoe(bi, std::get<Mat<Integer>>(*s.iota), std::get<Mat<Integer>>(*s.pi),
                                     pid_resolution(std::get<IntModule>(s.a.data)),
                                     pid_resolution(std::get<IntModule>(s.c.data)));
                x.expect(pid_horseshoe_oracle(res, bi.relations(), why), tag + ": horseshoe " + why);
                ++oracles;
            }
            else if (r->is_fd())
            {
                const auto& bi = std::get<Rep<Rational>>(s.b.data);
                auto res = horseshoe(bi, std::get<Mat<Rational>>(*s.iota), std::get<Mat<Rational>>(*s.pi),
                                     minimal_resolution(std::get<Rep<Rational>>(s.a.data), cap),
                                     minimal_resolution(std::get<Rep<Rational>>(s.c.data), cap));
                Index total = bi.dim();
                for (const auto& t : res.terms) total += t.dim();
                if (total <= 50)
                {
                    x.expect(fd_horseshoe_oracle(res, bi, why), tag + ": horseshoe " + why);
                    ++oracles;
                }
            }
            else
            {
                const ResolutionSummary h = horseshoe_resolution(s, cap);
                bool all = true;
                for (const auto& chk : h.checks) all = all && chk.find("FAILED") == std::string::npos;
                x.expect(all, tag + ": horseshoe self-checks");
            }
        }
    }
    x.c.notes.push_back(std::to_string(sequences) + " sequences, " + std::to_string(oracles) + " oracle-checked horseshoes");
}

void criterion7(Ctx& x)
{
    const Index cap = x.opt.cap;
    const std::vector<RingPtr> rings{make_integers(),         make_local_integers(3),    make_polypid(FieldKind::Q),
                                     make_koszul(FieldKind::Q, 2), make_utn_ring(make_field(FieldKind::Q), 2),
                                     example_ring()};
    int sequences = 0, pairs = 0;
    for (std::size_t ri = 0; ri < rings.size(); ++ri)
    {
        const RingPtr& r = rings[ri];
        const WitnessFamily w = default_family(r, cap);
        Rng g(x.opt.seed + 7 * 1000 + ri);
        auto d = [&](const Module& m) { return ft_flat_dim(m, w, cap).d; };
        for (int i = 0; i < 100; ++i)
        {
            const std::string tag = r->label + " #" + std::to_string(i);
            try
            {
                const Ses s = gen::random_ses(r, g);
                const Index da = d(s.a), db = d(s.b), dc = d(s.c);
                x.expect(dc <= 1 + std::max(da, db), tag + ": d(C) <= 1 + max(d(A), d(B))");
                if (db < dc) x.expect(da == dc - 1, tag + ": d(B) < d(C) => d(A) = d(C) - 1");
                ++sequences;
            }
            catch (const std::exception& ex)
            {
                x.expect(false, tag + ": " + ex.what());
            }
        }
        for (int i = 0; i < 50; ++i)
        {
            const std::string tag = r->label + " pair #" + std::to_string(i);
            try
            {
                const Module a = gen::random_module(r, g), b = gen::random_module(r, g);
                x.expect(d(direct_sum({a, b})) == std::max(d(a), d(b)), tag + ": d(A + B) = max(d(A), d(B))");
                ++pairs;
            }
            catch (const std::exception& ex)
            {
                x.expect(false, tag + ": " + ex.what());
            }
        }
    }
    x.c.notes.push_back(std::to_string(sequences) + " sequences, " + std::to_string(pairs) + " pairs over "
                        + std::to_string(rings.size()) + " backends");
}

void criterion8(Ctx& x)
{
    const Index cap = x.opt.cap;
    const RingPtr z = make_integers();
    const WitnessFamily w = default_family(z, cap);
    Rng g(x.opt.seed + 8);
    int done = 0;
    for (int tries = 0; done < 20 && tries < 2000; ++tries)
    {
        const Module m = gen::random_module(z, g), xm = gen::random_module(z, g);
        if (tor(1, m, xm, cap).is_zero() || ft_flat_dim(m, w, cap).d != 1) continue;
        try
        {
            const WitnessShiftResult r = witness_shift(m, xm, 1, cap);
            x.expect(tor(1, m, r.n, cap).is_zero() && !tor(0, m, r.n, cap).is_zero(),
                     "shift over Z: Tor_1 = 0, Tor_0 != 0 for " + m.describe() + ", " + xm.describe());
        }
        catch (const std::exception& ex)
        {
            x.expect(false, std::string("shift over Z: ") + ex.what());
        }
        ++done;
    }
    x.expect(done == 20, "found 20 instances over Z");
    const RingPtr s = make_koszul(FieldKind::Q, 2);
    const Module k = module_residue(s);
    try
    {
        const WitnessShiftResult r = witness_shift(k, k, 2, cap);
        x.expect(tor(2, k, r.n, cap).is_zero() && !tor(1, k, r.n, cap).is_zero(), "Koszul k[x,y] shift");
    }
    catch (const std::exception& ex)
    {
        x.expect(false, std::string("Koszul shift: ") + ex.what());
    }
    x.c.notes.push_back(std::to_string(done) + " instances over Z and the k[x,y] instance");
}

void criterion9(Ctx& x)
{
    const RingPtr z = make_integers();
    Rng g(x.opt.seed + 9);
    int checks = 0;
    for (int i = 0; i < 20; ++i)
    {
        const Module m = gen::random_module(z, g), n = gen::random_module(z, g);
        for (int p : {2, 3, 5})
            for (Index deg : {0, 1})
            {
                const auto r = check_tor_localization(m, n, deg, Integer(p));
                x.expect(r.pass, "Tor_" + std::to_string(deg) + " localization at " + std::to_string(p) + " for "
                                     + m.describe() + ", " + n.describe() + ": " + r.lhs + " vs " + r.rhs);
                ++checks;
            }
    }
    const TheoremReport rep = localization_inequality_check(z, {"2", "3", "5"}, FpdOptions{x.opt.cap, x.opt.seed, 200});
    x.expect(rep.pass, "localization inequality for Z at {2, 3, 5}");
    x.c.notes.push_back(std::to_string(checks) + " Tor localization checks");
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream b;
    b << in.rdbuf();
    return b.str();
}

void criterion10(Ctx& x)
{
    const fs::path dir(x.opt.fixtures_dir);
    if (!fs::is_directory(dir / "scripts"))
    {
        x.expect(false, "fixtures directory " + (dir / "scripts").string() + " not found");
        return;
    }
    std::vector<fs::path> scripts, errors;
    for (const auto& e : fs::directory_iterator(dir / "scripts"))
        if (e.path().extension() == ".fd") scripts.push_back(e.path());
    if (fs::is_directory(dir / "errors"))
        for (const auto& e : fs::directory_iterator(dir / "errors"))
            if (e.path().extension() == ".fd") errors.push_back(e.path());
    std::sort(scripts.begin(), scripts.end());
    std::sort(errors.begin(), errors.end());
    x.expect(scripts.size() >= 15, "at least 15 golden scripts (found " + std::to_string(scripts.size()) + ")");
    bool has_example = false;
    for (const auto& p : scripts)
    {
        const std::string name = p.filename().string();
        const std::string text = slurp(p);
        has_example = has_example || text.find("triple(T; zero, simple, zero)") != std::string::npos;
        try
        {
            const dsl::Script s = dsl::parse_script(text);
            dsl::validate(s);
            x.expect(dsl::same_script(s, dsl::parse_script(dsl::print_script(s))), name + ": round trip");
            std::string first;
            for (int jobs : {1, 4, 1})
            {
                dsl::RunOptions o;
                o.cap = x.opt.cap;
                o.seed = x.opt.seed;
                o.jobs = jobs;
                o.script_name = name;
                o.base_dir = p.parent_path().string();
                const std::string json = dsl::render_json(dsl::run_script(s, o));
                if (first.empty()) first = json;
                x.expect(json == first, name + ": identical JSON with --jobs " + std::to_string(jobs));
            }
            fs::path golden = p;
            golden.replace_extension(".json");
            x.expect(fs::exists(golden) && slurp(golden) == first, name + ": matches " + golden.filename().string());
        }
        catch (const dsl::ScriptError& e)
        {
            x.expect(false, name + ": unexpected " + e.kind + " error at " + std::to_string(e.span.line) + ":"
                                + std::to_string(e.span.col));
        }
    }
    x.expect(has_example, "corpus contains the triangular example script");
    for (const auto& p : errors)
    {
        const std::string name = p.filename().string();
        fs::path golden = p;
        golden.replace_extension(".json");
        std::string got;
        try
        {
            dsl::validate(dsl::parse_script(slurp(p)));
            got = "no error";
        }
        catch (const dsl::ScriptError& e)
        {
            got = dsl::render_error_json(e, name);
        }
        x.expect(fs::exists(golden) && slurp(golden) == got, name + ": error position matches " + golden.filename().string());
    }
    x.c.notes.push_back(std::to_string(scripts.size()) + " scripts, " + std::to_string(errors.size())
                        + " parse-error fixtures");
}

struct Spec
{
    int id;
    const char* title;
    double limit;
    void (*run)(Ctx&);
};

const Spec specs[] = {
    {1, "worked triangular example: pd L = 1, nonsplit, fPD(T) = [1,1]", 1, criterion1},
    {2, "fPD(k[e]/(e^2)) = [0,0] by socle rule; k has period-1 resolution", 1, criterion2},
    {3, "polynomial theorem for m = 1, 2, 3 with Koszul ranks", 2, criterion3},
    {4, "quotient theorem for (Z, 4) and (k[x], x)", 1, criterion4},
    {5, "triangular sandwich on T, UT2, UT3 and 10 random triples", 10, criterion5},
    {6, "FPR closure implications and horseshoe oracle, 100 SES per backend", 60, criterion6},
    {7, "family-relative FT-fd SES inequalities and direct sums", 60, criterion7},
    {8, "witness shift postconditions over Z and k[x,y]", 10, criterion8},
    {9, "Tor localization and the localization inequality over Z", 10, criterion9},
    {10, "golden corpus: identical JSON across runs and jobs; error positions", 5, criterion10},
};

}   // namespace

std::string Criterion::line() const
{
    std::string s = "criterion " + std::to_string(id) + (id < 10 ? "  " : " ") + (pass() ? "PASS" : "FAIL") + "  "
                    + title + "  [" + fmt_seconds(seconds) + " s, limit " + fmt_seconds(limit) + " s]";
    if (!correct) s += "  (incorrect)";
    else if (!pass()) s += "  (over time)";
    for (const auto& n : notes) s += "\n    " + n;
    return s;
}

std::vector<Criterion> run_acceptance(const AcceptanceOptions& opt)
{
    std::vector<Criterion> out;
    for (const auto& sp : specs)
    {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), sp.id) == opt.only.end()) continue;
        Criterion c;
        c.id = sp.id;
        c.title = sp.title;
        c.limit = sp.limit;
        Ctx ctx{opt, c};
        const auto t0 = std::chrono::steady_clock::now();
        try
        {
            sp.run(ctx);
        }
        catch (const std::exception& ex)
        {
            ctx.expect(false, std::string("exception: ") + ex.what());
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.correct = ctx.violations == 0;
        if (ctx.violations > 0) c.notes.push_back(std::to_string(ctx.violations) + " violation(s)");
        out.push_back(std::move(c));
    }
    return out;
}

}   // namespace findim
