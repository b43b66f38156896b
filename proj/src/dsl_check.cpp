#include <map>
#include <set>

#include "findim/dsl.hpp"

namespace findim::dsl {

namespace {

// Role letters:
//   R ring, M module, S ses, W family, B bimodule, T triple slot,
//   E element expression, I integer, F field name, X matrix, s string,
//   K keyed matrices (key=[[..]], zero or more), P a matrix or the word zero.
// A trailing '?' makes the last role optional, '*' makes it one-or-more.
using Sig = std::vector<std::string>;

const std::map<std::string, Sig> ring_calls = {
    {"integers", {""}},   {"field", {"F"}},        {"localint", {"I"}},  {"modint", {"I"}},
    {"polypid", {"F"}},   {"koszul", {"FI"}},      {"fdalgebra", {"F"}}, {"triangular", {"RRB"}},
    {"utn", {"RI"}},      {"quotient", {"RE"}},    {"opposite", {"R"}},  {"load", {"s"}},
};

const std::map<std::string, Sig> bimodule_calls = {{"regular", {"R"}}, {"bimodule", {"I", "K"}}};

const std::map<std::string, Sig> module_calls = {
    {"zero", {"R"}},         {"regular", {"R"}},        {"free", {"RI"}},         {"cyclic", {"R", "E*"}},
    {"presented", {"R", "X"}}, {"simple", {"RI"}},      {"projective", {"RI"}},   {"residue", {"R"}},
    {"quot", {"R", "I*"}},   {"monomial", {"R", "E*"}}, {"ideal", {"R", "E*"}},   {"rep", {"R", "I", "K"}},
    {"triple", {"R", "TTP?"}}, {"sum", {"M*"}},         {"syzygy", {"MI"}},       {"restrict", {"MR"}},
    {"localize", {"MI"}},    {"cornere", {"M"}},        {"cornerf", {"M"}},       {"induceleft", {"RM"}},
    {"induceright", {"RM"}},
};

const std::map<std::string, Sig> ses_calls = {
    {"tripleses", {"M"}}, {"radical", {"M"}}, {"syzygy", {"M"}}, {"split", {"MM"}}};

const std::set<std::string> builtin_rings = {"Z", "integers", "Q", "F2", "F3"};
const std::set<std::string> fields = {"Q", "F2", "F3"};
const std::set<std::string> slot_words = {"zero", "simple", "regular"};

std::string role_name(char r)
{
    switch (r)
    {
        case 'R': return "a ring";
        case 'M': return "a module";
        case 'S': return "a short exact sequence";
        case 'W': return "a family";
        case 'B': return "a bimodule";
        case 'T': return "a triple component";
        case 'E': return "an element";
        case 'I': return "an integer";
        case 'F': return "a field name (Q, F2, F3)";
        case 'X': return "a matrix";
        case 's': return "a string";
        case 'K': return "key=matrix arguments";
        case 'P': return "a matrix or zero";
    }
    return "?";
}

std::string kind_word(const std::string& keyword)
{
    if (keyword == "ring") return "a ring";
    if (keyword == "module") return "a module";
    if (keyword == "ses") return "a short exact sequence";
    return "a family";
}

class Checker
{
    public:
        void script(const Script& s)
        {
            std::map<std::string, int> later;
            for (const auto& st : s.statements)
                if (st.kind == Statement::Kind::Definition) later.emplace(st.name, st.span.line);
            later_ = later;
            for (const auto& st : s.statements)
            {
                if (st.kind == Statement::Kind::Definition)
                {
                    definition(st);
                    if (defined_.count(st.name))
                        throw ScriptError("name", st.name_span,
                                          "duplicate definition of '" + st.name + "' (first defined on line "
                                              + std::to_string(lines_[st.name]) + ")");
                    defined_[st.name] = st.keyword;
                    lines_[st.name] = st.span.line;
                }
                else
                    query(st);
            }
        }

    private:
        std::map<std::string, std::string> defined_;
        std::map<std::string, int> lines_;
        std::map<std::string, int> later_;

        [[noreturn]] static void sig(Span sp, const std::string& msg) { throw ScriptError("signature", sp, msg); }

        void name(const Expr& e, const std::string& keyword)
        {
            auto it = defined_.find(e.text);
            if (it == defined_.end())
            {
                auto l = later_.find(e.text);
                if (l != later_.end())
                    throw ScriptError("name", e.span,
                                      "'" + e.text + "' is used before its definition on line "
                                          + std::to_string(l->second));
                throw ScriptError("name", e.span, "undefined name '" + e.text + "'");
            }
            if (it->second != keyword)
                sig(e.span, "'" + e.text + "' is " + kind_word(it->second) + ", expected " + kind_word(keyword));
        }

        void definition(const Statement& st)
        {
            if (st.keyword == "ring") ring(*st.value);
            else if (st.keyword == "module") module(*st.value);
            else if (st.keyword == "ses") ses(*st.value);
            else family(*st.value);
        }

        void ring(const Expr& e)
        {
            if (e.kind == Expr::Kind::Ident)
            {
                if (builtin_rings.count(e.text) && !defined_.count(e.text)) return;
                name(e, "ring");
                return;
            }
            if (e.kind == Expr::Kind::Div)
            {
                ring(*e.kids[0]);
                element(*e.kids[1]);
                return;
            }
            if (e.kind != Expr::Kind::Call) sig(e.span, "expected a ring, found " + print_expr(e));
            call(e, ring_calls, "ring constructor");
            if (e.text == "fdalgebra" && !e.has_block) sig(e.span, "fdalgebra needs a {basis ...; ...} body");
            if (e.text != "fdalgebra" && e.has_block) sig(e.span, "only fdalgebra takes a body");
            if (e.text == "fdalgebra")
            {
                int bases = 0;
                for (const auto& b : e.block)
                    if (b.kind == BlockEntry::Kind::Basis) ++bases;
                if (bases != 1) sig(e.span, "fdalgebra needs exactly one basis entry");
            }
        }

        void module(const Expr& e)
        {
            if (e.kind == Expr::Kind::Ident)
            {
                name(e, "module");
                return;
            }
            if (e.kind == Expr::Kind::Div)
            {
                ring(*e.kids[0]);
                element(*e.kids[1]);
                return;
            }
            if (e.kind != Expr::Kind::Call) sig(e.span, "expected a module, found " + print_expr(e));
            if (e.has_block) sig(e.span, "module constructors take no body");
            call(e, module_calls, "module constructor");
        }

        void ses(const Expr& e)
        {
            if (e.kind == Expr::Kind::Ident)
            {
                name(e, "ses");
                return;
            }
            if (e.kind != Expr::Kind::Call) sig(e.span, "expected a short exact sequence, found " + print_expr(e));
            call(e, ses_calls, "ses constructor");
        }

        void family(const Expr& e)
        {
            if (e.kind == Expr::Kind::Ident)
            {
                name(e, "family");
                return;
            }
            if (e.kind == Expr::Kind::Set)
            {
                if (e.kids.empty()) sig(e.span, "a family needs at least one member");
                for (const auto& k : e.kids) module(*k);
                return;
            }
            if (e.kind == Expr::Kind::Call && e.text == "default")
            {
                call(e, {{"default", {"R"}}}, "family constructor");
                return;
            }
            sig(e.span, "expected a family {M, ...} or default(R)");
        }

        void bimodule(const Expr& e)
        {
            if (e.kind != Expr::Kind::Call) sig(e.span, "expected regular(R) or bimodule(dim; ...)");
            call(e, bimodule_calls, "bimodule constructor");
        }

        void element(const Expr& e)
        {
            switch (e.kind)
            {
                case Expr::Kind::Number:
                case Expr::Kind::Ident: return;
                case Expr::Kind::Neg:
                case Expr::Kind::Add:
                case Expr::Kind::Sub:
                case Expr::Kind::Mul:
                case Expr::Kind::Div:
                case Expr::Kind::Pow:
                    for (const auto& k : e.kids) element(*k);
                    return;
                default: sig(e.span, "expected an element, found " + print_expr(e));
            }
        }

        static void integer(const Expr& e)
        {
            if (e.kind == Expr::Kind::Number) return;
            if (e.kind == Expr::Kind::Neg && e.kids[0]->kind == Expr::Kind::Number) return;
            sig(e.span, "expected an integer, found " + print_expr(e));
        }

        void matrix(const Expr& e)
        {
            if (e.kind != Expr::Kind::List) sig(e.span, "expected a matrix [[...], ...]");
            for (const auto& row : e.kids)
            {
                if (row->kind != Expr::Kind::List) sig(row->span, "expected a matrix row [...]");
                if (row->kids.size() != e.kids[0]->kids.size()) sig(row->span, "matrix rows have different lengths");
                for (const auto& x : row->kids) element(*x);
            }
        }

        void role(char r, const Arg& a)
        {
            if (r == 'K')
            {
                if (a.style != Arg::Style::Equals) sig(a.span, "expected key=matrix");
                matrix(*a.value);
                return;
            }
            if (a.style != Arg::Style::Positional) sig(a.span, "unexpected keyword argument '" + a.key + "'");
            const Expr& e = *a.value;
            switch (r)
            {
                case 'R': ring(e); return;
                case 'M': module(e); return;
                case 'S': ses(e); return;
                case 'B': bimodule(e); return;
                case 'E': element(e); return;
                case 'I': integer(e); return;
                case 'X': matrix(e); return;
                case 'P':
                    if (e.kind == Expr::Kind::Ident && e.text == "zero") return;
                    matrix(e);
                    return;
                case 'T':
                    if (e.kind == Expr::Kind::Ident && slot_words.count(e.text)) return;
                    module(e);
                    return;
                case 'F':
                    if (e.kind == Expr::Kind::Ident && fields.count(e.text)) return;
                    sig(e.span, "expected " + role_name('F') + ", found " + print_expr(e));
                case 's':
                    if (e.kind == Expr::Kind::String) return;
                    sig(e.span, "expected a string, found " + print_expr(e));
            }
        }

        void group(const std::string& pattern, const std::vector<Arg>& args, const Expr& call, std::size_t g)
        {
            std::string base = pattern;
            const char suffix = !base.empty() && (base.back() == '*' || base.back() == '?') ? base.back() : 0;
            if (suffix) base.pop_back();
            const std::size_t none = std::string::npos;
            std::size_t least = base.size(), most = base.size();
            if (suffix == '*') most = none;
            if (suffix == '?') least = base.size() - 1;
            if (!suffix && !base.empty() && base.back() == 'K') least = base.size() - 1, most = none;
            if (args.size() < least || (most != none && args.size() > most))
            {
                std::string want = std::to_string(least);
                if (most == none) want = "at least " + want;
                else if (most != least) want += " or " + std::to_string(most);
                const Span sp = most != none && args.size() > most ? args[most].span : call.span;
                sig(sp, call.text + ": argument group " + std::to_string(g + 1) + " takes " + want + " argument"
                            + (want == "1" ? "" : "s") + ", got " + std::to_string(args.size()));
            }
            for (std::size_t i = 0; i < args.size(); ++i) role(base[std::min(i, base.size() - 1)], args[i]);
        }

        void call(const Expr& e, const std::map<std::string, Sig>& table, const std::string& what)
        {
            auto it = table.find(e.text);
            if (it == table.end())
            {
                std::string names;
                for (const auto& [k, v] : table) names += (names.empty() ? "" : ", ") + k;
                sig(e.span, "unknown " + what + " '" + e.text + "' (known: " + names + ")");
            }
            const Sig& s = it->second;
            if (e.groups.size() != s.size())
                sig(e.span, e.text + " takes " + std::to_string(s.size()) + " argument group"
                                + (s.size() == 1 ? "" : "s") + " separated by ';', got "
                                + std::to_string(e.groups.size()));
            for (std::size_t g = 0; g < s.size(); ++g) group(s[g], e.groups[g], e, g);
        }

        // --- queries ---------------------------------------------------------

        std::vector<const Arg*> positional(const Statement& st) const
        {
            std::vector<const Arg*> v;
            for (const auto& a : st.args)
                if (a.style == Arg::Style::Positional) v.push_back(&a);
            return v;
        }

        void arity(const Statement& st, const std::string& roles)
        {
            auto pos = positional(st);
            if (pos.size() != roles.size())
            {
                const Span sp = pos.size() > roles.size() ? pos[roles.size()]->span : st.span;
                sig(sp, st.keyword + (st.check.empty() ? "" : " " + st.check) + " takes "
                            + std::to_string(roles.size()) + " positional argument" + (roles.size() == 1 ? "" : "s")
                            + ", got " + std::to_string(pos.size()));
            }
            for (std::size_t i = 0; i < roles.size(); ++i) role(roles[i], *pos[i]);
        }

        void keys(const Statement& st, const std::map<std::string, char>& allowed, const std::set<std::string>& required)
        {
            std::set<std::string> seen;
            for (const auto& a : st.args)
            {
                if (a.style == Arg::Style::Positional) continue;
                auto it = allowed.find(a.key);
                if (it == allowed.end())
                    sig(a.span, "unexpected argument '" + a.key + "' for " + st.keyword
                                    + (st.check.empty() ? "" : " " + st.check));
                if (!seen.insert(a.key).second) sig(a.span, "argument '" + a.key + "' given twice");
                keyed(it->second, a);
            }
            for (const auto& r : required)
                if (!seen.count(r)) sig(st.span, st.keyword + " " + st.check + " needs " + r + "=...");
        }

        void keyed(char r, const Arg& a)
        {
            const Expr& e = *a.value;
            if (r == 'L')   // integer or element list
            {
                if (e.kind == Expr::Kind::Tuple)
                    for (const auto& k : e.kids) element(*k);
                else
                    element(e);
                return;
            }
            if (r == 'V')   // list of integers
            {
                if (e.kind != Expr::Kind::List) sig(e.span, "expected a list [lower, upper]");
                for (const auto& k : e.kids)
                    if (!(k->kind == Expr::Kind::Ident && k->text == "unknown")) integer(*k);
                return;
            }
            if (r == 'P')   // integer or inf
            {
                if (e.kind == Expr::Kind::Ident && (e.text == "inf" || e.text == "unknown")) return;
                integer(e);
                return;
            }
            Arg b = a;
            b.style = Arg::Style::Positional;
            role(r, b);
        }

        void query(const Statement& st)
        {
            const std::string& k = st.keyword;
            if (k == "check")
            {
                check(st);
                return;
            }
            if (k == "pd" || k == "resolve" || k == "fpr") arity(st, "M");
            else if (k == "fpd") arity(st, "R");
            else if (k == "nonsplit" || k == "horseshoe") arity(st, "S");
            else if (k == "iso") arity(st, "MM");
            else if (k == "tor" || k == "ext") arity(st, "IMM");
            else if (k == "ftfd" || k == "ftflat") arity(st, "M");
            else if (k == "shift") arity(st, "MMI");
            std::map<std::string, char> words;
            if (k == "tor" || k == "ext") words["over"] = 'R';
            if (k == "ftfd" || k == "ftflat") words["family"] = 'W';
            std::set<std::string> seen;
            for (const auto& a : st.args)
            {
                if (a.style == Arg::Style::Positional) continue;
                if (a.style == Arg::Style::Equals || !words.count(a.key))
                    sig(a.span, "unexpected argument '" + a.key + "' for " + k);
                if (!seen.insert(a.key).second) sig(a.span, "argument '" + a.key + "' given twice");
                if (words[a.key] == 'W') family(*a.value);
                else ring(*a.value);
            }
        }

        void check(const Statement& st)
        {
            const std::string& c = st.check;
            if (c == "quotient")
            {
                arity(st, "");
                keys(st, {{"R", 'R'}, {"a", 'E'}}, {"R", "a"});
            }
            else if (c == "polynomial")
            {
                arity(st, "");
                keys(st, {{"field", 'F'}, {"m", 'I'}}, {"field", "m"});
            }
            else if (c == "triangular")
            {
                arity(st, "R");
                keys(st, {}, {});
            }
            else if (c == "localization")
            {
                arity(st, "R");
                keys(st, {{"primes", 'L'}}, {"primes"});
            }
            else if (c == "residue")
            {
                arity(st, "R");
                keys(st, {{"n", 'I'}}, {"n"});
            }
            else if (c == "torloc")
            {
                arity(st, "MM");
                keys(st, {{"n", 'I'}, {"p", 'I'}}, {"n", "p"});
            }
            else if (c == "ses")
            {
                arity(st, "S");
                keys(st, {}, {});
            }
            else if (c == "nonsplit")
            {
                arity(st, "S");
                keys(st, {}, {});
            }
            else if (c == "pd")
            {
                arity(st, "M");
                keys(st, {{"expect", 'P'}}, {"expect"});
            }
            else if (c == "fpd")
            {
                arity(st, "R");
                keys(st, {{"expect", 'V'}}, {"expect"});
            }
            else
                throw ScriptError("signature", st.name_span,
                                  "unknown check '" + c
                                      + "' (known: fpd, localization, nonsplit, pd, polynomial, quotient, residue, ses, "
                                        "torloc, triangular)");
        }
};

}   // namespace

void validate(const Script& s) { Checker().script(s); }

}   // namespace findim::dsl
