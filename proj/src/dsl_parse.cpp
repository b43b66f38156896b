#include <algorithm>
#include <set>

#include "findim/dsl.hpp"

namespace findim::dsl {

namespace {

enum class Tok { Ident, Number, String, Sym, Newline, End };

struct Token
{
    Tok kind = Tok::End;
    std::string text;
    Span span;
    bool space_before = false;
};

std::string describe(const Token& t)
{
    switch (t.kind)
    {
        case Tok::Ident: return "identifier '" + t.text + "'";
        case Tok::Number: return "number '" + t.text + "'";
        case Tok::String: return "string";
        case Tok::Sym: return "'" + t.text + "'";
        case Tok::Newline: return "end of line";
        case Tok::End: return "end of input";
    }
    return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }

std::vector<Token> lex(const std::string& src)
{
    std::vector<Token> out;
    int line = 1, col = 1, depth = 0;
    bool space = true;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i)
            if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) ++col;
    };
    while (i < src.size())
    {
        const char c = src[i];
        if (c == '\n')
        {
            if (depth == 0) out.push_back({Tok::Newline, "", {line, col}, space});
            ++i;
            ++line;
            col = 1;
            space = true;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r')
        {
            advance(1);
            space = true;
            continue;
        }
        if (c == '#')
        {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.span = {line, col};
        t.space_before = space;
        space = false;
        if (ident_start(c))
        {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            t.kind = Tok::Ident;
            t.text = src.substr(i, j - i);
            advance(j - i);
        }
        else if (std::isdigit(static_cast<unsigned char>(c)))
        {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Tok::Number;
            t.text = src.substr(i, j - i);
            advance(j - i);
        }
        else if (c == '"')
        {
            std::size_t j = i + 1;
            std::string s;
            while (j < src.size() && src[j] != '"' && src[j] != '\n')
            {
                if (src[j] == '\\' && j + 1 < src.size()) ++j;
                s += src[j++];
            }
            if (j >= src.size() || src[j] != '"')
                throw ScriptError("syntax", t.span, "unterminated string", {"'\"'"}, "end of line");
            t.kind = Tok::String;
            t.text = s;
            advance(j + 1 - i);
        }
        else if (std::string("()[]{},;=+-*/^").find(c) != std::string::npos)
        {
            t.kind = Tok::Sym;
            t.text = std::string(1, c);
            if (c == '(' || c == '[' || c == '{') ++depth;
            if ((c == ')' || c == ']' || c == '}') && depth > 0) --depth;
            advance(1);
        }
        else
        {
            std::string ch(1, c);
            std::size_t n = 1;
            while (i + n < src.size() && (static_cast<unsigned char>(src[i + n]) & 0xC0) == 0x80) ch += src[i + n++];
            throw ScriptError("syntax", t.span, "unexpected character '" + ch + "'", {}, "'" + ch + "'");
        }
        out.push_back(t);
    }
    if (depth == 0) out.push_back({Tok::Newline, "", {line, col}, true});
    out.push_back({Tok::End, "", {line, col}, true});
    return out;
}

const std::set<std::string> definition_keywords = {"ring", "module", "ses", "family"};
const std::set<std::string> query_keywords = {"pd",       "resolve", "fpr",   "tor",       "ext",   "ftfd",
                                              "ftflat",   "fpd",     "nonsplit", "shift",  "horseshoe", "iso",
                                              "check"};
const std::set<std::string> word_args = {"over", "family"};

std::vector<std::string> statement_keywords()
{
    std::vector<std::string> v;
    for (const auto& k : definition_keywords) v.push_back("'" + k + "'");
    for (const auto& k : query_keywords) v.push_back("'" + k + "'");
    std::sort(v.begin(), v.end());
    return v;
}

const std::vector<std::string> expression_start = {"'('", "'-'", "'['", "'{'", "identifier", "number", "string"};

class Parser
{
    public:
        explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

        Script script()
        {
            Script s;
            while (true)
            {
                while (peek().kind == Tok::Newline) ++p_;
                if (peek().kind == Tok::End) break;
                s.statements.push_back(statement());
            }
            return s;
        }

    private:
        std::vector<Token> t_;
        std::size_t p_ = 0;

        const Token& peek(std::size_t k = 0) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
        bool is_sym(const std::string& s, std::size_t k = 0) const
        {
            return peek(k).kind == Tok::Sym && peek(k).text == s;
        }

        [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what = "")
        {
            std::sort(expected.begin(), expected.end());
            expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
            std::string msg = what.empty() ? "unexpected " + describe(peek()) : what;
            throw ScriptError("syntax", peek().span, msg, expected, describe(peek()));
        }

        void expect_sym(const std::string& s)
        {
            if (!is_sym(s)) fail({"'" + s + "'"});
            ++p_;
        }

        void end_of_statement(std::vector<std::string> also)
        {
            if (peek().kind != Tok::Newline)
            {
                also.push_back("end of line");
                fail(also);
            }
            ++p_;
        }

        Statement statement()
        {
            const Token& head = peek();
            if (head.kind != Tok::Ident) fail(statement_keywords());
            Statement s;
            s.span = head.span;
            s.keyword = head.text;
            if (definition_keywords.count(head.text))
            {
                ++p_;
                s.kind = Statement::Kind::Definition;
                if (peek().kind != Tok::Ident) fail({"identifier"});
                s.name = peek().text;
                s.name_span = peek().span;
                if (definition_keywords.count(s.name) || query_keywords.count(s.name) || word_args.count(s.name))
                    throw ScriptError("syntax", s.name_span, "'" + s.name + "' is a reserved word", {"identifier"},
                                      describe(peek()));
                ++p_;
                expect_sym("=");
                s.value = expr();
                end_of_statement({"operator"});
                return s;
            }
            if (!query_keywords.count(head.text)) fail(statement_keywords());
            ++p_;
            s.kind = Statement::Kind::Query;
            if (s.keyword == "check")
            {
                if (peek().kind != Tok::Ident) fail({"check kind"});
                s.check = peek().text;
                s.name_span = peek().span;
                ++p_;
            }
            while (peek().kind != Tok::Newline)
            {
                const Token& a = peek();
                Arg arg;
                arg.span = a.span;
                if (a.kind == Tok::Ident && word_args.count(a.text) && s.keyword != "check")
                {
                    ++p_;
                    arg.style = Arg::Style::Word;
                    arg.key = a.text;
                    arg.value = expr();
                }
                else if (a.kind == Tok::Ident && is_sym("=", 1))
                {
                    p_ += 2;
                    arg.style = Arg::Style::Equals;
                    arg.key = a.text;
                    arg.value = tuple();
                }
                else
                {
                    if (!starts_expr()) fail(with_end(expression_start));
                    arg.value = expr();
                }
                s.args.push_back(arg);
            }
            ++p_;
            return s;
        }

        static std::vector<std::string> with_end(std::vector<std::string> v)
        {
            v.push_back("end of line");
            return v;
        }

        bool starts_expr() const
        {
            const Token& t = peek();
            return t.kind == Tok::Ident || t.kind == Tok::Number || t.kind == Tok::String
                   || (t.kind == Tok::Sym && (t.text == "(" || t.text == "[" || t.text == "{" || t.text == "-"));
        }

        static ExprPtr node(Expr::Kind k, Span sp, std::vector<ExprPtr> kids = {}, std::string text = "")
        {
            auto e = std::make_shared<Expr>();
            e->kind = k;
            e->span = sp;
            e->kids = std::move(kids);
            e->text = std::move(text);
            return e;
        }

        // a, b, c as one value (used after key=)
        ExprPtr tuple()
        {
            Span sp = peek().span;
            std::vector<ExprPtr> items{expr()};
            while (is_sym(","))
            {
                ++p_;
                items.push_back(expr());
            }
            if (items.size() == 1) return items[0];
            return node(Expr::Kind::Tuple, sp, std::move(items));
        }

        ExprPtr expr()
        {
            Span sp = peek().span;
            ExprPtr left;
            if (is_sym("-"))
            {
                ++p_;
                left = node(Expr::Kind::Neg, sp, {product()});
            }
            else
                left = product();
            while (is_sym("+") || is_sym("-"))
            {
                Span osp = peek().span;
                const bool plus = peek().text == "+";
                ++p_;
                left = node(plus ? Expr::Kind::Add : Expr::Kind::Sub, osp, {left, product()});
            }
            return left;
        }

        ExprPtr product()
        {
            ExprPtr left = power();
            while (is_sym("*") || is_sym("/"))
            {
                Span osp = peek().span;
                const bool mul = peek().text == "*";
                ++p_;
                left = node(mul ? Expr::Kind::Mul : Expr::Kind::Div, osp, {left, power()});
            }
            return left;
        }

        ExprPtr power()
        {
            ExprPtr base = primary();
            if (is_sym("^"))
            {
                Span osp = peek().span;
                ++p_;
                return node(Expr::Kind::Pow, osp, {base, power()});
            }
            return base;
        }

        ExprPtr primary()
        {
            const Token& t = peek();
            switch (t.kind)
            {
                case Tok::Number: ++p_; return node(Expr::Kind::Number, t.span, {}, t.text);
                case Tok::String: ++p_; return node(Expr::Kind::String, t.span, {}, t.text);
                case Tok::Ident:
                {
                    ++p_;
                    if (is_sym("(") && !peek().space_before) return call(t);
                    return node(Expr::Kind::Ident, t.span, {}, t.text);
                }
                case Tok::Sym:
                    if (t.text == "(")
                    {
                        ++p_;
                        ExprPtr e = expr();
                        if (!is_sym(")")) fail({"')'", "operator"});
                        ++p_;
                        return e;
                    }
                    if (t.text == "[" || t.text == "{")
                    {
                        const std::string close = t.text == "[" ? "]" : "}";
                        ++p_;
                        std::vector<ExprPtr> items;
                        if (!is_sym(close))
                        {
                            items.push_back(expr());
                            while (is_sym(","))
                            {
                                ++p_;
                                items.push_back(expr());
                            }
                        }
                        if (!is_sym(close)) fail({"','", "'" + close + "'", "operator"});
                        ++p_;
                        return node(t.text == "[" ? Expr::Kind::List : Expr::Kind::Set, t.span, std::move(items));
                    }
                    break;
                default: break;
            }
            fail(expression_start);
        }

        ExprPtr call(const Token& name)
        {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Call;
            e->text = name.text;
            e->span = name.span;
            expect_sym("(");
            e->groups.emplace_back();
            if (!is_sym(")"))
            {
                while (true)
                {
                    if (is_sym(";"))
                    {
                        ++p_;
                        e->groups.emplace_back();
                        continue;
                    }
                    Arg a;
                    a.span = peek().span;
                    if (peek().kind == Tok::Ident && is_sym("=", 1))
                    {
                        a.style = Arg::Style::Equals;
                        a.key = peek().text;
                        p_ += 2;
                    }
                    else if (!starts_expr())
                        fail(expression_start);
                    a.value = expr();
                    e->groups.back().push_back(a);
                    if (is_sym(","))
                    {
                        ++p_;
                        continue;
                    }
                    if (is_sym(";")) continue;
                    if (is_sym(")")) break;
                    fail({"','", "';'", "')'", "operator"});
                }
            }
            ++p_;
            if (is_sym("{"))
            {
                ++p_;
                e->has_block = true;
                while (true)
                {
                    e->block.push_back(block_entry());
                    if (is_sym(";"))
                    {
                        ++p_;
                        continue;
                    }
                    if (is_sym("}")) break;
                    fail({"';'", "'}'", "operator"});
                }
                ++p_;
            }
            return e;
        }

        BlockEntry block_entry()
        {
            BlockEntry b;
            b.span = peek().span;
            const Token& t = peek();
            const bool head = t.kind == Tok::Ident && (t.text == "basis" || t.text == "unit") && !is_sym("=", 1)
                              && !is_sym("*", 1);
            if (head && t.text == "basis")
            {
                ++p_;
                b.kind = BlockEntry::Kind::Basis;
                b.items.push_back(expr());
                while (is_sym(","))
                {
                    ++p_;
                    b.items.push_back(expr());
                }
                return b;
            }
            if (head && t.text == "unit")
            {
                ++p_;
                b.kind = BlockEntry::Kind::Unit;
                b.items.push_back(expr());
                return b;
            }
            if (!starts_expr()) fail({"'basis'", "'unit'", "expression"});
            b.kind = BlockEntry::Kind::Product;
            b.items.push_back(expr());
            if (!is_sym("=")) fail({"'='", "operator"});
            ++p_;
            b.items.push_back(expr());
            return b;
        }
};

int precedence(const Expr& e)
{
    switch (e.kind)
    {
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Neg: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Pow: return 3;
        case Expr::Kind::Tuple: return 0;
        default: return 4;
    }
}

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string print_arg(const Arg& a)
{
    switch (a.style)
    {
        case Arg::Style::Positional: return print_expr(*a.value);
        case Arg::Style::Equals: return a.key + "=" + print_expr(*a.value);
        case Arg::Style::Word: return a.key + " " + print_expr(*a.value);
    }
    return "";
}

std::string wrap(const Expr& e, bool parens)
{
    return parens ? "(" + print_expr(e) + ")" : print_expr(e);
}

}   // namespace

Script parse_script(const std::string& text) { return Parser(lex(text)).script(); }

std::string print_expr(const Expr& e)
{
    using K = Expr::Kind;
    auto join = [](const std::vector<ExprPtr>& v, const std::string& sep) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + print_expr(*v[i]);
        return s;
    };
    switch (e.kind)
    {
        case K::Number:
        case K::Ident: return e.text;
        case K::String: return quote(e.text);
        case K::Neg: return "-" + wrap(*e.kids[0], precedence(*e.kids[0]) <= 1);
        case K::Add:
        case K::Sub:
        case K::Mul:
        case K::Div:
        {
            const int p = precedence(e);
            const std::string op = e.kind == K::Add ? " + " : e.kind == K::Sub ? " - " : e.kind == K::Mul ? "*" : "/";
            const Expr& l = *e.kids[0];
            const Expr& r = *e.kids[1];
            const bool lp = precedence(l) < p || (l.kind == K::Neg && p > 1);
            return wrap(l, lp) + op + wrap(r, precedence(r) <= p);
        }
        case K::Pow:
        {
            const Expr& l = *e.kids[0];
            const Expr& r = *e.kids[1];
            return wrap(l, precedence(l) <= 3) + "^" + wrap(r, precedence(r) < 3);
        }
        case K::List: return "[" + join(e.kids, ", ") + "]";
        case K::Set: return "{" + join(e.kids, ", ") + "}";
        case K::Tuple: return join(e.kids, ",");
        case K::Call:
        {
            std::string s = e.text + "(";
            for (std::size_t g = 0; g < e.groups.size(); ++g)
            {
                s += g ? "; " : "";
                for (std::size_t i = 0; i < e.groups[g].size(); ++i) s += (i ? ", " : "") + print_arg(e.groups[g][i]);
            }
            s += ")";
            if (e.has_block)
            {
                s += "{";
                for (std::size_t i = 0; i < e.block.size(); ++i)
                {
                    const auto& b = e.block[i];
                    s += i ? "; " : "";
                    if (b.kind == BlockEntry::Kind::Basis) s += "basis " + join(b.items, ", ");
                    else if (b.kind == BlockEntry::Kind::Unit) s += "unit " + print_expr(*b.items[0]);
                    else s += print_expr(*b.items[0]) + " = " + print_expr(*b.items[1]);
                }
                s += "}";
            }
            return s;
        }
    }
    return "";
}

std::string print_statement(const Statement& s)
{
    if (s.kind == Statement::Kind::Definition) return s.keyword + " " + s.name + " = " + print_expr(*s.value);
    std::string out = s.keyword;
    if (!s.check.empty()) out += " " + s.check;
    for (const auto& a : s.args)
    {
        std::string v = a.style == Arg::Style::Positional && !a.value->is_atomic() ? "(" + print_expr(*a.value) + ")"
                                                                                   : print_arg(a);
        if (a.style == Arg::Style::Word && !a.value->is_atomic()) v = a.key + " (" + print_expr(*a.value) + ")";
        out += " " + v;
    }
    return out;
}

std::string print_script(const Script& s)
{
    std::string out;
    for (const auto& st : s.statements) out += print_statement(st) + "\n";
    return out;
}

bool same_expr(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind || a.text != b.text || a.kids.size() != b.kids.size() || a.groups.size() != b.groups.size()
        || a.has_block != b.has_block || a.block.size() != b.block.size())
        return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (!same_expr(*a.kids[i], *b.kids[i])) return false;
    for (std::size_t g = 0; g < a.groups.size(); ++g)
    {
        if (a.groups[g].size() != b.groups[g].size()) return false;
        for (std::size_t i = 0; i < a.groups[g].size(); ++i)
        {
            const Arg& x = a.groups[g][i];
            const Arg& y = b.groups[g][i];
            if (x.style != y.style || x.key != y.key || !same_expr(*x.value, *y.value)) return false;
        }
    }
    for (std::size_t i = 0; i < a.block.size(); ++i)
    {
        const auto& x = a.block[i];
        const auto& y = b.block[i];
        if (x.kind != y.kind || x.items.size() != y.items.size()) return false;
        for (std::size_t k = 0; k < x.items.size(); ++k)
            if (!same_expr(*x.items[k], *y.items[k])) return false;
    }
    return true;
}

bool same_statement(const Statement& a, const Statement& b)
{
    if (a.kind != b.kind || a.keyword != b.keyword || a.name != b.name || a.check != b.check
        || a.args.size() != b.args.size())
        return false;
    if ((a.value == nullptr) != (b.value == nullptr)) return false;
    if (a.value && !same_expr(*a.value, *b.value)) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
    {
        const Arg& x = a.args[i];
        const Arg& y = b.args[i];
        if (x.style != y.style || x.key != y.key || !same_expr(*x.value, *y.value)) return false;
    }
    return true;
}

bool same_script(const Script& a, const Script& b)
{
    if (a.statements.size() != b.statements.size()) return false;
    for (std::size_t i = 0; i < a.statements.size(); ++i)
        if (!same_statement(a.statements[i], b.statements[i])) return false;
    return true;
}

}   // namespace findim::dsl
