/**
 * The findim script language.
 *
 * One statement per line; `#` starts a comment; newlines inside brackets are
 * ignored.  Definitions bind names (ring, module, ses, family); queries
 * compute and report.  The grammar, the constructor catalogue and the
 * report formats are described in docs/dsl.md and docs/report-schema.md.
 */
#ifndef FINDIM_DSL_HPP
#define FINDIM_DSL_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "findim/fd_resolution.hpp"

namespace findim::dsl {

struct Span
{
    int line = 0, col = 0;
};

/** Syntax, name and signature errors: everything rejected before execution. */
class ScriptError : public std::runtime_error
{
    public:
        ScriptError(std::string kind, Span span, std::string message, std::vector<std::string> expected = {},
                    std::string found = "")
            : std::runtime_error(message), kind(std::move(kind)), span(span), expected(std::move(expected)),
              found(std::move(found))
        {}

        std::string kind;   // "syntax", "name", "signature"
        Span span;
        std::vector<std::string> expected;
        std::string found;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Arg
{
    enum class Style { Positional, Equals, Word };
    Style style = Style::Positional;
    std::string key;
    ExprPtr value;
    Span span;
};

struct BlockEntry
{
    enum class Kind { Basis, Unit, Product };
    Kind kind = Kind::Product;
    std::vector<ExprPtr> items;   // Basis: labels; Unit: one element; Product: lhs, rhs
    Span span;
};

struct Expr
{
    enum class Kind { Number, Ident, String, Neg, Add, Sub, Mul, Div, Pow, List, Set, Tuple, Call };
    Kind kind = Kind::Number;
    std::string text;                        // Number, Ident, String, Call name
    std::vector<ExprPtr> kids;               // operands, list items
    std::vector<std::vector<Arg>> groups;    // Call: argument groups separated by ';'
    bool has_block = false;
    std::vector<BlockEntry> block;
    Span span;

    bool is_atomic() const
    {
        return kind == Kind::Number || kind == Kind::Ident || kind == Kind::String || kind == Kind::List
               || kind == Kind::Set || kind == Kind::Call;
    }
};

struct Statement
{
    enum class Kind { Definition, Query };
    Kind kind = Kind::Query;
    std::string keyword;   // ring, module, ses, family; or the query verb (pd, tor, check, ...)
    std::string name;      // defined name
    Span span, name_span;
    ExprPtr value;         // definition right-hand side
    std::string check;     // check kind for `check`
    std::vector<Arg> args; // query arguments
};

struct Script
{
    std::vector<Statement> statements;
};

Script parse_script(const std::string& text);
std::string print_expr(const Expr& e);
std::string print_statement(const Statement& s);
std::string print_script(const Script& s);

bool same_expr(const Expr& a, const Expr& b);
bool same_statement(const Statement& a, const Statement& b);
bool same_script(const Script& a, const Script& b);

/** Names defined before use, one definition per name, and constructor signatures. */
void validate(const Script& s);

struct RunOptions
{
    Index cap = default_cap;
    std::uint64_t seed = 0x5eed;
    int jobs = 1;
    bool timing = false;
    std::string script_name;
    std::string base_dir = ".";   // for load("file.json")
};

struct Record
{
    int index = 0;
    int line = 0;
    std::string echo;
    std::string kind;      // query verb, "check <kind>", or "definition"
    std::string verdict;   // ok, pass, fail, error
    std::string value;
    std::vector<std::string> details;
    std::string certificate;
    std::string digest;
    double ms = 0;
};

struct Report
{
    std::string script;
    RunOptions options;
    std::vector<Record> records;

    int count(const std::string& verdict) const;
    int exit_code() const { return count("fail") + count("error") > 0 ? 1 : 0; }
};

Report run_script(const Script& s, const RunOptions& opt);

std::string render_text(const Report& r);
std::string render_json(const Report& r);
std::string render_error_text(const ScriptError& e, const std::string& script);
std::string render_error_json(const ScriptError& e, const std::string& script);

/** FNV-1a 64-bit, as 16 lowercase hex digits. */
std::string fnv1a_hex(const std::string& s);

}   // namespace findim::dsl

#endif
