#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "findim/dsl.hpp"

using namespace findim;
using namespace findim::dsl;

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream b;
    b << in.rdbuf();
    return b.str();
}

ScriptError error_of(const std::string& text)
{
    try
    {
        validate(parse_script(text));
    }
    catch (const ScriptError& e)
    {
        return e;
    }
    FAIL("no error for: " << text);
    return ScriptError("", {}, "");
}

Report run(const std::string& text, int jobs = 1)
{
    RunOptions o;
    o.jobs = jobs;
    o.script_name = "t.fd";
    const Script s = parse_script(text);
    validate(s);
    return run_script(s, o);
}

// random expression text from the grammar
std::string random_expr(std::mt19937_64& g, int depth)
{
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 8 : 2);
    const char* names[] = {"x", "Z", "a1", "M.b", "e"};
    switch (pick(g))
    {
        case 0: return std::to_string(g() % 20);
        case 1: return names[g() % 5];
        case 2: return "\"s" + std::to_string(g() % 3) + "\"";
        case 3: return random_expr(g, depth - 1) + " + " + random_expr(g, depth - 1);
        case 4: return random_expr(g, depth - 1) + "*" + random_expr(g, depth - 1);
        case 5: return "(" + random_expr(g, depth - 1) + ")^" + std::to_string(1 + g() % 3);
        case 6: return "(-" + random_expr(g, depth - 1) + ")";
        case 7: return "[" + random_expr(g, depth - 1) + ", " + random_expr(g, depth - 1) + "]";
        default: return "f(" + random_expr(g, depth - 1) + "; k=" + random_expr(g, depth - 1) + ")";
    }
}

}   // namespace

TEST_CASE("single ring definition")
{
    const Script s = parse_script("ring Z = integers");
    REQUIRE(s.statements.size() == 1);
    CHECK(s.statements[0].kind == Statement::Kind::Definition);
    CHECK(s.statements[0].keyword == "ring");
    CHECK(s.statements[0].name == "Z");
}

TEST_CASE("worked example setup parses to four statements")
{
    const Script s = parse_script("ring R0 = fdalgebra(Q){basis 1,e; e*e=0}\n"
                                  "ring T = triangular(R0, field(Q), regular(R0))\n"
                                  "module L = triple(T; zero, simple, zero)\npd L");
    REQUIRE(s.statements.size() == 4);
    CHECK_NOTHROW(validate(s));
    CHECK(print_statement(s.statements[0]) == "ring R0 = fdalgebra(Q){basis 1, e; e*e = 0}");
    const Report r = run_script(s, RunOptions{});
    CHECK(r.records.back().value == "1");
}

TEST_CASE("name errors carry positions")
{
    const auto e = error_of("pd L\nmodule L = Z/4");
    CHECK(e.kind == "name");
    CHECK(e.span.line == 1);
    CHECK(e.span.col == 4);
    const auto d = error_of("module M = Z/4\nmodule M = Z/2");
    CHECK(d.span.line == 2);
    CHECK(d.span.col == 8);
    const auto u = error_of("module A = Z/4\npd B");
    CHECK(u.span.line == 2);
}

TEST_CASE("syntax errors list expected tokens")
{
    const auto e = error_of("tor 1 (Z/4 (Z/6)");
    CHECK(e.kind == "syntax");
    CHECK(e.span.col == 12);
    CHECK(std::find(e.expected.begin(), e.expected.end(), "')'") != e.expected.end());
    const auto c = error_of("# é\npd M ∘");
    CHECK(c.span.line == 2);
    CHECK(c.span.col == 6);   // columns count code points
}

TEST_CASE("queries from the language reference")
{
    CHECK(run("tor 1 (Z/4) (Z/6) over Z").records[0].value == "Z/2");
    const Report r = run("check polynomial field=Q m=2");
    CHECK(r.records[0].verdict == "pass");
    CHECK(r.records[0].value.find("fPD(k[x1..xm]) = [2, 2]") != std::string::npos);
    CHECK(r.exit_code() == 0);
    CHECK(run("check pd (Z/4) expect=0").exit_code() == 1);
}

TEST_CASE("engine errors stay local")
{
    const Report r = run("module A = simple(Z, 1)\npd A\npd (Z/4)");
    CHECK(r.records[0].verdict == "error");
    CHECK(r.records[1].verdict == "error");
    CHECK(r.records[1].value.rfind("dependency error", 0) == 0);
    CHECK(r.records[2].value == "1");
}

TEST_CASE("reports are independent of the job count")
{
    const std::string text = slurp(fs::path(FINDIM_FIXTURES_DIR) / "scripts" / "01_triangular_example.fd");
    const std::string a = render_json(run(text, 1)), b = render_json(run(text, 3)), c = render_json(run(text, 1));
    CHECK(a == b);
    CHECK(a == c);
    CHECK(render_text(run(text, 2)) == render_text(run(text, 1)));
}

TEST_CASE("digest is FNV-1a")
{
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("round trip over the golden corpus")
{
    int n = 0;
    for (const auto& e : fs::directory_iterator(fs::path(FINDIM_FIXTURES_DIR) / "scripts"))
    {
        if (e.path().extension() != ".fd") continue;
        const Script s = parse_script(slurp(e.path()));
        const std::string printed = print_script(s);
        CHECK(same_script(s, parse_script(printed)));
        CHECK(print_script(parse_script(printed)) == printed);
        ++n;
    }
    CHECK(n >= 15);
}

TEST_CASE("round trip on random expressions")
{
    std::mt19937_64 g(99);
    for (int i = 0; i < 300; ++i)
    {
        const std::string text = "module M = " + random_expr(g, 3);
        const Script s = parse_script(text);
        const std::string printed = print_script(s);
        INFO(text << " -> " << printed);
        CHECK(same_script(s, parse_script(printed)));
        CHECK(print_script(parse_script(printed)) == printed);
    }
}
