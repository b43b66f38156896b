#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "findim/acceptance.hpp"
#include "findim/dsl.hpp"

#ifndef FINDIM_FIXTURES_DIR
#define FINDIM_FIXTURES_DIR "tests/fixtures"
#endif

namespace {

int run(const std::string& path, const std::string& format, findim::dsl::RunOptions opt)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        std::cerr << "findim: cannot read " << path << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto slash = path.find_last_of('/');
    opt.script_name = slash == std::string::npos ? path : path.substr(slash + 1);
    opt.base_dir = slash == std::string::npos ? "." : path.substr(0, slash);
    findim::dsl::Script script;
    try
    {
        script = findim::dsl::parse_script(buf.str());
        findim::dsl::validate(script);
    }
    catch (const findim::dsl::ScriptError& e)
    {
        if (format == "json") std::cout << findim::dsl::render_error_json(e, opt.script_name);
        else std::cerr << findim::dsl::render_error_text(e, opt.script_name);
        return 2;
    }
    const auto report = findim::dsl::run_script(script, opt);
    std::cout << (format == "json" ? findim::dsl::render_json(report) : findim::dsl::render_text(report));
    return report.exit_code();
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"findim: homological dimensions of rings and modules"};
    app.require_subcommand(1);

    std::string script, format = "text";
    findim::dsl::RunOptions opt;
    long long cap = findim::default_cap;
    auto* run_cmd = app.add_subcommand("run", "run a script and print its report");
    run_cmd->add_option("script", script, "script file")->required();
    run_cmd->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    run_cmd->add_option("--cap", cap, "resolution length cap")->envname("FINDIM_CAP")->check(CLI::Range(1, 100000));
    run_cmd->add_option("--seed", opt.seed, "seed for randomized witness search");
    run_cmd->add_option("--jobs", opt.jobs, "worker threads for queries")->check(CLI::Range(1, 256));
    run_cmd->add_flag("--timing", opt.timing, "include per-record wall time");

    std::string fixtures = FINDIM_FIXTURES_DIR;
    std::vector<int> only;
    auto* check_cmd = app.add_subcommand("check-all", "run the built-in acceptance suite");
    check_cmd->add_option("--fixtures", fixtures, "golden script corpus directory");
    check_cmd->add_option("--only", only, "criteria to run (1-10)")->check(CLI::Range(1, 10));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*run_cmd)
    {
        opt.cap = static_cast<findim::Index>(cap);
        return run(script, format, opt);
    }

    findim::AcceptanceOptions ao;
    ao.fixtures_dir = fixtures;
    ao.only = only;
    bool all = true;
    for (const auto& c : findim::run_acceptance(ao))
    {
        std::cout << c.line() << std::endl;
        all = all && c.pass();
    }
    return all ? 0 : 1;
}
