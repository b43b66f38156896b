#include <iostream>

#include "findim/acceptance.hpp"

int main()
{
    findim::AcceptanceOptions opt;
    opt.fixtures_dir = FINDIM_FIXTURES_DIR;
    bool all = true;
    for (const auto& c : findim::run_acceptance(opt))
    {
        std::cout << c.line() << std::endl;
        all = all && c.pass();
    }
    return all ? 0 : 1;
}
