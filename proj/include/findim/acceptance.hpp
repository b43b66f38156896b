/**
 * The built-in acceptance suite: ten criteria, each with an exact verdict
 * and a wall-time limit.  Shared by `findim check-all` and the acceptance
 * test binary.
 */
#ifndef FINDIM_ACCEPTANCE_HPP
#define FINDIM_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "findim/engine.hpp"

namespace findim {

struct Criterion
{
    int id = 0;
    std::string title;
    bool correct = false;
    double seconds = 0;
    double limit = 0;   // seconds
    std::vector<std::string> notes;

    bool pass() const { return correct && seconds < limit; }
    std::string line() const;
};

struct AcceptanceOptions
{
    std::string fixtures_dir;   // golden corpus for criterion 10
    std::uint64_t seed = 0x5eed;
    Index cap = default_cap;
    std::vector<int> only;      // empty: all ten
};

std::vector<Criterion> run_acceptance(const AcceptanceOptions& opt);

}   // namespace findim

#endif
