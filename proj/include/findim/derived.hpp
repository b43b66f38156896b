/**
 * FT-flat tests and family-relative FT-flat dimension, the witness shift,
 * and the Tor/localization comparison over Z.
 *
 * d_W(M) is the largest n >= 1 with Tor_n(N, M) != 0 for some N in W, and 0
 * when no such n exists.  It is a lower bound for the FT-flat dimension and
 * equals it when W contains the residue fields of the backend.
 */
#ifndef FINDIM_DERIVED_HPP
#define FINDIM_DERIVED_HPP

#include <string>
#include <vector>

#include "findim/engine.hpp"

namespace findim {

struct FamilyMember
{
    std::string label;
    Module module;
    DimResult pd;   // Finite: the membership certificate
};

struct WitnessFamily
{
    RingPtr ring;   // ring of the members (the opposite ring for right-module families)
    RingPtr tested; // ring of the modules the family tests
    std::vector<FamilyMember> members;
    bool family_relative = false;   // set when residue-field completeness is not known
    std::vector<std::string> notes;
};

/** Build a family; every member must be certified in FPR. */
WitnessFamily make_family(const RingPtr& tested, const std::vector<std::pair<std::string, Module>>& members,
                          Index cap = default_cap);

/**
 * Default family per backend: Z -> Z/2, Z/3, Z/5, Z/7, Z; Z_(p) -> Z_(p)/p,
 * Z_(p); k[x] -> k[x]/(x), k[x]; Z/n -> Z/n; k[x1..xm] -> k; field -> k;
 * finite-dimensional -> FPR-certified simples (right simples for
 * noncommutative rings) and the regular module.
 */
WitnessFamily default_family(const RingPtr& r, Index cap = default_cap);

struct FtFlatVerdict
{
    bool pass = true;
    std::string witness;   // the member with Tor_1 != 0
    std::string tor1;      // its Tor_1 value
};

FtFlatVerdict ft_flat_test(const Module& m, const WitnessFamily& w, Index cap = default_cap);

struct FtFdResult
{
    Index d = 0;
    std::string witness;   // member attaining d (empty when d = 0)
    std::string value;     // Tor_d at the witness
    bool family_relative = false;
    std::vector<std::string> table;   // one line per member and nonzero degree

    std::string text() const;
};

FtFdResult ft_flat_dim(const Module& m, const WitnessFamily& w, Index cap = default_cap);

struct WitnessShiftResult
{
    Module n;
    std::string tor_n, tor_n_minus_1;
    std::vector<std::string> checks;
};

/** N = first syzygy of X, with Tor_n(M, N) = 0 and Tor_(n-1)(M, N) != 0 verified. */
WitnessShiftResult witness_shift(const Module& m, const Module& x, Index n, Index cap = default_cap);

struct TorLocalizationResult
{
    bool pass = false;
    std::string lhs, rhs;   // localization of Tor, Tor of localizations
};

/** Compare Tor_n(M, N)_(p) with Tor_n over Z_(p) of the localizations. */
TorLocalizationResult check_tor_localization(const Module& m, const Module& n, Index deg, const Integer& p);

}   // namespace findim

#endif
