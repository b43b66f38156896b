/**
 * Small finitistic dimension: interval certificates and the change-of-rings
 * theorem checks.
 *
 * Upper bounds come only from a closed list of rules; a ring outside the
 * list gets an unknown upper bound.  Lower bounds come from a deterministic
 * witness search.
 */
#ifndef FINDIM_FINITISTIC_HPP
#define FINDIM_FINITISTIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "findim/derived.hpp"
#include "findim/engine.hpp"

namespace findim {

enum class UpperRule { Field, Pid, KoszulSyzygy, SelfInjective, LocalArtinian, Sandwich, Unknown };

std::string to_string(UpperRule r);

struct FpdOptions
{
    Index cap = default_cap;
    std::uint64_t seed = 0x5eed;
    Index max_candidates = 200;
};

struct FpdCertificate
{
    std::string ring;
    Index lower = 0;
    std::string witness;                   // description of the lower witness
    std::optional<Module> witness_module;
    ResolutionSummary witness_resolution;  // Finite, certified
    std::optional<Index> upper;
    UpperRule rule = UpperRule::Unknown;
    std::vector<std::string> rule_evidence;
    Index candidates = 0;
    bool exact = false;

    std::string interval() const;   // "[1, 1]" or "[1, unknown]"
    std::string text() const;
};

FpdCertificate fpd_bounds(const RingPtr& r, const FpdOptions& opt = {});

struct TheoremReport
{
    std::string theorem;
    std::string instance;
    std::string assertion;
    std::vector<std::pair<std::string, std::string>> sides;
    bool pass = false;
    std::vector<std::string> certificates;
    std::vector<std::string> notes;

    std::string certificate_text() const;
};

/** Pass iff the family-relative FT-flat dimension of the residue field is at most n. */
TheoremReport residue_field_criterion(const RingPtr& r, Index n, const FpdOptions& opt = {});

/** fPD(R) >= fPD(R/(a)) + 1 for R = Z or k[x] and a a non-zero-divisor non-unit. */
TheoremReport quotient_theorem_check(const RingPtr& r, const std::string& a, const FpdOptions& opt = {});

/** fPD(k[x1..xm]) = m for 1 <= m <= 4. */
TheoremReport polynomial_theorem_check(FieldKind k, int m, const FpdOptions& opt = {});

/** The sandwich bounds, corner transport, and the triangular corollaries. */
TheoremReport triangular_bounds_check(const RingPtr& t, const FpdOptions& opt = {});

struct NonSplitReport
{
    bool split = false;
    std::vector<std::string> ses_checks;
    SplitVerdict verdict;
};

NonSplitReport non_split_certificate(const Ses& s);

/**
 * fPD(R) <= sup fPD(R_m) sampled on a finite list of maximal ideals: primes
 * of Z, or irreducible polynomials of k[x].
 */
TheoremReport localization_inequality_check(const RingPtr& r, const std::vector<std::string>& primes,
                                            const FpdOptions& opt = {});

}   // namespace findim

#endif
