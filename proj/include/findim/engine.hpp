/**
 * Runtime handles over the typed engines: rings and modules chosen at run
 * time (by the DSL or by test drivers), with dispatch to the backend that
 * decides each question.
 */
#ifndef FINDIM_ENGINE_HPP
#define FINDIM_ENGINE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "findim/algebra.hpp"
#include "findim/fd_resolution.hpp"
#include "findim/graded.hpp"
#include "findim/pid_module.hpp"
#include "findim/rep.hpp"
#include "findim/triangular.hpp"

namespace findim {

enum class FieldKind { Q, F2, F3 };

std::string field_name(FieldKind k);
FieldKind field_from_name(const std::string& s);

template <ExactField F>
struct FdData
{
    using Field = F;
    typename Algebra<F>::Ptr alg;
    TriPtr<F> tri;
    std::optional<Polynomial<F>> modulus;   // set for k[x]/(f)
};

using FdVariant = std::variant<FdData<Rational>, FdData<F2>, FdData<F3>>;

enum class RingKind { Field, Integers, LocalIntegers, ModIntegers, PolyPID, Koszul, FdAlgebra, Triangular };

std::string to_string(RingKind k);

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Ring
{
    RingKind kind = RingKind::Field;
    std::string label;
    FieldKind field = FieldKind::Q;
    Integer param = 0;   // the prime of Z_(p), the modulus of Z/n
    int nvars = 0;       // Koszul variable count
    std::optional<FdVariant> fd;
    RingPtr corner_r, corner_s;   // Triangular corners
    RingPtr opposite_of;          // set when this ring was built as an opposite
    RingPtr ut_base;
    int ut_n = 0;

    bool is_fd() const { return fd.has_value(); }
    bool is_pid() const
    {
        return kind == RingKind::Integers || kind == RingKind::LocalIntegers || kind == RingKind::PolyPID;
    }
    bool is_commutative() const;
    /** Dimension over the base field for finite-dimensional rings, -1 otherwise. */
    Index dimension() const;
    std::string describe() const;
};

bool same_ring(const Ring& a, const Ring& b);

/** Visit the typed finite-dimensional data of a ring. */
template <typename Fn>
decltype(auto) visit_fd(const Ring& r, Fn&& fn)
{
    if (!r.fd) throw DomainError("ring " + r.label + " is not finite-dimensional");
    return std::visit(std::forward<Fn>(fn), *r.fd);
}

// ---------------------------------------------------------------------------
// Ring construction

RingPtr make_field(FieldKind k);
RingPtr make_integers();
RingPtr make_local_integers(const Integer& p);
RingPtr make_mod_integers(const Integer& n);
RingPtr make_polypid(FieldKind k);
RingPtr make_koszul(FieldKind k, int m);

/** Structure constants c[i][j][k] = coefficient of b_k in b_i b_j. */
struct AlgebraTable
{
    FieldKind field = FieldKind::Q;
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<std::vector<Rational>>> c;
    std::vector<Rational> unit;
};

RingPtr make_fd_algebra(const AlgebraTable& table);

/** k[x]/(f) as a finite-dimensional algebra with basis 1, x, ..., x^(d-1). */
RingPtr make_poly_quotient(FieldKind k, const std::string& f);

/** R/(a) for R = Z (giving Z/|a|) or R = k[x] (giving k[x]/(a)). */
RingPtr make_quotient(const RingPtr& r, const std::string& a);

/**
 * Bimodule data.  Regular: R itself when S is a field, S itself when R is a
 * field, or R when R = S.  Explicit: one matrix per ring basis label; a label
 * that is the unit of its ring may be omitted.
 */
struct BimoduleSpec
{
    bool regular = true;
    Index dim = 0;
    std::map<std::string, std::vector<std::vector<std::string>>> left, right;
};

RingPtr make_triangular_ring(const RingPtr& r, const RingPtr& s, const BimoduleSpec& m, const std::string& label = "");
RingPtr make_utn_ring(const RingPtr& base, int n);
RingPtr make_opposite(const RingPtr& r);

struct CornerInfo
{
    std::string e, f;
    Index dim_ete = 0, dim_etf = 0, dim_ftf = 0;
    bool verified = false;
};

CornerInfo corner_idempotents_of(const RingPtr& t);

// ---------------------------------------------------------------------------
// Modules

using IntModule = PresentedModule<IntegerDomain>;
using LocModule = PresentedModule<LocalIntegerDomain>;
template <ExactField F>
using PolyModule = PresentedModule<PolynomialDomain<F>>;

using ModuleData = std::variant<IntModule, LocModule, PolyModule<Rational>, PolyModule<F2>, PolyModule<F3>,
                                GradedModule<Rational>, GradedModule<F2>, GradedModule<F3>, Rep<Rational>, Rep<F2>,
                                Rep<F3>>;

struct Module
{
    RingPtr ring;
    ModuleData data;

    /** Canonical invariant text (invariant factors, dimensions, degrees). */
    std::string describe() const;
    bool is_zero() const;
};

Module module_zero(const RingPtr& r);
Module module_regular(const RingPtr& r);
Module module_free(const RingPtr& r, Index rank);
/** R/(a_1, ..., a_k) as a cyclic left module. */
Module module_cyclic(const RingPtr& r, const std::vector<std::string>& elements);
/** Cokernel of a relations matrix (generators x relations) over a PID-type ring or Z/n. */
Module module_presented(const RingPtr& r, const std::vector<std::vector<std::string>>& rows);
Module module_simple(const RingPtr& r, Index vertex);
Module module_projective(const RingPtr& r, Index vertex);
/** The designated residue field of a local or graded ring. */
Module module_residue(const RingPtr& r);
Module module_variable_quotient(const RingPtr& r, const std::vector<int>& vars);
Module module_monomial_quotient(const RingPtr& r, const std::vector<std::string>& monomials);
Module module_monomial_ideal(const RingPtr& r, const std::vector<std::string>& monomials);
/** A finite-dimensional module by action matrices, one per basis label (the unit may be omitted). */
Module module_rep(const RingPtr& r, Index dim, const std::map<std::string, std::vector<std::vector<std::string>>>& act);
/** The triple (A, B, phi); phi is dim A x (dim M * dim B), blocks phi(m_j (x) -) side by side. */
Module module_triple(const RingPtr& t, const Module& a, const Module& b,
                     const std::optional<std::vector<std::vector<std::string>>>& phi);
Module direct_sum(const std::vector<Module>& parts);
Module restrict_scalars(const Module& m, const RingPtr& target);
Module localize_at_prime(const Module& m, const Integer& p);
Module corner_e(const Module& n);
Module corner_f(const Module& n);
Module induce_left(const RingPtr& t, const Module& x);
Module induce_right(const RingPtr& t, const Module& y);
/** Dimension over the base field for finite-dimensional modules, -1 otherwise. */
Index module_dimension(const Module& m);
/** Isomorphism for FD modules (exact search), structure equality for PID modules. */
bool modules_isomorphic(const Module& a, const Module& b);

// ---------------------------------------------------------------------------
// Resolutions and dimension verdicts

struct ResolutionSummary
{
    std::string ring;
    ResolutionStatus status = ResolutionStatus::Finite;
    Index length = -1;
    Index period_start = -1, period_length = 0;
    Index cap = default_cap;
    bool minimal = false;
    bool certified = false;
    std::vector<std::string> terms;
    std::vector<Index> ranks;
    std::vector<Index> dims;
    std::vector<std::string> differentials;
    std::vector<std::string> checks;

    /** Canonical text of everything above, for digests and audit files. */
    std::string certificate_text() const;
};

struct DimResult
{
    ResolutionStatus verdict = ResolutionStatus::Finite;
    Index n = 0;   // pd when Finite; -1 for the zero module
    Index period_start = -1, period_length = 0;
    Index cap = default_cap;
    ResolutionSummary certificate;

    bool finite() const { return verdict == ResolutionStatus::Finite; }
    std::string text() const;
};

ResolutionSummary resolve(const Module& m, Index cap = default_cap);
/** The Koszul resolution of k[x]/(x_s : s in vars). */
ResolutionSummary koszul_resolution_of(const RingPtr& r, const std::vector<int>& vars);
DimResult projective_dimension(const Module& m, Index cap = default_cap);

enum class Membership { Yes, No, Unknown };
std::string to_string(Membership m);

struct FprResult
{
    Membership verdict = Membership::Unknown;
    DimResult pd;
};

FprResult fpr_membership(const Module& m, Index cap = default_cap);
Module syzygy(const Module& m, Index k, Index cap = default_cap);

struct TorExtValue
{
    bool by_dimension = true;
    Index dim = 0;
    bool infinite = false;
    std::vector<std::string> factors;   // invariant factors, formatted
    std::string text;

    bool is_zero() const { return by_dimension ? (dim == 0 && !infinite) : factors.empty(); }
};

/**
 * Tor_n(M, N).  Over commutative rings either order works; over a
 * noncommutative algebra A one argument must be a module over A^op (a right
 * A-module) and the other over A.
 */
TorExtValue tor(Index n, const Module& m, const Module& x, Index cap = default_cap);
TorExtValue ext(Index n, const Module& m, const Module& x, Index cap = default_cap);

// ---------------------------------------------------------------------------
// Short exact sequences

using MapData = std::variant<Mat<Integer>, Mat<Rational>, Mat<F2>, Mat<F3>, Mat<Polynomial<Rational>>,
                             Mat<Polynomial<F2>>, Mat<Polynomial<F3>>>;

struct Ses
{
    Module a, b, c;
    std::optional<MapData> iota, pi;
    std::string origin;
};

Ses ses_triple(const Module& n);
Ses ses_radical(const Module& m);
Ses ses_syzygy(const Module& m, Index cap = default_cap);
Ses ses_split(const Module& a, const Module& c);

/** The three exactness checks (iota injective, pi surjective, im = ker) plus equivariance. */
std::vector<std::string> verify_ses(const Ses& s, bool& ok);

/** Horseshoe resolution of the middle term from resolutions of the ends. */
ResolutionSummary horseshoe_resolution(const Ses& s, Index cap = default_cap);

struct SplitVerdict
{
    bool split = false;
    std::string witness;   // the section, or the inconsistency certificate
    Index equations = 0, unknowns = 0;
};

SplitVerdict split_test(const Ses& s);

// ---------------------------------------------------------------------------
// Formatting helpers

template <typename S>
std::string format_matrix(const Mat<S>& m)
{
    std::string out = "[";
    for (Index i = 0; i < m.rows(); ++i)
    {
        out += i ? ";" : "";
        for (Index j = 0; j < m.cols(); ++j)
        {
            std::ostringstream os;
            os << m(i, j);
            out += (j ? "," : "") + os.str();
        }
    }
    return out + "]" + (m.rows() == 0 ? "(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")" : "");
}

}   // namespace findim

#endif
