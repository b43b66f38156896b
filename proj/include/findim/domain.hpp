/**
 * Euclidean domain policies.  A policy carries whatever runtime data the
 * domain needs (the prime of a localization) and supplies the operations the
 * Smith normal form needs: a Euclidean norm, division with remainder, units
 * and canonical associates.
 */
#ifndef FINDIM_DOMAIN_HPP
#define FINDIM_DOMAIN_HPP

#include <concepts>
#include <string>
#include <utility>

#include "findim/scalar.hpp"

namespace findim {

template <typename D>
concept EuclideanDomain = requires(const D& d, const typename D::Scalar& a) {
    { d.norm(a) } -> std::convertible_to<Integer>;
    { d.divmod(a, a) } -> std::same_as<std::pair<typename D::Scalar, typename D::Scalar>>;
    { d.is_unit(a) } -> std::convertible_to<bool>;
    { d.unit_part(a) } -> std::same_as<typename D::Scalar>;
    { d.format(a) } -> std::convertible_to<std::string>;
    { d.name() } -> std::convertible_to<std::string>;
};

class IntegerDomain
{
    public:
        using Scalar = Integer;

        std::string name() const { return "Z"; }
        Integer norm(const Integer& a) const { return abs(a); }
        bool is_unit(const Integer& a) const { return a == 1 || a == -1; }
        Integer unit_part(const Integer& a) const { return a < 0 ? Integer(-1) : Integer(1); }
        Integer unit_inverse(const Integer& u) const { return u; }

        /** Division rounding toward zero; |r| < |b|. */
        std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) const
        {
            if (b == 0) throw DomainError("integer division by zero");
            Integer q = a / b;
            return {q, a - q * b};
        }

        bool divides(const Integer& a, const Integer& b) const
        {
            if (a == 0) return b == 0;
            return b % a == 0;
        }

        Integer normalize(const Integer& a) const { return abs(a); }
        std::string format(const Integer& a) const { return a.str(); }
        bool operator==(const IntegerDomain&) const { return true; }
};

/** p-adic valuation of a nonzero integer. */
inline int valuation(Integer a, const Integer& p)
{
    if (a == 0) throw DomainError("valuation of zero");
    int v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
}

inline bool is_prime(const Integer& n)
{
    if (n < 2) return false;
    for (Integer d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/**
 * The integers localized at a prime p: rationals whose reduced denominator
 * is coprime to p.
 */
class LocalIntegerDomain
{
    private:
        Integer p_;

    public:
        using Scalar = Rational;

        explicit LocalIntegerDomain(Integer p) : p_(std::move(p))
        {
            if (!is_prime(p_))
                throw DomainError("localization requires a prime, got " + p_.str());
        }

        const Integer& prime() const { return p_; }
        std::string name() const { return "Z_(" + p_.str() + ")"; }

        /** Validates that x belongs to the local ring. */
        Rational element(const Rational& x) const
        {
            if (denominator(x) % p_ == 0)
                throw DomainError("denominator of " + x.str() + " is not coprime to " + p_.str());
            return x;
        }

        Integer norm(const Rational& a) const
        {
            if (a == 0) return Integer(0);
            return Integer(valuation(numerator(a), p_));
        }
        bool is_unit(const Rational& a) const { return a != 0 && numerator(a) % p_ != 0; }

        /** The unit u with a = u * p^v. */
        Rational unit_part(const Rational& a) const
        {
            if (a == 0) return Rational(1);
            Integer pv = 1;
            for (int i = 0, v = valuation(numerator(a), p_); i < v; ++i) pv *= p_;
            return a / Rational(pv);
        }
        Rational unit_inverse(const Rational& u) const { return Rational(1) / u; }

        std::pair<Rational, Rational> divmod(const Rational& a, const Rational& b) const
        {
            if (b == 0) throw DomainError("division by zero in local ring");
            if (a == 0) return {Rational(0), Rational(0)};
            if (norm(a) >= norm(b)) return {a / b, Rational(0)};
            return {Rational(0), a};
        }

        bool divides(const Rational& a, const Rational& b) const
        {
            if (a == 0) return b == 0;
            return b == 0 || norm(b) >= norm(a);
        }

        Rational normalize(const Rational& a) const { return a == 0 ? a : a / unit_part(a); }
        std::string format(const Rational& a) const { return a.str(); }
        bool operator==(const LocalIntegerDomain& o) const { return p_ == o.p_; }
};

/** k[x] for an exact field k. */
template <ExactField F>
class PolynomialDomain
{
    public:
        using Scalar = Polynomial<F>;

        std::string name() const { return FieldTraits<F>::name() + "[x]"; }
        Integer norm(const Scalar& a) const { return Integer(a.is_zero() ? -1 : a.degree()); }
        bool is_unit(const Scalar& a) const { return !a.is_zero() && a.degree() == 0; }
        Scalar unit_part(const Scalar& a) const { return a.is_zero() ? Scalar(1) : Scalar(a.leading()); }
        Scalar unit_inverse(const Scalar& u) const { return Scalar(F(1) / u.leading()); }
        std::pair<Scalar, Scalar> divmod(const Scalar& a, const Scalar& b) const { return findim::divmod(a, b); }
        bool divides(const Scalar& a, const Scalar& b) const
        {
            if (a.is_zero()) return b.is_zero();
            return (b % a).is_zero();
        }
        Scalar normalize(const Scalar& a) const { return a.monic(); }
        std::string format(const Scalar& a) const { return a.str(); }
        bool operator==(const PolynomialDomain&) const { return true; }
};

}   // namespace findim

#endif
