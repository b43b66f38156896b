/**
 * Exact scalar types: arbitrary-precision integers and rationals, prime
 * fields, and univariate polynomials over a field.  Every type here is an
 * Eigen scalar.
 */
#ifndef FINDIM_SCALAR_HPP
#define FINDIM_SCALAR_HPP

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "findim/errors.hpp"

namespace findim {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/**
 * Element of the prime field Z/PZ.
 */
template <int P>
class Zp
{
    static_assert(P >= 2, "modulus must be at least 2");

    private:
        int v_ = 0;

        static int reduce(long long x)
        {
            long long r = x % P;
            return static_cast<int>(r < 0 ? r + P : r);
        }

    public:
        Zp() = default;
        Zp(int x) : v_(reduce(x)) {}
        Zp(long x) : v_(reduce(x)) {}
        Zp(long long x) : v_(reduce(x)) {}

        int value() const { return v_; }
        static constexpr int modulus() { return P; }

        Zp inverse() const
        {
            if (v_ == 0)
                throw DomainError("division by zero in prime field");
            // Fermat
            long long r = 1, b = v_;
            for (int e = P - 2; e > 0; e >>= 1)
            {
                if (e & 1) r = r * b % P;
                b = b * b % P;
            }
            return Zp(r);
        }

        Zp operator-() const { return Zp(-v_); }
        Zp& operator+=(const Zp& o) { v_ = reduce(static_cast<long long>(v_) + o.v_); return *this; }
        Zp& operator-=(const Zp& o) { v_ = reduce(static_cast<long long>(v_) - o.v_); return *this; }
        Zp& operator*=(const Zp& o) { v_ = reduce(static_cast<long long>(v_) * o.v_); return *this; }
        Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

        friend Zp operator+(Zp a, const Zp& b) { return a += b; }
        friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
        friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
        friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
        friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_; }
        friend bool operator!=(const Zp& a, const Zp& b) { return a.v_ != b.v_; }
        friend std::ostream& operator<<(std::ostream& os, const Zp& a) { return os << a.v_; }
};

using F2 = Zp<2>;
using F3 = Zp<3>;

/**
 * Compile-time facts about the supported coefficient fields.
 */
template <typename F>
struct FieldTraits;

template <>
struct FieldTraits<Rational>
{
    static constexpr int characteristic = 0;
    static std::string name() { return "Q"; }
    static std::string format(const Rational& x) { return x.str(); }
    static Rational parse(const std::string& s) { return Rational(s); }
    static Rational from_index(std::uint64_t i) { return Rational(static_cast<long long>(i)); }
};

template <int P>
struct FieldTraits<Zp<P>>
{
    static constexpr int characteristic = P;
    static std::string name() { return "F" + std::to_string(P); }
    static std::string format(const Zp<P>& x) { return std::to_string(x.value()); }
    static Zp<P> parse(const std::string& s)
    {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Zp<P>(std::stoll(s));
        return Zp<P>(std::stoll(s.substr(0, slash))) / Zp<P>(std::stoll(s.substr(slash + 1)));
    }
    static Zp<P> from_index(std::uint64_t i) { return Zp<P>(static_cast<long long>(i % P)); }
};

template <typename F>
concept ExactField = requires { FieldTraits<F>::characteristic; };

/**
 * Univariate polynomial over a field, coefficients stored low degree first
 * with no trailing zeros.  The zero polynomial has no coefficients.
 */
template <ExactField F>
class Polynomial
{
    private:
        std::vector<F> c_;

        void trim()
        {
            while (!c_.empty() && c_.back() == F(0))
                c_.pop_back();
        }

    public:
        Polynomial() = default;
        Polynomial(int x) { if (x != 0) c_.push_back(F(x)); }
        explicit Polynomial(const F& x) { if (x != F(0)) c_.push_back(x); }
        explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

        static Polynomial monomial(const F& coeff, int degree)
        {
            std::vector<F> c(degree + 1, F(0));
            c[degree] = coeff;
            return Polynomial(std::move(c));
        }
        static Polynomial x() { return monomial(F(1), 1); }

        bool is_zero() const { return c_.empty(); }
        int degree() const { return static_cast<int>(c_.size()) - 1; }
        const std::vector<F>& coefficients() const { return c_; }
        F coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : F(0); }
        F leading() const { return c_.empty() ? F(0) : c_.back(); }

        F evaluate(const F& t) const
        {
            F r(0);
            for (auto it = c_.rbegin(); it != c_.rend(); ++it)
                r = r * t + *it;
            return r;
        }

        Polynomial operator-() const
        {
            Polynomial r(*this);
            for (auto& a : r.c_) a = -a;
            return r;
        }
        Polynomial& operator+=(const Polynomial& o)
        {
            if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
            for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
            trim();
            return *this;
        }
        Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
        Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

        friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
        friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
        friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
        {
            if (a.is_zero() || b.is_zero()) return Polynomial();
            std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
            for (std::size_t i = 0; i < a.c_.size(); ++i)
                for (std::size_t j = 0; j < b.c_.size(); ++j)
                    c[i + j] += a.c_[i] * b.c_[j];
            return Polynomial(std::move(c));
        }
        friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
        friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

        /** Euclidean division: returns (q, r) with a = q b + r, deg r < deg b. */
        static std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b)
        {
            if (b.is_zero())
                throw DomainError("polynomial division by zero");
            Polynomial q, r(a);
            const F lead_inv = F(1) / b.leading();
            while (!r.is_zero() && r.degree() >= b.degree())
            {
                Polynomial t = monomial(r.leading() * lead_inv, r.degree() - b.degree());
                q += t;
                r -= t * b;
            }
            return {q, r};
        }

        friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divide(a, b).first; }
        friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divide(a, b).second; }

        Polynomial monic() const
        {
            if (is_zero()) return *this;
            Polynomial r(*this);
            const F inv = F(1) / leading();
            for (auto& a : r.c_) a *= inv;
            return r;
        }

        std::string str(const std::string& var = "x") const
        {
            if (c_.empty()) return "0";
            std::ostringstream os;
            bool first = true;
            for (int i = degree(); i >= 0; --i)
            {
                if (c_[i] == F(0)) continue;
                std::string coeff = FieldTraits<F>::format(c_[i]);
                bool neg = !coeff.empty() && coeff[0] == '-';
                if (neg) coeff = coeff.substr(1);
                if (first) os << (neg ? "-" : "");
                else os << (neg ? " - " : " + ");
                first = false;
                const bool unit_coeff = coeff == "1";
                if (i == 0) { os << coeff; continue; }
                if (!unit_coeff)
                {
                    if (coeff.find('/') != std::string::npos) os << "(" << coeff << ")";
                    else os << coeff;
                    os << "*";
                }
                os << var;
                if (i > 1) os << "^" << i;
            }
            return os.str();
        }

        friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }
};

template <ExactField F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b)
{
    return Polynomial<F>::divide(a, b);
}

template <ExactField F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b)
{
    while (!b.is_zero())
    {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}   // namespace findim

namespace Eigen {

template <int P>
struct NumTraits<findim::Zp<P>> : GenericNumTraits<findim::Zp<P>>
{
    typedef findim::Zp<P> Real;
    typedef findim::Zp<P> NonInteger;
    typedef findim::Zp<P> Literal;
    typedef findim::Zp<P> Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 3
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <findim::ExactField F>
struct NumTraits<findim::Polynomial<F>> : GenericNumTraits<findim::Polynomial<F>>
{
    typedef findim::Polynomial<F> Real;
    typedef findim::Polynomial<F> NonInteger;
    typedef findim::Polynomial<F> Literal;
    typedef findim::Polynomial<F> Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 10,
        MulCost = 20
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}   // namespace Eigen

#endif
