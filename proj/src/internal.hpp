// Helpers shared by the runtime translation units.
#ifndef FINDIM_SRC_INTERNAL_HPP
#define FINDIM_SRC_INTERNAL_HPP

#include <sstream>
#include <string>
#include <vector>

#include "findim/element.hpp"
#include "findim/engine.hpp"

namespace findim::internal {

template <ExactField F>
F parse_scalar(const std::string& s)
{
    auto e = parse_element(s);
    return evaluate_element<F>(
        *e, [](const Rational& q) { return field_from_rational<F>(q); },
        [&](const std::string& n) -> F { throw DomainError("unexpected name '" + n + "' in scalar " + s); });
}

inline Integer parse_integer(const std::string& s)
{
    auto e = parse_element(s);
    Rational q = evaluate_element<Rational>(
        *e, [](const Rational& x) { return x; },
        [&](const std::string& n) -> Rational { throw DomainError("unexpected name '" + n + "' in integer " + s); });
    if (boost::multiprecision::denominator(q) != 1) throw DomainError("not an integer: " + s);
    return boost::multiprecision::numerator(q);
}

inline Rational parse_rational(const std::string& s)
{
    auto e = parse_element(s);
    return evaluate_element<Rational>(
        *e, [](const Rational& x) { return x; },
        [&](const std::string& n) -> Rational { throw DomainError("unexpected name '" + n + "' in " + s); });
}

template <ExactField F>
Polynomial<F> parse_poly(const std::string& s)
{
    auto e = parse_element(s);
    return evaluate_element<Polynomial<F>>(
        *e, [](const Rational& q) { return Polynomial<F>(field_from_rational<F>(q)); },
        [&](const std::string& n) -> Polynomial<F> {
            if (n == "x") return Polynomial<F>::x();
            throw DomainError("unknown variable '" + n + "' in polynomial " + s);
        });
}

/** An element of a finite-dimensional algebra, as coordinates in its basis. */
template <ExactField F>
struct FdElement
{
    const Algebra<F>* alg = nullptr;
    Vec<F> v;

    friend FdElement operator+(const FdElement& a, const FdElement& b) { return {a.alg, Vec<F>(a.v + b.v)}; }
    friend FdElement operator-(const FdElement& a, const FdElement& b) { return {a.alg, Vec<F>(a.v - b.v)}; }
    friend FdElement operator*(const FdElement& a, const FdElement& b) { return {a.alg, a.alg->mul(a.v, b.v)}; }
    FdElement operator-() const { return {alg, Vec<F>(-v)}; }
};

template <ExactField F>
Vec<F> parse_fd_element(const Algebra<F>& alg, const std::string& s)
{
    auto e = parse_element(s);
    auto r = evaluate_element<FdElement<F>>(
        *e, [&](const Rational& q) { return FdElement<F>{&alg, Vec<F>(alg.unit() * field_from_rational<F>(q))}; },
        [&](const std::string& n) {
            const auto& labels = alg.labels();
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (labels[i] == n) return FdElement<F>{&alg, Vec<F>(alg.basis(static_cast<Index>(i)))};
            throw DomainError("unknown basis label '" + n + "' in " + alg.name());
        });
    return r.v;
}

/** A monomial x1^a1 ... xm^am (coefficient ignored when nonzero). */
inline Degree parse_monomial(int m, const std::string& s)
{
    auto e = parse_element(s);
    struct Mono
    {
        Degree d;
        bool zero = false;
        bool scalar_only = true;
        Mono operator*(const Mono& o) const
        {
            Mono r{deg_add(d, o.d), zero || o.zero, scalar_only && o.scalar_only};
            return r;
        }
        Mono operator+(const Mono&) const { throw DomainError("monomial expected, got a sum"); }
        Mono operator-(const Mono&) const { throw DomainError("monomial expected, got a difference"); }
        Mono operator-() const { return *this; }
    };
    auto r = evaluate_element<Mono>(
        *e, [&](const Rational& q) { return Mono{Degree(m, 0), q == 0, true}; },
        [&](const std::string& n) {
            if (n.size() >= 2 && n[0] == 'x')
            {
                int idx = 0;
                try
                {
                    idx = std::stoi(n.substr(1));
                }
                catch (const std::exception&)
                {
                    idx = 0;
                }
                if (idx >= 1 && idx <= m && n.substr(1) == std::to_string(idx))
                {
                    Degree d(m, 0);
                    d[idx - 1] = 1;
                    return Mono{d, false, false};
                }
            }
            throw DomainError("unknown variable '" + n + "' (expected x1..x" + std::to_string(m) + ")");
        });
    if (r.zero) throw DomainError("monomial is zero: " + s);
    return r.d;
}

template <ExactField F>
Mat<F> parse_matrix(const std::vector<std::vector<std::string>>& rows, Index cols_if_empty = 0)
{
    const Index r = static_cast<Index>(rows.size());
    const Index c = r ? static_cast<Index>(rows[0].size()) : cols_if_empty;
    Mat<F> m(r, c);
    for (Index i = 0; i < r; ++i)
    {
        if (static_cast<Index>(rows[i].size()) != c) throw DomainError("matrix rows have different lengths");
        for (Index j = 0; j < c; ++j) m(i, j) = parse_scalar<F>(rows[i][j]);
    }
    return m;
}

template <ExactField F>
std::string format_fd_element(const Algebra<F>& alg, const Vec<F>& v)
{
    std::string out;
    for (Index i = 0; i < v.size(); ++i)
    {
        if (v(i) == F(0)) continue;
        std::string c = FieldTraits<F>::format(v(i));
        std::string term = c == "1" ? alg.labels()[i] : c + "*" + alg.labels()[i];
        out += (out.empty() ? "" : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

template <typename Fn>
decltype(auto) with_field(FieldKind k, Fn&& fn)
{
    switch (k)
    {
        case FieldKind::Q: return fn(Rational());
        case FieldKind::F2: return fn(F2());
        case FieldKind::F3: break;
    }
    return fn(F3());
}

}   // namespace findim::internal

#endif
