/**
 * Ring element expressions: sums, differences, products and powers of
 * numerals (integers or a/b) and identifiers, with parentheses.  Parsing is
 * ring-independent; evaluation takes a context that interprets identifiers.
 */
#ifndef FINDIM_ELEMENT_HPP
#define FINDIM_ELEMENT_HPP

#include <cctype>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "findim/errors.hpp"
#include "findim/scalar.hpp"

namespace findim {

struct ElementExpr
{
    enum class Kind { Number, Name, Add, Sub, Mul, Neg, Pow };
    Kind kind = Kind::Number;
    Rational number;
    std::string name;
    int exponent = 0;
    std::vector<std::shared_ptr<const ElementExpr>> args;
};

using ElementExprPtr = std::shared_ptr<const ElementExpr>;

namespace detail {

class ElementParser
{
    public:
        explicit ElementParser(const std::string& s) : s_(s) {}

        ElementExprPtr parse()
        {
            auto e = sum();
            skip();
            if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
            return e;
        }

    private:
        const std::string& s_;
        std::size_t i_ = 0;

        [[noreturn]] void fail(const std::string& what) const
        {
            throw DomainError("element '" + s_ + "': " + what);
        }

        void skip()
        {
            while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        }

        bool eat(char c)
        {
            skip();
            if (i_ < s_.size() && s_[i_] == c)
            {
                ++i_;
                return true;
            }
            return false;
        }

        static ElementExprPtr node(ElementExpr::Kind k, std::vector<ElementExprPtr> args)
        {
            auto e = std::make_shared<ElementExpr>();
            e->kind = k;
            e->args = std::move(args);
            return e;
        }

        ElementExprPtr sum()
        {
            ElementExprPtr acc;
            if (eat('-')) acc = node(ElementExpr::Kind::Neg, {product()});
            else
            {
                eat('+');
                acc = product();
            }
            while (true)
            {
                if (eat('+')) acc = node(ElementExpr::Kind::Add, {acc, product()});
                else if (eat('-')) acc = node(ElementExpr::Kind::Sub, {acc, product()});
                else return acc;
            }
        }

        ElementExprPtr product()
        {
            auto acc = power();
            while (eat('*')) acc = node(ElementExpr::Kind::Mul, {acc, power()});
            return acc;
        }

        ElementExprPtr power()
        {
            auto base = atom();
            if (eat('^'))
            {
                skip();
                std::size_t start = i_;
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
                if (start == i_) fail("exponent must be a nonnegative integer");
                auto e = node(ElementExpr::Kind::Pow, {base});
                std::const_pointer_cast<ElementExpr>(e)->exponent = std::stoi(s_.substr(start, i_ - start));
                return e;
            }
            return base;
        }

        ElementExprPtr atom()
        {
            skip();
            if (i_ >= s_.size()) fail("unexpected end");
            if (eat('('))
            {
                auto e = sum();
                if (!eat(')')) fail("missing ')'");
                return e;
            }
            if (std::isdigit(static_cast<unsigned char>(s_[i_])))
            {
                std::size_t start = i_;
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
                std::string num = s_.substr(start, i_ - start);
                if (i_ < s_.size() && s_[i_] == '/' && i_ + 1 < s_.size()
                    && std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))
                {
                    ++i_;
                    std::size_t ds = i_;
                    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
                    num += "/" + s_.substr(ds, i_ - ds);
                }
                auto e = std::make_shared<ElementExpr>();
                e->kind = ElementExpr::Kind::Number;
                try
                {
                    e->number = Rational(num);
                }
                catch (const std::exception&)
                {
                    fail("bad numeral " + num);
                }
                return e;
            }
            if (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')
            {
                std::size_t start = i_;
                while (i_ < s_.size()
                       && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == ':'
                           || s_[i_] == '.'))
                    ++i_;
                auto e = std::make_shared<ElementExpr>();
                e->kind = ElementExpr::Kind::Name;
                e->name = s_.substr(start, i_ - start);
                return e;
            }
            fail("unexpected '" + std::string(1, s_[i_]) + "'");
        }
};

}   // namespace detail

inline ElementExprPtr parse_element(const std::string& text)
{
    return detail::ElementParser(text).parse();
}

/**
 * Evaluate with user callbacks.  V must support +, -, unary -, *; `number`
 * embeds a rational, `name` resolves identifiers.
 */
template <typename V>
V evaluate_element(const ElementExpr& e, const std::function<V(const Rational&)>& number,
                   const std::function<V(const std::string&)>& name)
{
    switch (e.kind)
    {
        case ElementExpr::Kind::Number: return number(e.number);
        case ElementExpr::Kind::Name: return name(e.name);
        case ElementExpr::Kind::Add:
            return evaluate_element<V>(*e.args[0], number, name) + evaluate_element<V>(*e.args[1], number, name);
        case ElementExpr::Kind::Sub:
            return evaluate_element<V>(*e.args[0], number, name) - evaluate_element<V>(*e.args[1], number, name);
        case ElementExpr::Kind::Mul:
            return evaluate_element<V>(*e.args[0], number, name) * evaluate_element<V>(*e.args[1], number, name);
        case ElementExpr::Kind::Neg: return -evaluate_element<V>(*e.args[0], number, name);
        case ElementExpr::Kind::Pow:
        {
            V base = evaluate_element<V>(*e.args[0], number, name);
            V acc = number(Rational(1));
            for (int k = 0; k < e.exponent; ++k) acc = acc * base;
            return acc;
        }
    }
    throw DomainError("bad element expression");
}

/** Convert a rational to a field element; fails when the denominator vanishes. */
template <ExactField F>
F field_from_rational(const Rational& q)
{
    if constexpr (FieldTraits<F>::characteristic == 0)
        return F(q);
    else
    {
        constexpr int p = FieldTraits<F>::characteristic;
        Integer num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
        Integer nm = num % p, dm = den % p;
        if (nm < 0) nm += p;
        if (dm == 0) throw DomainError("denominator " + den.str() + " vanishes in " + FieldTraits<F>::name());
        return F(static_cast<long long>(nm)) / F(static_cast<long long>(dm));
    }
}

}   // namespace findim

#endif
