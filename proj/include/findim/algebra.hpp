/**
 * Finite-dimensional associative algebras over an exact field, given by
 * structure constants.  Construction validates associativity and the unit
 * laws exhaustively, then computes the Jacobson radical and a complete set of
 * primitive orthogonal idempotents (split basic algebras).
 */
#ifndef FINDIM_ALGEBRA_HPP
#define FINDIM_ALGEBRA_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "findim/linalg.hpp"

namespace findim {

namespace detail {

inline std::vector<Integer> divisors(Integer n)
{
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0)
        {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

/** Minimal polynomial of a square matrix, monic, low degree first. */
template <ExactField F>
std::vector<F> minimal_polynomial(const Mat<F>& m)
{
    const Index n = m.rows();
    std::vector<Mat<F>> powers{identity<F>(n)};
    while (true)
    {
        const Index k = static_cast<Index>(powers.size());
        Mat<F> basis(n * n, k);
        for (Index i = 0; i < k; ++i)
            basis.col(i) = Eigen::Map<const Vec<F>>(powers[i].data(), n * n);
        Mat<F> next = powers.back() * m;
        Vec<F> target = Eigen::Map<const Vec<F>>(next.data(), n * n);
        auto sol = solve_linear<F>(basis, target);
        if (sol.solvable())
        {
            std::vector<F> coeffs(k + 1, F(0));
            for (Index i = 0; i < k; ++i) coeffs[i] = -(*sol.solution)(i);
            coeffs[k] = F(1);
            return coeffs;
        }
        powers.push_back(next);
    }
}

/** Roots in F of a polynomial (coefficients low degree first). */
template <ExactField F>
std::vector<F> roots_in_field(const std::vector<F>& poly)
{
    auto eval = [&](const F& t) {
        F r(0);
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = r * t + *it;
        return r;
    };
    std::vector<F> out;
    if constexpr (FieldTraits<F>::characteristic > 0)
    {
        for (int v = 0; v < FieldTraits<F>::characteristic; ++v)
            if (eval(F(v)) == F(0)) out.push_back(F(v));
    }
    else
    {
        Integer lcm = 1;
        for (const auto& c : poly)
        {
            Integer d = denominator(c);
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        std::vector<Integer> ic;
        for (const auto& c : poly) ic.push_back(numerator(c * Rational(lcm)));
        std::size_t low = 0;
        while (low < ic.size() && ic[low] == 0) ++low;
        if (low > 0) out.push_back(F(0));
        if (low + 1 < ic.size())
        {
            for (const auto& p : divisors(ic[low]))
                for (const auto& q : divisors(ic.back()))
                    for (int sign : {1, -1})
                    {
                        F cand = F(Rational(p * sign, q));
                        if (eval(cand) == F(0) && std::find(out.begin(), out.end(), cand) == out.end())
                            out.push_back(cand);
                    }
        }
    }
    return out;
}

}   // namespace detail

template <ExactField F>
class Algebra : public std::enable_shared_from_this<Algebra<F>>
{
    public:
        using Ptr = std::shared_ptr<const Algebra>;

        struct Options
        {
            // Candidate radical (columns); verified before use.
            std::optional<Mat<F>> radical_hint;
            // Complete set of primitive orthogonal idempotents; verified before use.
            std::optional<std::vector<Vec<F>>> idempotent_hint;
            bool is_field = false;
        };

    private:
        std::string name_;
        std::vector<std::string> labels_;
        std::vector<Mat<F>> left_;     // left_[i](k, j) = coefficient of b_k in b_i b_j
        std::vector<Mat<F>> right_;    // right_[i](k, j) = coefficient of b_k in b_j b_i
        Vec<F> unit_;
        bool commutative_ = false;
        bool is_field_ = false;
        Mat<F> radical_;
        std::vector<Vec<F>> idempotents_;
        std::vector<Vec<F>> generators_;
        Index nilpotency_ = 0;

        struct Token {};

    public:
        Algebra(Token, std::string name, std::vector<std::string> labels,
                std::vector<Mat<F>> left, Vec<F> unit)
            : name_(std::move(name)), labels_(std::move(labels)), left_(std::move(left)),
              unit_(std::move(unit)) {}

        /**
         * Build an algebra from its left multiplication matrices.  Throws
         * AlgebraError naming the offending basis triple when associativity
         * fails, or the basis element when a unit law fails.
         */
        static Ptr create(std::vector<std::string> labels, std::vector<Mat<F>> left, Vec<F> unit,
                          std::string name, Options opts = {})
        {
            const Index d = static_cast<Index>(left.size());
            if (d < 1) throw AlgebraError("algebra dimension must be at least 1");
            if (static_cast<Index>(labels.size()) != d || unit.size() != d)
                throw AlgebraError("algebra data has inconsistent dimensions");
            for (const auto& l : left)
                if (l.rows() != d || l.cols() != d)
                    throw AlgebraError("structure constants must be indexed over d^3");
            auto a = std::make_shared<Algebra>(Token{}, std::move(name), std::move(labels),
                                               std::move(left), std::move(unit));
            a->validate();
            a->is_field_ = opts.is_field || d == 1;
            a->compute_structure(opts.radical_hint, opts.idempotent_hint);
            return a;
        }

        /** Build from products[i][j] = coordinates of b_i b_j. */
        static Ptr from_products(std::vector<std::string> labels,
                                 const std::vector<std::vector<Vec<F>>>& products, Vec<F> unit,
                                 std::string name, Options opts = {})
        {
            const Index d = static_cast<Index>(products.size());
            std::vector<Mat<F>> left(d, zeros<F>(d, d));
            for (Index i = 0; i < d; ++i)
            {
                if (static_cast<Index>(products[i].size()) != d)
                    throw AlgebraError("structure constants must be indexed over d^3");
                for (Index j = 0; j < d; ++j)
                {
                    if (products[i][j].size() != d)
                        throw AlgebraError("structure constants must be indexed over d^3");
                    left[i].col(j) = products[i][j];
                }
            }
            return create(std::move(labels), std::move(left), std::move(unit), std::move(name), opts);
        }

        static Ptr field(std::string name)
        {
            Vec<F> u(1);
            u(0) = F(1);
            Options o;
            o.is_field = true;
            return create({"1"}, {identity<F>(1)}, u, std::move(name), o);
        }

        const std::string& name() const { return name_; }
        const std::vector<std::string>& labels() const { return labels_; }
        Index dim() const { return static_cast<Index>(left_.size()); }
        const Mat<F>& left(Index i) const { return left_[i]; }
        const Mat<F>& right(Index i) const { return right_[i]; }
        const Vec<F>& unit() const { return unit_; }
        bool is_commutative() const { return commutative_; }
        bool is_field() const { return is_field_; }
        bool is_local() const { return idempotents_.size() == 1; }
        const Mat<F>& radical() const { return radical_; }
        const std::vector<Vec<F>>& idempotents() const { return idempotents_; }
        Index vertex_count() const { return static_cast<Index>(idempotents_.size()); }
        const std::vector<Vec<F>>& generators() const { return generators_; }
        Index nilpotency_index() const { return nilpotency_; }

        Vec<F> basis(Index i) const
        {
            Vec<F> v = Vec<F>::Constant(dim(), F(0));
            v(i) = F(1);
            return v;
        }

        Mat<F> left_of(const Vec<F>& x) const
        {
            Mat<F> m = zeros<F>(dim(), dim());
            for (Index i = 0; i < dim(); ++i)
                if (x(i) != F(0)) m += x(i) * left_[i];
            return m;
        }

        Mat<F> right_of(const Vec<F>& x) const
        {
            Mat<F> m = zeros<F>(dim(), dim());
            for (Index i = 0; i < dim(); ++i)
                if (x(i) != F(0)) m += x(i) * right_[i];
            return m;
        }

        Vec<F> mul(const Vec<F>& x, const Vec<F>& y) const { return left_of(x) * y; }

        /** Basis of A e for the primitive idempotent of the given vertex, as columns. */
        Mat<F> projective_basis(Index vertex) const
        {
            return image_basis<F>(right_of(idempotents_.at(vertex)));
        }

        /** Structural equality: same dimension and identical structure constants. */
        bool same_structure(const Algebra& o) const
        {
            if (dim() != o.dim()) return false;
            for (Index i = 0; i < dim(); ++i)
                if (left_[i] != o.left_[i]) return false;
            return unit_ == o.unit_;
        }

        /** The opposite algebra; a commutative algebra is its own opposite. */
        Ptr opposite() const
        {
            if (commutative_) return this->shared_from_this();
            Options o;
            o.radical_hint = radical_;
            o.idempotent_hint = idempotents_;
            return create(labels_, right_, unit_, name_ + "^op", o);
        }

        std::string describe() const
        {
            std::ostringstream os;
            os << name_ << " (dim " << dim() << " over " << FieldTraits<F>::name() << ")";
            return os.str();
        }

    private:
        void validate()
        {
            const Index d = dim();
            right_.assign(d, zeros<F>(d, d));
            for (Index i = 0; i < d; ++i)
                for (Index j = 0; j < d; ++j)
                    right_[i].col(j) = left_[j].col(i);

            Mat<F> lu = left_of(unit_);
            if (lu != identity<F>(d))
            {
                for (Index j = 0; j < d; ++j)
                    if (lu.col(j) != basis(j))
                        throw AlgebraError("unit law fails: 1*" + labels_[j] + " != " + labels_[j]);
            }
            Mat<F> ru = right_of(unit_);
            for (Index j = 0; j < d; ++j)
                if (ru.col(j) != basis(j))
                    throw AlgebraError("unit law fails: " + labels_[j] + "*1 != " + labels_[j]);

            for (Index i = 0; i < d; ++i)
                for (Index j = 0; j < d; ++j)
                {
                    Mat<F> lhs = left_of(Vec<F>(left_[i].col(j)));
                    Mat<F> rhs = left_[i] * left_[j];
                    if (lhs == rhs) continue;
                    for (Index k = 0; k < d; ++k)
                        if (lhs.col(k) != rhs.col(k))
                            throw AlgebraError("associativity fails on basis triple (" + labels_[i] + ", "
                                               + labels_[j] + ", " + labels_[k] + ")");
                }

            commutative_ = true;
            for (Index i = 0; i < d && commutative_; ++i)
                if (left_[i] != right_[i]) commutative_ = false;
        }

        /** Span of all products x*y with x in columns of a, y in columns of b. */
        Mat<F> product_span(const Mat<F>& a, const Mat<F>& b) const
        {
            Mat<F> all(dim(), a.cols() * b.cols());
            Index k = 0;
            for (Index i = 0; i < a.cols(); ++i)
            {
                Mat<F> la = left_of(Vec<F>(a.col(i)));
                for (Index j = 0; j < b.cols(); ++j) all.col(k++) = la * b.col(j);
            }
            return image_basis<F>(all);
        }

        /** Two-sided ideal generated by the columns of g. */
        Mat<F> ideal_closure(const Mat<F>& g) const
        {
            Mat<F> span = image_basis<F>(g);
            while (true)
            {
                Mat<F> grown = span;
                for (Index i = 0; i < dim(); ++i)
                {
                    grown = hcat<F>(grown, Mat<F>(left_[i] * span));
                    grown = hcat<F>(grown, Mat<F>(right_[i] * span));
                }
                Mat<F> next = image_basis<F>(grown);
                if (next.cols() == span.cols()) return span;
                span = next;
            }
        }

        bool is_ideal(const Mat<F>& j) const
        {
            for (Index i = 0; i < dim(); ++i)
                if (!in_span<F>(j, Mat<F>(left_[i] * j)) || !in_span<F>(j, Mat<F>(right_[i] * j)))
                    return false;
            return true;
        }

        /** Nilpotency index of the span j (smallest k with j^k = 0), or -1. */
        Index nilpotency_of(const Mat<F>& j) const
        {
            if (j.cols() == 0) return 1;
            Mat<F> power = j;
            for (Index k = 2; k <= dim() + 1; ++k)
            {
                power = product_span(power, j);
                if (power.cols() == 0) return k;
            }
            return -1;
        }

        /** Quotient data for A / I: projection rows and complement columns. */
        struct QuotientData
        {
            Mat<F> complement;   // standard vectors spanning a complement of I
            Mat<F> projection;   // coordinates modulo I
        };

        QuotientData quotient_by(const Mat<F>& ideal) const
        {
            QuotientData q;
            q.complement = complement_basis<F>(ideal);
            Mat<F> full = hcat<F>(ideal, q.complement);
            Mat<F> inv = *solve_matrix<F>(full, identity<F>(dim()));
            q.projection = inv.bottomRows(q.complement.cols());
            return q;
        }

        Mat<F> compute_radical() const
        {
            const Index d = dim();
            constexpr int p = FieldTraits<F>::characteristic;
            if (p == 0 || p > d)
            {
                Mat<F> gram(d, d);
                for (Index i = 0; i < d; ++i)
                    for (Index j = 0; j < d; ++j)
                        gram(i, j) = (left_[i] * left_[j]).trace();
                return kernel<F>(gram);
            }
            // Positive characteristic: the commutator ideal lies in the radical
            // of a basic algebra; the rest is the nilradical of the commutative
            // quotient, the kernel of an iterated Frobenius map.
            Mat<F> comm(d, 0);
            for (Index i = 0; i < d; ++i)
                for (Index j = i + 1; j < d; ++j)
                {
                    Vec<F> c = left_[i].col(j) - left_[j].col(i);
                    if (!is_zero<F>(c)) comm = hcat<F>(comm, Mat<F>(c));
                }
            Mat<F> ideal = ideal_closure(comm);
            auto q = quotient_by(ideal);
            const Index qd = q.complement.cols();
            Mat<F> frob(qd, qd);
            for (Index a = 0; a < qd; ++a)
            {
                Vec<F> x = q.complement.col(a);
                Vec<F> pw = x;
                for (int t = 1; t < p; ++t) pw = mul(pw, x);
                frob.col(a) = q.projection * pw;
            }
            Mat<F> iter = identity<F>(qd);
            for (Index reach = 1; reach < d; reach *= p) iter = frob * iter;
            iter = frob * iter;
            Mat<F> nil = q.complement * kernel<F>(iter);
            return image_basis<F>(hcat<F>(ideal, nil));
        }

        void compute_structure(const std::optional<Mat<F>>& hint,
                               const std::optional<std::vector<Vec<F>>>& idem_hint)
        {
            radical_ = hint ? image_basis<F>(*hint) : compute_radical();
            if (!is_ideal(radical_))
                throw AlgebraError("radical candidate of " + name_ + " is not a two-sided ideal");
            nilpotency_ = nilpotency_of(radical_);
            if (nilpotency_ < 0)
                throw UnsupportedError(name_ + ": radical candidate is not nilpotent; the algebra is not split basic");

            if (idem_hint && valid_idempotents(*idem_hint)) idempotents_ = *idem_hint;
            else compute_idempotents();
            compute_generators();
        }

        /** Complete, orthogonal, and each corner e A e local of top dimension 1. */
        bool valid_idempotents(const std::vector<Vec<F>>& es) const
        {
            Vec<F> sum = Vec<F>::Constant(dim(), F(0));
            for (std::size_t a = 0; a < es.size(); ++a)
            {
                sum += es[a];
                for (std::size_t b = 0; b < es.size(); ++b)
                {
                    Vec<F> p = mul(es[a], es[b]);
                    if (a == b ? p != es[a] : !is_zero<F>(p)) return false;
                }
                Mat<F> corner = left_of(es[a]) * right_of(es[a]);
                Mat<F> rad_corner = corner * radical_;
                if (rank<F>(corner) - rank<F>(rad_corner) != 1) return false;
            }
            return sum == unit_;
        }

        void compute_idempotents()
        {
            const Index d = dim();
            auto q = quotient_by(radical_);
            const Index n = q.complement.cols();
            std::vector<Mat<F>> ops;
            for (Index a = 0; a < n; ++a)
                ops.push_back(q.projection * left_of(Vec<F>(q.complement.col(a))) * q.complement);
            for (Index a = 0; a < n; ++a)
                for (Index b = 0; b < n; ++b)
                    if (ops[a] * ops[b] != ops[b] * ops[a])
                        throw UnsupportedError(name_ + ": semisimple quotient is not commutative; only basic algebras are supported");

            std::vector<Mat<F>> spaces{identity<F>(n)};
            for (const auto& op : ops)
            {
                std::vector<Mat<F>> next;
                for (const auto& w : spaces)
                {
                    Mat<F> restricted = coordinates<F>(w, Mat<F>(op * w));
                    Index covered = 0;
                    for (const F& lambda : detail::roots_in_field<F>(detail::minimal_polynomial<F>(restricted)))
                    {
                        Mat<F> shifted = restricted - lambda * identity<F>(w.cols());
                        Mat<F> eig = w * kernel<F>(shifted);
                        if (eig.cols() == 0) continue;
                        covered += eig.cols();
                        next.push_back(eig);
                    }
                    if (covered != w.cols())
                        throw UnsupportedError(name_ + ": semisimple quotient does not split over "
                                               + FieldTraits<F>::name());
                }
                spaces = std::move(next);
            }
            std::vector<Vec<F>> bar;
            for (const auto& w : spaces)
            {
                if (w.cols() != 1)
                    throw UnsupportedError(name_ + ": semisimple quotient is not a product of copies of the field");
                Vec<F> v = w.col(0);
                Vec<F> lifted = q.complement * v;
                Vec<F> sq = q.projection * mul(lifted, lifted);
                Index piv = 0;
                while (v(piv) == F(0)) ++piv;
                bar.push_back(v * (v(piv) / sq(piv)));
            }

            // Lift orthogonally, one corner at a time.
            Vec<F> sum = Vec<F>::Constant(d, F(0));
            std::vector<Vec<F>> lifted;
            for (std::size_t t = 0; t + 1 < bar.size(); ++t)
            {
                Vec<F> rest = unit_ - sum;
                Vec<F> y = mul(mul(rest, Vec<F>(q.complement * bar[t])), rest);
                for (int it = 0; it < 64; ++it)
                {
                    Vec<F> y2 = mul(y, y);
                    if (y2 == y) break;
                    Vec<F> y3 = mul(y2, y);
                    y = F(3) * y2 - F(2) * y3;
                }
                if (mul(y, y) != y) throw AlgebraError(name_ + ": idempotent lifting failed");
                lifted.push_back(y);
                sum += y;
            }
            lifted.push_back(unit_ - sum);

            std::sort(lifted.begin(), lifted.end(), [](const Vec<F>& a, const Vec<F>& b) {
                auto first = [](const Vec<F>& v) {
                    Index i = 0;
                    while (i < v.size() && v(i) == F(0)) ++i;
                    return i;
                };
                return first(a) < first(b);
            });
            idempotents_ = std::move(lifted);
        }

        void compute_generators()
        {
            const Index d = dim();
            Mat<F> rad2 = product_span(radical_, radical_);
            Mat<F> both = hcat<F>(rad2, radical_);
            auto e = rref(both);
            std::vector<Vec<F>> gens = idempotents_;
            for (Index p : e.pivots)
                if (p >= rad2.cols()) gens.push_back(radical_.col(p - rad2.cols()));

            // Confirm the set generates; otherwise fall back to the full basis.
            Mat<F> span(d, 1);
            span.col(0) = unit_;
            for (const auto& g : gens) span = hcat<F>(span, Mat<F>(g));
            span = image_basis<F>(span);
            while (span.cols() < d)
            {
                Mat<F> grown = span;
                for (const auto& g : gens) grown = hcat<F>(grown, Mat<F>(left_of(g) * span));
                Mat<F> next = image_basis<F>(grown);
                if (next.cols() == span.cols()) break;
                span = next;
            }
            if (span.cols() < d)
            {
                gens.clear();
                for (Index i = 0; i < d; ++i) gens.push_back(basis(i));
            }
            generators_ = std::move(gens);
        }
};

}   // namespace findim

#endif
