#include <random>

#include "doctest.h"
#include "findim/linalg.hpp"
#include "findim/pid_module.hpp"
#include "findim/smith.hpp"
#include "oracle.hpp"

using namespace findim;

namespace {

Mat<Integer> random_int_matrix(std::mt19937_64& g, Index r, Index c, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    Mat<Integer> m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = Integer(d(g));
    return m;
}

}   // namespace

TEST_CASE("smith form agrees with determinantal divisors")
{
    std::mt19937_64 g(11);
    IntegerDomain z;
    for (int trial = 0; trial < 200; ++trial)
    {
        const Index r = 1 + trial % 3, c = 1 + (trial / 3) % 4;
        const Mat<Integer> m = random_int_matrix(g, r, c, trial % 2 ? 9 : 3);
        const auto sf = smith_normal_form(m, z);
        CHECK(Mat<Integer>(sf.U * m * sf.V) == sf.D);
        CHECK(Mat<Integer>(sf.U * sf.Uinv) == identity<Integer>(r));
        CHECK(Mat<Integer>(sf.V * sf.Vinv) == identity<Integer>(c));
        const auto inv = sf.invariant_factors();
        for (std::size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j)
                if (i != j) CHECK(sf.D(i, j) == 0);
        std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(r));
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j) rows[i].push_back(m(i, j));
        const auto want = oracle::invariant_factors(rows);
        REQUIRE(want.size() == inv.size());
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(abs(inv[i]) == want[i]);
    }
}

TEST_CASE("smith form is deterministic")
{
    std::mt19937_64 g(5);
    IntegerDomain z;
    const Mat<Integer> m = random_int_matrix(g, 3, 3, 20);
    const auto a = smith_normal_form(m, z), b = smith_normal_form(m, z);
    CHECK(a.U == b.U);
    CHECK(a.V == b.V);
}

TEST_CASE("rational kernel and rank")
{
    std::mt19937_64 g(3);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 100; ++trial)
    {
        const Index r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
        Mat<Rational> m(r, c);
        std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(r));
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j)
            {
                m(i, j) = Rational(d(g), 1 + (trial % 3));
                rows[i].push_back(m(i, j));
            }
        const Index rk = rank<Rational>(m);
        CHECK(static_cast<std::size_t>(rk) == oracle::rank(rows));
        const Mat<Rational> k = kernel<Rational>(m);
        CHECK(k.cols() == c - rk);
        CHECK(is_zero<Rational>(Mat<Rational>(m * k)));
        CHECK(rank<Rational>(k) == k.cols());
    }
}

TEST_CASE("prime field arithmetic")
{
    for (long long a = 1; a < 3; ++a) CHECK(F3(a) * (F3(1) / F3(a)) == F3(1));
    CHECK(F2(1) + F2(1) == F2(0));
    CHECK(F3(2) * F3(2) == F3(1));
}

TEST_CASE("lattice solve finds integer solutions or a failing coordinate")
{
    IntegerDomain z;
    Mat<Integer> a(2, 2);
    a << 2, 0, 0, 3;
    Vec<Integer> b(2);
    b << 4, 9;
    auto s = solve_lattice(a, b, z);
    REQUIRE(s.solution);
    CHECK(Vec<Integer>(a * *s.solution) == b);
    b << 3, 9;
    CHECK_FALSE(solve_lattice(a, b, z).solution);
}

TEST_CASE("presented integer modules normalize")
{
    IntegerDomain z;
    Mat<Integer> rel(2, 2);
    rel << 2, 0, 0, 3;
    const auto m = PresentedModule<IntegerDomain>(z, rel);
    const auto st = m.structure();
    REQUIRE(st.torsion.size() == 1);
    CHECK(st.torsion[0] == 6);
    CHECK(st.free_rank == 0);
}
