#include "doctest.h"
#include "findim/derived.hpp"
#include "findim/finitistic.hpp"
#include "findim/random.hpp"
#include "oracle.hpp"

using namespace findim;

namespace {

std::vector<std::string> cyclic_factors(const Integer& g)
{
    if (g == 1) return {};
    return {g.str()};
}

RingPtr local_algebra_e2()
{
    // k[x,y]/(x,y)^2: local, socle of dimension 2
    AlgebraTable t;
    t.field = FieldKind::Q;
    t.name = "E";
    t.labels = {"1", "x", "y"};
    t.c.assign(3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
    for (int i = 0; i < 3; ++i)
    {
        t.c[0][i][i] = 1;
        t.c[i][0][i] = 1;
    }
    t.unit = {1, 0, 0};
    return make_fd_algebra(t);
}

}   // namespace

TEST_CASE("Tor and Ext over Z match the gcd oracle")
{
    const RingPtr z = make_integers();
    for (int a = 1; a <= 12; ++a)
        for (int b = 1; b <= 12; ++b)
        {
            const Module ma = module_cyclic(z, {std::to_string(a)}), mb = module_cyclic(z, {std::to_string(b)});
            const auto g = cyclic_factors(oracle::igcd(a, b));
            CHECK(tor(0, ma, mb).factors == g);
            CHECK(tor(1, ma, mb).factors == g);
            CHECK(tor(2, ma, mb).is_zero());
            CHECK(ext(0, ma, mb).factors == g);
            CHECK(ext(1, ma, mb).factors == g);
        }
    CHECK(tor(1, module_cyclic(z, {"4"}), module_cyclic(z, {"6"})).text == "Z/2");
}

TEST_CASE("Ext over the dual numbers is one-dimensional in every degree")
{
    AlgebraTable t;
    t.field = FieldKind::F3;
    t.name = "D";
    t.labels = {"1", "e"};
    t.c.assign(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
    t.c[0][0][0] = 1;
    t.c[0][1][1] = 1;
    t.c[1][0][1] = 1;
    t.unit = {1, 0};
    const Module k = module_residue(make_fd_algebra(t));
    for (Index n = 0; n <= 5; ++n) CHECK(ext(n, k, k).dim == 1);
}

TEST_CASE("Koszul Tor of the residue field")
{
    for (int m = 1; m <= 3; ++m)
    {
        const Module k = module_residue(make_koszul(FieldKind::Q, m));
        for (int n = 0; n <= m + 1; ++n) CHECK(tor(n, k, k).dim == (n <= m ? oracle::binomial(m, n) : 0));
    }
}

TEST_CASE("FT-flat dimension over Z")
{
    const RingPtr z = make_integers();
    const WitnessFamily w = default_family(z);
    CHECK(ft_flat_dim(module_cyclic(z, {"8"}), w).d == 1);
    CHECK(ft_flat_dim(module_free(z, 3), w).d == 0);
    CHECK(ft_flat_test(module_free(z, 1), w).pass);
    CHECK_FALSE(ft_flat_test(module_cyclic(z, {"6"}), w).pass);
}

TEST_CASE("witness shift postconditions")
{
    const RingPtr z = make_integers();
    const auto r = witness_shift(module_cyclic(z, {"2"}), module_cyclic(z, {"4"}), 1);
    CHECK(tor(1, module_cyclic(z, {"2"}), r.n).is_zero());
    CHECK_FALSE(tor(0, module_cyclic(z, {"2"}), r.n).is_zero());
    CHECK_THROWS(witness_shift(module_cyclic(z, {"2"}), module_cyclic(z, {"3"}), 1));
}

TEST_CASE("finitistic bounds per backend")
{
    const FpdOptions o;
    struct Case
    {
        RingPtr r;
        Index lo, hi;
    };
    const std::vector<Case> cases{{make_field(FieldKind::Q), 0, 0},     {make_integers(), 1, 1},
                                  {make_local_integers(Integer(5)), 1, 1}, {make_polypid(FieldKind::F2), 1, 1},
                                  {make_mod_integers(Integer(12)), 0, 0}, {make_koszul(FieldKind::Q, 2), 2, 2},
                                  {local_algebra_e2(), 0, 0},             {make_utn_ring(make_field(FieldKind::Q), 2), 1, 1}};
    for (const auto& c : cases)
    {
        const auto f = fpd_bounds(c.r, o);
        CHECK(f.lower == c.lo);
        REQUIRE(f.upper);
        CHECK(*f.upper == c.hi);
        CHECK(f.exact);
    }
    CHECK(fpd_bounds(local_algebra_e2(), o).rule == UpperRule::LocalArtinian);
}

TEST_CASE("theorem checks on small instances")
{
    const FpdOptions o;
    CHECK(polynomial_theorem_check(FieldKind::F3, 2, o).pass);
    CHECK(quotient_theorem_check(make_integers(), "9", o).pass);
    CHECK(localization_inequality_check(make_integers(), {"2", "7"}, o).pass);
    CHECK(triangular_bounds_check(make_utn_ring(make_field(FieldKind::F2), 3), o).pass);
    CHECK_THROWS_AS(triangular_bounds_check(make_integers(), o), PreconditionError);
}

TEST_CASE("Tor localization over Z on random pairs")
{
    gen::Rng g(77);
    const RingPtr z = make_integers();
    for (int i = 0; i < 15; ++i)
    {
        const Module m = gen::random_module(z, g), n = gen::random_module(z, g);
        for (int p : {2, 3, 7})
            for (Index d : {0, 1}) CHECK(check_tor_localization(m, n, d, Integer(p)).pass);
    }
}

TEST_CASE("FPR closure: syzygies of FPR modules stay in FPR")
{
    gen::Rng g(4);
    for (const auto& r : {make_integers(), make_utn_ring(make_field(FieldKind::Q), 2)})
        for (int i = 0; i < 20; ++i)
        {
            const Module m = gen::random_module(r, g);
            if (fpr_membership(m).verdict != Membership::Yes) continue;
            CHECK(fpr_membership(syzygy(m, 1)).verdict == Membership::Yes);
        }
}
