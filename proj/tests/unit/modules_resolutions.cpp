#include "doctest.h"
#include "findim/engine.hpp"
#include "findim/random.hpp"
#include "oracle.hpp"

using namespace findim;

namespace {

RingPtr dual_numbers()
{
    AlgebraTable t;
    t.field = FieldKind::Q;
    t.name = "D";
    t.labels = {"1", "e"};
    t.c.assign(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
    t.c[0][0][0] = 1;
    t.c[0][1][1] = 1;
    t.c[1][0][1] = 1;
    t.unit = {1, 0};
    return make_fd_algebra(t);
}

RingPtr example_ring() { return make_triangular_ring(dual_numbers(), make_field(FieldKind::Q), {}, "T"); }

}   // namespace

TEST_CASE("ring constructors report their dimensions")
{
    const RingPtr t = example_ring();
    CHECK(t->kind == RingKind::Triangular);
    CHECK(module_dimension(module_regular(t)) == 5);
    CHECK(module_dimension(module_regular(make_utn_ring(make_field(FieldKind::Q), 3))) == 6);
    CHECK(module_dimension(module_projective(t, 0)) == 2);
    CHECK(module_dimension(module_projective(t, 1)) == 3);
    const RingPtr op = make_opposite(t);
    CHECK(module_dimension(module_regular(op)) == 5);
    CHECK(same_ring(*make_opposite(op), *t));
}

TEST_CASE("integer module isomorphism follows invariant factors")
{
    const RingPtr z = make_integers();
    CHECK(modules_isomorphic(module_presented(z, {{"2", "0"}, {"0", "3"}}), module_cyclic(z, {"6"})));
    CHECK_FALSE(modules_isomorphic(module_presented(z, {{"2", "0"}, {"0", "2"}}), module_cyclic(z, {"4"})));
    CHECK(modules_isomorphic(direct_sum({module_cyclic(z, {"4"}), module_cyclic(z, {"9"})}), module_cyclic(z, {"36"})));
}

TEST_CASE("corner functors undo induction")
{
    const RingPtr t = example_ring();
    const Module x = module_residue(t->corner_r);
    CHECK(modules_isomorphic(corner_e(induce_left(t, x)), x));
    const Module y = module_regular(t->corner_s);
    CHECK(modules_isomorphic(corner_f(induce_right(t, y)), y));
}

TEST_CASE("worked example resolution")
{
    const RingPtr t = example_ring();
    const Module l = module_triple(t, module_zero(t->corner_r), module_simple(t->corner_s, 0), std::nullopt);
    const auto s = resolve(l);
    CHECK(s.status == ResolutionStatus::Finite);
    REQUIRE(s.terms.size() == 2);
    CHECK(s.terms[0] == "P2");
    CHECK(s.terms[1] == "P1");
    CHECK(s.certified);
    CHECK(projective_dimension(l).n == 1);
}

TEST_CASE("periodic resolutions are certified")
{
    const auto s = resolve(module_residue(dual_numbers()));
    CHECK(s.status == ResolutionStatus::InfiniteCertified);
    CHECK(s.period_length == 1);
    const RingPtr z4 = make_mod_integers(Integer(4));
    CHECK(projective_dimension(module_cyclic(z4, {"2"})).verdict == ResolutionStatus::InfiniteCertified);
}

TEST_CASE("zero module has pd -1")
{
    CHECK(projective_dimension(module_zero(make_integers())).n == -1);
    CHECK(projective_dimension(module_zero(example_ring())).n == -1);
}

TEST_CASE("Koszul ranks are binomial")
{
    for (int m = 1; m <= 4; ++m)
    {
        const auto s = resolve(module_residue(make_koszul(FieldKind::Q, m)));
        REQUIRE(s.ranks.size() == static_cast<std::size_t>(m + 1));
        for (int i = 0; i <= m; ++i) CHECK(s.ranks[i] == oracle::binomial(m, i));
    }
}

TEST_CASE("finite resolutions satisfy the Euler characteristic")
{
    // property: sum (-1)^i dim P_i = dim M
    gen::Rng g(21);
    const std::vector<RingPtr> rings{example_ring(), make_utn_ring(make_field(FieldKind::Q), 3),
                                     make_utn_ring(make_field(FieldKind::F2), 2)};
    for (const auto& r : rings)
        for (int i = 0; i < 25; ++i)
        {
            const Module m = gen::random_module(r, g);
            const auto s = resolve(m);
            CHECK(s.certified);
            if (s.status != ResolutionStatus::Finite) continue;
            Index chi = 0;
            for (std::size_t k = 0; k < s.dims.size(); ++k) chi += (k % 2 ? -1 : 1) * s.dims[k];
            CHECK(chi == module_dimension(m));
        }
}

TEST_CASE("pd of a direct sum is the max")
{
    gen::Rng g(8);
    const std::vector<RingPtr> rings{make_integers(), make_polypid(FieldKind::Q), example_ring(),
                                     make_koszul(FieldKind::Q, 2)};
    for (const auto& r : rings)
        for (int i = 0; i < 20; ++i)
        {
            const Module a = gen::random_module(r, g), b = gen::random_module(r, g);
            const auto pa = projective_dimension(a), pb = projective_dimension(b),
                       ps = projective_dimension(direct_sum({a, b}));
            if (pa.finite() && pb.finite())
            {
                CHECK(ps.finite());
                CHECK(ps.n == std::max(pa.n, pb.n));
            }
            else if (pa.verdict == ResolutionStatus::InfiniteCertified
                     || pb.verdict == ResolutionStatus::InfiniteCertified)
                CHECK_FALSE(ps.finite());
        }
}

TEST_CASE("generated sequences are exact")
{
    gen::Rng g(2);
    for (const auto& r : {make_integers(), make_polypid(FieldKind::F3), example_ring(),
                          make_utn_ring(make_field(FieldKind::Q), 2)})
        for (int i = 0; i < 30; ++i)
        {
            bool ok = false;
            verify_ses(gen::random_ses(r, g), ok);
            CHECK(ok);
        }
}

TEST_CASE("split sequences are recognized")
{
    const RingPtr t = example_ring();
    const Module l = module_triple(t, module_zero(t->corner_r), module_simple(t->corner_s, 0), std::nullopt);
    CHECK_FALSE(split_test(ses_syzygy(l)).split);
    CHECK(split_test(ses_split(module_simple(t, 0), l)).split);
    const RingPtr z = make_integers();
    CHECK_FALSE(split_test(ses_syzygy(module_cyclic(z, {"4"}))).split);
    CHECK(split_test(ses_split(module_cyclic(z, {"4"}), module_cyclic(z, {"3"}))).split);
}
