#include "doctest.h"

#include <numeric>
#include <set>

#include "mtc/drinfeld_double.hpp"
#include "s3_fixture.hpp"

using namespace mtc;
using Cx = std::complex<double>;



TEST_CASE("double multiplication basics") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    DoubleElement unit = DoubleElement::unit(z2);

    DoubleElement a = DoubleElement::basis(1, 0);
    CHECK(dg_multiply(unit, a, z2) == a);
    CHECK(dg_multiply(a, unit, z2) == a);

    // (g (x) e(g))^2 = 1 (x) e(g)
    DoubleElement gg = DoubleElement::basis(1, 1);
    DoubleElement sq = dg_multiply(gg, gg, z2);
    CHECK(sq == DoubleElement::basis(0, 1));

    // different sectors annihilate
    DoubleElement zero = dg_multiply(DoubleElement::basis(1, 0), DoubleElement::basis(1, 1), z2);
    CHECK(zero.coeffs.empty());
}

TEST_CASE("coproduct structure") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    // Delta(x (x) e(0)) has summands at (0,0) and (1,1) sector pairs
    DoubleTensor d = dg_comultiply(DoubleElement::basis(1, 0), z2);
    REQUIRE(d.coeffs.size() == 2);
    CHECK(d.coeffs.count({{1, 0}, {1, 0}}) == 1);
    CHECK(d.coeffs.count({{1, 1}, {1, 1}}) == 1);

    // Delta(unit) = unit (x) unit
    DoubleTensor du = dg_comultiply(DoubleElement::unit(z2), z2);
    DoubleTensor expect;
    for (int h = 0; h < 2; ++h)
        for (int k = 0; k < 2; ++k)
            expect.add({0, h}, {0, k}, 1.0);
    CHECK(du.coeffs == expect.coeffs);
}

TEST_CASE("bialgebra axioms exhaustively") {
    for (long t : {1L, 2L, 3L, 4L, 6L, 8L}) {
        BialgebraReport rep = dg_bialgebra_checks(FiniteGroup::cyclic(t));
        CHECK(rep.associative);
        CHECK(rep.coassociative);
        CHECK(rep.comultiplicative);
    }
    BialgebraReport rep22 = dg_bialgebra_checks(FiniteGroup::product_of_cyclics({2, 2}));
    CHECK(rep22.pass());
}

TEST_CASE("irreps: counts and action rule") {
    CHECK(dg_irreps(FiniteGroup::cyclic(1)).size() == 1);
    CHECK(dg_irreps(FiniteGroup::cyclic(2)).size() == 4);
    CHECK(dg_irreps(FiniteGroup::cyclic(6)).size() == 36);

    FiniteGroup z3 = FiniteGroup::cyclic(3);
    auto dual = abelian_dual(z3);
    DoubleIrrep irr{1, 2};
    // x (x) e(h) acts as delta_{2,h} lambda_1(x)
    CHECK(dg_act(irr, DoubleElement::basis(1, 2), z3) ==
          dual[1].values[1]);
    CHECK(dg_act(irr, DoubleElement::basis(1, 1), z3) == Cx(0.0));
    CHECK(dg_act(irr, DoubleElement::unit(z3), z3) == Cx(1.0));
}

TEST_CASE("tensor rule makes the irreps a group") {
    SUBCASE("Klein four group for D(Z_2)") {
        FiniteGroup z2 = FiniteGroup::cyclic(2);
        auto irreps = dg_irreps(z2);
        REQUIRE(irreps.size() == 4);
        for (const auto& a : irreps) {
            CHECK(dg_tensor(a, a, z2) == DoubleIrrep{0, 0}); // every element an involution
            for (const auto& b : irreps)
                CHECK(dg_tensor(a, b, z2) == dg_tensor(b, a, z2));
        }
    }

    SUBCASE("inverses in D(Z_3)") {
        FiniteGroup z3 = FiniteGroup::cyclic(3);
        DoubleIrrep a{1, 1}, b{2, 2};
        CHECK(dg_tensor(a, b, z3) == DoubleIrrep{0, 0});
    }

    SUBCASE("orders are lcm of the pair") {
        FiniteGroup z6 = FiniteGroup::cyclic(6);
        auto order_of = [&](DoubleIrrep x) {
            DoubleIrrep acc = x;
            long n = 1;
            while (!(acc == DoubleIrrep{0, 0})) {
                acc = dg_tensor(acc, x, z6);
                ++n;
            }
            return n;
        };
        CHECK(order_of({2, 3}) == std::lcm(3l, 2l));
        CHECK(order_of({1, 0}) == 6);
        CHECK(order_of({0, 2}) == 3);
        CHECK(order_of({3, 2}) == std::lcm(2l, 3l));
    }
}

TEST_CASE("untwisted fusion from a character table") {
    SUBCASE("abelian: single product character") {
        FiniteGroup z4 = FiniteGroup::cyclic(4);
        auto table = abelian_dual(z4);
        std::vector<long> m = untwisted_fusion(table, z4, 1, 2);
        CHECK(m == std::vector<long>{0, 0, 0, 1});
    }

    SUBCASE("S_3: std (x) std = triv + sign + std") {
        S3Fixture s3 = make_s3_fixture();
        std::vector<long> m = untwisted_fusion(s3.table, s3.group, s3.std_, s3.std_);
        CHECK(m == std::vector<long>{1, 1, 1});
        // dimension count: 2*2 = 1 + 1 + 2
        long total = 0;
        for (std::size_t g = 0; g < m.size(); ++g)
            total += m[g] * s3.table[g].dim();
        CHECK(total == 4);
    }

    SUBCASE("S_3: std (x) sign = std") {
        S3Fixture s3 = make_s3_fixture();
        std::vector<long> m = untwisted_fusion(s3.table, s3.group, s3.std_, s3.sign);
        CHECK(m == std::vector<long>{0, 0, 1});
    }

    SUBCASE("bad table is rejected") {
        S3Fixture s3 = make_s3_fixture();
        s3.table[2].values[3] = Cx(0.7);
        CHECK_THROWS_AS(untwisted_fusion(s3.table, s3.group, 2, 2), BadCharacterTable);
    }
}
