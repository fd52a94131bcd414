#include "doctest.h"

#include <cmath>

#include "mtc/char_expr.hpp"

using namespace mtc;

TEST_CASE("character leading exponents") {
    // untwisted rank-1 free boson starts at q^{-1/24}
    PuiseuxSeries h1 = expr_to_series(char_heisenberg(1), Rational(20));
    CHECK(h1.leading_exponent() == Rational(-1, 24));
    CHECK(h1.leading_coefficient() == Rational(1));

    // twisted: 1/24 - 1/48 = 1/48
    PuiseuxSeries t1 = expr_to_series(char_heisenberg_twisted(1), Rational(20));
    CHECK(t1.leading_exponent() == Rational(1, 48));

    // lattice vacuum: -1/24
    PuiseuxSeries l10 = expr_to_series(char_lattice(1, 0), Rational(20));
    CHECK(l10.leading_exponent() == Rational(-1, 24));

    // twisted lattice: same 1/48 for every k
    PuiseuxSeries lt = expr_to_series(char_lattice_twisted(3), Rational(20));
    CHECK(lt.leading_exponent() == Rational(1, 48));

    // k=2, r=1: 1/8 - 1/24 = 1/12
    PuiseuxSeries l21 = expr_to_series(char_lattice(2, 1), Rational(20));
    CHECK(l21.leading_exponent() == Rational(1, 12));
}

TEST_CASE("twisted rank-d factorizes as d-th power of rank 1") {
    PuiseuxSeries t1 = expr_to_series(char_heisenberg_twisted(1), Rational(15));
    PuiseuxSeries t2 = expr_to_series(char_heisenberg_twisted(2), Rational(15));
    CHECK(PuiseuxSeries::agree_up_to_common_order(t2, t1 * t1));
}

TEST_CASE("permutation twist rescales exponents") {
    CharacterExpr h = char_heisenberg(1);
    PuiseuxSeries twisted = expr_to_series(permutation_twist_char(h, 2), Rational(15));
    CHECK(twisted.leading_exponent() == Rational(-1, 48));

    // identity at k=1
    PuiseuxSeries same = expr_to_series(permutation_twist_char(h, 1), Rational(15));
    CHECK(PuiseuxSeries::agree_up_to_common_order(same, expr_to_series(h, Rational(15))));

    // eval(twist(e,k), y) = eval(e, y/k)
    CharacterExpr l = char_lattice(2, 0);
    for (double y : {0.9, 1.7}) {
        double a = eval_expr(permutation_twist_char(l, 3), y).value;
        double b = eval_expr(l, y / 3.0).value;
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("s_transform structure") {
    // eta(tau)^1: tau power 1/2, factor eta(tau) back again
    CharacterExpr eta1;
    {
        CharTerm t;
        t.etas.push_back(EtaFactor{Rational(1), 1});
        eta1.terms.push_back(t);
    }
    CharacterExpr te = s_transform(eta1);
    REQUIRE(te.terms.size() == 1);
    CHECK(te.terms[0].tau_power == Rational(1, 2));
    CHECK(te.terms[0].coeff == Rational(1));
    CHECK(te.terms[0].sqrt_arg == Rational(1));
    REQUIRE(te.terms[0].etas.size() == 1);
    CHECK(te.terms[0].etas[0].scale == Rational(1));
    CHECK(te.terms[0].etas[0].power == 1);

    // 1/eta: tau power -1/2
    CharacterExpr th = s_transform(char_heisenberg(1));
    REQUIRE(th.terms.size() == 1);
    CHECK(th.terms[0].tau_power == Rational(-1, 2));

    // lattice k=1: (1/sqrt2)(theta_{1,0} + theta_{1,1})/eta, no tau power
    CharacterExpr tl = s_transform(char_lattice(1, 0));
    REQUIRE(tl.terms.size() == 2);
    for (const auto& t : tl.terms) {
        CHECK(t.tau_power == Rational(0));
        CHECK(t.coeff == make_rational(1, 2));   // 1/sqrt(2) = (1/2)*sqrt(2)
        CHECK(t.sqrt_arg == Rational(2));
        REQUIRE(t.thetas.size() == 1);
        CHECK(t.thetas[0].k == 1);
    }
    CHECK(tl.terms[0].thetas[0].r == 0);
    CHECK(tl.terms[1].thetas[0].r == 1);

    // coset thetas are rejected
    CHECK_THROWS_AS(s_transform(char_lattice(2, 1)), Unsupported);
}

TEST_CASE("eta transformation law numerically at y = 0.7") {
    CharacterExpr eta1;
    {
        CharTerm t;
        t.etas.push_back(EtaFactor{Rational(1), 1});
        eta1.terms.push_back(t);
    }
    EvalResult lhs = eval_expr_factorwise(s_transform(eta1), 0.7, Rational(50));
    EvalResult rhs = eval_expr(eta1, 1.0 / 0.7, Rational(50));
    CHECK(std::abs(lhs.value - rhs.value) <= 1e-10);
}

TEST_CASE("s_transform numeric identity eval(T(e), y) = eval(e, 1/y)") {
    std::vector<CharacterExpr> exprs{char_heisenberg(1), char_heisenberg_twisted(2),
                                     char_lattice(1, 0), char_lattice(3, 0),
                                     char_lattice_twisted(2)};
    for (const auto& e : exprs) {
        CharacterExpr te = s_transform(e);
        for (double y : {0.5, 0.8, 1.3}) {
            EvalResult lhs = eval_expr_factorwise(te, y, Rational(120));
            EvalResult rhs = eval_expr(e, 1.0 / y, Rational(120));
            CHECK(std::abs(lhs.value - rhs.value) <= 1e-8);
        }
    }
}

TEST_CASE("qdim limits via transform strategy") {
    QdimLimitOptions opt; // Transform default

    // twisted/vacuum lattice pair -> sqrt(k)
    for (long k : {1L, 2L, 3L, 4L}) {
        QdimLimit lim = qdim_limit(char_lattice_twisted(k), char_lattice(k, 0), opt);
        REQUIRE(lim.kind == LimitKind::Finite);
        CHECK(lim.value == doctest::Approx(std::sqrt(double(k))).epsilon(1e-9));
        CHECK(lim.error <= 1e-6);
    }

    // twisted/untwisted free boson diverges for every rank
    for (long d : {1L, 2L, 3L}) {
        QdimLimit lim = qdim_limit(char_heisenberg_twisted(d), char_heisenberg(d), opt);
        CHECK(lim.kind == LimitKind::Divergent);
    }

    // trivial self-ratio
    QdimLimit one = qdim_limit(char_lattice(1, 0), char_lattice(1, 0), opt);
    REQUIRE(one.kind == LimitKind::Finite);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("qdim limits via raw strategy and transform/raw agreement") {
    QdimLimitOptions raw;
    raw.strategy = LimitStrategy::Raw;

    for (long k : {1L, 2L, 3L, 4L}) {
        QdimLimit r = qdim_limit(char_lattice_twisted(k), char_lattice(k, 0), raw);
        QdimLimit t = qdim_limit(char_lattice_twisted(k), char_lattice(k, 0));
        REQUIRE(r.kind == LimitKind::Finite);
        REQUIRE(t.kind == LimitKind::Finite);
        CHECK(std::abs(r.value - t.value) <= 1e-3 * std::abs(t.value));
    }

    // untwisted module characters only admit the raw route (coset theta), -> 1
    QdimLimit u = qdim_limit(char_lattice(2, 1), char_lattice(2, 0), raw);
    REQUIRE(u.kind == LimitKind::Finite);
    CHECK(u.value == doctest::Approx(1.0).epsilon(1e-4));

    // free boson raw grid is honest: neither stabilized nor past the gate
    QdimLimit h = qdim_limit(char_heisenberg_twisted(1), char_heisenberg(1), raw);
    CHECK(h.kind == LimitKind::Inconclusive);
}

TEST_CASE("eval error bound honest for character expressions") {
    CharacterExpr chi = char_lattice(2, 0);
    for (double y : {0.06, 0.2, 0.9}) {
        EvalResult lo = eval_expr(chi, y, Rational(60));
        EvalResult hi = eval_expr(chi, y, Rational(130));
        CHECK(std::abs(lo.value - hi.value) <= lo.bound);
    }
}
