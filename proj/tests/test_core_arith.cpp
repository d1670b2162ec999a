#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "waldzeta/power_series.hpp"
#include "waldzeta/selfcheck.hpp"

using namespace waldzeta;

namespace {
CoeffElem ce(std::int64_t q, Rational v) { return CoeffElem::from_rational(q, std::move(v)); }
}  // namespace

TEST_CASE("rational strings round-trip") {
    CHECK(rat_to_string(Rational(-3, 6)) == "-1/2");
    CHECK(rat_from_string("7") == Rational(7));
    CHECK(rat_from_string("-22/4") == Rational(-11, 2));
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("coefficient field defining relations") {
    CHECK(CoeffElem::r(3) * CoeffElem::r(3) == CoeffElem::from_int(3, 3));
    CoeffElem z(5, 1, 1, 0, 0), zbar(5, 1, -1, 0, 0);
    CHECK(z * zbar == CoeffElem::from_int(5, 2));
    CHECK(CoeffElem::r(5).inv() == CoeffElem(5, 0, 0, Rational(1, 5), 0));
    CHECK_THROWS_AS(CoeffElem::zero(5).inv(), std::domain_error);
}

TEST_CASE("square residue cardinality collapses the radical part") {
    // q = 9: r is the integer 3, and the ring stays a field
    CoeffElem r = CoeffElem::r(9);
    CHECK(r == CoeffElem::from_int(9, 3));
    CHECK(r * r == CoeffElem::from_int(9, 9));
    CoeffElem x(9, 1, 0, -1, 0);  // 1 - r = -2
    CHECK(x == CoeffElem::from_int(9, -2));
    CHECK(x * x.inv() == CoeffElem::one(9));
}

TEST_CASE("mixing ambient q is rejected") {
    CHECK_THROWS_AS(CoeffElem::one(3) + CoeffElem::one(5), std::logic_error);
}

TEST_CASE("field axioms hold on random triples") {
    ParamRng rng(7);
    auto res = check_field_axioms(rng, 1000);
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("polynomial division and gcd") {
    std::int64_t q = 7;
    CoeffElem one = CoeffElem::one(q);
    Poly a(q, {-one, CoeffElem::zero(q), one});         // X^2 - 1
    Poly b(q, {one, one});                              // X + 1
    auto [quo, rem] = Poly::divmod(a, b);
    CHECK(rem.is_zero());
    CHECK(quo == Poly(q, {-one, one}));
    CHECK(Poly::gcd(a, b) == b);
    CHECK_THROWS_AS(Poly::divmod(a, Poly::zero(q)), std::domain_error);
}

TEST_CASE("ratfunc_reduce examples") {
    std::int64_t q = 3;
    CoeffElem one = CoeffElem::one(q);
    SUBCASE("factor cancellation") {
        RatFunc f(Poly(q, {-one, CoeffElem::zero(q), one}), Poly(q, {-one, one}));
        CHECK(f == RatFunc::from_poly(Poly(q, {one, one})));
    }
    SUBCASE("zero numerator") {
        RatFunc f(Poly::zero(q), Poly(q, {CoeffElem::from_int(q, 2), CoeffElem::from_int(q, 7)}));
        CHECK(f.is_zero());
        CHECK(f.den() == Poly::constant(one));
    }
    SUBCASE("scalar normalization") {
        RatFunc f(Poly(q, {CoeffElem::zero(q), CoeffElem::from_int(q, 2)}),
                  Poly::constant(CoeffElem::from_int(q, 4)));
        CHECK(f.num() == Poly(q, {CoeffElem::zero(q), ce(q, Rational(1, 2))}));
        CHECK(f.den() == Poly::constant(one));
    }
    SUBCASE("zero denominator rejected") {
        CHECK_THROWS_AS(RatFunc(Poly::constant(one), Poly::zero(q)), std::invalid_argument);
    }
}

TEST_CASE("reduce is idempotent and scale invariant") {
    ParamRng rng(11);
    auto res = check_reduce_properties(rng, 200);
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("series expansion examples") {
    SUBCASE("geometric series") {
        std::int64_t q = 2;
        CoeffElem one = CoeffElem::one(q);
        PowerSeries s = series_expand(RatFunc(Poly::constant(one), Poly(q, {one, -one})), 3);
        for (int k = 0; k <= 3; ++k) CHECK(s.coeff(k) == one);
    }
    SUBCASE("pole at the origin is rejected") {
        std::int64_t q = 2;
        RatFunc f = RatFunc::monomial(CoeffElem::one(q), -1);
        CHECK_THROWS_AS(series_expand(f, 5), std::domain_error);
    }
    SUBCASE("hand-checked quadratic denominator to order 1") {
        std::int64_t q = 3;
        CoeffElem r = CoeffElem::r(q);
        CoeffElem kap = r * ce(q, Rational(1, 2));
        RatFunc f(Poly(q, {CoeffElem::from_int(q, 3), -kap}),
                  Poly(q, {CoeffElem::from_int(q, 3), -(r * CoeffElem::from_int(q, 2)),
                           CoeffElem::one(q)}));
        PowerSeries s = series_expand(f, 1);
        CHECK(s.coeff(0) == CoeffElem::one(q));
        CHECK(s.coeff(1) == kap);
    }
    SUBCASE("truncation of a pure power") {
        std::int64_t q = 2;
        PowerSeries s = series_expand(RatFunc::from_poly(Poly::monomial(CoeffElem::one(q), 2)), 1);
        CHECK(s.coeff(0).is_zero());
        CHECK(s.coeff(1).is_zero());
    }
}

TEST_CASE("expansion times denominator reproduces numerator") {
    ParamRng rng(13);
    auto res = check_series_expand_identity(rng, 200, 30);
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("argument substitution maps") {
    std::int64_t q = 3;
    CoeffElem one = CoeffElem::one(q);
    RatFunc f = RatFunc::from_poly(Poly(q, {one, -one}));  // 1 - X
    // X -> q^{-1} X^2
    RatFunc g = subst_two_s_plus_one(f, q);
    CHECK(g == RatFunc::from_poly(Poly(q, {one, CoeffElem::zero(q), -ce(q, Rational(1, 3))})));
    // X -> q^{-1/2} X^2 applied twice: X picks up (q^{-1/2})^3 X^4 = (r/q^2) X^4
    RatFunc h = subst_two_s_plus_half(subst_two_s_plus_half(f, q), q);
    Poly expect(q, {one, CoeffElem::zero(q), CoeffElem::zero(q), CoeffElem::zero(q),
                    -CoeffElem(q, 0, 0, Rational(1, 9), 0)});
    CHECK(h == RatFunc::from_poly(expect));
}

TEST_CASE("laurent monomials normalize into the denominator") {
    std::int64_t q = 5;
    RatFunc f = RatFunc::monomial(CoeffElem::r(q), -1);  // r / X
    CHECK(f.den() == Poly::x(q));
    RatFunc g = f * RatFunc::monomial(CoeffElem::one(q), 1);
    CHECK(g == RatFunc::constant(CoeffElem::r(q)));
}
