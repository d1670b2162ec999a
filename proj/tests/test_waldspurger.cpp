#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "waldzeta/selfcheck.hpp"
#include "waldzeta/waldspurger.hpp"

using namespace waldzeta;

namespace {
CoeffElem ce(std::int64_t q, Rational v) { return CoeffElem::from_rational(q, std::move(v)); }
}  // namespace

TEST_CASE("kappa case values") {
    SUBCASE("positive conductor kills kappa") {
        LocalField f{7, Splitting::Split};
        UnramifiedPS rep{CoeffElem::from_int(7, 2), CoeffElem::from_int(7, 3)};
        TorusChar om = TorusChar::split(3, CoeffElem::from_int(7, 2), CoeffElem::from_int(7, 3));
        CHECK(kappa(f, rep, om).is_zero());
    }
    SUBCASE("inert trivial data gives lambda/(q+1) = r/2") {
        LocalField f{3, Splitting::Inert};
        UnramifiedPS rep{CoeffElem::one(3), CoeffElem::one(3)};
        TorusChar om = TorusChar::inert(0, CoeffElem::one(3));
        CHECK(kappa(f, rep, om) == CoeffElem(3, 0, 0, Rational(1, 2), 0));
    }
    SUBCASE("ramified conductor zero reads off the uniformizer value") {
        LocalField f{3, Splitting::Ramified};
        CoeffElem wl = -CoeffElem::one(3);
        UnramifiedPS rep{CoeffElem::from_int(3, 2), ce(3, Rational(1, 2))};  // product 1 = wl^2
        TorusChar om = TorusChar::ramified(0, wl);
        CHECK(kappa(f, rep, om) == wl);
    }
    SUBCASE("central incompatibility is rejected") {
        LocalField f{3, Splitting::Inert};
        UnramifiedPS rep{CoeffElem::one(3), CoeffElem::one(3)};
        TorusChar om = TorusChar::inert(0, -CoeffElem::one(3));
        CHECK_THROWS_AS(kappa(f, rep, om), std::invalid_argument);
    }
}

TEST_CASE("generating series shape") {
    LocalField f{3, Splitting::Inert};
    UnramifiedPS rep{CoeffElem::one(3), CoeffElem::one(3)};
    SUBCASE("conductor zero: (3 - (r/2)x) / (x^2 - 2rx + 3)") {
        TorusChar om = TorusChar::inert(0, CoeffElem::one(3));
        SphericalSeries s = spherical_generating_series(f, rep, om);
        CoeffElem r = CoeffElem::r(3);
        Poly num(3, {CoeffElem::from_int(3, 3), -(r * ce(3, Rational(1, 2)))});
        Poly den(3, {CoeffElem::from_int(3, 3), -(r * CoeffElem::from_int(3, 2)),
                     CoeffElem::one(3)});
        CHECK(s.gen == RatFunc(num, den));
    }
    SUBCASE("conductor c shifts the numerator and normalizes A_c = 1") {
        TorusChar om = TorusChar::inert(2, CoeffElem::one(3));
        SphericalSeries s = spherical_generating_series(f, rep, om);
        PowerSeries exp = series_expand(s.gen, 4);
        CHECK(exp.coeff(0).is_zero());
        CHECK(exp.coeff(1).is_zero());
        CHECK(exp.coeff(2) == CoeffElem::one(3));
        // denominator stays the Hecke quadratic (monic normalization)
        CHECK(s.gen.den().degree() == 2);
    }
}

TEST_CASE("recurrence initial data") {
    SUBCASE("inert trivial: A_1 = r/2") {
        LocalField f{3, Splitting::Inert};
        UnramifiedPS rep{CoeffElem::one(3), CoeffElem::one(3)};
        auto A = spherical_values_recurrence(f, rep, TorusChar::inert(0, CoeffElem::one(3)), 2);
        CHECK(A[0] == CoeffElem::one(3));
        CHECK(A[1] == CoeffElem(3, 0, 0, Rational(1, 2), 0));
    }
    SUBCASE("conductor two: A_0 = A_1 = 0, A_2 = 1") {
        LocalField f{5, Splitting::Split};
        UnramifiedPS rep{CoeffElem::from_int(5, 2), CoeffElem::from_int(5, 3)};
        auto A = spherical_values_recurrence(
            f, rep, TorusChar::split(2, CoeffElem::from_int(5, 2), CoeffElem::from_int(5, 3)), 4);
        CHECK(A[0].is_zero());
        CHECK(A[1].is_zero());
        CHECK(A[2] == CoeffElem::one(5));
    }
}

TEST_CASE("recurrence agrees with the generating function") {
    ParamRng rng(101);
    auto res = check_spherical_oracle(rng, 60, 50);
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("values vanish below the conductor in both routes") {
    ParamRng rng(102);
    auto res = check_spherical_vanishing(rng, 40);
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("steinberg table values") {
    SUBCASE("diag value at m=1 with trivial chi") {
        LocalField f{5, Splitting::Ramified};
        SteinbergTwist st{CoeffElem::one(5)};
        TorusChar om = TorusChar::ramified(0, -CoeffElem::one(5));
        WaldspurgerTable t = steinberg_table(f, st, om, 4);
        CHECK(t.at(CosetLabel::diag(1)) == -CoeffElem::one(5));
        CHECK(t.at(CosetLabel::diag_w(1)) == ce(5, Rational(1, 5)));
        CHECK(t.at(CosetLabel::u0()) == CoeffElem::from_int(5, -5));
        CHECK(t.b0_at_w == CoeffElem::one(5));
        CHECK_FALSE(t.has(CosetLabel::u1()));
        CHECK_FALSE(t.has(CosetLabel::diag(0)));
    }
    SUBCASE("split, c = 0, Omega(1,pi) = chi: normalization moves to u1") {
        LocalField f{5, Splitting::Split};
        CoeffElem chi = CoeffElem::from_int(5, 2);
        SteinbergTwist st{chi};
        TorusChar om = TorusChar::split(0, chi, chi);  // w1 w2 = chi^2, w2 = chi
        WaldspurgerTable t = steinberg_table(f, st, om, 3);
        CHECK(t.b0_at_w.is_zero());
        CHECK(t.normalization == WaldspurgerTable::Normalization::AtU1);
        CHECK(t.at(CosetLabel::u1()) == CoeffElem::one(5));
        CHECK(t.at(CosetLabel::u2()) == -CoeffElem::one(5));
        CHECK(t.at(CosetLabel::w()).is_zero());
        CHECK(t.at(CosetLabel::diag(2)).is_zero());
    }
    SUBCASE("split, c >= 1: unipotent values vanish") {
        LocalField f{5, Splitting::Split};
        CoeffElem chi = CoeffElem::from_int(5, 2);
        SteinbergTwist st{chi};
        TorusChar om = TorusChar::split(1, chi, chi);
        WaldspurgerTable t = steinberg_table(f, st, om, 3);
        CHECK(t.at(CosetLabel::u1()).is_zero());
        CHECK(t.at(CosetLabel::u2()).is_zero());
        CHECK(t.b0_at_w == CoeffElem::one(5));
    }
    SUBCASE("nonexistent model is rejected") {
        LocalField f{5, Splitting::Inert};
        SteinbergTwist st{CoeffElem::one(5)};
        CHECK_THROWS_AS(steinberg_table(f, st, TorusChar::inert(0, CoeffElem::one(5)), 3),
                        std::invalid_argument);
    }
}

TEST_CASE("steinberg table identities on random draws") {
    ParamRng rng(103);
    auto res = check_steinberg_table_identities(rng, 150);
    INFO(res.detail);
    CHECK(res.ok);
}
