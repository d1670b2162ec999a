#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "waldzeta/local_data.hpp"
#include "waldzeta/selfcheck.hpp"

using namespace waldzeta;

TEST_CASE("prime power recognition") {
    CHECK(is_prime_power(2));
    CHECK(is_prime_power(9));
    CHECK(is_prime_power(27));
    CHECK(is_prime_power(7));
    CHECK_FALSE(is_prime_power(1));
    CHECK_FALSE(is_prime_power(6));
    CHECK_FALSE(is_prime_power(12));
}

TEST_CASE("representation validation") {
    LocalField f{3, Splitting::Inert};
    CHECK_THROWS_AS(validate_rep(RepData{UnramifiedPS{CoeffElem::from_int(3, 3),
                                                      CoeffElem::one(3)}},
                                 f),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_rep(RepData{UnramifiedPS{CoeffElem::one(3),
                                                      CoeffElem::from_int(3, 3)}},
                                 f),
                    std::invalid_argument);
    CHECK_NOTHROW(validate_rep(RepData{UnramifiedPS{CoeffElem::from_int(3, 2),
                                                    CoeffElem::one(3)}},
                               f));
    CHECK_THROWS_AS(validate_rep(RepData{SteinbergTwist{CoeffElem::zero(3)}}, f),
                    std::invalid_argument);
}

TEST_CASE("central character is derived from the representation") {
    UnramifiedPS ps{CoeffElem::i(3), -CoeffElem::i(3)};
    CHECK(omega_pi_value(RepData{ps}) == CoeffElem::one(3));
    SteinbergTwist st{CoeffElem::from_int(3, -2)};
    CHECK(omega_pi_value(RepData{st}) == CoeffElem::from_int(3, 4));
}

TEST_CASE("central compatibility examples") {
    SUBCASE("trivial split characters") {
        LocalField f{3, Splitting::Split};
        UnramifiedPS triv{CoeffElem::one(3), CoeffElem::one(3)};
        CHECK(central_compat_check(RepData{triv},
                                   TorusChar::split(0, CoeffElem::one(3), CoeffElem::one(3)), f));
    }
    SUBCASE("sign mismatch") {
        LocalField f{3, Splitting::Inert};
        SteinbergTwist st{CoeffElem::one(3)};
        CHECK_FALSE(central_compat_check(RepData{st}, TorusChar::inert(0, -CoeffElem::one(3)), f));
    }
    SUBCASE("product of satake values") {
        LocalField f{3, Splitting::Inert};
        UnramifiedPS ps{CoeffElem::i(3), -CoeffElem::i(3)};
        CHECK(central_compat_check(RepData{ps}, TorusChar::inert(0, CoeffElem::one(3)), f));
    }
    SUBCASE("swap invariance") {
        ParamRng rng(3);
        for (int t = 0; t < 50; ++t) {
            std::int64_t q = 5;
            CoeffElem a1 = rng.unit(q), a2 = rng.unit(q), w = rng.unit(q);
            LocalField f{q, Splitting::Inert};
            CHECK(central_compat_check(RepData{UnramifiedPS{a1, a2}}, TorusChar::inert(0, w), f) ==
                  central_compat_check(RepData{UnramifiedPS{a2, a1}}, TorusChar::inert(0, w), f));
        }
    }
}

TEST_CASE("waldspurger existence criteria") {
    CoeffElem one5 = CoeffElem::one(5);
    SUBCASE("split Steinberg always has a model") {
        LocalField f{5, Splitting::Split};
        CHECK(waldspurger_exists(f, RepData{SteinbergTwist{CoeffElem::from_int(5, 2)}},
                                 TorusChar::split(0, CoeffElem::from_int(5, 4), one5)));
    }
    SUBCASE("ramified case needs the quadratic twist") {
        LocalField f{5, Splitting::Ramified};
        CHECK(waldspurger_exists(f, RepData{SteinbergTwist{one5}}, TorusChar::ramified(0, -one5)));
        CHECK_FALSE(
            waldspurger_exists(f, RepData{SteinbergTwist{one5}}, TorusChar::ramified(0, one5)));
    }
    SUBCASE("inert unramified pair never has a model") {
        LocalField f{7, Splitting::Inert};
        CoeffElem one = CoeffElem::one(7);
        CHECK_FALSE(waldspurger_exists(f, RepData{SteinbergTwist{one}}, TorusChar::inert(0, one)));
        CHECK(waldspurger_exists(f, RepData{SteinbergTwist{one}}, TorusChar::inert(1, one)));
    }
    SUBCASE("unramified principal series always has one") {
        LocalField f{7, Splitting::Inert};
        UnramifiedPS ps{CoeffElem::from_int(7, 2), CoeffElem::from_int(7, 3)};
        CHECK(waldspurger_exists(f, RepData{ps}, TorusChar::inert(2, CoeffElem::one(7))));
    }
    SUBCASE("case tag mismatch is an input error") {
        LocalField f{7, Splitting::Inert};
        UnramifiedPS ps{CoeffElem::from_int(7, 2), CoeffElem::from_int(7, 3)};
        CHECK_THROWS_AS(
            waldspurger_exists(f, RepData{ps}, TorusChar::split(0, CoeffElem::one(7),
                                                                CoeffElem::one(7))),
            std::invalid_argument);
    }
}

TEST_CASE("derived model character matches the pair") {
    LocalField f{5, Splitting::Split};
    ParamRng rng(17);
    for (int t = 0; t < 20; ++t) {
        ZetaLocal d = random_unramified_zeta(rng, 5, Splitting::Split);
        CHECK(omega_consistent_with_pair(d.omega, d.pair, f));
        CHECK(pair_central_compat(d.rep, d.pair, f));
        CHECK(central_compat_check(d.rep, d.omega, f));
        // perturbing one omega value breaks consistency
        TorusChar bad = TorusChar::split(d.omega.conductor,
                                         d.omega.w1() * CoeffElem::from_int(5, 2), d.omega.w2());
        CHECK_FALSE(omega_consistent_with_pair(bad, d.pair, f));
    }
}

TEST_CASE("coset label validity") {
    LocalField inert{3, Splitting::Inert};
    LocalField ram{3, Splitting::Ramified};
    LocalField split{3, Splitting::Split};
    CHECK(CosetLabel::u0().valid_for(ram));
    CHECK_FALSE(CosetLabel::u0().valid_for(inert));
    CHECK(CosetLabel::u1().valid_for(split));
    CHECK_FALSE(CosetLabel::u1().valid_for(ram));
    CHECK(CosetLabel::diag(0).valid_for(inert));
    CHECK_THROWS_AS(CosetLabel::diag(-1), std::invalid_argument);
    CHECK_THROWS_AS(CosetLabel::diag_w(0), std::invalid_argument);
    CHECK(CosetLabel::diag_w(2).to_string() == "diag_w(2)");
}

TEST_CASE("predicate battery from the selfcheck suite") {
    auto res = check_local_predicates();
    INFO(res.detail);
    CHECK(res.ok);
}
