#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "waldzeta/json_io.hpp"
#include "waldzeta/selfcheck.hpp"

using namespace waldzeta;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("kronecker symbol examples") {
    CHECK(legendre_of_prime(5, 5) == 0);
    CHECK(legendre_of_prime(5, 2) == -1);
    CHECK(legendre_of_prime(8, 7) == 1);
    CHECK(legendre_of_prime(5, 11) == 1);
    CHECK_THROWS_AS(legendre_of_prime(6, 3), std::invalid_argument);   // 6 not fundamental
    CHECK_THROWS_AS(legendre_of_prime(5, 4), std::invalid_argument);   // 4 not prime
}

TEST_CASE("kronecker symbol against brute-force residue search") {
    auto res = check_kronecker_oracle();
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("fundamental discriminants") {
    for (std::int64_t d : {1, 5, 8, 12, 13, 21, 24, -3, -4, -7, -8}) CHECK(is_fundamental_discriminant(d));
    for (std::int64_t d : {0, 2, 3, 6, 9, 16, 18, 25, 45}) CHECK_FALSE(is_fundamental_discriminant(d));
}

TEST_CASE("s_matrix cases and determinant") {
    auto s8 = s_matrix(8);
    CHECK(s8.a == Rational(-2));
    CHECK(s8.b == Rational(0));
    CHECK(s8.det() == Rational(-2));
    auto s5 = s_matrix(5);
    CHECK(s5.a == Rational(-1));
    CHECK(s5.b == Rational(1, 2));
    CHECK(s5.det() == Rational(-5, 4));
    for (std::int64_t d : {5, 8, 12, 13, 21}) CHECK(s_matrix(d).det() == Rational(-d, 4));
    CHECK_THROWS_AS(s_matrix(7), std::invalid_argument);
}

TEST_CASE("volume of Gamma_0(N)") {
    CHECK(volume_gamma0(1) == doctest::Approx(kPi / 3).epsilon(1e-15));
    CHECK(volume_gamma0(2) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(volume_gamma0(6) == doctest::Approx(4 * kPi).epsilon(1e-15));
    CHECK_THROWS_AS(volume_gamma0(4), std::invalid_argument);
}

TEST_CASE("validation catches structural problems") {
    GlobalConfig cfg = fixture_global_d21();
    CHECK(validate(cfg).empty());

    SUBCASE("Nprime must divide N") {
        cfg.Nprime = 4;
        auto v = validate(cfg);
        REQUIRE_FALSE(v.empty());
        CHECK(v.front().find("Nprime") != std::string::npos);
    }
    SUBCASE("unramified representation at p | N is rejected") {
        LocalSetup& ls = cfg.locals.at(2);
        ls.rep = UnramifiedPS{CoeffElem::from_int(2, 3), CoeffElem::one(2)};
        auto v = validate(cfg);
        CHECK_FALSE(v.empty());
    }
    SUBCASE("legendre symbol must match (D/p)") {
        LocalSetup& ls = cfg.locals.at(2);
        ls.field.legendre = Splitting::Split;
        auto v = validate(cfg);
        CHECK_FALSE(v.empty());
    }
    SUBCASE("missing local setup") {
        cfg.locals.erase(3);
        auto v = validate(cfg);
        CHECK_FALSE(v.empty());
    }
}

TEST_CASE("the literal D=5, N=6 configuration cannot be made valid") {
    // Both 2 and 3 are inert in Q(sqrt 5); at p = 3 (coprime to N' = 2) a
    // Steinberg twist with unramified characters has no Waldspurger model,
    // so validation must reject any such configuration.
    GlobalConfig cfg = fixture_global_d21();
    cfg.D = 5;
    {
        LocalSetup& l2 = cfg.locals.at(2);
        l2.field.legendre = splitting_from_int(legendre_of_prime(5, 2));  // inert, as before
    }
    {
        // rebuild p=3 as inert with unramified characters
        LocalField f{3, Splitting::Inert};
        CoeffElem chi = CoeffElem::one(3);
        LocalSetup ls;
        ls.field = f;
        ls.rep = SteinbergTwist{chi};
        ls.pair = InducedPair{TorusChar::inert(0, CoeffElem::from_int(3, 2)),
                              TorusChar::inert(0, CoeffElem(3, Rational(1, 2), 0, 0, 0))};
        ls.omega = *derived_model_char(*ls.pair, f);
        cfg.locals.at(3) = ls;
    }
    auto v = validate(cfg);
    REQUIRE_FALSE(v.empty());
    bool mentions_model = false;
    for (const auto& msg : v)
        if (msg.find("no local Waldspurger model") != std::string::npos) mentions_model = true;
    CHECK(mentions_model);
}

TEST_CASE("y table matches local factors and the product factorizes") {
    auto res = check_global_consistency();
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("y values for the D=21 fixture") {
    GlobalConfig cfg = fixture_global_d21();
    YTable t = y_table(cfg);
    // p = 2 | N': (p - (L/p))/(p+1) = (2+1)/3 = 1
    CHECK(t.y.at(2) == RatFunc::one(2));
    // p = 3 | N/N' ramified: -Omega_1(pi_L)^{-1} p^{s+3/2} / (p+1)
    const LocalSetup& ls = cfg.locals.at(3);
    CoeffElem a = ls.pair->omega1.wL();
    RatFunc expect = RatFunc::monomial(CoeffElem::r(3) * CoeffElem::from_int(3, 3), -1) *
                     (-a.inv() * CoeffElem::from_rational(3, Rational(1, 4)));
    CHECK(t.y.at(3) == expect);
}

TEST_CASE("global product requires satake data below the bound") {
    GlobalConfig cfg = fixture_global_d21();
    cfg.satake.erase(7);
    CHECK_THROWS_WITH_AS(static_cast<void>(global_product(cfg, {0.75, 0})),
                         doctest::Contains("missing Satake data"), std::invalid_argument);
}

TEST_CASE("doubling the prime bound only changes the L-ratio tail") {
    GlobalConfig cfg = fixture_global_d5_n11();
    std::complex<double> s{0.75, 0.0};
    auto small = global_product(cfg, s);
    GlobalConfig big = cfg;
    big.prime_bound = 14;
    big.satake.emplace(11 + 2, SatakeEntry{CoeffElem(13, 2, 0, 0, 0),
                                           CoeffElem(13, Rational(1, 2), 0, 0, 0), std::nullopt,
                                           std::nullopt});
    auto large = global_product(big, s);
    std::complex<double> tail = good_prime_factor(big, 13, s);
    CHECK(std::abs(large.value - small.value * tail) < 1e-12 * std::abs(large.value));
}

TEST_CASE("inner product value") {
    // N = 1 configuration: all finite Y_p = 1
    GlobalConfig cfg;
    cfg.D = 5;
    cfg.N = 1;
    cfg.Nprime = 1;
    cfg.ell = 2;
    cfg.prime_bound = 0;
    cfg.l_values.L_half_pi = {1, 0};
    cfg.l_values.L_one_chi = {1, 0};

    auto ip = inner_product_value(cfg);
    CHECK(std::abs(ip.z_at_zero - std::complex<double>(0, kPi / std::sqrt(5.0))) < 1e-14);
    CHECK(std::abs(ip.petersson - ip.z_at_zero / volume_gamma0(1)) < 1e-15);

    SUBCASE("linear in the supplied L-value") {
        cfg.l_values.L_half_pi = {3, 0};
        auto scaled = inner_product_value(cfg);
        CHECK(std::abs(scaled.z_at_zero - 3.0 * ip.z_at_zero) < 1e-13);
    }
    SUBCASE("vanishing L-value gives zero") {
        cfg.l_values.L_half_pi = {0, 0};
        auto zero = inner_product_value(cfg);
        CHECK(zero.z_at_zero == std::complex<double>(0, 0));
    }
    SUBCASE("weight above two is out of scope") {
        cfg.ell = 4;
        CHECK_THROWS_AS(inner_product_value(cfg), std::invalid_argument);
    }
}

TEST_CASE("nonvanishing truth table") {
    auto res = check_nonvanishing_table();
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("json round trips") {
    GlobalConfig cfg = fixture_global_d21();
    const LocalSetup& ls = cfg.locals.at(3);
    Json j = local_setup_to_json(ls);
    LocalSetup back = local_setup_from_json(j);
    CHECK(back.field.q == 3);
    CHECK(back.omega.wL() == ls.omega.wL());
    REQUIRE(back.pair.has_value());
    CHECK(back.pair->omega1.wL() == ls.pair->omega1.wL());

    auto res = zeta_steinberg_oldvector(ls.field, std::get<SteinbergTwist>(ls.rep), *ls.pair,
                                        ls.omega);
    RatFunc rf = ratfunc_from_json(ratfunc_to_json(res.closed_form), 3);
    CHECK(rf == res.closed_form);

    CoeffElem v(7, Rational(1, 2), -3, Rational(5, 4), 0);
    CHECK(coeff_from_json(coeff_to_json(v), 7) == v);
    CHECK(coeff_from_json(Json("3/4"), 7) == CoeffElem::from_rational(7, Rational(3, 4)));
    CHECK_THROWS_AS(coeff_from_json(Json{{"e", "1"}}, 7), std::invalid_argument);
}
