#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "waldzeta/archimedean.hpp"
#include "waldzeta/selfcheck.hpp"

using namespace waldzeta;
using arch::Complex;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("cartan_z examples and defining quadratic") {
    CHECK(arch::cartan_z(0, 2) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(arch::cartan_z(0, 1.0 / 3) == doctest::Approx(3.0).epsilon(1e-13));
    double z = arch::cartan_z(1, 1);
    CHECK(z * z == doctest::Approx((3.0 + std::sqrt(5.0)) / 2).epsilon(1e-14));
    CHECK_THROWS_AS(arch::cartan_z(1.0, 0.0), std::domain_error);
    auto res = check_cartan_quadratic();
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("weight vector, non-split torus") {
    arch::ArchParams p;
    p.ell = 2;
    p.m_twist = 2;
    SUBCASE("identity-cell value at zeta = 1 is 1/4") {
        arch::CartanCoords c;  // gamma=1, delta=theta=0, zeta=1, sign=+1
        CHECK(arch::weight_vector_nonsplit(c, p) == Complex(0.25, 0.0));
    }
    SUBCASE("wrong branch vanishes") {
        arch::CartanCoords c;
        c.sign = -1;
        CHECK(arch::weight_vector_nonsplit(c, p) == Complex(0.0, 0.0));
    }
    SUBCASE("mu = 0 makes the value scale free") {
        arch::CartanCoords c1, c2;
        c2.gamma = 2.0;
        CHECK(arch::weight_vector_nonsplit(c1, p) == arch::weight_vector_nonsplit(c2, p));
    }
    SUBCASE("m must be +-ell") {
        arch::ArchParams bad = p;
        bad.m_twist = 4;
        arch::CartanCoords c;
        CHECK_THROWS_AS(arch::weight_vector_nonsplit(c, bad), std::invalid_argument);
    }
}

TEST_CASE("weight vector, split torus") {
    arch::ArchParams p;
    p.ell = 2;
    SUBCASE("zero exponent gives 1 at the base point") {
        arch::SplitCoords c;  // sum=diff=1, zeta=theta=0
        CHECK(arch::weight_vector_split(c, p) == Complex(1.0, 0.0));
    }
    SUBCASE("exponent one gives 2i at zeta = 0") {
        arch::ArchParams p2 = p;
        p2.mu1 = Complex(2, 0);
        arch::SplitCoords c;
        Complex v = arch::weight_vector_split(c, p2);
        CHECK(std::abs(v - Complex(0, 2)) < 1e-14);
    }
    SUBCASE("theta = pi acts trivially for even ell") {
        arch::SplitCoords c0, cpi;
        cpi.theta = kPi;
        CHECK(std::abs(arch::weight_vector_split(c0, p) - arch::weight_vector_split(cpi, p)) <
              1e-12);
    }
    SUBCASE("vanishing eigenvalue is a domain error") {
        arch::SplitCoords c;
        c.sum = 0.0;
        CHECK_THROWS_AS(arch::weight_vector_split(c, p), std::domain_error);
    }
    SUBCASE("parity condition enforced") {
        arch::ArchParams bad = p;
        bad.eps1 = 1;  // eps1+eps2 = 1 != ell mod 2
        arch::SplitCoords c;
        CHECK_THROWS_AS(arch::weight_vector_split(c, bad), std::invalid_argument);
    }
}

TEST_CASE("lowering residual examples") {
    arch::ArchParams p;
    p.ell = 2;
    p.m_twist = 2;
    CHECK(std::abs(arch::lowering_residual_nonsplit(p, 2.0)) < 1e-12);
    p.ell = 8;
    CHECK(std::abs(arch::lowering_residual_nonsplit(p, 1.5)) < 1e-12);
    CHECK(std::abs(arch::lowering_residual_nonsplit_perturbed(p, 1.5)) > 0);

    arch::ArchParams s;
    s.ell = 2;
    s.mu1 = Complex(0, 0);  // constant profile
    CHECK(std::abs(arch::lowering_residual_split(s, 0.4)) < 1e-14);
    s.mu1 = Complex(4, 0);
    CHECK(std::abs(arch::lowering_residual_split(s, 0.7)) < 1e-12);
    CHECK(std::abs(arch::lowering_residual_split_perturbed(s, 0.7)) > 1e-3);
}

TEST_CASE("residual grids and negative controls") {
    auto res = check_arch_lowering_grids();
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("I(k,s): special values and convergence domain") {
    CHECK(std::abs(arch::arch_I(1, {0, 0}) - Complex(0, kPi)) < 1e-14);
    CHECK(std::abs(arch::arch_I(2, {1, 0}) - Complex(-kPi / 4, 0)) < 1e-12);
    CHECK(arch::arch_I(4, {0, 0}) == Complex(0, 0));
    CHECK_THROWS_AS(arch::arch_I(1, Complex(0.25, 0)), std::domain_error);
    CHECK_THROWS_AS(arch::arch_I(0, Complex(2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(arch::arch_I_quadrature(1, {0, 0}), std::domain_error);
}

TEST_CASE("closed form matches adaptive quadrature") {
    auto res = check_arch_quadrature_grid();
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("zeta_infinity values and the composition identity") {
    arch::ArchParams p;
    p.ell = 2;
    p.ell1 = 1;
    p.ell2 = 1;
    p.D = 5;
    p.m_twist = 2;
    CHECK(std::abs(arch::zeta_infinity(p, {0, 0}) - Complex(0, kPi / std::sqrt(5.0))) < 1e-14);

    p.ell = 4;
    p.ell1 = 2;
    p.ell2 = 2;
    p.D = 1;
    CHECK(arch::zeta_infinity(p, {0, 0}) == Complex(0, 0));

    // Z_inf(s) = 2^{(l1-l2)/2} D^{-l/4-s} I(l/2, s) at D = 1, s = 1
    Complex lhs = arch::zeta_infinity(p, {1, 0});
    Complex rhs = arch::arch_I(2, {1, 0});
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));

    auto res = check_arch_zinf_composition();
    INFO(res.detail);
    CHECK(res.ok);

    auto res2 = check_arch_zinf_vanishing_limit();
    INFO(res2.detail);
    CHECK(res2.ok);
}

TEST_CASE("cartan decomposition round trip and Lie actions") {
    auto cc = arch::cartan_decompose(0.4, -1.1, 2.0, 0.7);  // det < 0 branch
    CHECK(cc.sign == -1);
    CHECK(cc.zeta >= 1.0);
    auto res = check_lie_finite_difference();
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("gamma reflection and exact reciprocal zeros") {
    CHECK(arch::rgamma({0, 0}) == Complex(0, 0));
    CHECK(arch::rgamma({-3, 0}) == Complex(0, 0));
    CHECK(std::abs(arch::cgamma({0.5, 0}) - Complex(std::sqrt(kPi), 0)) < 1e-13);
    CHECK(std::abs(arch::cgamma({5, 0}) - Complex(24, 0)) < 1e-11);
}
