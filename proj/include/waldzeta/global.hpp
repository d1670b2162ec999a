#pragma once

// Global assembly: configuration validation, the per-prime Y table, the
// truncated global product, and the inner-product / non-vanishing criterion.
//
// Global L-values are inputs, never computed here; the truncated Euler
// product carries an explicit prime bound and no tail estimate.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "waldzeta/archimedean.hpp"
#include "waldzeta/local_zeta.hpp"

namespace waldzeta {

// Kronecker symbol (D/p) for a fundamental discriminant D and prime p:
// 0 if p | D, the quadratic-residue symbol for odd p, and the D mod 8 rule
// at p = 2. This realizes the Legendre symbol of Q(sqrt(D))/Q at p.
int legendre_of_prime(std::int64_t D, std::int64_t p);

bool is_fundamental_discriminant(std::int64_t D);
bool is_squarefree(std::int64_t n);
bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);

// The symmetric matrix attached to D: [[-D/4, 0], [0, 1]] for D = 0 mod 4,
// [[(1-D)/4, 1/2], [1/2, 1]] for D = 1 mod 4. Determinant -D/4 either way.
struct SMatrix {
    Rational a, b, c, d;  // [[a, b], [c, d]]
    Rational det() const { return a * d - b * c; }
};
SMatrix s_matrix(std::int64_t D);

// vol(Gamma_0(N) \ H) = (pi/3) N prod_{p|N} (1 + 1/p), N squarefree.
double volume_gamma0(std::int64_t N);

// --- configuration --------------------------------------------------------

struct LocalSetup {
    LocalField field;
    RepData rep;
    TorusChar omega;
    std::optional<InducedPair> pair;
};

// Satake data at a good prime, with optional unramified character values
// for Omega_1 / Omega_2 (trivial characters when absent).
struct SatakeEntry {
    CoeffElem alpha1;
    CoeffElem alpha2;
    std::optional<TorusChar> omega1;
    std::optional<TorusChar> omega2;
};

struct LValues {
    std::complex<double> L_half_pi{1.0, 0.0};
    std::complex<double> L_one_chi{1.0, 0.0};
    bool L_half_bc_twist_nonzero = true;
};

struct GlobalConfig {
    std::int64_t D = 5;
    std::int64_t N = 1;
    std::int64_t Nprime = 1;
    int ell = 2;
    std::map<std::int64_t, LocalSetup> locals;  // p | N
    std::map<std::int64_t, SatakeEntry> satake; // good primes up to the bound
    std::int64_t prime_bound = 0;
    LValues l_values;
};

// Empty iff every structural and per-prime invariant holds. Violations are
// data, not errors.
std::vector<std::string> validate(const GlobalConfig& config);

// --- Y table and the product ------------------------------------------------

struct YTable {
    std::map<std::int64_t, RatFunc> y;  // p | N; Y_p = 1 for p not dividing N
};

YTable y_table(const GlobalConfig& config);

// The archimedean factor Y_infinity(s) (weight (ell/2, ell/2) section).
std::complex<double> y_infinity(const GlobalConfig& config, std::complex<double> s);

arch::ArchParams arch_params_for(const GlobalConfig& config);

struct GlobalProductResult {
    std::complex<double> value{0.0, 0.0};
    std::int64_t prime_bound = 0;
    std::vector<std::int64_t> primes_used;
};

// Truncated L-ratio over supplied good primes times the finite Y factors
// times Y_infinity. Numerator Satake parameters are inverted (contragredient).
GlobalProductResult global_product(const GlobalConfig& config, std::complex<double> s);

// The single good-prime Euler factor of the truncated ratio (exposed for
// the factor-by-factor consistency check).
std::complex<double> good_prime_factor(const GlobalConfig& config, std::int64_t p,
                                       std::complex<double> s);

// Evaluate a finite-place Y_p at a numeric s (X = p^{-s}, r = sqrt(p)).
std::complex<double> eval_y_at(const RatFunc& y, std::int64_t p, std::complex<double> s);

// --- inner product and non-vanishing ------------------------------------------

struct InnerProductResult {
    std::complex<double> z_at_zero;   // i pi D^{-1/2} (L(1/2,pi)/L(1,chi)) prod_{p|N} Y_p(0)
    std::complex<double> petersson;   // z_at_zero / vol(Gamma_0(N)\H)
    double vol_gamma0;
};

// Weight-2 specialization at s = 0 with the supplied L-values standing in
// for the truncated ratio. Requires ell = 2 and a valid configuration.
InnerProductResult inner_product_value(const GlobalConfig& config);

// The headline criterion: nonzero iff L(1/2, pi) != 0 and the supplied
// base-change twist value is nonzero.
bool nonvanishing(const LValues& lv);

}  // namespace waldzeta
