#pragma once

// Numerical (double-precision) archimedean computations: the Cartan
// decomposition, weight-vector values for both real torus types, the
// lowering-operator identities they satisfy, the one-variable integral
// I(k,s) in closed form and by adaptive quadrature, and the archimedean
// zeta factor Z_infinity(s).

#include <complex>
#include <cstdint>

namespace waldzeta::arch {

using Complex = std::complex<double>;

// --- gamma ---------------------------------------------------------------

// Gamma(z) for complex z (Lanczos approximation, reflection for Re z < 1/2).
Complex cgamma(Complex z);

// 1/Gamma(z), entire; returns exactly 0 at z = 0, -1, -2, ...
Complex rgamma(Complex z);

// --- coordinates -----------------------------------------------------------

// Cartan parameters of g = gamma * r(delta) * diag(sign*zeta, 1/zeta) * r(theta).
struct CartanCoords {
    double gamma = 1.0;  // central scale, > 0
    double delta = 0.0;  // torus angle
    double zeta = 1.0;   // diagonal parameter, >= 1
    double theta = 0.0;  // compact angle
    int sign = +1;       // component flag (+1: positive determinant cell)
};

// Coordinates for the split torus: g = t * t0 * [[1,zeta],[0,1]] * r(theta),
// with t conjugate to diag(x+y, x-y); sum = x+y, diff = x-y (both nonzero).
struct SplitCoords {
    double sum = 1.0;
    double diff = 1.0;
    double zeta = 0.0;
    double theta = 0.0;
};

// Archimedean parameter bundle. ell is the (even, positive) lowest weight;
// (mu, m_twist) parametrize the non-split torus character, (mu1, mu2, eps1,
// eps2) the split one; ell1 + ell2 = ell fixes the section weight; D is the
// positive fundamental discriminant.
struct ArchParams {
    int ell = 2;
    Complex mu{0.0, 0.0};
    Complex mu1{0.0, 0.0};
    Complex mu2{0.0, 0.0};
    int eps1 = 0;
    int eps2 = 0;
    int m_twist = 2;  // +-ell
    int ell1 = 1;
    int ell2 = 1;
    std::int64_t D = 1;
};

// The diagonal parameter z >= 1 of the Cartan decomposition of
// [[y, x], [0, 1/y]]: z^2 = (A + sqrt(A^2 - 4 y^4)) / (2 y^2) with
// A = 1 + x^2 y^2 + y^4. Requires y != 0.
double cartan_z(double x, double y);

// Full Cartan decomposition of a 2x2 real matrix with positive determinant.
CartanCoords cartan_decompose(double a, double b, double c, double d);

// --- weight vectors ---------------------------------------------------------

// Non-split weight vector: gamma^mu e^{i ell (delta+theta)} (zeta/(1+zeta^2))^ell
// on the component selected by m_twist = +-ell, 0 on the other one.
Complex weight_vector_nonsplit(const CartanCoords& c, const ArchParams& p);

// Split weight vector: Omega(t) e^{i ell theta} (2i + 2 zeta)^{(mu1-mu2)/2}
// with Omega(t) = sgn(sum)^{eps1} |sum|^{mu1} sgn(diff)^{eps2} |diff|^{mu2}.
// Principal branch for half-integer exponents.
Complex weight_vector_split(const SplitCoords& c, const ArchParams& p);

// --- lowering-operator residuals ---------------------------------------------

// (1/2)(zeta f' - ell (1-zeta^2)/(1+zeta^2) f) at f = (zeta/(1+zeta^2))^ell;
// vanishes identically, so the return is a rounding-level residual.
Complex lowering_residual_nonsplit(const ArchParams& p, double zeta);
// Same with the deliberately wrong vector f~ = zeta f (negative control).
Complex lowering_residual_nonsplit_perturbed(const ArchParams& p, double zeta);

// (1/2)((mu1-mu2) f - (2 zeta + 2i) f') at f = (2i+2zeta)^{(mu1-mu2)/2}.
Complex lowering_residual_split(const ArchParams& p, double zeta);
// Negative control with f~ = zeta f.
Complex lowering_residual_split_perturbed(const ArchParams& p, double zeta);

// Value of the unperturbed vector, for residual normalization.
double weight_profile_nonsplit(int ell, double zeta);
double weight_profile_split_abs(const ArchParams& p, double zeta);

// --- the integral I(k, s) and Z_infinity -------------------------------------

// I(k,s) = int_R (i+x)^k / (1+x^2)^{k+s} dx:
//   i pi at (k,s) = (1,0), else (for Re(2s+k) > 1)
//   i^k 2^{2-2s-k} pi Gamma(2s+k-1) / (Gamma(s) Gamma(k+s)),
// evaluated through rgamma so that s = 0 gives exact 0 for k > 2.
Complex arch_I(int k, Complex s);

// Adaptive Gauss quadrature of the same integral after x = tan(u).
// Requires Re(2s+k) > 1. Deterministic node placement and summation order.
Complex arch_I_quadrature(int k, Complex s, double tol = 1e-10);

// Z_infinity(s): i D^{-1/2} pi at (ell, s) = (2, 0); for Re(2s+ell/2) > 1,
// 2^{2-2s-ell2} D^{-ell/4-s} i^{ell/2} pi Gamma(2s+ell/2-1)/(Gamma(s)Gamma(ell/2+s)).
Complex zeta_infinity(const ArchParams& p, Complex s);

}  // namespace waldzeta::arch
