#include "waldzeta/archimedean.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace waldzeta::arch {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// i^k for integer k.
Complex i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

// Lanczos, g = 7, 9 coefficients. Relative accuracy ~1e-15 on the half-plane
// Re z > 1/2; reflection elsewhere.
Complex cgamma(Complex z) {
    static const std::array<double, 9> c = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * cgamma(1.0 - z));
    }
    z -= 1.0;
    Complex x = c[0];
    for (int k = 1; k < 9; ++k) x += c[k] / (z + static_cast<double>(k));
    Complex t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

Complex rgamma(Complex z) {
    if (is_nonpositive_integer(z)) return {0.0, 0.0};
    return 1.0 / cgamma(z);
}

// --- coordinates -----------------------------------------------------------

double cartan_z(double x, double y) {
    if (y == 0.0) throw std::domain_error("cartan_z requires y != 0");
    double A = 1.0 + x * x * y * y + y * y * y * y;
    double disc = A * A - 4.0 * y * y * y * y;
    double z2 = (A + std::sqrt(std::max(disc, 0.0))) / (2.0 * y * y);
    return std::sqrt(z2);
}

CartanCoords cartan_decompose(double a, double b, double c, double d) {
    double det = a * d - b * c;
    CartanCoords out;
    if (det < 0.0) {
        // Split off diag(-1,1) on the left; the coordinates below then
        // describe g = gamma r(delta') diag(-zeta, 1/zeta) r(theta) with
        // delta' = -delta of the positive part, matching the convention
        // that delta sits to the left of the signed diagonal factor.
        out.sign = -1;
        a = -a;
        b = -b;
        det = -det;
    }
    if (det <= 0.0) throw std::domain_error("cartan_decompose requires det != 0");
    out.gamma = std::sqrt(det);
    a /= out.gamma;
    b /= out.gamma;
    c /= out.gamma;
    d /= out.gamma;
    // h in SL(2,R): h = r(delta) diag(z, 1/z) r(theta). From
    // h^T h = r(theta)^T diag(z^2, z^-2) r(theta) we get
    // tan(2 theta) = 2m / (p - r) with p = a^2+c^2, r = b^2+d^2, m = ab+cd.
    double p = a * a + c * c, r = b * b + d * d, m = a * b + c * d;
    double tr = p + r;
    double z2 = 0.5 * (tr + std::sqrt(std::max(tr * tr - 4.0, 0.0)));
    out.zeta = std::sqrt(z2);
    double theta = 0.5 * std::atan2(2.0 * m, p - r);
    // k1 = h r(theta)^{-1} diag(1/z, z) must be the rotation r(delta).
    auto read_delta = [&](double th) {
        double ct = std::cos(th), st = std::sin(th);
        double k11 = (a * ct + b * st) / out.zeta;
        double k21 = (c * ct + d * st) / out.zeta;
        return std::atan2(-k21, k11);
    };
    double delta = read_delta(theta);
    // Reconstruction check resolves the eigenvalue-order ambiguity in theta.
    double ct = std::cos(theta), st = std::sin(theta);
    double c11 = std::cos(delta) * out.zeta * ct - std::sin(delta) * (1.0 / out.zeta) * st;
    if (std::abs(c11 - a) > 1e-6 * std::max(1.0, out.zeta)) {
        theta += kPi / 2.0;
        delta = read_delta(theta);
    }
    out.theta = theta;
    out.delta = out.sign < 0 ? -delta : delta;
    return out;
}

// --- weight vectors ---------------------------------------------------------

double weight_profile_nonsplit(int ell, double zeta) {
    return std::pow(zeta / (1.0 + zeta * zeta), ell);
}

Complex weight_vector_nonsplit(const CartanCoords& c, const ArchParams& p) {
    if (p.m_twist != p.ell && p.m_twist != -p.ell)
        throw std::invalid_argument("non-split torus character requires m = +-ell");
    bool supported = (p.m_twist == p.ell && c.sign == +1) || (p.m_twist == -p.ell && c.sign == -1);
    if (!supported) return {0.0, 0.0};
    Complex val = std::pow(Complex(c.gamma, 0.0), p.mu);
    val *= std::exp(Complex(0.0, p.ell * (c.delta + c.theta)));
    return val * weight_profile_nonsplit(p.ell, c.zeta);
}

namespace {

Complex split_char(const SplitCoords& c, const ArchParams& p) {
    if (c.sum == 0.0 || c.diff == 0.0)
        throw std::domain_error("split torus element with vanishing eigenvalue");
    Complex v = std::pow(Complex(std::abs(c.sum), 0.0), p.mu1) *
                std::pow(Complex(std::abs(c.diff), 0.0), p.mu2);
    if (c.sum < 0.0 && (p.eps1 & 1)) v = -v;
    if (c.diff < 0.0 && (p.eps2 & 1)) v = -v;
    return v;
}

Complex split_profile(const ArchParams& p, double zeta) {
    return std::pow(Complex(2.0 * zeta, 2.0), (p.mu1 - p.mu2) / 2.0);
}

}  // namespace

double weight_profile_split_abs(const ArchParams& p, double zeta) {
    return std::abs(split_profile(p, zeta));
}

Complex weight_vector_split(const SplitCoords& c, const ArchParams& p) {
    if ((p.eps1 + p.eps2) % 2 != p.ell % 2)
        throw std::invalid_argument("parity condition eps1 + eps2 = ell (mod 2) fails");
    return split_char(c, p) * std::exp(Complex(0.0, p.ell * c.theta)) * split_profile(p, c.zeta);
}

// --- lowering residuals -----------------------------------------------------

Complex lowering_residual_nonsplit(const ArchParams& p, double zeta) {
    double f = weight_profile_nonsplit(p.ell, zeta);
    // f'/f = ell (1 - zeta^2) / (zeta (1 + zeta^2))
    double fp = p.ell * f * (1.0 - zeta * zeta) / (zeta * (1.0 + zeta * zeta));
    double res = 0.5 * (zeta * fp - p.ell * (1.0 - zeta * zeta) / (1.0 + zeta * zeta) * f);
    return {res, 0.0};
}

Complex lowering_residual_nonsplit_perturbed(const ArchParams& p, double zeta) {
    double f = weight_profile_nonsplit(p.ell, zeta);
    double fp = p.ell * f * (1.0 - zeta * zeta) / (zeta * (1.0 + zeta * zeta));
    double g = zeta * f, gp = f + zeta * fp;
    double res = 0.5 * (zeta * gp - p.ell * (1.0 - zeta * zeta) / (1.0 + zeta * zeta) * g);
    return {res, 0.0};
}

Complex lowering_residual_split(const ArchParams& p, double zeta) {
    Complex mu_diff = p.mu1 - p.mu2;
    Complex f = split_profile(p, zeta);
    Complex fp = mu_diff * std::pow(Complex(2.0 * zeta, 2.0), mu_diff / 2.0 - 1.0);
    return 0.5 * (mu_diff * f - Complex(2.0 * zeta, 2.0) * fp);
}

Complex lowering_residual_split_perturbed(const ArchParams& p, double zeta) {
    Complex mu_diff = p.mu1 - p.mu2;
    Complex f = split_profile(p, zeta);
    Complex fp = mu_diff * std::pow(Complex(2.0 * zeta, 2.0), mu_diff / 2.0 - 1.0);
    Complex g = zeta * f, gp = f + zeta * fp;
    return 0.5 * (mu_diff * g - Complex(2.0 * zeta, 2.0) * gp);
}

// --- quadrature ---------------------------------------------------------------

namespace {

// 15-point Gauss-Legendre rule on [-1, 1]; nodes via Newton on P_15.
struct GaussRule {
    std::array<double, 15> node{};
    std::array<double, 15> weight{};
    GaussRule() {
        const int n = 15;
        for (int k = 0; k < n; ++k) {
            double x = std::cos(kPi * (k + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            node[static_cast<size_t>(n - 1 - k)] = x;
            weight[static_cast<size_t>(n - 1 - k)] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const GaussRule& gauss15() {
    static const GaussRule rule;
    return rule;
}

// Integrand after x = tan(u): (i + tan u)^k (cos u)^{2k + 2s - 2}.
Complex tan_integrand(int k, Complex s, double u) {
    double cu = std::cos(u);
    Complex base = Complex(std::tan(u), 1.0);
    Complex val = std::pow(base, static_cast<double>(k));
    return val * std::pow(Complex(cu, 0.0), 2.0 * s + 2.0 * (k - 1.0));
}

Complex gauss_segment(int k, Complex s, double a, double b) {
    const GaussRule& g = gauss15();
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Complex acc{0.0, 0.0};
    for (size_t j = 0; j < g.node.size(); ++j)
        acc += g.weight[j] * tan_integrand(k, s, mid + half * g.node[j]);
    return acc * half;
}

// Fixed-order rule plus interval bisection; the error estimate compares a
// segment against the sum of its halves. Subdivision order is deterministic
// (depth-first, left to right).
Complex adaptive_segment(int k, Complex s, double a, double b, double tol, int depth) {
    Complex whole = gauss_segment(k, s, a, b);
    double mid = 0.5 * (a + b);
    Complex left = gauss_segment(k, s, a, mid);
    Complex right = gauss_segment(k, s, mid, b);
    Complex refined = left + right;
    if (std::abs(refined - whole) <= tol || depth >= 48) return refined;
    return adaptive_segment(k, s, a, mid, tol / 2.0, depth + 1) +
           adaptive_segment(k, s, mid, b, tol / 2.0, depth + 1);
}

}  // namespace

Complex arch_I_quadrature(int k, Complex s, double tol) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    if (2.0 * s.real() + k <= 1.0)
        throw std::domain_error("quadrature outside the convergence region Re(2s+k) > 1");
    double eps = 1e-9;  // endpoint inset; the omitted tails are O(eps) or smaller
    double a = -kPi / 2.0 + eps, b = kPi / 2.0 - eps;
    return adaptive_segment(k, s, a, b, tol, 0);
}

Complex arch_I(int k, Complex s) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    if (k == 1 && s == Complex(0.0, 0.0)) return {0.0, kPi};
    if (2.0 * s.real() + k <= 1.0)
        throw std::domain_error("I(k,s) requires (k,s) = (1,0) or Re(2s+k) > 1");
    Complex value = i_pow(k) * std::pow(Complex(2.0, 0.0), 2.0 - 2.0 * s - (double)k) * kPi;
    return value * cgamma(2.0 * s + (double)k - 1.0) * rgamma(s) * rgamma((double)k + s);
}

Complex zeta_infinity(const ArchParams& p, Complex s) {
    if (p.ell < 2 || p.ell % 2 != 0)
        throw std::invalid_argument("ell must be a positive even integer");
    if (p.ell1 < 1 || p.ell2 < 1 || p.ell1 + p.ell2 != p.ell)
        throw std::invalid_argument("ell1, ell2 must be positive with ell1 + ell2 = ell");
    if (p.D < 1) throw std::invalid_argument("D must be a positive integer");
    double D = static_cast<double>(p.D);
    if (p.ell == 2 && s == Complex(0.0, 0.0)) return Complex(0.0, kPi / std::sqrt(D));
    if (2.0 * s.real() + p.ell / 2.0 <= 1.0)
        throw std::domain_error("Z_infinity requires (ell,s) = (2,0) or Re(2s+ell/2) > 1");
    Complex value = std::pow(Complex(2.0, 0.0), 2.0 - 2.0 * s - (double)p.ell2);
    value *= std::pow(Complex(D, 0.0), -0.25 * p.ell - s);
    value *= i_pow(p.ell / 2) * kPi;
    return value * cgamma(2.0 * s + p.ell / 2.0 - 1.0) * rgamma(s) * rgamma(p.ell / 2.0 + s);
}

}  // namespace waldzeta::arch
