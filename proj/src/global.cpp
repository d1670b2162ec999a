#include "waldzeta/global.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace waldzeta {

namespace {

constexpr double kPi = std::numbers::pi;

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t acc = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) acc = (acc * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return acc;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool is_squarefree(std::int64_t n) {
    if (n < 1) return false;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_fundamental_discriminant(std::int64_t D) {
    if (D == 0) return false;
    std::int64_t m4 = ((D % 4) + 4) % 4;
    if (m4 == 1) return is_squarefree(D < 0 ? -D : D);
    if (m4 == 0) {
        std::int64_t m = D / 4;
        std::int64_t mm4 = ((m % 4) + 4) % 4;
        if (mm4 != 2 && mm4 != 3) return false;
        return is_squarefree(m < 0 ? -m : m);
    }
    return false;
}

int legendre_of_prime(std::int64_t D, std::int64_t p) {
    if (!is_fundamental_discriminant(D))
        throw std::invalid_argument("D must be a fundamental discriminant");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (D % p == 0) return 0;
    if (p == 2) {
        std::int64_t m8 = ((D % 8) + 8) % 8;
        return m8 == 1 ? 1 : -1;  // odd fundamental D is 1 mod 4, so m8 is 1 or 5
    }
    std::int64_t e = mod_pow(D, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

SMatrix s_matrix(std::int64_t D) {
    if (!is_fundamental_discriminant(D) || D < 0)
        throw std::invalid_argument("D must be a positive fundamental discriminant");
    if (D % 4 == 0) return SMatrix{Rational(-D, 4), Rational(0), Rational(0), Rational(1)};
    return SMatrix{Rational(1 - D, 4), Rational(1, 2), Rational(1, 2), Rational(1)};
}

double volume_gamma0(std::int64_t N) {
    if (N < 1 || !is_squarefree(N)) throw std::invalid_argument("N must be squarefree positive");
    double index = static_cast<double>(N);
    for (std::int64_t p : prime_factors(N)) index *= 1.0 + 1.0 / static_cast<double>(p);
    return kPi / 3.0 * index;
}

// --- validation -------------------------------------------------------------

std::vector<std::string> validate(const GlobalConfig& cfg) {
    std::vector<std::string> v;
    auto fail = [&v](const std::string& msg) { v.push_back(msg); };

    if (!is_fundamental_discriminant(cfg.D) || cfg.D < 1)
        fail("D must be a positive fundamental discriminant");
    if (cfg.N < 1 || !is_squarefree(cfg.N)) fail("N must be squarefree positive");
    if (cfg.Nprime < 1 || cfg.N % cfg.Nprime != 0) fail("Nprime must divide N");
    if (cfg.ell < 2 || cfg.ell % 2 != 0) fail("ell must be a positive even integer");
    if (!v.empty()) return v;

    for (std::int64_t p : prime_factors(cfg.N)) {
        std::string tag = "p=" + std::to_string(p) + ": ";
        auto it = cfg.locals.find(p);
        if (it == cfg.locals.end()) {
            fail(tag + "missing local setup");
            continue;
        }
        const LocalSetup& ls = it->second;
        try {
            validate_local_field(ls.field);
            validate_rep(ls.rep, ls.field);
            validate_torus_char(ls.omega, ls.field);
        } catch (const std::exception& e) {
            fail(tag + e.what());
            continue;
        }
        if (ls.field.q != p) fail(tag + "local residue cardinality must equal p");
        int leg = legendre_of_prime(cfg.D, p);
        if (ls.field.legendre_int() != leg)
            fail(tag + "legendre symbol must match (D/p) = " + std::to_string(leg));
        if (!std::holds_alternative<SteinbergTwist>(ls.rep))
            fail(tag + "representation at p | N must be a Steinberg twist");
        if (!ls.pair) {
            fail(tag + "missing induced character pair");
            continue;
        }
        try {
            validate_pair_shape(*ls.pair, ls.field);
        } catch (const std::exception& e) {
            fail(tag + e.what());
            continue;
        }
        bool divides_nprime = cfg.Nprime % p == 0;
        if (divides_nprime && ls.pair->omega1.conductor != 1)
            fail(tag + "c(Omega_1) must be 1 at p | N'");
        if (!divides_nprime && ls.pair->omega1.conductor != 0)
            fail(tag + "Omega_1 must be unramified at p | N/N'");
        if (!central_compat_check(ls.rep, ls.omega, ls.field))
            fail(tag + "central compatibility of Omega fails");
        if (!pair_central_compat(ls.rep, *ls.pair, ls.field))
            fail(tag + "central compatibility of (Omega_1, Omega_2) fails");
        if (!omega_consistent_with_pair(ls.omega, *ls.pair, ls.field))
            fail(tag + "Omega does not match the character pair");
        try {
            if (!waldspurger_exists(ls.field, ls.rep, ls.omega))
                fail(tag + "no local Waldspurger model");
        } catch (const std::exception& e) {
            fail(tag + e.what());
        }
    }

    for (const auto& [p, entry] : cfg.satake) {
        std::string tag = "good p=" + std::to_string(p) + ": ";
        if (!is_prime(p)) fail(tag + "not prime");
        if (cfg.N % p == 0) fail(tag + "Satake entry at a prime dividing N");
        if (entry.alpha1.is_zero() || entry.alpha2.is_zero())
            fail(tag + "Satake values must be nonzero");
    }
    return v;
}

// --- Y table -------------------------------------------------------------------

namespace {

LocalZetaResult local_result_for(const GlobalConfig& cfg, std::int64_t p, const LocalSetup& ls) {
    const auto& st = std::get<SteinbergTwist>(ls.rep);
    if (cfg.Nprime % p == 0) return zeta_steinberg_newform(ls.field, st, *ls.pair, ls.omega);
    return zeta_steinberg_oldvector(ls.field, st, *ls.pair, ls.omega);
}

}  // namespace

YTable y_table(const GlobalConfig& cfg) {
    auto violations = validate(cfg);
    if (!violations.empty())
        throw std::invalid_argument("invalid global configuration: " + violations.front());
    YTable table;
    for (std::int64_t p : prime_factors(cfg.N))
        table.y[p] = local_result_for(cfg, p, cfg.locals.at(p)).y_factor;
    return table;
}

arch::ArchParams arch_params_for(const GlobalConfig& cfg) {
    arch::ArchParams p;
    p.ell = cfg.ell;
    p.ell1 = cfg.ell / 2;
    p.ell2 = cfg.ell / 2;
    p.mu1 = arch::Complex((p.ell1 - p.ell2) / 2.0, 0.0);
    p.mu2 = -p.mu1;
    p.mu = p.mu1 + p.mu2;
    p.D = cfg.D;
    p.m_twist = cfg.ell;
    return p;
}

std::complex<double> y_infinity(const GlobalConfig& cfg, std::complex<double> s) {
    return arch::zeta_infinity(arch_params_for(cfg), s);
}

std::complex<double> eval_y_at(const RatFunc& y, std::int64_t p, std::complex<double> s) {
    std::complex<double> x = std::pow(std::complex<double>(static_cast<double>(p), 0.0), -s);
    return y.eval_complex(x);
}

std::complex<double> good_prime_factor(const GlobalConfig& cfg, std::int64_t p,
                                       std::complex<double> s) {
    const SatakeEntry& e = cfg.satake.at(p);
    int leg = legendre_of_prime(cfg.D, p);
    double pd = static_cast<double>(p);
    std::complex<double> xnum = std::pow(pd, -(2.0 * s + 0.5));  // p^{-(2s+1/2)}
    std::complex<double> xden = std::pow(pd, -(2.0 * s + 1.0));  // p^{-(2s+1)}

    // Omega_1 restricted to the base at p, and the ratio Omega_1/Omega_2
    // at the L-uniformizer(s); trivial characters unless supplied.
    std::complex<double> t{1.0, 0.0};
    std::complex<double> u1{1.0, 0.0}, u2{1.0, 0.0};  // ratio values
    if (e.omega1) t = base_restriction_value(*e.omega1).to_complex();
    if (e.omega1 || e.omega2) {
        auto val = [&](const std::optional<TorusChar>& oc, int idx) -> std::complex<double> {
            if (!oc) return {1.0, 0.0};
            return oc->vals[static_cast<size_t>(idx)].to_complex();
        };
        if (leg == 1) {
            u1 = val(e.omega1, 0) / val(e.omega2, 0);
            u2 = val(e.omega1, 1) / val(e.omega2, 1);
        } else {
            u1 = val(e.omega1, 0) / val(e.omega2, 0);
        }
    }

    // Contragredient: inverted Satake parameters.
    std::complex<double> a1 = 1.0 / e.alpha1.to_complex();
    std::complex<double> a2 = 1.0 / e.alpha2.to_complex();
    std::complex<double> num = 1.0 / ((1.0 - a1 * t * xnum) * (1.0 - a2 * t * xnum));

    std::complex<double> den;
    if (leg == -1)
        den = 1.0 / (1.0 - u1 * xden * xden);
    else if (leg == 0)
        den = 1.0 / (1.0 - u1 * xden);
    else
        den = 1.0 / ((1.0 - u1 * xden) * (1.0 - u2 * xden));
    return num / den;
}

GlobalProductResult global_product(const GlobalConfig& cfg, std::complex<double> s) {
    auto violations = validate(cfg);
    if (!violations.empty())
        throw std::invalid_argument("invalid global configuration: " + violations.front());
    if (!(cfg.ell == 2 && s == std::complex<double>(0.0, 0.0)) &&
        !(2.0 * s.real() + cfg.ell / 2.0 > 1.0))
        throw std::domain_error("global product requires (ell,s) = (2,0) or Re(2s+ell/2) > 1");

    // Truncated ratio needs every good prime up to the bound.
    std::vector<std::int64_t> missing;
    GlobalProductResult out;
    out.prime_bound = cfg.prime_bound;
    for (std::int64_t p = 2; p <= cfg.prime_bound; ++p) {
        if (!is_prime(p) || cfg.N % p == 0) continue;
        if (!cfg.satake.count(p))
            missing.push_back(p);
        else
            out.primes_used.push_back(p);
    }
    if (!missing.empty()) {
        std::string msg = "missing Satake data below prime bound:";
        for (auto p : missing) msg += " " + std::to_string(p);
        throw std::invalid_argument(msg);
    }

    std::complex<double> yinf = y_infinity(cfg, s);
    if (yinf == std::complex<double>(0.0, 0.0)) {
        out.value = {0.0, 0.0};
        return out;
    }

    std::complex<double> acc{1.0, 0.0};
    for (std::int64_t p : out.primes_used) acc *= good_prime_factor(cfg, p, s);
    YTable table = y_table(cfg);
    for (const auto& [p, y] : table.y) acc *= eval_y_at(y, p, s);
    out.value = acc * yinf;
    return out;
}

InnerProductResult inner_product_value(const GlobalConfig& cfg) {
    auto violations = validate(cfg);
    if (!violations.empty())
        throw std::invalid_argument("invalid global configuration: " + violations.front());
    if (cfg.ell != 2) throw std::invalid_argument("inner product formula requires ell = 2");

    std::complex<double> acc = cfg.l_values.L_half_pi / cfg.l_values.L_one_chi;
    YTable table = y_table(cfg);
    for (const auto& [p, y] : table.y) acc *= eval_y_at(y, p, std::complex<double>(0.0, 0.0));
    acc *= std::complex<double>(0.0, kPi / std::sqrt(static_cast<double>(cfg.D)));

    InnerProductResult out;
    out.z_at_zero = acc;
    out.vol_gamma0 = volume_gamma0(cfg.N);
    out.petersson = acc / out.vol_gamma0;
    return out;
}

bool nonvanishing(const LValues& lv) {
    return lv.L_half_pi != std::complex<double>(0.0, 0.0) && lv.L_half_bc_twist_nonzero;
}

}  // namespace waldzeta
