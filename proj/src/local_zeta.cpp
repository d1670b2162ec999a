#include "waldzeta/local_zeta.hpp"

#include <stdexcept>

namespace waldzeta {

namespace {

CoeffElem ce(std::int64_t q, const Rational& v) { return CoeffElem::from_rational(q, v); }

// 1 - (L/p) q^{-1}
Rational one_minus_leg_over_q(const LocalField& f) {
    return Rational(1) - Rational(f.legendre_int(), f.q);
}

void validate_zeta_common(const LocalField& f, const RepData& rep, const InducedPair& pair,
                          const TorusChar& omega) {
    validate_local_field(f);
    validate_rep(rep, f);
    validate_torus_char(omega, f);
    validate_pair_shape(pair, f);
    if (!central_compat_check(rep, omega, f))
        throw std::invalid_argument("central character compatibility fails for Omega");
    if (!pair_central_compat(rep, pair, f))
        throw std::invalid_argument("central character compatibility fails for (Omega_1, Omega_2)");
    if (!omega_consistent_with_pair(omega, pair, f))
        throw std::invalid_argument("Omega does not match the character pair");
}

}  // namespace

// --- volumes -----------------------------------------------------------

Rational volume_maximal_compact(const LocalField& f, int m) {
    if (m < 0) throw std::invalid_argument("coset index must be >= 0");
    if (m == 0) return Rational(1);
    return one_minus_leg_over_q(f) * rat_pow(Rational(f.q), m);
}

Rational volume_iwahori_w(const LocalField& f, int m) {
    if (m < 0) throw std::invalid_argument("coset index must be >= 0");
    return rat_pow(Rational(f.q), m + 1) * one_minus_leg_over_q(f) / Rational(f.q + 1);
}

Rational volume_iwahori(const LocalField& f, int m) {
    if (m < 1) throw std::invalid_argument("Iwahori diagonal coset index must be >= 1");
    return rat_pow(Rational(f.q), m) * one_minus_leg_over_q(f) / Rational(f.q + 1);
}

Rational volume_unipotent(const LocalField& f) {
    if (f.legendre == Splitting::Inert)
        throw std::invalid_argument("no unipotent coset in the inert case");
    return Rational(1, f.q + 1);
}

// --- L-factors -----------------------------------------------------------

RatFunc hecke_l_factor(const LocalField& f, const TorusChar& ratio) {
    const std::int64_t q = f.q;
    if (!ratio.case_matches(f))
        throw std::invalid_argument("character case does not match legendre symbol");
    if (ratio.conductor >= 1) return RatFunc::one(q);
    CoeffElem one = CoeffElem::one(q);
    switch (f.legendre) {
        case Splitting::Inert:
            return RatFunc::from_poly(Poly(q, {one, CoeffElem::zero(q), -ratio.w()})).inv();
        case Splitting::Ramified:
            return RatFunc::from_poly(Poly(q, {one, -ratio.wL()})).inv();
        case Splitting::Split: {
            Poly f1(q, {one, -ratio.w1()});
            Poly f2(q, {one, -ratio.w2()});
            return RatFunc::from_poly(f1 * f2).inv();
        }
    }
    throw std::logic_error("unreachable");
}

RatFunc pi_l_factor(const LocalField& f, const RepData& rep, const CoeffElem& twist) {
    const std::int64_t q = f.q;
    if (twist.is_zero()) throw std::invalid_argument("twist value must be nonzero");
    CoeffElem one = CoeffElem::one(q);
    if (std::holds_alternative<UnramifiedPS>(rep)) {
        const auto& ps = std::get<UnramifiedPS>(rep);
        Poly f1(q, {one, -ps.alpha1 * twist});
        Poly f2(q, {one, -ps.alpha2 * twist});
        return RatFunc::from_poly(f1 * f2).inv();
    }
    const auto& st = std::get<SteinbergTwist>(rep);
    CoeffElem rinv = CoeffElem::r(q).inv();
    return RatFunc::from_poly(Poly(q, {one, -st.chi * twist * rinv})).inv();
}

TorusChar pair_ratio_char(const InducedPair& p, const LocalField& f) {
    int c = std::max(p.omega1.conductor, p.omega2.conductor);
    switch (f.legendre) {
        case Splitting::Inert:
            return TorusChar::inert(c, p.omega1.w() / p.omega2.w());
        case Splitting::Ramified:
            return TorusChar::ramified(c, p.omega1.wL() / p.omega2.wL());
        case Splitting::Split:
            return TorusChar::split(c, p.omega1.w1() / p.omega2.w1(),
                                    p.omega1.w2() / p.omega2.w2());
    }
    throw std::logic_error("unreachable");
}

// --- unramified representation -------------------------------------------

LocalZetaResult zeta_unramified(const LocalField& f, const UnramifiedPS& rep,
                                const InducedPair& pair, const TorusChar& omega) {
    validate_zeta_common(f, RepData{rep}, pair, omega);
    if (pair.omega1.conductor != 0 || omega.conductor != 0)
        throw std::invalid_argument("unramified integral requires conductor-zero characters");

    CoeffElem t = omega1_base_value(RepData{rep}, pair, f);
    RatFunc l_num = subst_two_s_plus_half(pi_l_factor(f, RepData{rep}, t), f.q);
    RatFunc l_den = subst_two_s_plus_one(hecke_l_factor(f, pair_ratio_char(pair, f)), f.q);
    RatFunc closed = l_num / l_den;
    return LocalZetaResult{closed, l_num, l_den, RatFunc::one(f.q)};
}

PowerSeries zeta_unramified_direct(const LocalField& f, const UnramifiedPS& rep,
                                   const InducedPair& pair, const TorusChar& omega, int T) {
    validate_zeta_common(f, RepData{rep}, pair, omega);
    if (pair.omega1.conductor != 0 || omega.conductor != 0)
        throw std::invalid_argument("unramified integral requires conductor-zero characters");

    const std::int64_t q = f.q;
    CoeffElem t = omega1_base_value(RepData{rep}, pair, f);
    SphericalSeries R = spherical_generating_series(f, rep, omega);
    // R evaluated at Omega_1(pi) q^{-2s} = t X^2
    PowerSeries rser = series_expand(R.gen.substitute_power(t, 2), T);
    Rational leg_q(f.legendre_int(), q);
    PowerSeries out = rser * ce(q, Rational(1) - leg_q);
    out.set_coeff(0, out.coeff(0) + ce(q, leg_q));
    return out;
}

// --- Steinberg new form, ramified section ---------------------------------

LocalZetaResult zeta_steinberg_newform(const LocalField& f, const SteinbergTwist& rep,
                                       const InducedPair& pair, const TorusChar& omega) {
    validate_zeta_common(f, RepData{rep}, pair, omega);
    if (pair.omega1.conductor != 1)
        throw std::invalid_argument("new-form integral requires c(Omega_1) = 1");
    if (!waldspurger_exists(f, RepData{rep}, omega))
        throw std::invalid_argument("no Waldspurger model for this Steinberg datum");

    const std::int64_t q = f.q;
    CoeffElem prefactor = ce(q, Rational(q - f.legendre_int(), q + 1));
    CoeffElem t = omega1_base_value(RepData{rep}, pair, f);
    RatFunc l_num = subst_two_s_plus_half(pi_l_factor(f, RepData{rep}, t), q);
    RatFunc l_den = subst_two_s_plus_one(hecke_l_factor(f, pair_ratio_char(pair, f)), q);
    RatFunc closed = (l_num / l_den) * prefactor;
    RatFunc y = l_den * prefactor;
    return LocalZetaResult{closed, l_num, l_den, y};
}

PowerSeries zeta_steinberg_newform_direct(const LocalField& f, const SteinbergTwist& rep,
                                          const InducedPair& pair, const TorusChar& omega,
                                          int T) {
    validate_zeta_common(f, RepData{rep}, pair, omega);
    if (pair.omega1.conductor != 1)
        throw std::invalid_argument("new-form integral requires c(Omega_1) = 1");

    const std::int64_t q = f.q;
    int M = T / 2 + 1;
    WaldspurgerTable table = steinberg_table(f, rep, omega, std::max(M, 1));
    CoeffElem t = omega1_base_value(RepData{rep}, pair, f);

    // Sum over m >= 0: V_{wI,m} * Omega_1(pi^m) |pi^m|_L^{s+1/2} * B_0(diag(pi^m,1) w),
    // where the section contributes t^m q^{-m} X^{2m}.
    PowerSeries out(q, T);
    CoeffElem sect = CoeffElem::one(q);
    CoeffElem step = t * ce(q, Rational(1, q));
    for (int m = 0; 2 * m <= T; ++m) {
        CoeffElem b0 = m == 0 ? table.b0_at_w : table.at(CosetLabel::diag_w(m));
        out.set_coeff(2 * m, ce(q, volume_iwahori_w(f, m)) * sect * b0);
        sect *= step;
    }
    return out;
}

// --- Steinberg new form, old-vector section --------------------------------

namespace {

struct OldVectorData {
    CoeffElem a;          // Omega_1 at the L-uniformizer (split: at (pi,1))
    CoeffElem b;          // Omega_2 at the same
    CoeffElem t;          // Omega_1 at the F-uniformizer
    bool b0w_zero;        // split case with Omega(1,pi) = chi(pi)
    CoeffElem case_factor;  // the displayed case factor of the theorem
};

OldVectorData old_vector_data(const LocalField& f, const SteinbergTwist& rep,
                              const InducedPair& pair, const TorusChar& omega) {
    if (f.legendre == Splitting::Inert)
        throw std::invalid_argument(
            "no Waldspurger model: inert Steinberg with unramified characters");
    if (pair.omega1.conductor != 0)
        throw std::invalid_argument("old-vector integral requires unramified Omega_1");
    if (!waldspurger_exists(f, RepData{rep}, omega))
        throw std::invalid_argument("no Waldspurger model for this Steinberg datum");

    const std::int64_t q = f.q;
    OldVectorData d{CoeffElem::zero(q), CoeffElem::zero(q), CoeffElem::zero(q), false,
                    CoeffElem::zero(q)};
    if (f.legendre == Splitting::Ramified) {
        d.a = pair.omega1.wL();
        d.b = pair.omega2.wL();
        d.b0w_zero = false;
        d.case_factor = CoeffElem::from_int(q, q) * d.a.inv();
    } else {
        d.a = pair.omega1.w1();
        d.b = pair.omega2.w1();
        d.b0w_zero = omega.w2() == rep.chi;
        if (d.b0w_zero) {
            d.case_factor = d.a.inv();
        } else {
            CoeffElem denom = CoeffElem::one(q) - rep.chi.inv() * omega.w2();
            d.case_factor = CoeffElem::from_int(q, q - 1) * d.a.inv() * denom.inv();
        }
    }
    d.t = omega1_base_value(RepData{rep}, pair, f);
    return d;
}

}  // namespace

RatFunc k_integral_old_vector(const LocalField& f, const SteinbergTwist& rep,
                              const InducedPair& pair, const TorusChar& omega) {
    validate_zeta_common(f, RepData{rep}, pair, omega);
    OldVectorData d = old_vector_data(f, rep, pair, omega);
    const std::int64_t q = f.q;

    // common right factor (1 - Omega_1 Omega_2^{-1}(pi_L) q^{-2s-1})
    CoeffElem u = d.a / d.b;
    RatFunc tail = RatFunc::from_poly(
        Poly(q, {CoeffElem::one(q), CoeffElem::zero(q), -u * ce(q, Rational(1, q))}));
    // q^{s+1/2} = r X^{-1}; the ramified case carries q^{s+3/2} = q r X^{-1}
    RatFunc laurent = RatFunc::monomial(CoeffElem::r(q), -1);
    CoeffElem minus_inv_qp1 = -ce(q, Rational(1, q + 1));
    return laurent * tail * (minus_inv_qp1 * d.case_factor);
}

LocalZetaResult zeta_steinberg_oldvector(const LocalField& f, const SteinbergTwist& rep,
                                         const InducedPair& pair, const TorusChar& omega) {
    validate_zeta_common(f, RepData{rep}, pair, omega);
    OldVectorData d = old_vector_data(f, rep, pair, omega);
    const std::int64_t q = f.q;

    RatFunc l_num = subst_two_s_plus_half(pi_l_factor(f, RepData{rep}, d.t), q);
    RatFunc l_den = subst_two_s_plus_one(hecke_l_factor(f, pair_ratio_char(pair, f)), q);
    RatFunc laurent = RatFunc::monomial(CoeffElem::r(q), -1);
    CoeffElem minus_inv_qp1 = -ce(q, Rational(1, q + 1));
    RatFunc closed = laurent * (l_num / l_den) * (minus_inv_qp1 * d.case_factor);
    RatFunc y = laurent * (minus_inv_qp1 * d.case_factor);
    return LocalZetaResult{closed, l_num, l_den, y};
}

PowerSeries zeta_steinberg_oldvector_direct(const LocalField& f, const SteinbergTwist& rep,
                                            const InducedPair& pair, const TorusChar& omega,
                                            int T) {
    validate_zeta_common(f, RepData{rep}, pair, omega);
    OldVectorData d = old_vector_data(f, rep, pair, omega);
    const std::int64_t q = f.q;
    int M = T / 2 + 1;
    WaldspurgerTable table = steinberg_table(f, rep, omega, std::max(M, 1));

    // X * (K-cell integral): clears the q^{s+1/2} pole.
    RatFunc xk = RatFunc::monomial(CoeffElem::one(q), 1) * k_integral_old_vector(f, rep, pair, omega);
    PowerSeries out = series_expand(xk, T);

    // X * (m >= 1 cells). Section values on the diagonal cells:
    //   I-cell:  Omega_1(pi_L)^{-1} q^{s+1/2} (t q^{-2s-1})^m -> a^{-1} r t^m q^{-m} X^{2m-1}
    //   wI-cell: Omega_2(pi_L)^{-1} q^{-s-1/2} (t q^{-2s-1})^m -> b^{-1} (r/q) t^m q^{-m} X^{2m+1}
    CoeffElem r = CoeffElem::r(q);
    CoeffElem ainv = d.a.inv(), binv = d.b.inv();
    CoeffElem step = d.t * ce(q, Rational(1, q));
    CoeffElem tp = step;  // (t/q)^m
    for (int m = 1; 2 * m <= T; ++m) {
        CoeffElem icell = ce(q, volume_iwahori(f, m)) * ainv * r * tp * table.at(CosetLabel::diag(m));
        out.set_coeff(2 * m, out.coeff(2 * m) + icell);
        if (2 * m + 2 <= T) {
            CoeffElem wcell = ce(q, volume_iwahori_w(f, m)) * binv * (r * ce(q, Rational(1, q))) *
                              tp * table.at(CosetLabel::diag_w(m));
            out.set_coeff(2 * m + 2, out.coeff(2 * m + 2) + wcell);
        }
        tp *= step;
    }
    return out;
}

bool series_matches(const RatFunc& f, const PowerSeries& s) {
    return series_expand(f, s.order()) == s;
}

}  // namespace waldzeta
