#include "waldzeta/waldspurger.hpp"

#include <stdexcept>

namespace waldzeta {

namespace {

void require_compat(const LocalField& f, const UnramifiedPS& rep, const TorusChar& omega) {
    validate_local_field(f);
    validate_rep(RepData{rep}, f);
    validate_torus_char(omega, f);
    if (!central_compat_check(RepData{rep}, omega, f))
        throw std::invalid_argument("central character compatibility fails");
}

}  // namespace

CoeffElem kappa(const LocalField& f, const UnramifiedPS& rep, const TorusChar& omega) {
    require_compat(f, rep, omega);
    const std::int64_t q = f.q;
    if (omega.conductor > 0) return CoeffElem::zero(q);
    CoeffElem lambda = hecke_lambda(f, rep);
    switch (f.legendre) {
        case Splitting::Inert:
            return lambda * CoeffElem::from_rational(q, Rational(1, q + 1));
        case Splitting::Ramified:
            return omega.wL();
        case Splitting::Split: {
            CoeffElem inv_qm1 = CoeffElem::from_rational(q, Rational(1, q - 1));
            CoeffElem qq = CoeffElem::from_int(q, q);
            return (-lambda + qq * (omega.w1() + omega.w2())) * inv_qm1;
        }
    }
    throw std::logic_error("unreachable");
}

SphericalSeries spherical_generating_series(const LocalField& f, const UnramifiedPS& rep,
                                            const TorusChar& omega) {
    const std::int64_t q = f.q;
    CoeffElem kap = kappa(f, rep, omega);  // validates inputs
    CoeffElem lambda = hecke_lambda(f, rep);
    CoeffElem wpi = omega_pi_value(RepData{rep});
    CoeffElem qq = CoeffElem::from_int(q, q);

    // (q - kappa x) x^c
    Poly numer = Poly(q, {qq, -kap}).shifted(omega.conductor);
    // omega_pi x^2 - lambda x + q
    Poly denom(q, {qq, -lambda, wpi});
    return SphericalSeries{RatFunc(std::move(numer), std::move(denom)), omega.conductor};
}

std::vector<CoeffElem> spherical_values_recurrence(const LocalField& f, const UnramifiedPS& rep,
                                                   const TorusChar& omega, int M) {
    require_compat(f, rep, omega);
    if (M < 0) throw std::invalid_argument("recurrence length must be >= 0");
    const std::int64_t q = f.q;
    const int c = omega.conductor;
    CoeffElem lambda = hecke_lambda(f, rep);
    CoeffElem wpi = omega_pi_value(RepData{rep});
    CoeffElem qinv = CoeffElem::from_rational(q, Rational(1, q));

    std::vector<CoeffElem> A(static_cast<size_t>(M) + 1, CoeffElem::zero(q));
    if (c <= M) A[static_cast<size_t>(c)] = CoeffElem::one(q);

    if (c == 0 && M >= 1) {
        // First step at m = 0, where the Hecke sum sees the short cosets.
        switch (f.legendre) {
            case Splitting::Inert:  // (q+1) A_1 = lambda A_0
                A[1] = lambda * CoeffElem::from_rational(q, Rational(1, q + 1));
                break;
            case Splitting::Ramified:  // q A_1 + Omega(pi_L) A_0 = lambda A_0
                A[1] = (lambda - omega.wL()) * qinv;
                break;
            case Splitting::Split:  // (q-1) A_1 + (w1 + w2) A_0 = lambda A_0
                A[1] = (lambda - omega.w1() - omega.w2()) *
                       CoeffElem::from_rational(q, Rational(1, q - 1));
                break;
        }
    }
    // Three-term recurrence for m >= max(c, 1).
    for (int m = std::max(c, 1); m + 1 <= M; ++m)
        A[static_cast<size_t>(m) + 1] =
            (lambda * A[static_cast<size_t>(m)] - wpi * A[static_cast<size_t>(m) - 1]) * qinv;
    return A;
}

std::vector<CoeffElem> spherical_values_from_series(const LocalField& f, const UnramifiedPS& rep,
                                                    const TorusChar& omega, int M) {
    SphericalSeries s = spherical_generating_series(f, rep, omega);
    return series_expand(s.gen, M).coeffs();
}

WaldspurgerTable steinberg_table(const LocalField& f, const SteinbergTwist& rep,
                                 const TorusChar& omega, int max_m) {
    validate_local_field(f);
    validate_rep(RepData{rep}, f);
    validate_torus_char(omega, f);
    if (!central_compat_check(RepData{rep}, omega, f))
        throw std::invalid_argument("central character compatibility fails");
    if (!waldspurger_exists(f, RepData{rep}, omega))
        throw std::invalid_argument("no Waldspurger model for this Steinberg datum");
    if (max_m < 1) throw std::invalid_argument("table depth must be >= 1");

    const std::int64_t q = f.q;
    const int c = omega.conductor;
    const CoeffElem& chi = rep.chi;
    CoeffElem one = CoeffElem::one(q);

    WaldspurgerTable table;

    // B_0(w) vanishes exactly in the split case with c = 0 and
    // Omega(1,pi) = chi(pi); the normalization then moves to u1.
    bool b0w_zero =
        f.legendre == Splitting::Split && c == 0 && omega.w2() == chi;
    table.b0_at_w = b0w_zero ? CoeffElem::zero(q) : one;
    table.normalization =
        b0w_zero ? WaldspurgerTable::Normalization::AtU1 : WaldspurgerTable::Normalization::AtW;

    table.values[CosetLabel::w()] = table.b0_at_w;

    for (int m = 1; m <= max_m; ++m) {
        CoeffElem chim = chi.pow(m);
        // B_0(diag(pi^m,1) w) = chi^m q^{-m} B_0(w)
        table.values[CosetLabel::diag_w(m)] =
            chim * CoeffElem::from_rational(q, rat_pow(Rational(1, q), m)) * table.b0_at_w;
        // B_0(diag(pi^m,1)) = -chi^m q^{-(m-1)} B_0(w) for m >= c, else 0
        table.values[CosetLabel::diag(m)] =
            m >= c ? -chim * CoeffElem::from_rational(q, rat_pow(Rational(1, q), m - 1)) *
                         table.b0_at_w
                   : CoeffElem::zero(q);
    }

    if (f.legendre == Splitting::Ramified) {
        table.values[CosetLabel::u0()] =
            c == 0 ? -CoeffElem::from_int(q, q) * table.b0_at_w : CoeffElem::zero(q);
    } else if (f.legendre == Splitting::Split) {
        if (c > 0) {
            table.values[CosetLabel::u1()] = CoeffElem::zero(q);
            table.values[CosetLabel::u2()] = CoeffElem::zero(q);
        } else if (b0w_zero) {
            table.values[CosetLabel::u1()] = one;
            table.values[CosetLabel::u2()] = -one;
        } else {
            // B_0(u1) = (q-1)/(chi w2^{-1} - 1), B_0(u2) = (q-1)/(chi^{-1} w2 - 1)
            CoeffElem qm1 = CoeffElem::from_int(q, q - 1);
            table.values[CosetLabel::u1()] = qm1 * (chi / omega.w2() - one).inv();
            table.values[CosetLabel::u2()] = qm1 * (chi.inv() * omega.w2() - one).inv();
        }
    }
    return table;
}

}  // namespace waldzeta
