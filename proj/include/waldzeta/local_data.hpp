#pragma once

// Parameter bundles for a non-archimedean place: residue field data, the
// GL(2) representation (unramified principal series or unramified twist of
// Steinberg), torus character data, and the coset labels that index value
// tables.
//
// Characters of L^x are represented only by their conductor exponent and
// their value(s) at uniformizer(s); no computed formula in the library needs
// more.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "waldzeta/coeff.hpp"

namespace waldzeta {

// Legendre symbol of the quadratic algebra L over the base field:
// -1 unramified field extension, 0 ramified field extension, +1 split.
enum class Splitting : int { Inert = -1, Ramified = 0, Split = 1 };

inline Splitting splitting_from_int(int v) {
    if (v < -1 || v > 1) throw std::invalid_argument("legendre symbol must be -1, 0 or +1");
    return static_cast<Splitting>(v);
}

struct LocalField {
    std::int64_t q = 0;       // residue field cardinality, a prime power >= 2
    Splitting legendre = Splitting::Inert;

    int legendre_int() const { return static_cast<int>(legendre); }
    Rational legendre_rat() const { return Rational(legendre_int()); }
};

inline bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    }
    return true;  // q itself is prime
}

inline void validate_local_field(const LocalField& f) {
    if (!is_prime_power(f.q)) throw std::invalid_argument("q must be a prime power >= 2");
}

// --- representation data ----------------------------------------------

struct UnramifiedPS {
    CoeffElem alpha1;  // chi_1(uniformizer)
    CoeffElem alpha2;  // chi_2(uniformizer)
};

struct SteinbergTwist {
    CoeffElem chi;  // chi(uniformizer), chi unramified
};

using RepData = std::variant<UnramifiedPS, SteinbergTwist>;

// Irreducibility: alpha1/alpha2 must avoid q^{+-1}.
inline void validate_rep(const RepData& rep, const LocalField& f) {
    if (std::holds_alternative<UnramifiedPS>(rep)) {
        const auto& ps = std::get<UnramifiedPS>(rep);
        if (ps.alpha1.is_zero() || ps.alpha2.is_zero())
            throw std::invalid_argument("Satake values must be nonzero");
        CoeffElem ratio = ps.alpha1 / ps.alpha2;
        CoeffElem qe = CoeffElem::from_int(f.q, f.q);
        if (ratio == qe || ratio == qe.inv())
            throw std::invalid_argument("principal series is reducible: alpha1/alpha2 = q^{+-1}");
    } else {
        if (std::get<SteinbergTwist>(rep).chi.is_zero())
            throw std::invalid_argument("Steinberg twist value must be nonzero");
    }
}

// Central character value omega_pi(uniformizer), derived rather than stored:
// alpha1*alpha2 for a principal series, chi^2 for a Steinberg twist.
inline CoeffElem omega_pi_value(const RepData& rep) {
    if (std::holds_alternative<UnramifiedPS>(rep)) {
        const auto& ps = std::get<UnramifiedPS>(rep);
        return ps.alpha1 * ps.alpha2;
    }
    const auto& st = std::get<SteinbergTwist>(rep);
    return st.chi * st.chi;
}

// Hecke eigenvalue lambda = q^{1/2} (chi_1 + chi_2)(uniformizer).
inline CoeffElem hecke_lambda(const LocalField& f, const UnramifiedPS& ps) {
    return CoeffElem::r(f.q) * (ps.alpha1 + ps.alpha2);
}

// --- torus character data ---------------------------------------------

// A character of L^x, keyed to the splitting type of L:
//   inert:    w  = value at the uniformizer (of F = of L),
//   ramified: wL = value at a uniformizer of L,
//   split:    w1 = value at (pi,1), w2 = value at (1,pi).
// `conductor` is the exponent c: the character is trivial on
// (1 + P_L^c) \cap o_L^x and on no smaller such group.
struct TorusChar {
    int conductor = 0;
    Splitting kind = Splitting::Inert;
    std::vector<CoeffElem> vals;  // size 1 (inert/ramified) or 2 (split)

    static TorusChar inert(int c, CoeffElem w) { return {c, Splitting::Inert, {std::move(w)}}; }
    static TorusChar ramified(int c, CoeffElem wL) {
        return {c, Splitting::Ramified, {std::move(wL)}};
    }
    static TorusChar split(int c, CoeffElem w1, CoeffElem w2) {
        return {c, Splitting::Split, {std::move(w1), std::move(w2)}};
    }

    const CoeffElem& w() const { return single(Splitting::Inert); }
    const CoeffElem& wL() const { return single(Splitting::Ramified); }
    const CoeffElem& w1() const { return pair(0); }
    const CoeffElem& w2() const { return pair(1); }

    bool case_matches(const LocalField& f) const { return kind == f.legendre; }

  private:
    const CoeffElem& single(Splitting expect) const {
        if (kind != expect || vals.size() != 1)
            throw std::logic_error("torus character case mismatch");
        return vals[0];
    }
    const CoeffElem& pair(size_t j) const {
        if (kind != Splitting::Split || vals.size() != 2)
            throw std::logic_error("torus character case mismatch");
        return vals[j];
    }
};

inline void validate_torus_char(const TorusChar& om, const LocalField& f) {
    if (om.conductor < 0) throw std::invalid_argument("conductor must be >= 0");
    if (!om.case_matches(f)) throw std::invalid_argument("torus character case does not match legendre symbol");
    size_t expect = f.legendre == Splitting::Split ? 2u : 1u;
    if (om.vals.size() != expect) throw std::invalid_argument("wrong number of character values");
    for (const auto& v : om.vals)
        if (v.is_zero()) throw std::invalid_argument("character values must be nonzero");
}

// Value of the character restricted to F^x at the uniformizer of F.
// Inert: the F-uniformizer is an L-uniformizer, so this is w. Split: the
// F-uniformizer embeds diagonally, giving w1*w2. Ramified: the uniformizer
// is (unit)*(L-uniformizer)^2; the unit contributes 1 only when the
// conductor is 0, so the value wL^2 is exact only in that case.
inline CoeffElem base_restriction_value(const TorusChar& om) {
    switch (om.kind) {
        case Splitting::Inert: return om.w();
        case Splitting::Ramified: return om.wL() * om.wL();
        case Splitting::Split: return om.w1() * om.w2();
    }
    throw std::logic_error("unreachable");
}

// --- induced representation pair --------------------------------------

// The pair (Omega_1, Omega_2) defining the induced representation the
// section lives in. Scope: c(Omega_1) <= 1 and c(Omega_2) = 0.
struct InducedPair {
    TorusChar omega1;
    TorusChar omega2;
};

inline void validate_pair_shape(const InducedPair& p, const LocalField& f) {
    validate_torus_char(p.omega1, f);
    validate_torus_char(p.omega2, f);
    if (p.omega1.conductor > 1)
        throw std::invalid_argument("c(Omega_1) must be 0 or 1");
    if (p.omega2.conductor != 0) throw std::invalid_argument("c(Omega_2) must be 0");
}

// Central compatibility of the model character: Omega|_{F^x} = omega_pi,
// checked at the uniformizer. In the ramified case the identity involves an
// unrepresented unit value unless the conductor is 0, so it is only checked
// there.
inline bool central_compat_check(const RepData& rep, const TorusChar& omega,
                                 const LocalField& f) {
    CoeffElem wpi = omega_pi_value(rep);
    if (omega.kind == Splitting::Ramified && omega.conductor > 0) return true;
    return base_restriction_value(omega) == wpi;
}

// Central compatibility of the section pair: (Omega_1 Omega_2)|_{F^x} =
// omega_pi^{-1} at the uniformizer. Same ramified caveat as above.
inline bool pair_central_compat(const RepData& rep, const InducedPair& p, const LocalField& f) {
    if (f.legendre == Splitting::Ramified &&
        (p.omega1.conductor > 0 || p.omega2.conductor > 0))
        return true;
    CoeffElem lhs = base_restriction_value(p.omega1) * base_restriction_value(p.omega2);
    return lhs == omega_pi_value(rep).inv();
}

// Omega_1(uniformizer of F), the twist entering every local zeta integral.
// For a ramified extension with c(Omega_1) = 1 the stored wL value does not
// determine it, but the central identity does: Omega_1|_{F^x} =
// omega_pi^{-1} (Omega_2|_{F^x})^{-1}, and both factors on the right are
// unramified.
inline CoeffElem omega1_base_value(const RepData& rep, const InducedPair& p,
                                   const LocalField& f) {
    if (f.legendre == Splitting::Ramified && p.omega1.conductor > 0)
        return (omega_pi_value(rep) * base_restriction_value(p.omega2)).inv();
    return base_restriction_value(p.omega1);
}

// The Waldspurger-model character Omega determined by the pair:
// Omega(z) = Omega_1^{-1}(zbar) Omega_2^{-1}(z). Conjugation fixes the
// inert/ramified uniformizer values (up to units) and swaps the split
// components. Returns nothing in the ramified case with c(Omega_1) > 0,
// where the value at the L-uniformizer is not determined by stored data.
inline std::optional<TorusChar> derived_model_char(const InducedPair& p, const LocalField& f) {
    int c = std::max(p.omega1.conductor, p.omega2.conductor);
    switch (f.legendre) {
        case Splitting::Inert:
            return TorusChar::inert(c, (p.omega1.w() * p.omega2.w()).inv());
        case Splitting::Ramified:
            if (p.omega1.conductor > 0) return std::nullopt;
            return TorusChar::ramified(c, (p.omega1.wL() * p.omega2.wL()).inv());
        case Splitting::Split:
            return TorusChar::split(c, (p.omega1.w2() * p.omega2.w1()).inv(),
                                    (p.omega1.w1() * p.omega2.w2()).inv());
    }
    throw std::logic_error("unreachable");
}

inline bool omega_consistent_with_pair(const TorusChar& omega, const InducedPair& p,
                                       const LocalField& f) {
    int c = std::max(p.omega1.conductor, p.omega2.conductor);
    if (omega.conductor != c) return false;
    auto derived = derived_model_char(p, f);
    if (!derived) return true;  // not determined; nothing to contradict
    if (f.legendre == Splitting::Split)
        return omega.w1() == derived->w1() && omega.w2() == derived->w2();
    return omega.vals[0] == derived->vals[0];
}

// Existence of an (S, Omega)-Waldspurger model.
//
// Unramified principal series always has one. For a Steinberg twist chi*St
// the criterion is Omega != chi o N_{L/F}:
//  - split: a model always exists;
//  - any case with c(Omega) >= 1: chi o N is trivial on units, Omega is
//    not, so a model exists;
//  - inert, c(Omega) = 0: the norm sends the (common) uniformizer to its
//    square, so Omega = chi o N amounts to w = chi^2; a model exists iff
//    w != chi^2. Under central compatibility w = chi^2 is forced, so no
//    model exists for valid inert data.
//  - ramified, c(Omega) = 0: Omega = chi' . (chi o N) with chi' trivial or
//    the unramified quadratic character; the model exists only for the
//    quadratic twist, i.e. wL = -chi(uniformizer).
inline bool waldspurger_exists(const LocalField& f, const RepData& rep, const TorusChar& omega) {
    if (!omega.case_matches(f))
        throw std::invalid_argument("torus character case does not match legendre symbol");
    if (std::holds_alternative<UnramifiedPS>(rep)) return true;
    const CoeffElem& chi = std::get<SteinbergTwist>(rep).chi;
    if (f.legendre == Splitting::Split) return true;
    if (omega.conductor >= 1) return true;
    if (f.legendre == Splitting::Inert) return omega.w() != chi * chi;
    return omega.wL() == -chi;  // ramified, c = 0
}

// --- coset labels -------------------------------------------------------

// Labels for the double cosets indexing new-vector value tables:
//   DiagPower(m):  T diag(pi^m, 1) K   (m >= 0, maximal compact case)
//                  T diag(pi^m, 1) I   (m >= 1, Iwahori case)
//   DiagPowerW(m): T diag(pi^m, 1) w I (m >= 1)
//   W:             T w I
//   U0:            T [1,0;u0,1] I      (ramified only)
//   U1, U2:        T [1,0;u_i,1] I     (split only)
struct CosetLabel {
    enum class Kind { DiagPower, DiagPowerW, W, U0, U1, U2 };
    Kind kind = Kind::W;
    int m = 0;

    static CosetLabel diag(int m) {
        if (m < 0) throw std::invalid_argument("DiagPower index must be >= 0");
        return {Kind::DiagPower, m};
    }
    static CosetLabel diag_w(int m) {
        if (m < 1) throw std::invalid_argument("DiagPowerW index must be >= 1");
        return {Kind::DiagPowerW, m};
    }
    static CosetLabel w() { return {Kind::W, 0}; }
    static CosetLabel u0() { return {Kind::U0, 0}; }
    static CosetLabel u1() { return {Kind::U1, 0}; }
    static CosetLabel u2() { return {Kind::U2, 0}; }

    bool valid_for(const LocalField& f) const {
        if (kind == Kind::U0) return f.legendre == Splitting::Ramified;
        if (kind == Kind::U1 || kind == Kind::U2) return f.legendre == Splitting::Split;
        return true;
    }

    friend bool operator<(const CosetLabel& a, const CosetLabel& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.m < b.m;
    }
    friend bool operator==(const CosetLabel& a, const CosetLabel& b) {
        return a.kind == b.kind && a.m == b.m;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::DiagPower: return "diag(" + std::to_string(m) + ")";
            case Kind::DiagPowerW: return "diag_w(" + std::to_string(m) + ")";
            case Kind::W: return "w";
            case Kind::U0: return "u0";
            case Kind::U1: return "u1";
            case Kind::U2: return "u2";
        }
        return "?";
    }
};

}  // namespace waldzeta
