#pragma once

// Explicit values of the distinguished vector B_0 in a local Waldspurger
// model.
//
// Unramified representation: the values A_m = B_0(diag(pi^m, 1)) are
// packaged two ways, as the closed-form generating function
//
//     R(x) = (q - kappa x) x^c / (omega_pi x^2 - lambda x + q),
//
// normalized so that A_c = 1 (c = conductor of Omega), and as the exact
// list produced by the Hecke recurrence
//
//     q A_{m+1} + omega_pi A_{m-1} = lambda A_m        (m >= max(c,1))
//
// with case-split initial step at m = 0. The two routes are independent and
// their agreement is the module's central cross-check; downstream consumers
// use the generating function, the recurrence is for tests.
//
// Steinberg twist: a value table indexed by Iwahori coset labels.

#include <map>

#include "waldzeta/local_data.hpp"
#include "waldzeta/power_series.hpp"

namespace waldzeta {

// kappa, the only case-dependent constant in the generating function:
//   0                      if c(Omega) > 0
//   lambda/(q+1)           if c = 0, inert
//   Omega(pi_L)            if c = 0, ramified
//   -lambda/(q-1) + q/(q-1) (Omega(pi,1)+Omega(1,pi))   if c = 0, split.
CoeffElem kappa(const LocalField& f, const UnramifiedPS& rep, const TorusChar& omega);

struct SphericalSeries {
    RatFunc gen;       // R(x), in the formal variable x
    int conductor;     // c(Omega); A_m = 0 below it, A_c = 1
};

SphericalSeries spherical_generating_series(const LocalField& f, const UnramifiedPS& rep,
                                            const TorusChar& omega);

// Independent oracle: A_0..A_M via the recurrence.
std::vector<CoeffElem> spherical_values_recurrence(const LocalField& f, const UnramifiedPS& rep,
                                                   const TorusChar& omega, int M);

// Coefficients of the generating function to order M (the closed-form route
// to the same values).
std::vector<CoeffElem> spherical_values_from_series(const LocalField& f, const UnramifiedPS& rep,
                                                    const TorusChar& omega, int M);

struct WaldspurgerTable {
    enum class Normalization { AtW, AtU1 };  // B_0(w)=1, or B_0(u1)=1=-B_0(u2) when B_0(w)=0

    std::map<CosetLabel, CoeffElem> values;
    Normalization normalization = Normalization::AtW;
    CoeffElem b0_at_w;  // 1 or 0 under the normalization above

    const CoeffElem& at(const CosetLabel& label) const {
        auto it = values.find(label);
        if (it == values.end()) throw std::out_of_range("no table entry for " + label.to_string());
        return it->second;
    }
    bool has(const CosetLabel& label) const { return values.count(label) > 0; }
};

// New-vector values for pi = chi St, filled for diag powers up to max_m.
// Requires an (S, Omega)-Waldspurger model to exist.
WaldspurgerTable steinberg_table(const LocalField& f, const SteinbergTwist& rep,
                                 const TorusChar& omega, int max_m);

}  // namespace waldzeta
