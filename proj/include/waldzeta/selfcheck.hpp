#pragma once

// The library's invariant suite: randomized oracle equivalences, algebraic
// property checks, and fixed-fixture consistency checks. The CLI `verify`
// subcommand runs everything here; the unit and acceptance tests reuse the
// same entry points with their own counts.
//
// All randomness flows through ParamRng with an explicit seed, so runs are
// reproducible.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "waldzeta/global.hpp"

namespace waldzeta {

class ParamRng {
  public:
    explicit ParamRng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi);  // inclusive
    Rational small_rat(bool nonzero);
    // A nonzero element of Q(i)(r); small components, occasional r-part.
    CoeffElem unit(std::int64_t q);
    // Satake pair with product omega_pi and alpha1/alpha2 != q^{+-1}.
    UnramifiedPS satake_with_center(std::int64_t q, const CoeffElem& omega_pi);
    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

// --- randomized local data ---------------------------------------------

struct UnramifiedLocal {
    LocalField field;
    UnramifiedPS rep;
    TorusChar omega;
};
// Central-compatible (rep, Omega) with the given conductor.
UnramifiedLocal random_unramified_local(ParamRng& rng, std::int64_t q, Splitting leg, int c);

struct ZetaLocal {
    LocalField field;
    RepData rep;
    InducedPair pair;
    TorusChar omega;
};
// Fully consistent data for the unramified integral.
ZetaLocal random_unramified_zeta(ParamRng& rng, std::int64_t q, Splitting leg);
// Steinberg with c(Omega_1) = 1.
ZetaLocal random_newform_zeta(ParamRng& rng, std::int64_t q, Splitting leg);
// Steinberg with unramified pair; leg must be Ramified or Split, and
// b0w_zero selects the split branch with B_0(w) = 0.
ZetaLocal random_oldvector_zeta(ParamRng& rng, std::int64_t q, Splitting leg, bool b0w_zero);

// --- fixtures -----------------------------------------------------------

// D=21, N=6, N'=2: p=2 inert with c(Omega_1)=1, p=3 ramified old-vector.
GlobalConfig fixture_global_d21();
// D=5, N=11, N'=1: p=11 split old-vector (B_0(w) = 1 branch).
GlobalConfig fixture_global_d5_n11();

// --- checks ----------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

CheckResult check_field_axioms(ParamRng& rng, int triples);
CheckResult check_reduce_properties(ParamRng& rng, int cases);
CheckResult check_series_expand_identity(ParamRng& rng, int cases, int order);
CheckResult check_local_predicates();
CheckResult check_spherical_oracle(ParamRng& rng, int sets, int order);
CheckResult check_spherical_vanishing(ParamRng& rng, int sets);
CheckResult check_steinberg_table_identities(ParamRng& rng, int sets);
CheckResult check_zeta_unramified_oracle(ParamRng& rng, int sets_per_legendre, int order);
CheckResult check_zeta_steinberg_oracles(ParamRng& rng, int sets_per_case, int order);
CheckResult check_l_ratio_identity(ParamRng& rng, int sets);
CheckResult check_volumes();
CheckResult check_arch_special_values();
CheckResult check_arch_quadrature_grid();
CheckResult check_arch_lowering_grids();
CheckResult check_arch_zinf_composition();
CheckResult check_arch_zinf_vanishing_limit();
CheckResult check_cartan_quadratic();
CheckResult check_lie_finite_difference();
CheckResult check_kronecker_oracle();
CheckResult check_global_consistency();
CheckResult check_nonvanishing_table();

std::vector<CheckResult> run_all_checks(std::uint64_t seed);

}  // namespace waldzeta
