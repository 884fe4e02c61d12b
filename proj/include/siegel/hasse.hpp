#pragma once
// Generalized Hasse invariants on the Bruhat strata, all in exact arithmetic.
//
// For a stratum w and weight lambda, the section's divisor is supported on the
// lower neighbors w s_alpha (alpha in E_w) with coefficient -<chi, w alpha^v>,
// where chi is the rational character with D_w(chi) = chi - p (z w^{-1}) chi
// = lambda.  Positivity of every coefficient is equivalent to the integer
// criterion  sum_{i<r} p^i <(z w^{-1})^i lambda, w alpha^v> > 0  (r = order of
// z w^{-1}); intersecting over the strata of one flag space gives the Hasse
// cone, our main computable under-approximation of the ample cone.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "siegel/rootsys.hpp"
#include "siegel/weyl.hpp"

namespace siegel {

struct DivisorTerm {
    StratumLabel label;
    Rat coef;
};

// Finite formal sum of strata with exact rational coefficients; zero
// coefficients are dropped.  Terms are kept sorted by label word, descending
// (the order the closed-form tables are written in).
struct Divisor {
    std::vector<DivisorTerm> terms;

    Rat coef_at(const WeylElt& u) const; // 0 when absent
    std::string str() const;             // "5/6 [s2 s3] + 1/2 [s1 s3]", "0" when empty
    friend bool operator==(const Divisor& a, const Divisor& b);
};

// chi = (-1/(p^r - 1)) sum_{i=0}^{r-1} p^i (z w^{-1})^i lambda; exact inverse
// of D_w on the rational character space.
RatCharacter chi_of(const Character& lam, const WeylElt& w, const SystemContext& ctx);

// D_w(chi) = chi - p * (z w^{-1}) chi.  Roundtrip partner of chi_of.
RatCharacter dw_of(const RatCharacter& chi, const WeylElt& w, const SystemContext& ctx);

Divisor divisor(const Character& lam, const WeylElt& w, const SystemContext& ctx);

// True iff the criterion sum is strictly positive for every alpha in E_w
// (vacuously true for the open stratum, E_w empty).
bool hasse_criterion(const Character& lam, const WeylElt& w, const SystemContext& ctx);

enum class AmpMode { HasseCone, OrbitalSufficient };

// Precomputed test for membership in the Hasse cone of one parabolic type:
// lambda in X*(P_0) and the criterion holds on every stratum of the flag
// space (w ranges over the minimal coset representatives of W_{I0} \ W).
// Construction folds each (w, alpha) pair into a single integer functional,
// so contains() is a handful of dot products; the object is immutable.
class HasseCone {
public:
    HasseCone(const SystemContext& ctx, const ParabolicType& P0);

    bool contains(const Character& lam) const;
    // First (stratum, root) whose criterion fails, for diagnostics; nullopt if
    // lam is in the cone or outside X*(P_0).
    std::optional<std::pair<WeylElt, Root>> first_failure(const Character& lam) const;

private:
    ParabolicType P0_;
    struct Functional {
        std::vector<i64> m; // criterion sum = <lam, m>
        WeylElt w;
        Root alpha;
    };
    std::vector<Functional> funcs_;
};

bool in_C_Ha(const Character& lam, const ParabolicType& P0, const SystemContext& ctx);

// max_w |<lam, w alpha^v>| / |<lam, alpha^v>| <= p - 1 for every root alpha
// with nonzero pairing.  The W-orbit maxima have closed forms: coroots of the
// short/middle roots sweep all +-e_i +- e_j, the long-root coroots all +-e_i.
bool orbitally_p_close(const Character& lam, const SystemContext& ctx);
std::optional<Root> first_orbital_failure(const Character& lam, const SystemContext& ctx);

// <lam, alpha^v> > 0 on I \ I_0 and < 0 on the noncompact positive roots.
bool z0_ample(const Character& lam, const ParabolicType& P0);
std::optional<Root> first_z0_failure(const Character& lam, const ParabolicType& P0);

// Sound under-approximations of the ample cone: the Hasse cone itself, or the
// orbitally-p-close && Z_0-ample sufficient condition.  Both require
// lam in X*(P_0).
bool in_C_amp_proxy(const Character& lam, const ParabolicType& P0, const SystemContext& ctx,
                    AmpMode mode);

} // namespace siegel
