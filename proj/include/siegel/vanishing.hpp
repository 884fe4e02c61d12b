#pragma once
// Degree-propagation operator and the monotone fixed-point driver.
//
// The ledger holds nested sets V_0 c= V_1 c= ... c= V_{d-1} of L-dominant
// weights inside a box; lambda in V_e certifies that the bundle cohomology is
// concentrated in degrees [0, e].  One propagation step turns degree-(e+1)
// certificates into degree-e ones:
//   g_{I0,e}(C) = mu^{d-e}_top + { xi : xi in X*(P_0), >= 0 on I \ I_0,
//                  xi + 2rho_{I0} in the ample-cone proxy,
//                  xi + mu^{d-e+k}_j + 2rho_{I0} - s_M in C for all admissible
//                  (k, j, M) }
// with 0 <= k <= e, M a subset of phi_L^+ \ phi_{I0}^+ of size r_0 - k, and
// for k = 0 the designated top weight excluded once and M forced full.
// Everything is monotone, so repeated sweeps reach an order-independent
// fixed point.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "siegel/hasse.hpp"
#include "siegel/rootsys.hpp"

namespace siegel {

struct WeightBox {
    i64 kmin = 0, kmax = 0; // requires kmin <= kmax

    bool contains(const Character& lam) const; // all coordinates in [kmin, kmax]
    // Exactly the L-dominant lambda with kmin <= l_g <= ... <= l_1 <= kmax,
    // in lexicographic order.
    std::vector<Character> enumerate(int g) const;
};

WeightBox make_box(i64 kmin, i64 kmax);

// Thrown when a ledger file's header disagrees with the requested run
// configuration (the CLI maps it to its own exit code).
struct LedgerMismatch : std::runtime_error {
    explicit LedgerMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct VanishingLedger {
    SystemContext ctx;
    WeightBox box;
    AmpMode mode = AmpMode::HasseCone;
    std::vector<std::set<Character>> V; // d sets, nested upward

    // Membership rule: true above the cohomological dimension (e >= d); true
    // for non-L-dominant weights (zero bundle); the stored bit for L-dominant
    // weights inside the box; false otherwise (conservative unknown).
    bool member(int e, const Character& lam) const;

    // Inserts into V_e..V_{d-1} (keeps nesting); lam must be L-dominant and in
    // the box.  Returns whether anything was new.
    bool insert(int e, const Character& lam);

    std::set<Character> display_set(int e) const; // V_e \ V_{e-1} (V_0 for e=0)

    std::string serialize() const;
    void save(const std::string& path) const; // atomic: temp file + rename
    static VanishingLedger load(const std::string& path);
};

// Throws LedgerMismatch unless the ledger's header fields (g, p, box, mode)
// equal the requested run configuration.
void require_compatible(const VanishingLedger& ledger, const SystemContext& ctx,
                        const WeightBox& box, AmpMode mode);

VanishingLedger make_ledger(const SystemContext& ctx, const WeightBox& box, AmpMode mode);

// The operator above, enumerated over the box: for each candidate output
// lambda set xi = lambda - mu^{d-e}_top and test the three conditions.
// C is the membership predicate for the degree-(e+1) certificate set.
// Throws for e outside [0, d-1] or p <= d_0 (theorem hypothesis).
std::set<Character> g_apply(const ParabolicType& P0, int e,
                            const std::function<bool(const Character&)>& C,
                            const WeightBox& box, const SystemContext& ctx, AmpMode mode);

// V_e <- V_e union g_apply(P0, e, member(e+1, .), box); candidates are judged
// against the ledger state at entry (g_apply finishes before any insertion).
// Returns whether V_e grew.
bool compute(VanishingLedger& ledger, const ParabolicType& P0, int e, AmpMode mode);

// One sweep: every I_0 c= I in ascending bitmask order, e from d-1 down to 0.
bool compute_all(VanishingLedger& ledger, AmpMode mode);

// Sweeps until nothing changes; returns the number of sweeps executed
// (including the final no-change sweep).
int fixpoint(VanishingLedger& ledger, AmpMode mode);

bool vanishes(const VanishingLedger& ledger, int e, const Character& lam);

// Hand-derived g = 2 families (the Levi-parallel edge cases where the sheaf of
// differentials is a single costandard bundle); strictly stronger than what
// the general operator derives there.  Off by default; g != 2 throws.
enum class SeedFamily { E1Parallel, E2Parallel };
bool seed_special(VanishingLedger& ledger, SeedFamily family);

// Figure-data rows: one weight per line, single-space-separated integers,
// default column order l_1..l_g, reversed on request (the published g = 2
// data files lead with k_2).  Default set is V_e \ V_{e-1}; cumulative gives
// V_e.  Rows sorted lexicographically as printed.
std::string export_rows(const VanishingLedger& ledger, int e, bool cumulative,
                        bool reverse_columns);

} // namespace siegel
