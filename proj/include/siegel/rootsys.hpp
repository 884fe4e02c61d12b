#pragma once
// Root datum of Sp_{2g}, type C_g.
//
// Characters of the diagonal torus live in Z^g with basis e_1..e_g.  Positive
// roots are e_i - e_j, e_i + e_j (i < j) and 2e_i; the compact (Levi) positive
// roots are the e_i - e_j.  Coroots, as cocharacter coordinate vectors:
//   (e_i - e_j)^v = e_i - e_j,  (e_i + e_j)^v = e_i + e_j,  (2e_i)^v = e_i.
// Also provides the rho-type sums and the weight multisets of Lambda^n Sym^2
// of the standard GL_g-module, twisted coordinate-wise by negate-and-reverse.

#include <string>
#include <vector>

#include "siegel/rational.hpp"

namespace siegel {

struct Character {
    std::vector<i64> c;

    Character() = default;
    explicit Character(std::vector<i64> v) : c(std::move(v)) {}
    Character(std::initializer_list<i64> v) : c(v) {}

    int rank() const { return static_cast<int>(c.size()); }
    i64& operator[](int i) { return c[static_cast<size_t>(i)]; }
    i64 operator[](int i) const { return c[static_cast<size_t>(i)]; }

    friend Character operator+(const Character& a, const Character& b);
    friend Character operator-(const Character& a, const Character& b);
    friend Character operator*(i64 s, const Character& a);
    friend bool operator==(const Character& a, const Character& b) { return a.c == b.c; }
    friend bool operator!=(const Character& a, const Character& b) { return a.c != b.c; }
    friend bool operator<(const Character& a, const Character& b) { return a.c < b.c; } // lex

    std::string str() const; // "l1 l2 ... lg", single spaces
};

struct RatCharacter {
    std::vector<Rat> c;

    RatCharacter() = default;
    explicit RatCharacter(std::vector<Rat> v) : c(std::move(v)) {}
    static RatCharacter from(const Character& a);

    int rank() const { return static_cast<int>(c.size()); }
    Rat& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Rat& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    friend RatCharacter operator+(const RatCharacter& a, const RatCharacter& b);
    friend RatCharacter operator-(const RatCharacter& a, const RatCharacter& b);
    friend RatCharacter operator*(const Rat& s, const RatCharacter& a);
    friend bool operator==(const RatCharacter& a, const RatCharacter& b) { return a.c == b.c; }
    friend bool operator!=(const RatCharacter& a, const RatCharacter& b) { return !(a == b); }

    std::string str() const;
};

enum class RootKind { Diff, Sum, Long }; // e_i - e_j, e_i + e_j (i<j), 2e_i

struct Root {
    RootKind kind;
    int i, j; // 1-based; Long uses i == j

    Character vec(int g) const;    // coordinate vector of the root
    Character covec(int g) const;  // coordinate vector of the coroot
    std::string str() const;       // "e1-e2", "e1+e2", "2e1"

    friend bool operator==(const Root& a, const Root& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
};

std::vector<Root> positive_roots(int g);      // Diff (i<j lex), then Sum, then Long
std::vector<Root> levi_positive_roots(int g); // the Diff ones
std::vector<Root> simple_roots(int g);        // e_i - e_{i+1} (i < g), then 2e_g

// <lambda, alpha^v>
i64 pairing(const Character& lam, const Root& alpha);
Rat pairing(const RatCharacter& lam, const Root& alpha);

struct SystemContext {
    int g = 2;
    i64 p = 7;
    int d = 3; // g(g+1)/2, dimension of the ambient variety
};

// Validates g >= 2 and p an odd prime.  The sharper bound p > d_0 is a
// hypothesis of the propagation theorem and is checked where that operator
// runs, not here: divisors and cones make sense for any odd prime.
SystemContext make_context(int g, i64 p);

// Subset of {1..g-1}: index i means the simple root e_i - e_{i+1} is in I_0.
struct ParabolicType {
    int g = 2;
    unsigned mask = 0; // bit (i-1) set  <=>  i in I_0

    bool contains(int i) const { return i >= 1 && i <= g - 1 && (mask >> (i - 1)) & 1u; }
    std::vector<Root> phi_I0_positive() const;      // Diff(i,j) with i..j-1 all in I_0
    std::vector<Root> levi_complement_roots() const; // phi_L^+ \ phi_{I0}^+
    int r0() const;                                  // |phi_L^+ \ phi_{I0}^+|
    int d0(const SystemContext& ctx) const { return ctx.d + r0(); }
    std::string str() const; // "{}", "{s1}", "{s1,s2}"
};

ParabolicType parabolic_none(int g);            // I_0 = {}
ParabolicType parabolic_full(int g);            // I_0 = I
ParabolicType parabolic_from_mask(int g, unsigned mask);

// Sum over phi_L^+ \ phi_{I0}^+ (the doubled rho of the Levi quotient; kept
// integral by storing the doubled value).  I_0 = {} gives (g-1, g-3, ..., 1-g).
Character two_rho_I0(const SystemContext& ctx, const ParabolicType& P0);

// Coordinate sum of a set of roots (s_M in the cone-shift constraints).
Character s_M(int g, const std::vector<Root>& M);

bool is_L_dominant(const Character& lam);                                   // weakly decreasing
bool is_in_XstarP0(const Character& lam, const ParabolicType& P0);          // equal inside I_0 blocks
bool is_P0_relative_dominant(const Character& lam, const ParabolicType& P0); // >= 0 on I \ I_0

// GL_g dominance order: a <= b iff b - a has zero coordinate sum and all
// prefix sums >= 0 (b exceeds a by a nonnegative combination of e_i - e_{i+1}).
bool dominance_leq(const Character& a, const Character& b);

// Weight multiset of Lambda^n Sym^2 std_{GL_g}: all sums of n-element subsets
// of {e_i + e_j : 1 <= i <= j <= g} (d elements), then twisted by
// mu_i = -nu_{g+1-i} (negate and reverse).  The designated top weight is the
// twist of the lex-greatest untwisted weight, which is dominance-maximal; its
// multiplicity in the multiset must be 1 (throws otherwise — the propagation
// operator's single-exclusion rule depends on it).
struct PlethysmTable {
    int n = 0;
    std::vector<Character> weights; // twisted, with multiplicity, sorted lex
    Character top;
    bool top_multiplicity_check = false;

    std::vector<Character> deduped() const;
};

PlethysmTable plethysm_weights(const SystemContext& ctx, int n);

} // namespace siegel
