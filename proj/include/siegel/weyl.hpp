#pragma once
// The Weyl group W(C_g) as signed permutations (order 2^g g!).
//
// An element stores images: entry i (1-based) is a signed index, meaning
// w(e_i) = sign(entry) * e_{|entry|}.  Words are products of the simple
// reflections s_1..s_{g-1} (adjacent transpositions) and s_g (sign flip on
// e_g), applied to vectors right-to-left: "s1 s2" acts as s1(s2(v)).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "siegel/rootsys.hpp"

namespace siegel {

struct WeylElt {
    std::vector<int> img; // img[i-1] = signed target of e_i

    int rank() const { return static_cast<int>(img.size()); }
    friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.img == b.img; }
    friend bool operator!=(const WeylElt& a, const WeylElt& b) { return a.img != b.img; }
    friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.img < b.img; }

    std::string signed_perm_str() const; // "[+2 -1 +3]"
};

WeylElt identity_elt(int g);
WeylElt simple_reflection(int g, int i);     // i in 1..g
WeylElt reflection(int g, const Root& alpha); // s_alpha

WeylElt compose(const WeylElt& u, const WeylElt& w); // u after w: (uw)(v) = u(w(v))
WeylElt inverse(const WeylElt& w);

Character act(const WeylElt& w, const Character& lam);
RatCharacter act(const WeylElt& w, const RatCharacter& lam);

int length(const WeylElt& w);   // #{alpha in phi+ : w(alpha) negative}
int order_of(const WeylElt& w); // least r >= 1 with w^r = identity

// Word I/O.  Text form: whitespace-separated tokens "s1".."sg"; the compact
// signed-permutation form "[+2 -1 +3]" is also accepted.  Empty text is the
// identity.  Unknown tokens throw std::invalid_argument naming the token.
WeylElt from_word(int g, const std::string& text);
WeylElt from_letters(int g, const std::vector<int>& letters);
std::vector<int> reduced_word(const WeylElt& w); // lex-smallest reduced word
std::string word_str(const std::vector<int>& letters); // "s1 s2 s3", "" for empty

// Canonical display of a stratum: lex-smallest reduced word, identity as "e".
// Equality is equality of group elements, never of words.
struct StratumLabel {
    WeylElt elt;

    std::string str() const; // "s2 s3", "e"
    friend bool operator==(const StratumLabel& a, const StratumLabel& b) { return a.elt == b.elt; }
};

bool bruhat_leq(const WeylElt& u, const WeylElt& w);

// E_w: all alpha in phi+ with l(w s_alpha) = l(w) - 1, paired with w s_alpha.
// Listed in the canonical positive-root order.
std::vector<std::pair<Root, StratumLabel>> lower_neighbors(const WeylElt& w);

// All of W, sorted by (length, lex-smallest reduced word).
std::vector<WeylElt> enumerate_weyl(int g);

// Minimal-length representatives of the cosets W_{I0} \ W: the w with
// w^{-1}(alpha) positive for every alpha in I_0; sorted by (length, word).
std::vector<WeylElt> min_coset_reps(const ParabolicType& P0);
bool is_min_coset_rep(const WeylElt& w, const ParabolicType& P0);

WeylElt longest_element(int g);                       // w_0 = -identity
WeylElt longest_of_parabolic(const ParabolicType& P0); // block reversal, no signs
// z = w_0 w_{0,I} for the full Levi type I: acts by (m_1..m_g) -> (-m_g..-m_1).
WeylElt z_element(int g);

} // namespace siegel
