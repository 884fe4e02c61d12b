#include "siegel/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace siegel {

namespace {

void require_same_rank(int a, int b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": rank mismatch");
}

} // namespace

Character operator+(const Character& a, const Character& b) {
    require_same_rank(a.rank(), b.rank(), "character sum");
    Character r = a;
    for (int i = 0; i < r.rank(); ++i) r[i] = checked_add(r[i], b[i]);
    return r;
}

Character operator-(const Character& a, const Character& b) {
    require_same_rank(a.rank(), b.rank(), "character difference");
    Character r = a;
    for (int i = 0; i < r.rank(); ++i) r[i] = checked_add(r[i], -b[i]);
    return r;
}

Character operator*(i64 s, const Character& a) {
    Character r = a;
    for (int i = 0; i < r.rank(); ++i) r[i] = checked_mul(s, r[i]);
    return r;
}

std::string Character::str() const {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c[i]);
    }
    return out;
}

RatCharacter RatCharacter::from(const Character& a) {
    RatCharacter r;
    r.c.reserve(a.c.size());
    for (i64 v : a.c) r.c.emplace_back(v);
    return r;
}

RatCharacter operator+(const RatCharacter& a, const RatCharacter& b) {
    require_same_rank(a.rank(), b.rank(), "character sum");
    RatCharacter r = a;
    for (int i = 0; i < r.rank(); ++i) r[i] += b[i];
    return r;
}

RatCharacter operator-(const RatCharacter& a, const RatCharacter& b) {
    require_same_rank(a.rank(), b.rank(), "character difference");
    RatCharacter r = a;
    for (int i = 0; i < r.rank(); ++i) r[i] -= b[i];
    return r;
}

RatCharacter operator*(const Rat& s, const RatCharacter& a) {
    RatCharacter r = a;
    for (int i = 0; i < r.rank(); ++i) r[i] *= s;
    return r;
}

std::string RatCharacter::str() const {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += c[i].str();
    }
    return out;
}

Character Root::vec(int g) const {
    Character v(std::vector<i64>(static_cast<size_t>(g), 0));
    switch (kind) {
        case RootKind::Diff: v[i - 1] = 1; v[j - 1] = -1; break;
        case RootKind::Sum: v[i - 1] = 1; v[j - 1] += 1; break;
        case RootKind::Long: v[i - 1] = 2; break;
    }
    return v;
}

Character Root::covec(int g) const {
    Character v(std::vector<i64>(static_cast<size_t>(g), 0));
    switch (kind) {
        case RootKind::Diff: v[i - 1] = 1; v[j - 1] = -1; break;
        case RootKind::Sum: v[i - 1] = 1; v[j - 1] += 1; break;
        case RootKind::Long: v[i - 1] = 1; break;
    }
    return v;
}

std::string Root::str() const {
    switch (kind) {
        case RootKind::Diff: return "e" + std::to_string(i) + "-e" + std::to_string(j);
        case RootKind::Sum: return "e" + std::to_string(i) + "+e" + std::to_string(j);
        case RootKind::Long: return "2e" + std::to_string(i);
    }
    return "?";
}

std::vector<Root> positive_roots(int g) {
    std::vector<Root> out;
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j) out.push_back({RootKind::Diff, i, j});
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j) out.push_back({RootKind::Sum, i, j});
    for (int i = 1; i <= g; ++i) out.push_back({RootKind::Long, i, i});
    return out;
}

std::vector<Root> levi_positive_roots(int g) {
    std::vector<Root> out;
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j) out.push_back({RootKind::Diff, i, j});
    return out;
}

std::vector<Root> simple_roots(int g) {
    std::vector<Root> out;
    for (int i = 1; i < g; ++i) out.push_back({RootKind::Diff, i, i + 1});
    out.push_back({RootKind::Long, g, g});
    return out;
}

i64 pairing(const Character& lam, const Root& alpha) {
    Character cv = alpha.covec(lam.rank());
    i64 acc = 0;
    for (int i = 0; i < lam.rank(); ++i) acc = checked_add(acc, checked_mul(lam[i], cv[i]));
    return acc;
}

Rat pairing(const RatCharacter& lam, const Root& alpha) {
    Character cv = alpha.covec(lam.rank());
    Rat acc;
    for (int i = 0; i < lam.rank(); ++i) acc += Rat(cv[i]) * lam[i];
    return acc;
}

SystemContext make_context(int g, i64 p) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    for (i64 q = 3; q * q <= p; q += 2)
        if (p % q == 0) throw std::invalid_argument("p must be an odd prime");
    SystemContext ctx;
    ctx.g = g;
    ctx.p = p;
    ctx.d = g * (g + 1) / 2;
    return ctx;
}

std::vector<Root> ParabolicType::phi_I0_positive() const {
    std::vector<Root> out;
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j) {
            bool run = true;
            for (int k = i; k < j; ++k) run = run && contains(k);
            if (run) out.push_back({RootKind::Diff, i, j});
        }
    return out;
}

std::vector<Root> ParabolicType::levi_complement_roots() const {
    std::vector<Root> inside = phi_I0_positive();
    std::vector<Root> out;
    for (const Root& alpha : levi_positive_roots(g))
        if (std::find(inside.begin(), inside.end(), alpha) == inside.end()) out.push_back(alpha);
    return out;
}

int ParabolicType::r0() const { return static_cast<int>(levi_complement_roots().size()); }

std::string ParabolicType::str() const {
    std::string out = "{";
    bool first = true;
    for (int i = 1; i <= g - 1; ++i) {
        if (!contains(i)) continue;
        if (!first) out += ',';
        out += "s" + std::to_string(i);
        first = false;
    }
    return out + "}";
}

ParabolicType parabolic_none(int g) { return ParabolicType{g, 0}; }

ParabolicType parabolic_full(int g) {
    return ParabolicType{g, (1u << static_cast<unsigned>(g - 1)) - 1u};
}

ParabolicType parabolic_from_mask(int g, unsigned mask) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    if (mask >= (1u << static_cast<unsigned>(g - 1)))
        throw std::invalid_argument("parabolic mask out of range");
    return ParabolicType{g, mask};
}

Character two_rho_I0(const SystemContext& ctx, const ParabolicType& P0) {
    return s_M(ctx.g, P0.levi_complement_roots());
}

Character s_M(int g, const std::vector<Root>& M) {
    Character acc(std::vector<i64>(static_cast<size_t>(g), 0));
    for (const Root& alpha : M) acc = acc + alpha.vec(g);
    return acc;
}

bool is_L_dominant(const Character& lam) {
    for (int i = 0; i + 1 < lam.rank(); ++i)
        if (lam[i] < lam[i + 1]) return false;
    return true;
}

bool is_in_XstarP0(const Character& lam, const ParabolicType& P0) {
    for (int i = 1; i <= P0.g - 1; ++i)
        if (P0.contains(i) && lam[i - 1] != lam[i]) return false;
    return true;
}

bool is_P0_relative_dominant(const Character& lam, const ParabolicType& P0) {
    for (int i = 1; i <= P0.g - 1; ++i)
        if (!P0.contains(i) && lam[i - 1] < lam[i]) return false;
    return true;
}

bool dominance_leq(const Character& a, const Character& b) {
    require_same_rank(a.rank(), b.rank(), "dominance comparison");
    i64 prefix = 0;
    for (int i = 0; i < a.rank(); ++i) {
        prefix = checked_add(prefix, checked_add(b[i], -a[i]));
        if (prefix < 0) return false;
    }
    return prefix == 0;
}

std::vector<Character> PlethysmTable::deduped() const {
    std::vector<Character> out = weights;
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PlethysmTable plethysm_weights(const SystemContext& ctx, int n) {
    int g = ctx.g, d = ctx.d;
    if (n < 0 || n > d)
        throw std::invalid_argument("exterior power degree out of range 0.." + std::to_string(d));

    std::vector<Character> pairs; // weights of Sym^2 std: e_i + e_j, i <= j
    for (int i = 1; i <= g; ++i)
        for (int j = i; j <= g; ++j) {
            Character v(std::vector<i64>(static_cast<size_t>(g), 0));
            v[i - 1] += 1;
            v[j - 1] += 1;
            pairs.push_back(v);
        }

    auto twist = [g](const Character& nu) { // mu_i = -nu_{g+1-i}
        Character mu(std::vector<i64>(static_cast<size_t>(g), 0));
        for (int i = 0; i < g; ++i) mu[i] = -nu[g - 1 - i];
        return mu;
    };

    std::vector<Character> untwisted;
    // all n-element subsets of the d pair-weights, in lex index order
    std::function<void(int, int, Character)> rec = [&](int start, int left, Character acc) {
        if (left == 0) {
            untwisted.push_back(acc);
            return;
        }
        for (int i = start; i <= d - left; ++i) rec(i + 1, left - 1, acc + pairs[static_cast<size_t>(i)]);
    };
    rec(0, n, Character(std::vector<i64>(static_cast<size_t>(g), 0)));

    Character numax = *std::max_element(untwisted.begin(), untwisted.end());
    long mult = std::count(untwisted.begin(), untwisted.end(), numax);
    if (mult != 1)
        throw std::logic_error("designated top plethysm weight is not multiplicity-free");

    PlethysmTable tab;
    tab.n = n;
    tab.top = twist(numax);
    tab.top_multiplicity_check = true;
    tab.weights.reserve(untwisted.size());
    for (const Character& nu : untwisted) tab.weights.push_back(twist(nu));
    std::sort(tab.weights.begin(), tab.weights.end());
    for (const Character& mu : tab.weights)
        if (mu != tab.top && dominance_leq(tab.top, mu))
            throw std::logic_error("designated top plethysm weight is not dominance-maximal");
    return tab;
}

} // namespace siegel
