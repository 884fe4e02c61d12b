#include "siegel/hasse.hpp"

#include <algorithm>
#include <cstdlib>

namespace siegel {

namespace {

// Dot product of a rational character with an integer coordinate vector.
Rat dot(const RatCharacter& a, const Character& b) {
    Rat acc;
    for (int i = 0; i < a.rank(); ++i) acc += Rat(b[i]) * a[i];
    return acc;
}

i128 dot128(const Character& a, const Character& b) {
    i128 acc = 0;
    for (int i = 0; i < a.rank(); ++i) acc += i128(a[i]) * b[i];
    return acc;
}

WeylElt frobenius_twist(const WeylElt& w) {
    return compose(z_element(w.rank()), inverse(w));
}

bool word_desc(const StratumLabel& a, const StratumLabel& b) {
    return reduced_word(a.elt) > reduced_word(b.elt);
}

} // namespace

Rat Divisor::coef_at(const WeylElt& u) const {
    for (const DivisorTerm& t : terms)
        if (t.label.elt == u) return t.coef;
    return Rat(0);
}

std::string Divisor::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        const Rat& c = terms[i].coef;
        if (i == 0) {
            out += c.str();
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            out += (c.sign() < 0 ? -c : c).str();
        }
        out += " [" + terms[i].label.str() + "]";
    }
    return out;
}

bool operator==(const Divisor& a, const Divisor& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
        if (!(a.terms[i].label == b.terms[i].label) || a.terms[i].coef != b.terms[i].coef)
            return false;
    return true;
}

RatCharacter chi_of(const Character& lam, const WeylElt& w, const SystemContext& ctx) {
    int g = ctx.g;
    WeylElt f = frobenius_twist(w);
    int r = order_of(f);
    std::vector<i128> num(static_cast<size_t>(g), 0);
    Character cur = lam;
    i128 ppow = 1;
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k < g; ++k) num[static_cast<size_t>(k)] += ppow * cur[k];
        cur = act(f, cur);
        ppow *= ctx.p;
    }
    i128 den = ppow - 1; // p^r - 1
    RatCharacter chi(std::vector<Rat>(static_cast<size_t>(g)));
    for (int k = 0; k < g; ++k) chi[k] = Rat::from128(-num[static_cast<size_t>(k)], den);
    return chi;
}

RatCharacter dw_of(const RatCharacter& chi, const WeylElt& w, const SystemContext& ctx) {
    return chi - Rat(ctx.p) * act(frobenius_twist(w), chi);
}

Divisor divisor(const Character& lam, const WeylElt& w, const SystemContext& ctx) {
    RatCharacter chi = chi_of(lam, w, ctx);
    Divisor d;
    for (const auto& [alpha, label] : lower_neighbors(w)) {
        Rat coef = -dot(chi, act(w, alpha.covec(ctx.g)));
        if (!coef.is_zero()) d.terms.push_back({label, coef});
    }
    std::sort(d.terms.begin(), d.terms.end(),
              [](const DivisorTerm& a, const DivisorTerm& b) { return word_desc(a.label, b.label); });
    return d;
}

bool hasse_criterion(const Character& lam, const WeylElt& w, const SystemContext& ctx) {
    WeylElt f = frobenius_twist(w);
    int r = order_of(f);
    for (const auto& [alpha, label] : lower_neighbors(w)) {
        (void)label;
        Character v = act(w, alpha.covec(ctx.g));
        i128 sum = 0, ppow = 1;
        Character cur = lam;
        for (int i = 0; i < r; ++i) {
            sum += ppow * dot128(cur, v);
            cur = act(f, cur);
            ppow *= ctx.p;
        }
        if (sum <= 0) return false;
    }
    return true;
}

HasseCone::HasseCone(const SystemContext& ctx, const ParabolicType& P0) : P0_(P0) {
    for (const WeylElt& w : min_coset_reps(P0)) {
        WeylElt f = frobenius_twist(w);
        WeylElt finv = inverse(f);
        int r = order_of(f);
        for (const auto& [alpha, label] : lower_neighbors(w)) {
            (void)label;
            // fold sum_i p^i <f^i lam, w alpha^v> into <lam, m> using that
            // signed permutations preserve the dot product
            Character cur = act(w, alpha.covec(ctx.g));
            std::vector<i128> m(static_cast<size_t>(ctx.g), 0);
            i128 ppow = 1;
            for (int i = 0; i < r; ++i) {
                for (int k = 0; k < ctx.g; ++k) m[static_cast<size_t>(k)] += ppow * cur[k];
                cur = act(finv, cur);
                ppow *= ctx.p;
            }
            Functional fn;
            fn.w = w;
            fn.alpha = alpha;
            fn.m.resize(static_cast<size_t>(ctx.g));
            for (int k = 0; k < ctx.g; ++k)
                fn.m[static_cast<size_t>(k)] = checked_cast(m[static_cast<size_t>(k)],
                                                            "Hasse cone functional");
            funcs_.push_back(std::move(fn));
        }
    }
}

bool HasseCone::contains(const Character& lam) const {
    if (!is_in_XstarP0(lam, P0_)) return false;
    for (const Functional& fn : funcs_) {
        i128 acc = 0;
        for (int k = 0; k < lam.rank(); ++k) acc += i128(lam[k]) * fn.m[static_cast<size_t>(k)];
        if (acc <= 0) return false;
    }
    return true;
}

std::optional<std::pair<WeylElt, Root>> HasseCone::first_failure(const Character& lam) const {
    if (!is_in_XstarP0(lam, P0_)) return std::nullopt;
    for (const Functional& fn : funcs_) {
        i128 acc = 0;
        for (int k = 0; k < lam.rank(); ++k) acc += i128(lam[k]) * fn.m[static_cast<size_t>(k)];
        if (acc <= 0) return std::make_pair(fn.w, fn.alpha);
    }
    return std::nullopt;
}

bool in_C_Ha(const Character& lam, const ParabolicType& P0, const SystemContext& ctx) {
    return HasseCone(ctx, P0).contains(lam);
}

namespace {

// W-orbit maxima of |<lam, v>| by coroot class: +-e_i +- e_j for the short and
// middle roots, +-e_i for the long ones.
i64 orbit_max_pair(const Character& lam) {
    i64 best = 0, top = 0, second = 0;
    for (int i = 0; i < lam.rank(); ++i) {
        i64 a = std::llabs(lam[i]);
        if (a >= top) { second = top; top = a; }
        else if (a > second) second = a;
    }
    best = checked_add(top, second);
    return best;
}

i64 orbit_max_single(const Character& lam) {
    i64 best = 0;
    for (int i = 0; i < lam.rank(); ++i) best = std::max(best, std::llabs(lam[i]));
    return best;
}

} // namespace

bool orbitally_p_close(const Character& lam, const SystemContext& ctx) {
    return !first_orbital_failure(lam, ctx).has_value();
}

std::optional<Root> first_orbital_failure(const Character& lam, const SystemContext& ctx) {
    i64 pair_max = orbit_max_pair(lam), single_max = orbit_max_single(lam);
    for (const Root& alpha : positive_roots(ctx.g)) {
        i64 val = std::llabs(pairing(lam, alpha));
        if (val == 0) continue;
        i64 orbit = alpha.kind == RootKind::Long ? single_max : pair_max;
        if (orbit > checked_mul(ctx.p - 1, val)) return alpha;
    }
    return std::nullopt;
}

bool z0_ample(const Character& lam, const ParabolicType& P0) {
    return !first_z0_failure(lam, P0).has_value();
}

std::optional<Root> first_z0_failure(const Character& lam, const ParabolicType& P0) {
    int g = lam.rank();
    for (int i = 1; i <= g - 1; ++i) {
        if (P0.contains(i)) continue;
        Root alpha{RootKind::Diff, i, i + 1};
        if (pairing(lam, alpha) <= 0) return alpha;
    }
    for (const Root& alpha : positive_roots(g))
        if (alpha.kind != RootKind::Diff && pairing(lam, alpha) >= 0) return alpha;
    return std::nullopt;
}

bool in_C_amp_proxy(const Character& lam, const ParabolicType& P0, const SystemContext& ctx,
                    AmpMode mode) {
    if (!is_in_XstarP0(lam, P0)) return false;
    if (mode == AmpMode::HasseCone) return HasseCone(ctx, P0).contains(lam);
    return orbitally_p_close(lam, ctx) && z0_ample(lam, P0);
}

} // namespace siegel
