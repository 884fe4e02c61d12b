#include "siegel/vanishing.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "siegel/hasse.hpp"

namespace siegel {

bool WeightBox::contains(const Character& lam) const {
    for (int i = 0; i < lam.rank(); ++i)
        if (lam[i] < kmin || lam[i] > kmax) return false;
    return true;
}

std::vector<Character> WeightBox::enumerate(int g) const {
    // L-dominant points only, ascending lex
    std::vector<Character> out;
    Character cur(std::vector<i64>(static_cast<size_t>(g), 0));
    // recursive descent: coordinate i ranges in [kmin, min(kmax, cur[i-1])]
    std::function<void(int)> rec = [&](int i) {
        if (i == g) {
            out.push_back(cur);
            return;
        }
        i64 hi = i == 0 ? kmax : std::min(kmax, cur[i - 1]);
        for (i64 v = kmin; v <= hi; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

WeightBox make_box(i64 kmin, i64 kmax) {
    if (kmin > kmax) throw std::invalid_argument("empty weight box (kmin > kmax)");
    return WeightBox{kmin, kmax};
}

bool VanishingLedger::member(int e, const Character& lam) const {
    if (!is_L_dominant(lam)) return true; // zero bundle
    if (e >= ctx.d) return true;          // above the cohomological dimension
    if (e < 0) return false;
    if (!box.contains(lam)) return false; // conservative outside the box
    return V[static_cast<size_t>(e)].count(lam) != 0;
}

bool VanishingLedger::insert(int e, const Character& lam) {
    if (e < 0 || e >= ctx.d) throw std::invalid_argument("ledger degree out of range");
    if (!is_L_dominant(lam))
        throw std::invalid_argument("ledger weights must be L-dominant: " + lam.str());
    if (!box.contains(lam))
        throw std::invalid_argument("ledger weight outside the box: " + lam.str());
    bool changed = false;
    for (int f = e; f < ctx.d; ++f)
        changed = V[static_cast<size_t>(f)].insert(lam).second || changed;
    return changed;
}

std::set<Character> VanishingLedger::display_set(int e) const {
    if (e < 0 || e >= ctx.d) throw std::invalid_argument("ledger degree out of range");
    if (e == 0) return V[0];
    std::set<Character> out;
    for (const Character& lam : V[static_cast<size_t>(e)])
        if (!V[static_cast<size_t>(e - 1)].count(lam)) out.insert(lam);
    return out;
}

std::string VanishingLedger::serialize() const {
    std::ostringstream out;
    out << "hasse-vanish-ledger v1\n";
    out << "g=" << ctx.g << " p=" << ctx.p << " kmin=" << box.kmin << " kmax=" << box.kmax
        << " mode=" << (mode == AmpMode::HasseCone ? "hasse" : "orbital") << "\n";
    for (int e = 0; e < ctx.d; ++e) {
        out << "[degree " << e << "]\n";
        for (const Character& lam : V[static_cast<size_t>(e)]) out << lam.str() << "\n";
    }
    return out.str();
}

void VanishingLedger::save(const std::string& path) const {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write ledger file: " + tmp);
        out << serialize();
        if (!out.good()) throw std::runtime_error("short write on ledger file: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move ledger into place: " + path);
}

VanishingLedger VanishingLedger::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open ledger file: " + path);

    auto corrupt = [&path](const std::string& why) {
        return std::runtime_error("corrupt ledger " + path + ": " + why);
    };

    std::string line;
    if (!std::getline(in, line) || line != "hasse-vanish-ledger v1")
        throw corrupt("bad version line");
    if (!std::getline(in, line)) throw corrupt("missing header line");

    int g = 0;
    i64 p = 0, kmin = 0, kmax = 0;
    std::string modestr;
    {
        std::istringstream hs(line);
        std::string tok;
        bool ok = true;
        while (hs >> tok) {
            size_t eq = tok.find('=');
            if (eq == std::string::npos) { ok = false; break; }
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            try {
                if (key == "g") g = std::stoi(val);
                else if (key == "p") p = std::stoll(val);
                else if (key == "kmin") kmin = std::stoll(val);
                else if (key == "kmax") kmax = std::stoll(val);
                else if (key == "mode") modestr = val;
                else { ok = false; break; }
            } catch (const std::exception&) {
                ok = false;
                break;
            }
        }
        if (!ok) throw corrupt("bad header field");
    }
    if (modestr != "hasse" && modestr != "orbital") throw corrupt("unknown mode");

    VanishingLedger led;
    try {
        led.ctx = make_context(g, p);
        led.box = make_box(kmin, kmax);
    } catch (const std::exception& ex) {
        throw corrupt(ex.what());
    }
    led.mode = modestr == "hasse" ? AmpMode::HasseCone : AmpMode::OrbitalSufficient;
    led.V.assign(static_cast<size_t>(led.ctx.d), {});

    int cur = -1; // current degree section
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '[') {
            int e = -1;
            if (std::sscanf(line.c_str(), "[degree %d]", &e) != 1 || e != cur + 1 ||
                e >= led.ctx.d)
                throw corrupt("unexpected section header \"" + line + "\"");
            cur = e;
            continue;
        }
        if (cur < 0) throw corrupt("weight line before any section");
        std::istringstream ls(line);
        std::vector<i64> v;
        i64 x;
        while (ls >> x) v.push_back(x);
        if (!ls.eof()) throw corrupt("bad weight line \"" + line + "\"");
        if (static_cast<int>(v.size()) != led.ctx.g)
            throw corrupt("weight arity mismatch in \"" + line + "\"");
        Character lam(v);
        if (!is_L_dominant(lam)) throw corrupt("non-dominant weight " + lam.str());
        if (!led.box.contains(lam)) throw corrupt("weight outside the box: " + lam.str());
        led.V[static_cast<size_t>(cur)].insert(lam);
    }
    if (cur != led.ctx.d - 1) throw corrupt("missing degree sections");
    for (int e = 0; e + 1 < led.ctx.d; ++e)
        for (const Character& lam : led.V[static_cast<size_t>(e)])
            if (!led.V[static_cast<size_t>(e) + 1].count(lam))
                throw corrupt("nesting violated at " + lam.str());
    return led;
}

void require_compatible(const VanishingLedger& ledger, const SystemContext& ctx,
                        const WeightBox& box, AmpMode mode) {
    std::ostringstream why;
    if (ledger.ctx.g != ctx.g) why << "g " << ledger.ctx.g << " vs " << ctx.g;
    else if (ledger.ctx.p != ctx.p) why << "p " << ledger.ctx.p << " vs " << ctx.p;
    else if (ledger.box.kmin != box.kmin || ledger.box.kmax != box.kmax)
        why << "box [" << ledger.box.kmin << "," << ledger.box.kmax << "] vs [" << box.kmin
            << "," << box.kmax << "]";
    else if (ledger.mode != mode) why << "amplitude mode differs";
    else return;
    throw LedgerMismatch("ledger header does not match the run configuration: " + why.str());
}

VanishingLedger make_ledger(const SystemContext& ctx, const WeightBox& box, AmpMode mode) {
    VanishingLedger led;
    led.ctx = ctx;
    led.box = box;
    led.mode = mode;
    led.V.assign(static_cast<size_t>(ctx.d), {});
    return led;
}

namespace {

// All size-r subsets of the given roots, as coordinate sums s_M.
std::vector<Character> subset_sums(const std::vector<Root>& roots, int r, int g) {
    std::vector<Character> out;
    int n = static_cast<int>(roots.size());
    if (r < 0 || r > n) return out;
    std::vector<int> idx(static_cast<size_t>(r));
    std::function<void(int, int, Character)> rec = [&](int start, int left, Character acc) {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        for (int i = start; i <= n - left; ++i)
            rec(i + 1, left - 1, acc + roots[static_cast<size_t>(i)].vec(g));
    };
    rec(0, r, Character(std::vector<i64>(static_cast<size_t>(g), 0)));
    return out;
}

} // namespace

std::set<Character> g_apply(const ParabolicType& P0, int e,
                            const std::function<bool(const Character&)>& C,
                            const WeightBox& box, const SystemContext& ctx, AmpMode mode) {
    if (e < 0 || e >= ctx.d)
        throw std::invalid_argument("propagation degree must lie in 0.." +
                                    std::to_string(ctx.d - 1));
    if (ctx.p <= P0.d0(ctx))
        throw std::domain_error("operator needs p > d_0 = " + std::to_string(P0.d0(ctx)) +
                                " for parabolic type " + P0.str());

    const Character two_rho = two_rho_I0(ctx, P0);
    const Character top = plethysm_weights(ctx, ctx.d - e).top;
    const int r0 = P0.r0();
    const std::vector<Root> complement = P0.levi_complement_roots();

    // The degree-(e+1) side conditions do not depend on the candidate: collect
    // the deduplicated shift characters mu^{d-e+k}_j + 2rho_{I0} - s_M once.
    std::set<Character> shifts;
    for (int k = 0; k <= e; ++k) {
        if (r0 - k < 0) break;
        PlethysmTable tab = plethysm_weights(ctx, ctx.d - e + k);
        std::vector<Character> sums = subset_sums(complement, r0 - k, ctx.g);
        for (const Character& mu : tab.deduped()) {
            if (k == 0 && mu == tab.top) continue; // the designated copy is the output itself
            for (const Character& sm : sums) shifts.insert(mu + two_rho - sm);
        }
    }

    // Ample-cone test, built once per call.
    std::optional<HasseCone> cone;
    if (mode == AmpMode::HasseCone) cone.emplace(ctx, P0);
    auto ample = [&](const Character& x) {
        if (!is_in_XstarP0(x, P0)) return false;
        if (mode == AmpMode::HasseCone) return cone->contains(x);
        return orbitally_p_close(x, ctx) && z0_ample(x, P0);
    };

    std::set<Character> out;
    for (const Character& lam : box.enumerate(ctx.g)) {
        Character xi = lam - top;
        if (!is_in_XstarP0(xi, P0) || !is_P0_relative_dominant(xi, P0)) continue;
        if (!ample(xi + two_rho)) continue;
        bool ok = true;
        for (const Character& sh : shifts)
            if (!C(xi + sh)) {
                ok = false;
                break;
            }
        if (ok) out.insert(lam);
    }
    return out;
}

bool compute(VanishingLedger& ledger, const ParabolicType& P0, int e, AmpMode mode) {
    std::set<Character> got =
        g_apply(P0, e, [&ledger, e](const Character& x) { return ledger.member(e + 1, x); },
                ledger.box, ledger.ctx, mode);
    bool changed = false;
    for (const Character& lam : got) changed = ledger.insert(e, lam) || changed;
    return changed;
}

bool compute_all(VanishingLedger& ledger, AmpMode mode) {
    bool changed = false;
    unsigned nmasks = 1u << static_cast<unsigned>(ledger.ctx.g - 1);
    for (unsigned mask = 0; mask < nmasks; ++mask) {
        ParabolicType P0 = parabolic_from_mask(ledger.ctx.g, mask);
        for (int e = ledger.ctx.d - 1; e >= 0; --e)
            changed = compute(ledger, P0, e, mode) || changed;
    }
    return changed;
}

int fixpoint(VanishingLedger& ledger, AmpMode mode) {
    int sweeps = 0;
    for (;;) {
        ++sweeps;
        if (!compute_all(ledger, mode)) return sweeps;
    }
}

bool vanishes(const VanishingLedger& ledger, int e, const Character& lam) {
    return ledger.member(e, lam);
}

bool seed_special(VanishingLedger& ledger, SeedFamily family) {
    if (ledger.ctx.g != 2)
        throw std::invalid_argument("the hand-derived parallel families exist only for g = 2");
    i64 s1 = family == SeedFamily::E1Parallel ? -1 : 0;
    i64 s2 = family == SeedFamily::E1Parallel ? -3 : -2;
    int e = family == SeedFamily::E1Parallel ? 1 : 2;
    bool changed = false;
    for (i64 k = -1;; --k) {
        Character lam{k + s1, k + s2};
        if (lam[0] < ledger.box.kmin) break;
        if (ledger.box.contains(lam)) changed = ledger.insert(e, lam) || changed;
    }
    return changed;
}

std::string export_rows(const VanishingLedger& ledger, int e, bool cumulative,
                        bool reverse_columns) {
    if (e < 0 || e >= ledger.ctx.d) throw std::invalid_argument("ledger degree out of range");
    std::set<Character> rows =
        cumulative ? ledger.V[static_cast<size_t>(e)] : ledger.display_set(e);
    std::vector<std::vector<i64>> printed;
    printed.reserve(rows.size());
    for (const Character& lam : rows) {
        std::vector<i64> v = lam.c;
        if (reverse_columns) std::reverse(v.begin(), v.end());
        printed.push_back(std::move(v));
    }
    std::sort(printed.begin(), printed.end());
    std::string out;
    for (const auto& v : printed) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(v[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace siegel
