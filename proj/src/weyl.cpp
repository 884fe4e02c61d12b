#include "siegel/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace siegel {

namespace {

bool is_negative_vec(const Character& v) {
    for (int i = 0; i < v.rank(); ++i) {
        if (v[i] > 0) return false;
        if (v[i] < 0) return true;
    }
    return false;
}

int first_left_descent(const WeylElt& w) {
    int g = w.rank();
    int lw = length(w);
    for (int i = 1; i <= g; ++i)
        if (length(compose(simple_reflection(g, i), w)) < lw) return i;
    return 0; // identity
}

} // namespace

std::string WeylElt::signed_perm_str() const {
    std::string out = "[";
    for (size_t i = 0; i < img.size(); ++i) {
        if (i) out += ' ';
        out += img[i] < 0 ? '-' : '+';
        out += std::to_string(std::abs(img[i]));
    }
    return out + "]";
}

WeylElt identity_elt(int g) {
    WeylElt w;
    w.img.resize(static_cast<size_t>(g));
    for (int i = 1; i <= g; ++i) w.img[static_cast<size_t>(i - 1)] = i;
    return w;
}

WeylElt simple_reflection(int g, int i) {
    if (i < 1 || i > g) throw std::invalid_argument("simple reflection index out of range");
    WeylElt w = identity_elt(g);
    if (i < g) {
        w.img[static_cast<size_t>(i - 1)] = i + 1;
        w.img[static_cast<size_t>(i)] = i;
    } else {
        w.img[static_cast<size_t>(g - 1)] = -g;
    }
    return w;
}

WeylElt reflection(int g, const Root& alpha) {
    WeylElt w = identity_elt(g);
    switch (alpha.kind) {
        case RootKind::Diff:
            w.img[static_cast<size_t>(alpha.i - 1)] = alpha.j;
            w.img[static_cast<size_t>(alpha.j - 1)] = alpha.i;
            break;
        case RootKind::Sum:
            w.img[static_cast<size_t>(alpha.i - 1)] = -alpha.j;
            w.img[static_cast<size_t>(alpha.j - 1)] = -alpha.i;
            break;
        case RootKind::Long:
            w.img[static_cast<size_t>(alpha.i - 1)] = -alpha.i;
            break;
    }
    return w;
}

WeylElt compose(const WeylElt& u, const WeylElt& w) {
    int g = w.rank();
    WeylElt r;
    r.img.resize(static_cast<size_t>(g));
    for (int i = 1; i <= g; ++i) {
        int t = w.img[static_cast<size_t>(i - 1)];
        int s = t < 0 ? -1 : 1;
        r.img[static_cast<size_t>(i - 1)] = s * u.img[static_cast<size_t>(std::abs(t) - 1)];
    }
    return r;
}

WeylElt inverse(const WeylElt& w) {
    int g = w.rank();
    WeylElt r;
    r.img.resize(static_cast<size_t>(g));
    for (int i = 1; i <= g; ++i) {
        int t = w.img[static_cast<size_t>(i - 1)];
        r.img[static_cast<size_t>(std::abs(t) - 1)] = t < 0 ? -i : i;
    }
    return r;
}

Character act(const WeylElt& w, const Character& lam) {
    int g = lam.rank();
    Character out(std::vector<i64>(static_cast<size_t>(g), 0));
    for (int i = 1; i <= g; ++i) {
        int t = w.img[static_cast<size_t>(i - 1)];
        out[std::abs(t) - 1] = (t < 0 ? -1 : 1) * lam[i - 1];
    }
    return out;
}

RatCharacter act(const WeylElt& w, const RatCharacter& lam) {
    int g = lam.rank();
    RatCharacter out(std::vector<Rat>(static_cast<size_t>(g)));
    for (int i = 1; i <= g; ++i) {
        int t = w.img[static_cast<size_t>(i - 1)];
        out[std::abs(t) - 1] = t < 0 ? -lam[i - 1] : lam[i - 1];
    }
    return out;
}

int length(const WeylElt& w) {
    int g = w.rank();
    int count = 0;
    for (const Root& alpha : positive_roots(g))
        if (is_negative_vec(act(w, alpha.vec(g)))) ++count;
    return count;
}

int order_of(const WeylElt& w) {
    WeylElt e = identity_elt(w.rank());
    WeylElt acc = w;
    int r = 1;
    while (acc != e) {
        acc = compose(acc, w);
        ++r;
    }
    return r;
}

WeylElt from_letters(int g, const std::vector<int>& letters) {
    WeylElt acc = identity_elt(g);
    for (int l : letters) {
        if (l < 1 || l > g)
            throw std::invalid_argument("unknown generator s" + std::to_string(l));
        acc = compose(acc, simple_reflection(g, l));
    }
    return acc;
}

WeylElt from_word(int g, const std::string& text) {
    size_t first = text.find_first_not_of(" \t\n\r");
    if (first == std::string::npos) return identity_elt(g);

    if (text[first] == '[') { // compact signed-permutation form
        size_t close = text.find(']', first);
        if (close == std::string::npos)
            throw std::invalid_argument("unterminated signed permutation: " + text);
        std::istringstream in(text.substr(first + 1, close - first - 1));
        std::vector<int> img;
        std::string tok;
        while (in >> tok) {
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size() || v == 0) throw std::invalid_argument(tok);
                img.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad signed permutation entry: " + tok);
            }
        }
        if (static_cast<int>(img.size()) != g)
            throw std::invalid_argument("signed permutation needs " + std::to_string(g) +
                                        " entries: " + text);
        std::vector<bool> seen(static_cast<size_t>(g), false);
        for (int v : img) {
            int a = std::abs(v);
            if (a < 1 || a > g || seen[static_cast<size_t>(a - 1)])
                throw std::invalid_argument("not a signed permutation: " + text);
            seen[static_cast<size_t>(a - 1)] = true;
        }
        WeylElt w;
        w.img = img;
        return w;
    }

    std::istringstream in(text);
    std::string tok;
    std::vector<int> letters;
    while (in >> tok) {
        bool ok = tok.size() >= 2 && tok[0] == 's';
        int v = 0;
        if (ok) {
            for (size_t i = 1; i < tok.size(); ++i) {
                if (tok[i] < '0' || tok[i] > '9') { ok = false; break; }
                v = v * 10 + (tok[i] - '0');
            }
        }
        if (!ok || v < 1 || v > g)
            throw std::invalid_argument("unknown generator token \"" + tok + "\"");
        letters.push_back(v);
    }
    return from_letters(g, letters);
}

std::vector<int> reduced_word(const WeylElt& w) {
    std::vector<int> out;
    WeylElt cur = w;
    WeylElt e = identity_elt(w.rank());
    while (cur != e) {
        int i = first_left_descent(cur);
        out.push_back(i);
        cur = compose(simple_reflection(w.rank(), i), cur);
    }
    return out;
}

std::string word_str(const std::vector<int>& letters) {
    std::string out;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ' ';
        out += "s" + std::to_string(letters[i]);
    }
    return out;
}

std::string StratumLabel::str() const {
    std::vector<int> rw = reduced_word(elt);
    return rw.empty() ? "e" : word_str(rw);
}

bool bruhat_leq(const WeylElt& u, const WeylElt& w) {
    if (u == w) return true;
    int lu = length(u), lw = length(w);
    if (lu >= lw) return false;
    int g = w.rank();
    int i = first_left_descent(w); // w != e here
    WeylElt si = simple_reflection(g, i);
    WeylElt sw = compose(si, w);
    WeylElt su = compose(si, u);
    if (length(su) < lu) return bruhat_leq(su, sw);
    return bruhat_leq(u, sw);
}

std::vector<std::pair<Root, StratumLabel>> lower_neighbors(const WeylElt& w) {
    int g = w.rank();
    int lw = length(w);
    std::vector<std::pair<Root, StratumLabel>> out;
    for (const Root& alpha : positive_roots(g)) {
        WeylElt ws = compose(w, reflection(g, alpha));
        if (length(ws) == lw - 1) out.emplace_back(alpha, StratumLabel{ws});
    }
    return out;
}

std::vector<WeylElt> enumerate_weyl(int g) {
    std::vector<int> perm(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) perm[static_cast<size_t>(i)] = i + 1;

    struct Keyed {
        int len;
        std::vector<int> word;
        WeylElt w;
    };
    std::vector<Keyed> all;
    do {
        for (unsigned mask = 0; mask < (1u << static_cast<unsigned>(g)); ++mask) {
            WeylElt w;
            w.img.resize(static_cast<size_t>(g));
            for (int i = 0; i < g; ++i) {
                int v = perm[static_cast<size_t>(i)];
                w.img[static_cast<size_t>(i)] = ((mask >> static_cast<unsigned>(i)) & 1u) ? -v : v;
            }
            all.push_back({length(w), reduced_word(w), w});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(all.begin(), all.end(), [](const Keyed& a, const Keyed& b) {
        if (a.len != b.len) return a.len < b.len;
        return a.word < b.word;
    });
    std::vector<WeylElt> out;
    out.reserve(all.size());
    for (const Keyed& k : all) out.push_back(k.w);
    return out;
}

bool is_min_coset_rep(const WeylElt& w, const ParabolicType& P0) {
    int g = w.rank();
    WeylElt winv = inverse(w);
    for (int i = 1; i <= g - 1; ++i) {
        if (!P0.contains(i)) continue;
        Root alpha{RootKind::Diff, i, i + 1};
        if (is_negative_vec(act(winv, alpha.vec(g)))) return false;
    }
    return true;
}

std::vector<WeylElt> min_coset_reps(const ParabolicType& P0) {
    std::vector<WeylElt> out;
    for (const WeylElt& w : enumerate_weyl(P0.g))
        if (is_min_coset_rep(w, P0)) out.push_back(w);
    return out;
}

WeylElt longest_element(int g) {
    WeylElt w;
    w.img.resize(static_cast<size_t>(g));
    for (int i = 1; i <= g; ++i) w.img[static_cast<size_t>(i - 1)] = -i;
    return w;
}

WeylElt longest_of_parabolic(const ParabolicType& P0) {
    int g = P0.g;
    WeylElt w = identity_elt(g);
    int a = 1;
    while (a <= g) {
        int b = a;
        while (b < g && P0.contains(b)) ++b; // block a..b of coordinates
        for (int k = a; k <= b; ++k) w.img[static_cast<size_t>(k - 1)] = a + b - k;
        a = b + 1;
    }
    return w;
}

WeylElt z_element(int g) {
    WeylElt w;
    w.img.resize(static_cast<size_t>(g));
    for (int i = 1; i <= g; ++i) w.img[static_cast<size_t>(i - 1)] = -(g + 1 - i);
    return w;
}

} // namespace siegel
