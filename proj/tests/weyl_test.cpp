#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "siegel/weyl.hpp"

using namespace siegel;

TEST_CASE("word parsing, composition order and the compact form") {
    // "s1 s2" acts right-to-left: s1(s2(v))
    WeylElt w = from_word(2, "s1 s2");
    CHECK(act(w, Character{10, 20}) == act(simple_reflection(2, 1),
                                           act(simple_reflection(2, 2), Character{10, 20})));
    CHECK(from_word(2, "") == identity_elt(2));
    CHECK(from_word(2, "s1 s1") == identity_elt(2));
    CHECK_THROWS_WITH_AS(from_word(2, "s1 s9"), doctest::Contains("s9"), std::invalid_argument);
    CHECK_THROWS_AS(from_word(2, "t1"), std::invalid_argument);

    // signed permutation form round trip
    WeylElt v = from_word(3, "[+2 -1 +3]");
    CHECK(v.img == std::vector<int>{2, -1, 3});
    CHECK(v.signed_perm_str() == "[+2 -1 +3]");
    CHECK(from_word(3, v.signed_perm_str()) == v);
    CHECK_THROWS_AS(from_word(3, "[+1 +1 -2]"), std::invalid_argument);
}

TEST_CASE("simple reflections act as transposition / sign flip") {
    CHECK(act(simple_reflection(3, 1), Character{7, 8, 9}) == Character{8, 7, 9});
    CHECK(act(simple_reflection(3, 3), Character{7, 8, 9}) == Character{7, 8, -9});
    // reflection in e1+e2 swaps with both signs
    CHECK(act(reflection(2, Root{RootKind::Sum, 1, 2}), Character{7, 8}) == Character{-8, -7});
}

TEST_CASE("group laws and action composition") {
    std::mt19937 rng(7);
    for (int g = 2; g <= 4; ++g) {
        auto t = oracle::bfs_weyl(g);
        std::vector<WeylElt> all;
        for (auto& [w, d] : t.dist) all.push_back(w);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        Character lam;
        for (int i = 0; i < g; ++i) lam.c.push_back(i64(i) * 3 - 5);
        for (int trial = 0; trial < 60; ++trial) {
            const WeylElt &u = all[pick(rng)], &w = all[pick(rng)];
            CHECK(act(u, act(w, lam)) == act(compose(u, w), lam));
            CHECK(compose(u, inverse(u)) == identity_elt(g));
            CHECK(compose(inverse(u), u) == identity_elt(g));
        }
    }
}

TEST_CASE("length: simple cases and the longest element") {
    CHECK(length(identity_elt(2)) == 0);
    CHECK(length(simple_reflection(2, 1)) == 1);
    CHECK(length(from_word(2, "s2 s1 s2")) == 3);
    CHECK(from_word(2, "s2 s1 s2 s1") == longest_element(2));
    CHECK(length(longest_element(2)) == 4);
    for (int g = 2; g <= 4; ++g) {
        CHECK(length(longest_element(g)) == g * g);
        CHECK(compose(longest_element(g), longest_element(g)) == identity_elt(g));
    }
}

TEST_CASE("length equals Cayley-graph distance (brute force, g <= 3)") {
    for (int g = 2; g <= 3; ++g) {
        auto t = oracle::bfs_weyl(g);
        CHECK(t.dist.size() == size_t(1 << g) * (g == 2 ? 2 : 6));
        for (auto& [w, dist] : t.dist) CHECK(length(w) == dist);
    }
}

TEST_CASE("reduced words are reduced and lexicographically smallest") {
    for (int g = 2; g <= 3; ++g) {
        auto t = oracle::bfs_weyl(g);
        for (auto& [w, dist] : t.dist) {
            auto rw = reduced_word(w);
            CHECK(int(rw.size()) == dist);
            CHECK(from_letters(g, rw) == w);
            // not lex-greater than the BFS word of the same element
            CHECK(rw <= t.word.at(w));
        }
    }
    CHECK(reduced_word(longest_element(2)) == std::vector<int>{1, 2, 1, 2});
    CHECK(word_str(reduced_word(from_word(3, "s3 s1"))) == "s1 s3");
    CHECK(StratumLabel{identity_elt(2)}.str() == "e");
    CHECK(StratumLabel{from_word(3, "s2 s3")}.str() == "s2 s3");
}

TEST_CASE("descent property: right multiplication moves length by one") {
    for (int g = 2; g <= 3; ++g) {
        auto t = oracle::bfs_weyl(g);
        for (auto& [w, dist] : t.dist)
            for (int i = 1; i <= g; ++i) {
                int dl = length(compose(w, simple_reflection(g, i))) - dist;
                CHECK((dl == 1 || dl == -1));
            }
    }
}

TEST_CASE("structural elements: w_0, block reversal, z") {
    CHECK(longest_element(3).img == std::vector<int>{-1, -2, -3});
    CHECK(longest_of_parabolic(parabolic_full(3)).img == std::vector<int>{3, 2, 1});
    CHECK(longest_of_parabolic(parabolic_none(3)) == identity_elt(3));
    CHECK(longest_of_parabolic(parabolic_from_mask(3, 0b01)).img == std::vector<int>{2, 1, 3});

    // longest_of_parabolic really is the longest element of W_{I0}
    for (int g = 2; g <= 3; ++g)
        for (unsigned m = 0; m < (1u << (g - 1)); ++m) {
            ParabolicType P0 = parabolic_from_mask(g, m);
            auto sub = oracle::parabolic_subgroup(P0);
            const WeylElt* best = nullptr;
            for (const WeylElt& u : sub)
                if (!best || length(u) > length(*best)) best = &u;
            CHECK(longest_of_parabolic(P0) == *best);
        }

    for (int g = 2; g <= 4; ++g) {
        Character lam;
        for (int i = 0; i < g; ++i) lam.c.push_back(3 * i + 1);
        Character zlam = act(z_element(g), lam);
        for (int i = 0; i < g; ++i) CHECK(zlam[i] == -lam[g - 1 - i]);
    }
    // g=2: z s1 is -identity on characters; orders of z s1, z s2
    WeylElt zs1 = compose(z_element(2), simple_reflection(2, 1));
    CHECK(act(zs1, Character{4, -9}) == Character{-4, 9});
    CHECK(order_of(zs1) == 2);
    CHECK(order_of(compose(z_element(2), simple_reflection(2, 2))) == 4);
    CHECK(order_of(identity_elt(3)) == 1);
}

TEST_CASE("Bruhat order: examples and subword oracle (g <= 3)") {
    CHECK(bruhat_leq(from_word(2, "s2"), from_word(2, "s2 s1")));
    for (int g = 2; g <= 3; ++g) {
        auto t = oracle::bfs_weyl(g);
        std::vector<WeylElt> all;
        for (auto& [w, d] : t.dist) all.push_back(w);
        for (const WeylElt& u : all) {
            CHECK(bruhat_leq(identity_elt(g), u));
            for (const WeylElt& w : all) {
                bool mine = bruhat_leq(u, w);
                CHECK(mine == oracle::bruhat_leq_subword(u, w, t));
                if (mine && t.dist.at(u) == t.dist.at(w)) CHECK(u == w);
            }
        }
    }
}

TEST_CASE("lower neighbors: examples and brute-force equivalence") {
    CHECK(lower_neighbors(identity_elt(2)).empty());

    auto n1 = lower_neighbors(simple_reflection(2, 1));
    REQUIRE(n1.size() == 1);
    CHECK(n1[0].first == Root{RootKind::Diff, 1, 2});
    CHECK(n1[0].second.elt == identity_elt(2));

    auto n123 = lower_neighbors(from_word(3, "s1 s2 s3"));
    std::set<std::string> labels;
    for (auto& [alpha, lab] : n123) labels.insert(lab.str());
    CHECK(labels == std::set<std::string>{"s2 s3", "s1 s3", "s1 s2"});

    for (int g = 2; g <= 3; ++g) {
        auto t = oracle::bfs_weyl(g);
        for (auto& [w, dist] : t.dist) {
            auto nb = lower_neighbors(w);
            if (dist >= 1) CHECK(nb.size() >= 1);
            std::set<WeylElt> got;
            for (auto& [alpha, lab] : nb) {
                CHECK(t.dist.at(lab.elt) == dist - 1);
                CHECK(bruhat_leq(lab.elt, w));
                CHECK(compose(w, reflection(g, alpha)) == lab.elt);
                got.insert(lab.elt);
            }
            // oracle: filter all w s_alpha by BFS length
            std::set<WeylElt> want;
            for (const Root& alpha : positive_roots(g)) {
                WeylElt u = compose(w, reflection(g, alpha));
                if (t.dist.at(u) == dist - 1) want.insert(u);
            }
            CHECK(got == want);
        }
    }
}

TEST_CASE("minimal coset representatives") {
    // I0 = {} gives all of W
    CHECK(min_coset_reps(parabolic_none(2)).size() == 8);
    CHECK(min_coset_reps(parabolic_none(3)).size() == 48);

    // the g=2 full-Levi representatives, in (length, word) order
    auto reps = min_coset_reps(parabolic_full(2));
    REQUIRE(reps.size() == 4);
    CHECK(reps[0] == identity_elt(2));
    CHECK(reps[1] == from_word(2, "s2"));
    CHECK(reps[2] == from_word(2, "s2 s1"));
    CHECK(reps[3] == from_word(2, "s2 s1 s2"));

    for (int g = 2; g <= 3; ++g) {
        auto t = oracle::bfs_weyl(g);
        for (unsigned m = 0; m < (1u << (g - 1)); ++m) {
            ParabolicType P0 = parabolic_from_mask(g, m);
            auto mine = min_coset_reps(P0);
            std::set<WeylElt> mine_set(mine.begin(), mine.end());
            CHECK(mine_set == oracle::coset_min_reps_bruteforce(P0, t));
            CHECK(mine.size() * oracle::parabolic_subgroup(P0).size() == t.dist.size());
            for (const WeylElt& w : mine) CHECK(is_min_coset_rep(w, P0));
            // sorted by (length, lex word)
            for (size_t i = 0; i + 1 < mine.size(); ++i) {
                auto a = std::make_pair(length(mine[i]), reduced_word(mine[i]));
                auto b = std::make_pair(length(mine[i + 1]), reduced_word(mine[i + 1]));
                CHECK(a < b);
            }
        }
    }
}

TEST_CASE("enumerate_weyl is complete, duplicate-free, (length, word)-sorted") {
    for (int g = 2; g <= 3; ++g) {
        auto all = enumerate_weyl(g);
        auto t = oracle::bfs_weyl(g);
        CHECK(all.size() == t.dist.size());
        std::set<WeylElt> s(all.begin(), all.end());
        CHECK(s.size() == all.size());
        for (size_t i = 0; i + 1 < all.size(); ++i) {
            auto a = std::make_pair(length(all[i]), reduced_word(all[i]));
            auto b = std::make_pair(length(all[i + 1]), reduced_word(all[i + 1]));
            CHECK(a < b);
        }
    }
}
