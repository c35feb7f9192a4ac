#include <catch2/catch_amalgamated.hpp>

#include "reflex/rootsys.hpp"

using namespace reflex;

TEST_CASE("positive root counts and weights") {
    for (int n = 1; n <= 6; ++n) {
        auto A = RootSystem::build('A', n);
        REQUIRE(A.num_positive() == n * (n + 1) / 2);
        REQUIRE(A.r() == 1);
    }
    for (int n = 2; n <= 6; ++n) {
        auto B = RootSystem::build('B', n);
        auto C = RootSystem::build('C', n);
        REQUIRE(B.num_positive() == n * n);
        REQUIRE(C.num_positive() == n * n);
        REQUIRE(B.r() == 2);
        REQUIRE(C.r() == 2);
    }
    for (int n = 3; n <= 6; ++n)
        REQUIRE(RootSystem::build('D', n).num_positive() == n * (n - 1));
    auto F = RootSystem::build('F', 4);
    REQUIRE(F.num_positive() == 24);
    int longs = 0, shorts = 0;
    for (int i = 0; i < 24; ++i)
        (F.positive(i).weight == 2 ? longs : shorts)++;
    REQUIRE(longs == 12);
    REQUIRE(shorts == 12);
    REQUIRE(F.r() == 2);
    auto G = RootSystem::build('G', 2);
    REQUIRE(G.num_positive() == 6);
    REQUIRE(G.r() == 3);
    REQUIRE_THROWS(RootSystem::build('E', 6));
}

TEST_CASE("C2 root lengths") {
    // alpha2 and alpha1+alpha2 short; alpha1 and alpha1+2*alpha2 long
    auto C = RootSystem::build('C', 2);
    std::map<std::vector<int>, int> w;
    for (int i = 0; i < C.num_positive(); ++i) w[C.positive(i).coeff] = C.positive(i).weight;
    REQUIRE(w.at({0, 1}) == 1);
    REQUIRE(w.at({1, 1}) == 1);
    REQUIRE(w.at({1, 0}) == 2);
    REQUIRE(w.at({1, 2}) == 2);
}

TEST_CASE("highest root and Coxeter number") {
    REQUIRE(RootSystem::build('A', 2).coxeter_number() == 3);
    REQUIRE(RootSystem::build('B', 3).coxeter_number() == 6);
    REQUIRE(RootSystem::build('C', 3).coxeter_number() == 6);
    REQUIRE(RootSystem::build('F', 4).coxeter_number() == 12);
    REQUIRE(RootSystem::build('G', 2).coxeter_number() == 6);
}

TEST_CASE("exponents by height duality") {
    REQUIRE(RootSystem::build('A', 2).exponents() == std::vector<int>{1, 2});
    REQUIRE(RootSystem::build('C', 2).exponents() == std::vector<int>{1, 3});
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> odd;
        for (int i = 1; i <= n; ++i) odd.push_back(2 * i - 1);
        REQUIRE(RootSystem::build('B', n).exponents() == odd);
        REQUIRE(RootSystem::build('C', n).exponents() == odd);
    }
    REQUIRE(RootSystem::build('F', 4).exponents() == std::vector<int>{1, 5, 7, 11});
    REQUIRE(RootSystem::build('G', 2).exponents() == std::vector<int>{1, 5});
    REQUIRE(RootSystem::build('D', 4).exponents() == std::vector<int>{1, 3, 3, 5});
}

TEST_CASE("short exponents via the dual system") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> even;
        for (int i = 1; i < n; ++i) even.push_back(2 * i);
        REQUIRE(RootSystem::build('B', n).short_exponents() == even);
        REQUIRE(RootSystem::build('C', n).short_exponents() == std::vector<int>{n});
    }
    REQUIRE(RootSystem::build('F', 4).short_exponents() == std::vector<int>{4, 8});
    REQUIRE(RootSystem::build('G', 2).short_exponents() == std::vector<int>{3});
    REQUIRE_THROWS(RootSystem::build('A', 3).short_exponents());
}

TEST_CASE("duality swaps B and C") {
    auto B = RootSystem::build('B', 4);
    REQUIRE(B.dual().type() == 'C');
    REQUIRE(B.dual().exponents() == B.exponents());
    REQUIRE(RootSystem::build('C', 4).dual().type() == 'B');
    // F4 and G2 self-dual up to relabeling
    REQUIRE(RootSystem::build('F', 4).dual().exponents() ==
            RootSystem::build('F', 4).exponents());
    REQUIRE(RootSystem::build('G', 2).dual().exponents() ==
            RootSystem::build('G', 2).exponents());
}

TEST_CASE("weighted heights") {
    // Fig 4 maxima: B5 max Ht = 16, max w+Ht = 18; C5 max Ht = 10, max 12
    auto B = RootSystem::build('B', 5);
    auto C = RootSystem::build('C', 5);
    int bh = 0, bwh = 0, ch = 0, cwh = 0;
    for (int i = 0; i < B.num_positive(); ++i) {
        bh = std::max(bh, B.positive(i).weighted_height);
        bwh = std::max(bwh, B.positive(i).weight + B.positive(i).weighted_height);
    }
    for (int i = 0; i < C.num_positive(); ++i) {
        ch = std::max(ch, C.positive(i).weighted_height);
        cwh = std::max(cwh, C.positive(i).weight + C.positive(i).weighted_height);
    }
    REQUIRE(bh == 16);
    REQUIRE(bwh == 18);
    REQUIRE(ch == 10);
    REQUIRE(cwh == 12);
    // a simple root's weighted height is its own weight
    auto F = RootSystem::build('F', 4);
    for (int i = 0; i < F.num_positive(); ++i)
        if (F.positive(i).height == 1)
            REQUIRE(F.positive(i).weighted_height == F.positive(i).weight);
}

TEST_CASE("folding: exponents of the simply-laced cover") {
    // exponents(A_{2n-1}) = exponents(B_n) + short_exponents(B_n), n <= 3
    for (int n = 2; n <= 3; ++n) {
        auto B = RootSystem::build('B', n);
        auto merged = B.exponents();
        for (int s : B.short_exponents()) merged.push_back(s);
        std::sort(merged.begin(), merged.end());
        REQUIRE(RootSystem::build('A', 2 * n - 1).exponents() == merged);
    }
    // likewise D_{n+1} and C_n
    for (int n = 2; n <= 5; ++n) {
        auto C = RootSystem::build('C', n);
        auto merged = C.exponents();
        for (int s : C.short_exponents()) merged.push_back(s);
        std::sort(merged.begin(), merged.end());
        REQUIRE(RootSystem::build('D', n + 1).exponents() == merged);
    }
}

TEST_CASE("reflection tables act correctly") {
    auto C = RootSystem::build('C', 3);
    int N = (int)C.roots().size();
    for (int i = 0; i < C.rank(); ++i) {
        for (int j = 0; j < N; ++j) {
            REQUIRE(C.reflect(i, C.reflect(i, j)) == j); // involution
            REQUIRE(C.negative_of(C.reflect(i, j)) == C.reflect(i, C.negative_of(j)));
        }
    }
    // s_i sends alpha_i to its negative and permutes the other positives
    for (int i = 0; i < C.rank(); ++i) {
        int flipped = 0;
        for (int j = 0; j < C.num_positive(); ++j)
            if (!C.is_positive(C.reflect(i, j))) ++flipped;
        REQUIRE(flipped == 1);
    }
}
