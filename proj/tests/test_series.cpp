#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "reflex/counting.hpp"
#include "reflex/exceptional.hpp"
#include "reflex/identities.hpp"
#include "reflex/invariants.hpp"
#include "reflex/reference_data.hpp"

using namespace reflex;

TEST_CASE("Molien degrees of small groups") {
    REQUIRE(molien_degrees(ReflGroup::monomial(2, 1, 2)) == std::vector<int>{2, 4});
    REQUIRE(molien_degrees(ReflGroup::monomial(6, 2, 3)) == std::vector<int>{6, 9, 12});
    REQUIRE(molien_degrees(ReflGroup::monomial(3, 3, 3)) == std::vector<int>{3, 3, 6});
    REQUIRE(molien_degrees(exceptional_group("G4")) == std::vector<int>{4, 6});
}

TEST_CASE("exponents, coexponents and the counting identities") {
    for (auto [m, b, n] : std::vector<std::array<int, 3>>{{2, 1, 2},
                                                          {3, 1, 3},
                                                          {4, 2, 2},
                                                          {4, 2, 3},
                                                          {6, 2, 3},
                                                          {6, 3, 2},
                                                          {4, 4, 2},
                                                          {3, 3, 3}}) {
        auto G = ReflGroup::monomial(m, b, n);
        auto T = invariant_table(G);
        auto E = expected_monomial(m, b, n);
        CAPTURE(m, b, n);
        REQUIRE(T.exponents == E.exponents);
        REQUIRE(T.coexponents == E.coexponents);
        // sum e_i = |R| and sum e*_i = |H|
        REQUIRE(std::accumulate(T.exponents.begin(), T.exponents.end(), 0) ==
                (int)G.reflections().size());
        REQUIRE(std::accumulate(T.coexponents.begin(), T.coexponents.end(), 0) ==
                G.num_hyperplanes());
    }
}

TEST_CASE("well-generation from the exponent pairing") {
    REQUIRE(invariant_table(ReflGroup::monomial(3, 1, 3)).well_generated);
    REQUIRE(invariant_table(ReflGroup::monomial(3, 3, 3)).well_generated);
    REQUIRE(!invariant_table(ReflGroup::monomial(6, 2, 3)).well_generated);
    REQUIRE(!invariant_table(ReflGroup::monomial(4, 2, 2)).well_generated);
    REQUIRE(invariant_table(exceptional_group("G5")).well_generated);
    REQUIRE(!invariant_table(exceptional_group("G13")).well_generated);
    REQUIRE(invariant_table(exceptional_group("G28")).well_generated);
}

TEST_CASE("orbit sums: sum eps_i = |R_eps| and sum eps*_i = |H_eps|") {
    for (auto [m, b, n] : std::vector<std::array<int, 3>>{{3, 1, 2}, {4, 2, 3}, {6, 2, 2}}) {
        auto G = ReflGroup::monomial(m, b, n);
        auto T = invariant_table(G);
        for (const auto& o : G.orbits()) {
            auto a = analyze_orbit(G, T, o.label);
            if (!a.well_restricted) continue;
            CAPTURE(m, b, n, o.label);
            REQUIRE(std::accumulate(a.eps.begin(), a.eps.end(), 0) ==
                    (int)o.reflections.size());
            REQUIRE(std::accumulate(a.eps_star.begin(), a.eps_star.end(), 0) ==
                    o.num_hyperplanes);
        }
    }
}

TEST_CASE("reflexponent/co-reflexponent pairing in well-generated groups") {
    // eps_i + eps*_{k+1-i} = e_n + 1 whenever G is well-generated and the
    // orbit is well-restricted
    for (std::string name : {"G5", "G6", "G26", "G28"}) {
        auto G = exceptional_group(name);
        auto T = invariant_table(G);
        REQUIRE(T.well_generated);
        for (const auto& o : G.orbits()) {
            auto a = analyze_orbit(G, T, o.label);
            int h = T.exponents.back() + 1;
            int k = (int)a.eps.size();
            CAPTURE(name, o.label);
            for (int i = 0; i < k; ++i) REQUIRE(a.eps[i] + a.eps_star[k - 1 - i] == h);
        }
    }
}

TEST_CASE("Stirling coefficients") {
    REQUIRE(stirling_numbers(3) == std::vector<long long>{1, 3, 2});
    REQUIRE(stirling_numbers(4) == std::vector<long long>{1, 6, 11, 6});
    // row sums: |S_n|
    auto s5 = stirling_numbers(5);
    REQUIRE(std::accumulate(s5.begin(), s5.end(), 0LL) == 120);
}

TEST_CASE("decoration-tuple counts match brute force") {
    for (int m : {4, 6, 8})
        for (int b = 1; b <= m; ++b) {
            if (m % b != 0) continue;
            int a = m / b;
            if (a == 1) continue;
            for (int j = 1; j <= 4; ++j) {
                // over j-tuples from {1..m-1} whose sum is 0 mod b (the
                // group constraint on decorations), count those whose sum is
                // also 0 mod a (m_j) and the rest (n_j)
                int l = a * b / std::gcd(a, b); // lcm
                long long both = 0, mod_b_only = 0;
                std::vector<int> t(j, 1);
                while (true) {
                    int sum = std::accumulate(t.begin(), t.end(), 0);
                    if (sum % l == 0) ++both;
                    else if (sum % b == 0) ++mod_b_only;
                    int i = j - 1;
                    while (i >= 0 && t[i] == m - 1) t[i--] = 1;
                    if (i < 0) break;
                    ++t[i];
                }
                auto [mj, nj] = count_decoration_tuples(m, a, b, j);
                CAPTURE(m, b, j);
                REQUIRE(mj == both);
                REQUIRE(nj == mod_b_only);
            }
        }
}

TEST_CASE("one-variable sums match the product formulas") {
    REQUIRE(lhs_solomon(ReflGroup::monomial(2, 1, 2), false) ==
            std::vector<long long>{1, 4, 3});
    REQUIRE(lhs_solomon(ReflGroup::monomial(2, 1, 2), true) ==
            std::vector<long long>{1, -4, 3});
    for (auto [m, b, n] : std::vector<std::array<int, 3>>{{4, 1, 2}, {6, 2, 3}, {3, 3, 3}}) {
        auto G = ReflGroup::monomial(m, b, n);
        CAPTURE(m, b, n);
        REQUIRE(verify_solomon(G, invariant_table(G)));
    }
    auto G13 = exceptional_group("G13");
    REQUIRE(verify_solomon(G13, invariant_table(G13)));
}

TEST_CASE("bivariate factoring: worked example and a non-example") {
    // 1 + 2y + 2x + 2xy + y^2 = (1+2x+y)(1+y)
    BiPoly p{{{0, 0}, 1}, {{0, 1}, 2}, {{1, 0}, 2}, {{1, 1}, 2}, {{0, 2}, 1}};
    auto f = factor_bivariate_linear(p, 2, +1);
    REQUIRE(f);
    REQUIRE(*f == std::vector<BiFactor>{{0, 1}, {2, 1}});
    REQUIRE(factors_str(*f, +1) == "(1+2x+y)(1+y)");

    // 1 - 2y - 2x + 2xy + y^2 = (1-2x-y)(1-y)
    BiPoly q{{{0, 0}, 1}, {{0, 1}, -2}, {{1, 0}, -2}, {{1, 1}, 2}, {{0, 2}, 1}};
    auto g = factor_bivariate_linear(q, 2, -1);
    REQUIRE(g);
    REQUIRE(factors_str(*g, -1) == "(1-2x-y)(1-y)");

    // 1 + x + y^2 has no factorization into two such linear terms
    BiPoly r{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 2}, 1}};
    REQUIRE(!factor_bivariate_linear(r, 2, +1));
}

TEST_CASE("two-orbit identities on a small grid") {
    for (auto [m, b, n] : std::vector<std::array<int, 3>>{
             {2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {4, 2, 2}, {6, 3, 2}, {4, 4, 2}, {5, 5, 2}}) {
        auto G = ReflGroup::monomial(m, b, n);
        auto T = invariant_table(G);
        for (const auto& o : G.orbits()) {
            CAPTURE(m, b, n, o.label);
            REQUIRE(verify_two_orbit(G, T, o.label).ok);
        }
    }
}

TEST_CASE("displayed factorizations for G13 and G(6,2,3)") {
    auto G13 = exceptional_group("G13");
    auto r13 = verify_two_orbit(G13, invariant_table(G13), 't');
    REQUIRE(r13.ok);
    REQUIRE(factors_str(r13.factors_unsigned, +1) == "(1+8x+3y)(1+4x+3y)");
    REQUIRE(factors_str(r13.factors_signed, -1) == "(1-12x-5y)(1-y)");

    auto G = ReflGroup::monomial(6, 2, 3);
    auto r = verify_two_orbit(G, invariant_table(G), 't');
    REQUIRE(r.ok);
    REQUIRE(factors_str(r.factors_unsigned, +1) == "(1+9x+2y)(1+6x+2y)(1+3x+2y)");
    REQUIRE(factors_str(r.factors_signed, -1) == "(1-12x-y)(1-6x-y)(1-y)");
}
