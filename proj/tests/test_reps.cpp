#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "reflex/epsrep.hpp"
#include "reflex/exceptional.hpp"
#include "reflex/genset.hpp"
#include "reflex/identities.hpp"
#include "reflex/invariants.hpp"
#include "reflex/reference_data.hpp"

using namespace reflex;

namespace {

std::vector<int> fd(const ReflGroup& G, const EpsRep& r) {
    auto degs = molien_degrees(G);
    return fake_degrees(G, r.chi, r.dim, degs);
}

std::vector<int> fd_conj(const ReflGroup& G, const EpsRep& r) {
    auto degs = molien_degrees(G);
    return fake_degrees(G, conj_chi(r.chi), r.dim, degs);
}

} // namespace

TEST_CASE("G(2,1,2): the one-dimensional orbit representations") {
    auto G = ReflGroup::monomial(2, 1, 2);
    for (char lab : {'s', 't'}) {
        auto r = orbit_representation(G, lab);
        validate_eps_rep(G, r);
        REQUIRE(r.dim == 1);
        // distribution of the M statistic: 4 elements with M = 0, 4 with M = 1
        int zeros = (int)std::count(r.M.begin(), r.M.end(), 0);
        REQUIRE(zeros == 4);
        REQUIRE(fd(G, r) == std::vector<int>{2});
        REQUIRE(fd_conj(G, r) == std::vector<int>{2});
    }
}

TEST_CASE("V_s of G(m,b,n): fake degrees (a-1)n and n") {
    for (auto [m, b, n] : std::vector<std::array<int, 3>>{
             {3, 1, 2}, {4, 1, 3}, {4, 2, 2}, {4, 2, 3}, {6, 2, 2}, {6, 2, 3}, {6, 3, 2}}) {
        auto G = ReflGroup::monomial(m, b, n);
        int a = m / b;
        auto r = eps_rep_infinite_s(G);
        validate_eps_rep(G, r);
        CAPTURE(m, b, n);
        REQUIRE(fd(G, r) == std::vector<int>{(a - 1) * n});
        REQUIRE(fd_conj(G, r) == std::vector<int>{n});
    }
}

TEST_CASE("V_s restricts to the reflection representation of the diagonal parabolic") {
    // the defining property: on a diagonal reflection diag(zeta_a^k, 1, ..., 1)
    // the character value is det = zeta_a^k
    auto G = ReflGroup::monomial(6, 2, 3);
    auto r = eps_rep_infinite_s(G);
    for (int e : G.orbit('s').reflections) REQUIRE(r.chi[e] == G.det(e));
}

TEST_CASE("V_t of G(a,1,n): fake degrees {a, ..., (n-1)a}") {
    for (auto [a, n] : std::vector<std::array<int, 2>>{{2, 3}, {3, 3}, {2, 4}, {4, 2}}) {
        auto G = ReflGroup::monomial(a, 1, n);
        auto r = eps_rep_infinite_t(G);
        validate_eps_rep(G, r);
        REQUIRE(r.dim == n - 1);
        std::vector<int> want;
        for (int i = 1; i < n; ++i) want.push_back(i * a);
        CAPTURE(a, n);
        REQUIRE(fd(G, r) == want);
        REQUIRE(fd_conj(G, r) == want);
    }
}

TEST_CASE("U_t and U'_t of G(6,2,3): fake degrees 3,6,9 and 6,12") {
    auto G = ReflGroup::monomial(6, 2, 3);
    auto u = eps_rep_U_t(G);
    validate_eps_rep(G, u);
    REQUIRE(u.dim == 3);
    REQUIRE(fd(G, u) == std::vector<int>{3, 6, 9});
    auto up = eps_rep_U_t_prime(G);
    REQUIRE(up.dim == 2);
    REQUIRE(fd(G, up) == std::vector<int>{6, 12});
}

TEST_CASE("U_t of G13: two-dimensional, fake degrees 4,8; U'_t fake degree 12") {
    auto G = exceptional_group("G13");
    auto u = eps_rep_G13_U_t(G);
    validate_eps_rep(G, u);
    REQUIRE(u.dim == 2);
    REQUIRE(fd(G, u) == std::vector<int>{4, 8});
    auto up = eps_rep_G13_U_t_prime(G);
    REQUIRE(up.dim == 1);
    REQUIRE(fd(G, up) == std::vector<int>{12});
}

TEST_CASE("two-dimensional V_eps of G26 and G28") {
    auto G26 = exceptional_group("G26");
    auto t = eps_rep_exceptional2(G26, 't');
    validate_eps_rep(G26, t);
    REQUIRE(fd(G26, t) == std::vector<int>{9, 15});
    REQUIRE(fd_conj(G26, t) == std::vector<int>{3, 9});

    auto G28 = exceptional_group("G28");
    for (char lab : {'s', 't'}) {
        auto r = eps_rep_exceptional2(G28, lab);
        validate_eps_rep(G28, r);
        REQUIRE(fd(G28, r) == std::vector<int>{4, 8});
        REQUIRE(fd_conj(G28, r) == std::vector<int>{4, 8});
    }
}

TEST_CASE("linear V_eps agrees with the expected tables for rank-2 exceptionals") {
    for (std::string name : {"G5", "G6", "G10", "G14", "G18"}) {
        auto G = exceptional_group(name);
        auto E = expected_exceptional(name);
        for (const auto& o : E.orbits) {
            auto r = eps_rep_linear(G, o.label);
            validate_eps_rep(G, r);
            CAPTURE(name, o.label);
            REQUIRE(fd(G, r) == o.eps);
            REQUIRE(fd_conj(G, r) == o.eps_star);
        }
    }
}

TEST_CASE("well-restricted classification") {
    REQUIRE(orbit_is_well_restricted(ReflGroup::monomial(6, 2, 3), 's'));
    REQUIRE(!orbit_is_well_restricted(ReflGroup::monomial(6, 2, 3), 't'));
    REQUIRE(!orbit_is_well_restricted(ReflGroup::monomial(6, 3, 2), 't'));
    REQUIRE(orbit_is_well_restricted(ReflGroup::monomial(4, 2, 2), 't'));
    REQUIRE(orbit_is_well_restricted(ReflGroup::monomial(4, 2, 2), 'u'));
    REQUIRE(orbit_is_well_restricted(ReflGroup::monomial(2, 1, 3), 't'));
    REQUIRE(orbit_is_well_restricted(ReflGroup::monomial(3, 3, 3), 't'));
    auto G13 = exceptional_group("G13");
    REQUIRE(orbit_is_well_restricted(G13, 's'));
    REQUIRE(!orbit_is_well_restricted(G13, 't'));
}

TEST_CASE("minimal generating sets: sizes and orbit profiles") {
    struct Row {
        int m, b, n, min_size;
        std::map<char, int> prof;
    };
    for (const Row& row : {
             Row{2, 1, 2, 2, {{'s', 1}, {'t', 1}}},
             Row{3, 1, 2, 2, {{'s', 1}, {'t', 1}}},
             Row{4, 4, 2, 2, {{'s', 1}, {'t', 1}}},
             Row{3, 3, 3, 3, {{'t', 3}}},
             Row{4, 2, 2, 3, {{'s', 1}, {'t', 1}, {'u', 1}}},
             Row{6, 3, 2, 3, {{'s', 1}, {'t', 2}}},
         }) {
        auto G = ReflGroup::monomial(row.m, row.b, row.n);
        auto data = minimal_generating_data(G);
        CAPTURE(row.m, row.b, row.n);
        REQUIRE(data.min_size == row.min_size);
        REQUIRE(data.n_eps == row.prof);
    }
    auto G4 = exceptional_group("G4");
    auto d4 = minimal_generating_data(G4);
    REQUIRE(d4.min_size == 2);
    REQUIRE(d4.n_eps == std::map<char, int>{{'t', 2}});
}
