#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "reflex/matgroup.hpp"
#include "reflex/matrix.hpp"
#include "reflex/series.hpp"

using namespace reflex;

static Cyclo zeta(int n, long k = 1) { return Cyclo::root_of_unity(n, k); }

static CycMatrix diag2(Cyclo a, Cyclo b) {
    CycMatrix m(2);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    return m;
}

// generators of G(2,1,2): s = diag(-1,1), t = coordinate swap
static std::vector<CycMatrix> g212_gens() {
    CycMatrix s = diag2(Cyclo(-1), Cyclo(1));
    CycMatrix t(2);
    t.at(0, 1) = Cyclo(1);
    t.at(1, 0) = Cyclo(1);
    return {s, t};
}

TEST_CASE("rank") {
    CycMatrix I = CycMatrix::identity(2);
    CHECK((I - I).rank() == 0);
    CycMatrix s = diag2(Cyclo(-1), Cyclo(1));
    CHECK((s - I).rank() == 1);
    auto gens = g212_gens();
    CycMatrix st = gens[0] * gens[1];
    CHECK((st - I).rank() == 2);
}

TEST_CASE("det and char poly") {
    CHECK(CycMatrix::identity(3).det() == Cyclo(1));
    CHECK(diag2(zeta(3), Cyclo(1)).det() == zeta(3));
    auto gens = g212_gens();
    // the rotation ut = (ts)s(st)... use st*ts = t s s t? simplest: u = tst
    CycMatrix u = gens[1] * gens[0] * gens[1];
    CycMatrix ut = u * gens[1];
    CHECK(ut.det() == Cyclo(1));
    // char poly of diag(z3, z3^2) is (q - z3)(q - z3^2) = q^2 + q + 1
    auto cp = diag2(zeta(3), zeta(3, 2)).char_poly();
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == Cyclo(1));
    CHECK(cp[1] == Cyclo(1));
    CHECK(cp[2] == Cyclo(1));
}

TEST_CASE("char series") {
    CycMatrix I = CycMatrix::identity(2);
    auto s1 = char_series(I, 2);
    CHECK(s1 == CSeries{Cyclo(1), Cyclo(2), Cyclo(3)});
    auto s2 = char_series(diag2(Cyclo(-1), Cyclo(1)), 2);
    CHECK(s2 == CSeries{Cyclo(1), Cyclo(0), Cyclo(1)});
    auto s3 = char_series(diag2(zeta(3), zeta(3, 2)), 3);
    CHECK(s3 == CSeries{Cyclo(1), Cyclo(-1), Cyclo(0), Cyclo(1)});
}

TEST_CASE("group closure of G(2,1,2)") {
    MatGroup G(g212_gens());
    CHECK(G.size() == 8);
    // reflections: rank(g - 1) = 1
    int nrefl = 0;
    CycMatrix I = CycMatrix::identity(2);
    for (int e = 0; e < (int)G.size(); ++e) {
        int r = (G.mat(e) - I).rank();
        if (r == 1) ++nrefl;
        CHECK((r == 0) == (e == 0));
        CHECK(r == (G.mat(G.inverse(e)) - I).rank());
        CHECK(G.mul(e, G.inverse(e)) == 0);
    }
    CHECK(nrefl == 4);
}

TEST_CASE("group closure of G4") {
    // G4 as zeta_6^{-1} times order-6 binary tetrahedral elements:
    // a = z6^{-1} * (1+i+j+k)/2, b = z6^{-1} * (1-i+j-k)/2 in the standard
    // quaternion-to-matrix embedding. Both are order-3 reflections.
    Cyclo zi = zeta(6, 5), half = Cyclo(rat(1, 2)), im = zeta(4);
    auto quat = [&](int si, int sj, int sk) {
        CycMatrix m(2);
        m.at(0, 0) = half * (Cyclo(1) + Cyclo(si) * im);
        m.at(0, 1) = half * (Cyclo(sj) + Cyclo(sk) * im);
        m.at(1, 0) = half * (Cyclo(-sj) + Cyclo(sk) * im);
        m.at(1, 1) = half * (Cyclo(1) - Cyclo(si) * im);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.at(i, j) = m.at(i, j) * zi;
        return m;
    };
    CycMatrix a = quat(1, 1, 1), b = quat(-1, 1, -1);
    CycMatrix I = CycMatrix::identity(2);
    REQUIRE((a - I).rank() == 1);
    REQUIRE((b - I).rank() == 1);
    MatGroup G({a, b});
    CHECK(G.size() == 24);
    // both generators have order 3
    CHECK(G.element_order(G.generator_id(0)) == 3);
    CHECK(G.element_order(G.generator_id(1)) == 3);
}

TEST_CASE("closure cap") {
    // an infinite group (translation-like unipotent) must hit the cap
    CycMatrix u = CycMatrix::identity(2);
    u.at(0, 1) = Cyclo(1);
    CHECK_THROWS(MatGroup({u}, 50));
}

TEST_CASE("det multiplicative on random pairs") {
    MatGroup G(g212_gens());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int a = (int)(rng() % G.size()), b = (int)(rng() % G.size());
        CHECK(G.mat(G.mul(a, b)).det() == G.mat(a).det() * G.mat(b).det());
    }
}

TEST_CASE("linear characters of G(2,1,2)") {
    MatGroup G(g212_gens());
    auto chars = G.linear_characters();
    REQUIRE(chars.size() == 4); // abelianization Z/2 x Z/2
    int sgen = G.generator_id(0), tgen = G.generator_id(1);
    bool found_Vs = false, found_trivial = false;
    for (const auto& chi : chars) {
        if (chi[sgen] == Cyclo(-1) && chi[tgen] == Cyclo(1)) found_Vs = true;
        bool triv = true;
        for (std::size_t e = 0; e < G.size(); ++e)
            if (!(chi[e] == Cyclo(1))) triv = false;
        if (triv) found_trivial = true;
        // multiplicativity on the full table (|G| <= 200)
        for (int x = 0; x < (int)G.size(); ++x)
            for (int y = 0; y < (int)G.size(); ++y)
                CHECK(chi[G.mul(x, y)] == chi[x] * chi[y]);
    }
    CHECK(found_Vs);
    CHECK(found_trivial);
}

TEST_CASE("commutator subgroup size") {
    MatGroup G(g212_gens());
    CHECK(G.commutator_subgroup().size() == 2);
}
