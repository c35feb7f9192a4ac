#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflex {

/// Expected numerical data for one hyperplane orbit. `eps` / `eps_star`
/// are the (co)reflexponents, ascending. For a non-well-restricted orbit
/// (`extension` = true) they are the fake degrees of the substitute
/// representations U_t and U'_t (the latter padded with a 0). An empty
/// `eps` means no documented closed form; callers fall back to computed
/// values.
struct OrbitExpected {
    char label = '?';
    bool extension = false;
    std::vector<int> eps, eps_star;
};

struct GroupExpected {
    std::vector<int> exponents, coexponents; // ascending
    std::vector<OrbitExpected> orbits;
};

/// Expected tables for the exceptional groups with more than one
/// hyperplane orbit, plus the single-orbit ones handled uniformly.
inline GroupExpected expected_exceptional(const std::string& name) {
    // entries: exponents, coexponents, orbit rows
    static const std::map<std::string, GroupExpected> table = {
        {"G5", {{5, 11}, {1, 7}, {{'s', false, {8}, {4}}, {'t', false, {8}, {4}}}}},
        {"G6", {{3, 11}, {1, 9}, {{'s', false, {6}, {6}}, {'t', false, {8}, {4}}}}},
        {"G7",
         {{11, 11},
          {1, 13},
          {{'s', false, {6}, {6}}, {'t', false, {8}, {4}}, {'u', false, {8}, {4}}}}},
        {"G9", {{7, 23}, {1, 17}, {{'s', false, {12}, {12}}, {'t', false, {18}, {6}}}}},
        {"G10", {{11, 23}, {1, 13}, {{'s', false, {16}, {8}}, {'t', false, {18}, {6}}}}},
        {"G11",
         {{23, 23},
          {1, 25},
          {{'s', false, {12}, {12}}, {'t', false, {16}, {8}}, {'u', false, {18}, {6}}}}},
        {"G13", {{7, 11}, {1, 17}, {{'s', false, {6}, {6}}, {'t', true, {4, 8}, {0, 12}}}}},
        {"G14", {{5, 23}, {1, 19}, {{'s', false, {12}, {12}}, {'t', false, {16}, {8}}}}},
        {"G15",
         {{11, 23},
          {1, 25},
          {{'s', false, {12}, {12}}, {'t', false, {16}, {8}}, {'u', false, {6}, {6}}}}},
        {"G17", {{19, 59}, {1, 41}, {{'s', false, {30}, {30}}, {'t', false, {48}, {12}}}}},
        {"G18", {{29, 59}, {1, 31}, {{'s', false, {40}, {20}}, {'t', false, {48}, {12}}}}},
        {"G19",
         {{59, 59},
          {1, 61},
          {{'s', false, {30}, {30}}, {'t', false, {40}, {20}}, {'u', false, {48}, {12}}}}},
        {"G21", {{11, 59}, {1, 49}, {{'s', false, {30}, {30}}, {'t', false, {40}, {20}}}}},
        {"G26",
         {{5, 11, 17},
          {1, 7, 13},
          {{'s', false, {9}, {9}}, {'t', false, {9, 15}, {3, 9}}}}},
        {"G28",
         {{1, 5, 7, 11},
          {1, 5, 7, 11},
          {{'s', false, {4, 8}, {4, 8}}, {'t', false, {4, 8}, {4, 8}}}}},
        // single-orbit groups: reflexponents are the (co)exponents
        {"G4", {{3, 5}, {1, 3}, {{'t', false, {3, 5}, {1, 3}}}}},
        {"G23", {{1, 5, 9}, {1, 5, 9}, {{'t', false, {1, 5, 9}, {1, 5, 9}}}}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("no expected data for " + name);
    return it->second;
}

/// Expected tables for G(m,b,n), m = ab. Conventions:
///  - a > 1: exponents {im-1 : 1 <= i < n} with na-1, coexponents
///    {im+1 : 0 <= i < n}; orbit s has reflexponent (a-1)n and
///    co-reflexponent n.
///  - orbit t for b = 1: reflexponents = co-reflexponents = {ia : 1 <= i < n}.
///  - orbit t for a, b > 1 and not split: the extension case. The
///    co-reflexponents {iab : 0 <= i < n} hold in general; a closed form
///    for the reflexponents is only recorded where it has been verified
///    (b = 2, n = 3: {ia(b-1) : 1 <= i < n} with an). Elsewhere `eps` is
///    left empty and callers use the computed fake degrees of U_t.
///  - dihedral G(2b,2b,2): both orbits have (co)reflexponent b.
/// Note: the s-row reflexponent is (a-1)n for every b. A published table
/// lists (a-d)n with d = gcd(a,b); that value is inconsistent with the
/// sum rule sum(eps) = |R_s| = (a-1)n whenever d > 1, and the computed
/// fake degree of V_s is (a-1)n.
inline GroupExpected expected_monomial(int m, int b, int n) {
    if (m % b != 0) throw std::invalid_argument("b must divide m");
    int a = m / b;
    GroupExpected E;
    if (a > 1) {
        for (int i = 1; i < n; ++i) E.exponents.push_back(i * m - 1);
        E.exponents.push_back(n * a - 1);
        std::sort(E.exponents.begin(), E.exponents.end());
        for (int i = 0; i < n; ++i) E.coexponents.push_back(i * m + 1);
        E.orbits.push_back({'s', false, {(a - 1) * n}, {n}});
        if (b == 1) {
            if (n >= 2) {
                OrbitExpected t{'t', false, {}, {}};
                for (int i = 1; i < n; ++i) t.eps.push_back(i * a);
                t.eps_star = t.eps;
                E.orbits.push_back(t);
            }
        } else if (n == 2 && b % 2 == 0) {
            // split orbits t/u: one-dimensional, no documented closed form
            E.orbits.push_back({'t', false, {}, {}});
            E.orbits.push_back({'u', false, {}, {}});
        } else {
            OrbitExpected t{'t', true, {}, {}};
            if (n == 3 && b == 2) {
                for (int i = 1; i < n; ++i) t.eps.push_back(i * a * (b - 1));
                t.eps.push_back(a * n);
                std::sort(t.eps.begin(), t.eps.end());
            }
            for (int i = 0; i < n; ++i) t.eps_star.push_back(i * a * b);
            std::sort(t.eps_star.begin(), t.eps_star.end());
            E.orbits.push_back(t);
        }
    } else { // a = 1: G(b,b,n), degrees b, 2b, ..., (n-1)b, n
        for (int i = 1; i < n; ++i) E.exponents.push_back(i * b - 1);
        E.exponents.push_back(n - 1);
        std::sort(E.exponents.begin(), E.exponents.end());
        for (int i = 0; i < n - 1; ++i) E.coexponents.push_back(i * b + 1);
        E.coexponents.push_back((n - 1) * (b - 1));
        std::sort(E.coexponents.begin(), E.coexponents.end());
        if (n == 2 && b % 2 == 0) {
            // dihedral G(2k,2k,2): both orbits have (co)reflexponent k
            E.orbits.push_back({'s', false, {b / 2}, {b / 2}});
            E.orbits.push_back({'t', false, {b / 2}, {b / 2}});
        } else {
            E.orbits.push_back({'t', false, E.exponents, E.coexponents});
        }
    }
    return E;
}

/// Exponents and short exponents of the Weyl groups with two root lengths,
/// together with the length ratio squared r.
struct WeylShortExpected {
    int r = 2;
    std::vector<int> exponents, short_exponents;
};

inline WeylShortExpected expected_weyl_short(const std::string& type, int n) {
    WeylShortExpected w;
    if (type == "B" || type == "C") {
        w.r = 2;
        for (int i = 1; i <= n; ++i) w.exponents.push_back(2 * i - 1);
        if (type == "B")
            for (int i = 1; i < n; ++i) w.short_exponents.push_back(2 * i);
        else
            w.short_exponents = {n};
    } else if (type == "F" && n == 4) {
        w.r = 2;
        w.exponents = {1, 5, 7, 11};
        w.short_exponents = {4, 8};
    } else if (type == "G" && n == 2) {
        w.r = 3;
        w.exponents = {1, 5};
        w.short_exponents = {3};
    } else {
        throw std::invalid_argument("no short-exponent data for " + type +
                                    std::to_string(n));
    }
    return w;
}

} // namespace reflex
