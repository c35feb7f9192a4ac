#pragma once

#include <algorithm>

#include "reflex/bipoly.hpp"
#include "reflex/epsrep.hpp"
#include "reflex/invariants.hpp"
#include "reflex/reflection_group.hpp"

namespace reflex {

/// Whether the n_eps-dimensional V_eps exists for this orbit (i.e. the
/// orbit is well-restricted). The exceptions are the t orbit of G13 and
/// the t orbit of G(ab,b,n) with a,b > 1 whenever that orbit does not
/// split (n > 2, or n = 2 with b odd). Those orbits get the substitute
/// pair U_t / U'_t instead.
inline bool orbit_is_well_restricted(const ReflGroup& G, char label) {
    if (G.orbits().size() == 1) return true;
    if (const MonomialGroup* M = G.mono()) {
        if (label == 's') return true;
        if (M->a() == 1 || M->b() == 1) return true;
        // a, b > 1: t splits into two one-dimensional orbits iff n = 2 and
        // b is even (labels t/u); otherwise the t orbit is the exception
        return label != 't' || (M->rank() == 2 && M->b() % 2 == 0);
    }
    return !(G.name() == "G13" && label == 't');
}

/// Everything the two-variable identities need to know about one orbit:
/// the representation whose M statistic appears in both sums, the
/// reflexponents eps (expected nonzero x-coefficients of the unsigned
/// factorization) and co-reflexponents eps_star (likewise, signed).
/// For a well-restricted orbit these are the fake degrees of V_eps and
/// V_eps^*; for the two exceptional orbits they are the fake degrees of
/// U_t and of the companion U'_t.
struct OrbitAnalysis {
    char label = '?';
    bool well_restricted = true;
    EpsRep rep;
    std::vector<int> eps, eps_star;
};

/// Dispatch to the construction of V_eps (or U_t) for the given orbit.
inline EpsRep orbit_representation(const ReflGroup& G, char label,
                                   const std::vector<int>& expected = {}) {
    if (G.orbits().size() == 1) return eps_rep_V(G, label);
    if (const MonomialGroup* M = G.mono()) {
        if (M->a() == 1) return eps_rep_linear(G, label, expected); // dihedral s/t
        if (label == 's') return eps_rep_infinite_s(G);
        if (M->b() == 1) return eps_rep_infinite_t(G);
        if (M->rank() == 2 && M->b() % 2 == 0)
            return eps_rep_linear(G, label, expected); // split t/u
        return eps_rep_U_t(G);
    }
    if (G.name() == "G13" && label == 't') return eps_rep_G13_U_t(G);
    if (G.name() == "G26" && label == 't') return eps_rep_exceptional2(G, label);
    if (G.name() == "G28") return eps_rep_exceptional2(G, label);
    return eps_rep_linear(G, label, expected);
}

inline OrbitAnalysis analyze_orbit(const ReflGroup& G, const InvariantTable& T,
                                   char label, const std::vector<int>& expected = {}) {
    OrbitAnalysis a;
    a.label = label;
    a.well_restricted = orbit_is_well_restricted(G, label);
    a.rep = orbit_representation(G, label, expected);
    validate_eps_rep(G, a.rep);
    a.eps = fake_degrees(G, a.rep.chi, a.rep.dim, T.degrees);
    if (a.well_restricted) {
        a.eps_star = fake_degrees(G, conj_chi(a.rep.chi), a.rep.dim, T.degrees);
    } else {
        EpsRep prime = G.mono() ? eps_rep_U_t_prime(G) : eps_rep_G13_U_t_prime(G);
        a.eps_star = fake_degrees(G, prime.chi, prime.dim, T.degrees);
        a.eps_star.push_back(0); // dim U'_t = dim U_t - 1; pad to match
        std::sort(a.eps_star.begin(), a.eps_star.end());
    }
    return a;
}

/// Result of checking one orbit's pair of identities. `ok` requires: both
/// sums factor into rank-many linear terms over Z with coefficients of the
/// right sign; the multiset {a_i + b_i} of factor coefficient sums equals
/// the (co)exponents; and the nonzero a_i equal the (co)reflexponents.
struct TwoOrbitReport {
    std::string group;
    char label = '?';
    bool well_restricted = true;
    std::vector<int> eps, eps_star;
    BiPoly lhs_unsigned, lhs_signed;
    std::vector<BiFactor> factors_unsigned, factors_signed;
    bool factored_unsigned = false, factored_signed = false;
    bool coeffs_ok_unsigned = false, coeffs_ok_signed = false;
    bool collapse_ok = false; // x := y recovers the one-variable sums
    bool ok = false;
};

namespace detail {

inline bool factor_multisets_match(const std::vector<BiFactor>& fs,
                                   std::vector<int> eps, std::vector<int> exps) {
    std::vector<int> a, s;
    for (const auto& f : fs) {
        if (f.a != 0) a.push_back(f.a);
        s.push_back(f.a + f.b);
    }
    std::sort(a.begin(), a.end());
    std::sort(s.begin(), s.end());
    std::erase(eps, 0);
    std::sort(eps.begin(), eps.end());
    std::sort(exps.begin(), exps.end());
    return a == eps && s == exps;
}

/// Substitute x := y and compare with the one-variable Solomon sum.
inline bool collapses_to(const BiPoly& p, const std::vector<long long>& solomon) {
    std::vector<long long> c(solomon.size(), 0);
    for (const auto& [e, v] : p) {
        std::size_t d = (std::size_t)(e.first + e.second);
        if (d >= c.size()) return false;
        c[d] += v;
    }
    return c == solomon;
}

} // namespace detail

inline TwoOrbitReport verify_two_orbit(const ReflGroup& G, const InvariantTable& T,
                                       char label, const std::vector<int>& expected = {}) {
    OrbitAnalysis a = analyze_orbit(G, T, label, expected);
    TwoOrbitReport r;
    r.group = G.name();
    r.label = label;
    r.well_restricted = a.well_restricted;
    r.eps = a.eps;
    r.eps_star = a.eps_star;
    r.lhs_unsigned = lhs_two_orbit(G, a.rep, false);
    r.lhs_signed = lhs_two_orbit(G, a.rep, true);
    int n = G.rank();
    if (auto f = factor_bivariate_linear(r.lhs_unsigned, n, +1)) {
        r.factored_unsigned = true;
        r.factors_unsigned = *f;
        r.coeffs_ok_unsigned =
            detail::factor_multisets_match(*f, a.eps, T.exponents);
    }
    if (auto f = factor_bivariate_linear(r.lhs_signed, n, -1)) {
        r.factored_signed = true;
        r.factors_signed = *f;
        r.coeffs_ok_signed =
            detail::factor_multisets_match(*f, a.eps_star, T.coexponents);
    }
    r.collapse_ok = detail::collapses_to(r.lhs_unsigned, lhs_solomon(G, false)) &&
                    detail::collapses_to(r.lhs_signed, lhs_solomon(G, true));
    r.ok = r.factored_unsigned && r.factored_signed && r.coeffs_ok_unsigned &&
           r.coeffs_ok_signed && r.collapse_ok;
    return r;
}

/// Render a factor list the way the worked examples print them: factors in
/// descending x-coefficient (then descending y), e.g. "(1+8x+3y)(1+4x+3y)".
inline std::string factors_str(std::vector<BiFactor> fs, int sign = 1) {
    std::sort(fs.begin(), fs.end(), [](const BiFactor& l, const BiFactor& r) {
        return std::pair(l.a, l.b) > std::pair(r.a, r.b);
    });
    std::string out;
    const char* op = sign < 0 ? "-" : "+";
    for (const auto& f : fs) {
        out += "(1";
        for (auto [c, v] : {std::pair{f.a, 'x'}, {f.b, 'y'}}) {
            if (c == 0) continue;
            out += op;
            if (c != 1) out += std::to_string(c);
            out += v;
        }
        out += ")";
    }
    return out;
}

/// One-variable checks: the unsigned/signed sums over x^{M_V(g)} against
/// prod (1 + e_i x) and prod (1 - e*_i x).
inline bool verify_solomon(const ReflGroup& G, const InvariantTable& T) {
    auto expand = [](const std::vector<int>& es, long long sgn) {
        std::vector<long long> p{1};
        for (int e : es) {
            std::vector<long long> q(p.size() + 1, 0);
            for (std::size_t i = 0; i < p.size(); ++i) {
                q[i] += p[i];
                q[i + 1] += sgn * e * p[i];
            }
            p = std::move(q);
        }
        return p;
    };
    return lhs_solomon(G, false) == expand(T.exponents, +1) &&
           lhs_solomon(G, true) == expand(T.coexponents, -1);
}

} // namespace reflex
