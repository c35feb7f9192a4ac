#pragma once

#include "reflex/exceptional.hpp"
#include "reflex/invariants.hpp"
#include "reflex/reflection_group.hpp"

namespace reflex {

/// A representation used on one side of the two-variable identities:
/// either a genuine V_eps (well-restricted orbit) or one of the U_t
/// substitutes. Only the per-element data the series layer needs is kept.
struct EpsRep {
    std::string kind;
    char orbit = '?';
    int dim = 0;
    std::vector<int> M;      // rank of rep(g) - 1, per element id
    std::vector<Cyclo> chi;  // character, per element id
};

namespace detail {

inline EpsRep eps_from_images(const ReflGroup& G, char orbit, std::string kind,
                              const std::vector<CycMatrix>& images) {
    auto img = G.matgrp()->extend_images(images); // throws unless a homomorphism
    EpsRep r;
    r.kind = std::move(kind);
    r.orbit = orbit;
    r.dim = images[0].dim();
    CycMatrix I = CycMatrix::identity(r.dim);
    for (const auto& m : img) {
        r.M.push_back((m - I).rank());
        r.chi.push_back(m.trace());
    }
    return r;
}

} // namespace detail

/// The reflection representation itself; V_eps when the orbit is all of H.
inline EpsRep eps_rep_V(const ReflGroup& G, char orbit) {
    EpsRep r;
    r.kind = "reflection";
    r.orbit = orbit;
    r.dim = G.rank();
    for (std::size_t e = 0; e < G.size(); ++e) {
        r.M.push_back(G.MV(e));
        r.chi.push_back(G.chiV(e));
    }
    return r;
}

/// V_s of G(m,b,n), m = ab with a > 1: the character g -> zeta_m^{sum of
/// decorations}. Its restriction to the parabolic generated by a single
/// diagonal reflection diag(zeta_a, 1, ..., 1) is that group's reflection
/// representation, which pins V_s down among the linear characters.
inline EpsRep eps_rep_infinite_s(const ReflGroup& G) {
    const MonomialGroup* M = G.mono();
    if (!M || M->a() <= 1) throw std::invalid_argument("V_s needs G(m,b,n) with m/b > 1");
    int m = M->m();
    EpsRep r;
    r.kind = "linear-character";
    r.orbit = 's';
    r.dim = 1;
    for (std::size_t e = 0; e < M->size(); ++e) {
        int sum = 0;
        for (int d : M->elt(e).decor) sum += d;
        r.M.push_back(sum % m == 0 ? 0 : 1);
        r.chi.push_back(Cyclo::root_of_unity(m, sum));
    }
    return r;
}

/// V_t of G(a,1,n): the reflection representation of the underlying S_n.
inline EpsRep eps_rep_infinite_t(const ReflGroup& G) {
    const MonomialGroup* M = G.mono();
    if (!M || M->b() != 1 || M->rank() < 2)
        throw std::invalid_argument("V_t needs G(a,1,n), n >= 2");
    EpsRep r;
    r.kind = "perm-quotient";
    r.orbit = 't';
    r.dim = M->rank() - 1;
    for (std::size_t e = 0; e < M->size(); ++e) {
        const auto& g = M->elt(e);
        int fix = 0;
        for (int j = 0; j < M->rank(); ++j)
            if (g.perm[j] == j) ++fix;
        r.M.push_back(M->rank() - (int)M->cycles(g).size());
        r.chi.push_back(Cyclo(fix - 1));
    }
    return r;
}

/// U_t of G(ab,b,n), a,b > 1: reduce decorations mod b and use the monomial
/// reflection representation of G(b,b,n) (section 5 substitute for the
/// non-well-restricted t orbit).
inline EpsRep eps_rep_U_t(const ReflGroup& G) {
    const MonomialGroup* M = G.mono();
    if (!M || M->a() <= 1 || M->b() <= 1)
        throw std::invalid_argument("U_t needs G(ab,b,n) with a,b > 1");
    int b = M->b(), n = M->rank();
    EpsRep r;
    r.kind = "mod-b-quotient";
    r.orbit = 't';
    r.dim = n;
    for (std::size_t e = 0; e < M->size(); ++e) {
        const auto& g = M->elt(e);
        int zero = 0;
        for (auto [len, sum] : M->cycles(g))
            if (sum % b == 0) ++zero;
        r.M.push_back(n - zero);
        Cyclo tr(0);
        for (int j = 0; j < n; ++j)
            if (g.perm[j] == j) tr = tr + Cyclo::root_of_unity(b, g.decor[j]);
        r.chi.push_back(tr);
    }
    return r;
}

/// U'_t of G(ab,b,n): forget decorations, S_n reflection representation.
inline EpsRep eps_rep_U_t_prime(const ReflGroup& G) {
    const MonomialGroup* M = G.mono();
    if (!M || M->rank() < 2) throw std::invalid_argument("U'_t needs G(m,b,n), n >= 2");
    EpsRep r;
    r.kind = "perm-quotient";
    r.orbit = 't';
    r.dim = M->rank() - 1;
    for (std::size_t e = 0; e < M->size(); ++e) {
        const auto& g = M->elt(e);
        int fix = 0;
        for (int j = 0; j < M->rank(); ++j)
            if (g.perm[j] == j) ++fix;
        r.M.push_back(M->rank() - (int)M->cycles(g).size());
        r.chi.push_back(Cyclo(fix - 1));
    }
    return r;
}

/// All linear characters of the group, indexed by element id. Matrix-realized
/// groups answer directly; monomial groups go through a matrix twin whose
/// element ids are translated back.
inline std::vector<std::vector<Cyclo>> linear_characters_of(const ReflGroup& G) {
    if (G.matgrp()) return G.matgrp()->linear_characters();
    const MonomialGroup* M = G.mono();
    std::vector<CycMatrix> gens;
    for (int r : G.reflections()) gens.push_back(M->matrix(M->elt(r)));
    MatGroup W(gens, G.size());
    if (W.size() != G.size())
        throw std::runtime_error(G.name() + ": matrix twin has wrong order");
    auto chars = W.linear_characters();
    std::vector<std::vector<Cyclo>> out(chars.size());
    for (std::size_t e = 0; e < G.size(); ++e) {
        int w = W.id_of(M->matrix(M->elt(e)));
        for (std::size_t k = 0; k < chars.size(); ++k) {
            auto& o = out[k];
            if (o.empty()) o.resize(G.size());
            o[e] = chars[k][w];
        }
    }
    return out;
}

/// 1-dimensional V_eps, found by searching the linear characters for two
/// conditions: chi(r) != 1 exactly for reflections r in the target orbit,
/// and chi(r) = det(r) on that orbit. The latter is the rank-one case of
/// "restricts to the reflection representation of the parabolic fixing a
/// hyperplane in the orbit", since the parabolic acts on the quotient line
/// by det. `expected` (fake degrees) breaks remaining ties; ambiguity
/// without it is an error.
inline EpsRep eps_rep_linear(const ReflGroup& G, char orbit,
                             const std::vector<int>& expected = {}) {
    const auto& orb = G.orbit(orbit);
    std::vector<char> in_orbit(G.size(), 0);
    for (int r : orb.reflections) in_orbit[r] = 1;
    std::vector<std::vector<Cyclo>> found;
    for (auto& chi : linear_characters_of(G)) {
        bool ok = true;
        for (int r : G.reflections()) {
            if ((chi[r] == Cyclo(1)) == (bool)in_orbit[r]) { ok = false; break; }
            if (in_orbit[r] && !(chi[r] == G.det(r))) { ok = false; break; }
        }
        if (ok) found.push_back(std::move(chi));
    }
    if (found.size() > 1 && !expected.empty()) {
        auto degs = molien_degrees(G);
        std::erase_if(found, [&](const std::vector<Cyclo>& chi) {
            return fake_degrees(G, chi, 1, degs) != expected;
        });
    }
    if (found.size() != 1)
        throw std::runtime_error(G.name() + ": found " + std::to_string(found.size()) +
                                 " linear characters supported on orbit " + orbit);
    EpsRep r;
    r.kind = "linear-character";
    r.orbit = orbit;
    r.dim = 1;
    r.chi = std::move(found[0]);
    for (const auto& c : r.chi) r.M.push_back(c == Cyclo(1) ? 0 : 1);
    return r;
}

/// The paper's 2-dimensional U_t of G13 (generators s, t, u; s acts
/// trivially) and its companion character U'_t.
inline EpsRep eps_rep_G13_U_t(const ReflGroup& G) {
    auto mk = [](long a, long b, long c, long d) {
        CycMatrix m(2);
        m.at(0, 0) = Cyclo(a);
        m.at(0, 1) = Cyclo(b);
        m.at(1, 0) = Cyclo(c);
        m.at(1, 1) = Cyclo(d);
        return m;
    };
    CycMatrix I = CycMatrix::identity(2), T = mk(-1, 1, 0, 1), U = mk(1, 0, 1, -1);
    // assign images by orbit membership of the generators; the two t-orbit
    // generators can receive T and U in either order, whichever extends
    std::vector<int> tgens;
    std::vector<CycMatrix> images(G.matgrp()->num_gens(), I);
    for (int j = 0; j < G.matgrp()->num_gens(); ++j) {
        int id = G.matgrp()->generator_id(j);
        bool in_t = false;
        for (int r : G.orbit('t').reflections)
            if (r == id) in_t = true;
        if (in_t) tgens.push_back(j);
    }
    if (tgens.size() != 2) throw std::runtime_error("G13: expected two t generators");
    images[tgens[0]] = T;
    images[tgens[1]] = U;
    try {
        return detail::eps_from_images(G, 't', "embedded-matrix", images);
    } catch (const std::runtime_error&) {
        std::swap(images[tgens[0]], images[tgens[1]]);
        return detail::eps_from_images(G, 't', "embedded-matrix", images);
    }
}

inline EpsRep eps_rep_G13_U_t_prime(const ReflGroup& G) {
    // s -> 1, t -> -1, u -> -1
    EpsRep r = eps_rep_linear(G, 't');
    return r;
}

/// 2-dimensional V_eps for G26 orbit t and G28 orbits s/t, via the quotient
/// by the other orbit's reflections: the in-orbit generators map to a
/// 2-dimensional reflection group (G4 for G26; W(A2) for G28), everything
/// else to the identity. Validated by the homomorphism check inside
/// extend_images.
inline EpsRep eps_rep_exceptional2(const ReflGroup& G, char orbit) {
    std::vector<CycMatrix> small;
    if (G.name() == "G26") {
        if (orbit != 't') throw std::invalid_argument("G26: 2-dim V_eps is for orbit t");
        for (const auto& t : detail::kExcGenTables)
            if (std::string(t.name) == "G4") small = detail::exceptional_generators(t);
    } else if (G.name() == "G28") {
        auto mk = [](long a, long b, long c, long d) {
            CycMatrix m(2);
            m.at(0, 0) = Cyclo(a);
            m.at(0, 1) = Cyclo(b);
            m.at(1, 0) = Cyclo(c);
            m.at(1, 1) = Cyclo(d);
            return m;
        };
        small = {mk(-1, 1, 0, 1), mk(1, 0, 1, -1)};
    } else {
        throw std::invalid_argument(G.name() + ": no embedded 2-dim V_eps");
    }
    std::vector<char> in_orbit(G.size(), 0);
    for (int r : G.orbit(orbit).reflections) in_orbit[r] = 1;
    std::vector<CycMatrix> images;
    std::size_t next = 0;
    for (int j = 0; j < G.matgrp()->num_gens(); ++j) {
        if (in_orbit[G.matgrp()->generator_id(j)]) {
            if (next >= small.size())
                throw std::runtime_error(G.name() + ": more in-orbit generators than expected");
            images.push_back(small[next++]);
        } else {
            images.push_back(CycMatrix::identity(2));
        }
    }
    if (next != small.size())
        throw std::runtime_error(G.name() + ": missing in-orbit generators");
    return detail::eps_from_images(G, orbit, "embedded-matrix", images);
}

// --- validation -------------------------------------------------------------

/// Check the defining properties: support on the orbit's reflections,
/// dominance M_rep <= M_V, and (dim >= 2) irreducibility via the character
/// norm. Throws on violation.
inline void validate_eps_rep(const ReflGroup& G, const EpsRep& rep) {
    std::vector<char> in_orbit(G.size(), 0);
    for (int r : G.orbit(rep.orbit).reflections) in_orbit[r] = 1;
    for (int r : G.reflections())
        if ((rep.M[r] >= 1) != (bool)in_orbit[r])
            throw std::runtime_error(G.name() + ": support condition fails on orbit " +
                                     rep.orbit);
    for (std::size_t e = 0; e < G.size(); ++e)
        if (rep.M[e] > G.MV(e))
            throw std::runtime_error(G.name() + ": dominance M_eps <= M_V fails");
    if (rep.dim >= 2) {
        Cyclo norm(0);
        for (const auto& c : rep.chi) norm = norm + c * c.conj();
        if (!(norm == Cyclo(Rat((long)G.size()))))
            throw std::runtime_error(G.name() + ": character norm is not 1");
    }
}

} // namespace reflex
