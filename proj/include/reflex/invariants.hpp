#pragma once

#include <map>

#include "reflex/reflection_group.hpp"
#include "reflex/series.hpp"

namespace reflex {

/// Sum over the group of chi(g) / det(1 - q g), truncated at order D.
/// Elements sharing a characteristic polynomial are batched.
inline CSeries group_molien_sum(const ReflGroup& G, const std::vector<Cyclo>& chi, int D) {
    std::map<int, Cyclo> class_chi;
    for (std::size_t e = 0; e < G.size(); ++e) {
        auto it = class_chi.try_emplace(G.detq_key(e), Cyclo(0)).first;
        it->second = it->second + chi[e];
    }
    CSeries total(D + 1, Cyclo(0));
    for (const auto& [key, sum] : class_chi) {
        if (sum.is_zero()) continue;
        CSeries inv = cseries_inverse(G.detq_polys()[key], D);
        for (int i = 0; i <= D; ++i) total[i] = total[i] + sum * inv[i];
    }
    return total;
}

/// Invariant-ring degrees d_1 <= ... <= d_n peeled off the Molien series
/// M(q) = (1/|G|) sum 1/det(1-qg) = prod 1/(1-q^{d_i}).
inline std::vector<int> molien_degrees(const ReflGroup& G) {
    int D = (int)G.reflections().size() + 2;
    std::vector<Cyclo> ones(G.size(), Cyclo(1));
    CSeries M = group_molien_sum(G, ones, D);
    Cyclo order_inv = Cyclo(rat(1, (long)G.size()));
    for (auto& c : M) c = c * order_inv;
    std::vector<int> degs;
    for (int k = 0; k < G.rank(); ++k) {
        int d = 0;
        for (int i = 1; i <= D; ++i)
            if (!M[i].is_zero()) { d = i; break; }
        if (d == 0) throw std::runtime_error("Molien peeling ran out of degrees");
        degs.push_back(d);
        // M *= (1 - q^d)
        for (int i = D; i >= d; --i) M[i] = M[i] - M[i - d];
    }
    for (int i = 1; i <= D; ++i)
        if (!M[i].is_zero())
            throw std::runtime_error("Molien series is not a product of " +
                                     std::to_string(G.rank()) + " factors");
    if (!(M[0] == Cyclo(1)))
        throw std::runtime_error("Molien series has wrong constant term");
    std::sort(degs.begin(), degs.end());
    return degs;
}

/// Fake degrees of the representation with character chi: the multiset of
/// degrees in which it occurs in the coinvariant algebra,
///   f(q) = prod (1-q^{d_i}) * (1/|G|) sum_g chi(g)/det(1-qg),
/// returned with multiplicity = coefficient. The multiset has size dim.
inline std::vector<int> fake_degrees(const ReflGroup& G, const std::vector<Cyclo>& chi,
                                     int dim, const std::vector<int>& degrees) {
    int D = (int)G.reflections().size() + 2;
    CSeries f = group_molien_sum(G, chi, D);
    Cyclo order_inv = Cyclo(rat(1, (long)G.size()));
    for (auto& c : f) c = c * order_inv;
    for (int d : degrees)
        for (int i = D; i >= d; --i) f[i] = f[i] - f[i - d];
    std::vector<int> out;
    for (int i = 0; i <= D; ++i) {
        if (f[i].is_zero()) continue;
        if (!f[i].is_rational() || !is_integer(f[i].rational_value()) ||
            f[i].rational_value() < 0)
            throw std::runtime_error("fake-degree polynomial has a bad coefficient");
        long c = f[i].rational_value().get_num().get_si();
        for (long k = 0; k < c; ++k) out.push_back(i);
    }
    if ((int)out.size() != dim)
        throw std::runtime_error("fake-degree multiset has wrong size");
    return out;
}

/// The group's basic numerical invariants. Exponents are checked to be the
/// fake degrees of V, coexponents are the fake degrees of V*.
struct InvariantTable {
    std::vector<int> degrees;     // ascending
    std::vector<int> exponents;   // ascending, e_i = d_i - 1
    std::vector<int> coexponents; // ascending
    bool well_generated = false;
};

inline std::vector<Cyclo> conj_chi(const std::vector<Cyclo>& chi) {
    std::vector<Cyclo> out;
    out.reserve(chi.size());
    for (const auto& c : chi) out.push_back(c.conj());
    return out;
}

inline InvariantTable invariant_table(const ReflGroup& G) {
    InvariantTable t;
    t.degrees = molien_degrees(G);
    std::vector<Cyclo> chiV;
    for (std::size_t e = 0; e < G.size(); ++e) chiV.push_back(G.chiV(e));
    t.exponents = fake_degrees(G, chiV, G.rank(), t.degrees);
    for (int i = 0; i < G.rank(); ++i)
        if (t.exponents[i] + 1 != t.degrees[i])
            throw std::runtime_error(G.name() + ": exponents do not match degrees");
    t.coexponents = fake_degrees(G, conj_chi(chiV), G.rank(), t.degrees);
    // well-generated iff e_i + e*_{n+1-i} = e_n + 1 for all i
    t.well_generated = true;
    int n = G.rank();
    for (int i = 0; i < n; ++i)
        if (t.exponents[i] + t.coexponents[n - 1 - i] != t.exponents[n - 1] + 1)
            t.well_generated = false;
    return t;
}

} // namespace reflex
