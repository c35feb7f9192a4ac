#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reflex/epsrep.hpp"
#include "reflex/reflection_group.hpp"

namespace reflex {

/// Sparse bivariate polynomial over the integers, (i,j) -> coeff of x^i y^j.
using BiPoly = std::map<std::pair<int, int>, long long>;

/// A linear factor 1 + a*x + b*y (or 1 - a*x - b*y when the product is
/// built with sign = -1).
struct BiFactor {
    int a = 0, b = 0;
    auto operator<=>(const BiFactor&) const = default;
};

inline BiPoly bipoly_mul(const BiPoly& p, const BiPoly& q) {
    BiPoly out;
    for (const auto& [pe, pc] : p)
        for (const auto& [qe, qc] : q)
            out[{pe.first + qe.first, pe.second + qe.second}] += pc * qc;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline BiPoly bipoly_product(const std::vector<BiFactor>& factors, int sign = 1) {
    BiPoly p{{{0, 0}, 1}};
    for (const auto& f : factors) {
        BiPoly lin{{{0, 0}, 1}};
        if (f.a != 0) lin[{1, 0}] = sign * f.a;
        if (f.b != 0) lin[{0, 1}] = sign * f.b;
        p = bipoly_mul(p, lin);
    }
    return p;
}

inline std::string bipoly_str(const BiPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : p) {
        if (!s.empty()) s += c >= 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        long long a = c < 0 ? -c : c;
        std::string mono;
        if (e.first == 1) mono += "x";
        else if (e.first > 1) mono += "x^" + std::to_string(e.first);
        if (e.second == 1) mono += "y";
        else if (e.second > 1) mono += "y^" + std::to_string(e.second);
        if (a != 1 || mono.empty()) s += std::to_string(a);
        s += mono;
    }
    return s;
}

/// Solomon sum: sum over g of x^{M_V(g)}, det-weighted when signed. The
/// cyclotomic parts of a signed sum must cancel to integers.
inline std::vector<long long> lhs_solomon(const ReflGroup& G, bool signed_sum) {
    std::vector<Cyclo> acc(G.rank() + 1, Cyclo(0));
    for (std::size_t e = 0; e < G.size(); ++e) {
        Cyclo w = signed_sum ? G.det(e) : Cyclo(1);
        acc[G.MV(e)] = acc[G.MV(e)] + w;
    }
    std::vector<long long> out;
    for (const auto& c : acc) {
        if (!c.is_rational() || !is_integer(c.rational_value()))
            throw std::runtime_error(G.name() + ": Solomon sum coefficient not an integer");
        out.push_back(c.rational_value().get_num().get_si());
    }
    return out;
}

/// Two-orbit sum: sum over g of (x/y)^{M_eps(g)} y^{M_V(g)}, i.e. the
/// monomial x^{M_eps} y^{M_V - M_eps}; det-weighted when signed. Fails if
/// dominance M_eps <= M_V is violated (negative y exponent).
inline BiPoly lhs_two_orbit(const ReflGroup& G, const EpsRep& rep, bool signed_sum) {
    std::map<std::pair<int, int>, Cyclo> acc;
    for (std::size_t e = 0; e < G.size(); ++e) {
        int i = rep.M[e], j = G.MV(e) - rep.M[e];
        if (j < 0) throw std::runtime_error(G.name() + ": dominance violated");
        Cyclo w = signed_sum ? G.det(e) : Cyclo(1);
        auto it = acc.try_emplace({i, j}, Cyclo(0)).first;
        it->second = it->second + w;
    }
    BiPoly out;
    for (const auto& [e, c] : acc) {
        if (c.is_zero()) continue;
        if (!c.is_rational() || !is_integer(c.rational_value()))
            throw std::runtime_error(G.name() + ": two-orbit sum coefficient not an integer");
        out[e] = c.rational_value().get_num().get_si();
    }
    return out;
}

/// Exact division of p by (1 + a x + b y) (or its sign = -1 variant);
/// nullopt when the division has a remainder.
inline std::optional<BiPoly> bipoly_divide_linear(const BiPoly& p, BiFactor f, int sign) {
    if (p.empty()) return BiPoly{};
    int dx = 0, dy = 0;
    for (const auto& [e, c] : p) {
        dx = std::max(dx, e.first);
        dy = std::max(dy, e.second);
    }
    BiPoly q;
    auto coeff = [](const BiPoly& m, int i, int j) -> long long {
        auto it = m.find({i, j});
        return it == m.end() ? 0 : it->second;
    };
    for (int d = 0; d <= dx + dy; ++d)
        for (int i = std::max(0, d - dy); i <= std::min(d, dx); ++i) {
            int j = d - i;
            long long c = coeff(p, i, j) - (long long)sign * f.a * coeff(q, i - 1, j) -
                          (long long)sign * f.b * coeff(q, i, j - 1);
            if (c != 0) q[{i, j}] = c;
        }
    if (bipoly_mul(q, bipoly_product({f}, sign)) == p) return q;
    return std::nullopt;
}

/// Factor p as a product of n linear terms 1 + a x + b y with nonnegative
/// integers a, b (after sign normalization); empty optional on failure.
inline std::optional<std::vector<BiFactor>> factor_bivariate_linear(const BiPoly& p,
                                                                    int n, int sign = 1) {
    if (p.find({0, 0}) == p.end() || p.at({0, 0}) != 1) return std::nullopt;
    if (n == 0) {
        if (p.size() == 1) return std::vector<BiFactor>{};
        return std::nullopt;
    }
    // bounds: the degree-1 coefficients are the sums of the a_i and b_i
    auto get = [&](int i, int j) -> long long {
        auto it = p.find({i, j});
        return it == p.end() ? 0 : it->second;
    };
    long long A = sign * get(1, 0), B = sign * get(0, 1);
    if (A < 0 || B < 0) return std::nullopt;
    for (int a = (int)A; a >= 0; --a)
        for (int b = (int)B; b >= 0; --b) {
            if (a == 0 && b == 0) continue;
            auto q = bipoly_divide_linear(p, {a, b}, sign);
            if (!q) continue;
            auto rest = factor_bivariate_linear(*q, n - 1, sign);
            if (rest) {
                rest->push_back({a, b});
                std::sort(rest->begin(), rest->end());
                return rest;
            }
        }
    return std::nullopt;
}

/// Outcome of one identity check, kept as data for reporting.
struct IdentityReport {
    std::string group, what;
    bool ok = false;
    BiPoly lhs, rhs;
};

inline IdentityReport verify_identity(const ReflGroup& G, const EpsRep& rep,
                                      bool signed_sum, const std::vector<BiFactor>& rhs) {
    IdentityReport rep_out;
    rep_out.group = G.name();
    rep_out.what = std::string(signed_sum ? "signed" : "unsigned") + " orbit " + rep.orbit;
    rep_out.lhs = lhs_two_orbit(G, rep, signed_sum);
    rep_out.rhs = bipoly_product(rhs, signed_sum ? -1 : 1);
    rep_out.ok = rep_out.lhs == rep_out.rhs;
    return rep_out;
}

} // namespace reflex
