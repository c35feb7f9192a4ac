#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflex/bipoly.hpp"
#include "reflex/rootsys.hpp"

namespace reflex {

/// Dense integer polynomial in one variable, index = exponent.
using ZPoly = std::vector<mpz_class>;

inline ZPoly zp_trim(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return zp_trim(c);
}

/// q^d - 1 (for sign = -1 the polynomial 1 - q^d is obtained by negation).
inline ZPoly zp_qpow_minus_one(int d) {
    ZPoly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    return p;
}

/// 1 + q^d + q^{2d} + ... + q^{(k-1)d}
inline ZPoly zp_geometric(int d, int k) {
    ZPoly p((k - 1) * d + 1, 0);
    for (int i = 0; i < k; ++i) p[i * d] = 1;
    return p;
}

/// Exact division; throws when the remainder is nonzero.
inline ZPoly zp_divexact(ZPoly num, const ZPoly& den) {
    ZPoly d = zp_trim(den);
    num = zp_trim(num);
    if (d.empty()) throw std::invalid_argument("polynomial division by zero");
    if (num.empty()) return {};
    if (num.size() < d.size()) throw std::runtime_error("inexact polynomial division");
    ZPoly q(num.size() - d.size() + 1, 0);
    for (int i = (int)q.size() - 1; i >= 0; --i) {
        mpz_class c = num[i + d.size() - 1];
        if (c % d.back() != 0) throw std::runtime_error("inexact polynomial division");
        c /= d.back();
        q[i] = c;
        for (std::size_t j = 0; j < d.size(); ++j) num[i + j] -= c * d[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::runtime_error("inexact polynomial division");
    return zp_trim(q);
}

/// Truncated product of a power series (length D+1) with a polynomial.
inline ZPoly zs_mul(const ZPoly& a, const ZPoly& b, int D) {
    ZPoly c(D + 1, 0);
    for (std::size_t i = 0; i < a.size() && (int)i <= D; ++i)
        for (std::size_t j = 0; j < b.size() && (int)(i + j) <= D; ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

/// Truncated inverse of a polynomial with constant term +-1.
inline ZPoly zs_inverse(const ZPoly& p, int D) {
    if (p.empty() || (p[0] != 1 && p[0] != -1))
        throw std::invalid_argument("series inverse needs unit constant term");
    ZPoly inv(D + 1, 0);
    inv[0] = 1 / p[0];
    for (int k = 1; k <= D; ++k) {
        mpz_class s = 0;
        for (int j = 1; j <= k && j < (int)p.size(); ++j) s += p[j] * inv[k - j];
        inv[k] = -s / p[0];
    }
    return inv;
}

// --- finite Weyl group enumeration -------------------------------------------

/// All elements of W, each recorded as the permutation it induces on the
/// root indices of R (positives first). BFS over products of simple
/// reflections, so the discovery depth is the Coxeter length.
inline std::vector<std::vector<int>> enumerate_weyl(const RootSystem& R) {
    int total = 2 * R.num_positive();
    std::vector<int> id(total);
    for (int j = 0; j < total; ++j) id[j] = j;
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> out{id}, frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int i = 0; i < R.rank(); ++i) {
                std::vector<int> v(total);
                for (int j = 0; j < total; ++j) v[j] = R.reflect(i, w[j]);
                if (seen.insert(v).second) {
                    out.push_back(v);
                    next.push_back(std::move(v));
                }
            }
        frontier = std::move(next);
    }
    return out;
}

/// sum over W of q^{l(w)} (weighted = false) or q^{L_S(w)} (weighted =
/// true), where L_S adds the squared length of each inverted root.
inline ZPoly weyl_length_poly(const RootSystem& R, bool weighted) {
    auto W = enumerate_weyl(R);
    std::map<int, mpz_class> acc;
    for (const auto& w : W) {
        int L = 0;
        for (int j = 0; j < R.num_positive(); ++j)
            if (!R.is_positive(w[j])) L += weighted ? R.positive(j).weight : 1;
        acc[L] += 1;
    }
    ZPoly p(acc.rbegin()->first + 1, 0);
    for (const auto& [e, c] : acc) p[e] = c;
    return p;
}

/// Closed product forms: prod (q^{d_i}-1)/(q-1), with the extra factor
/// prod (1+q^{delta_i}+...+q^{delta_i(r-1)})/(1+q+...+q^{r-1}) when
/// weighted.
inline ZPoly weyl_closed_poly(const RootSystem& R, bool weighted) {
    ZPoly p{1};
    for (int d : R.degrees()) p = zp_mul(p, zp_geometric(1, d));
    if (weighted) {
        int r = R.r();
        for (int eps : R.short_exponents()) p = zp_mul(p, zp_geometric(eps + 1, r));
        ZPoly den = zp_geometric(1, r);
        for (std::size_t i = 0; i < R.short_exponents().size(); ++i)
            p = zp_divexact(p, den);
    }
    return p;
}

/// The root-product form of the weighted sum:
///   prod over positive roots of (q^{|a|^2 + Ht(a)} - 1)/(q^{Ht(a)} - 1),
/// with Ht the height weighted by the squared lengths of the simple roots.
inline ZPoly macdonald_product(const RootSystem& R) {
    ZPoly num{1};
    for (int i = 0; i < R.num_positive(); ++i) {
        const Root& a = R.positive(i);
        num = zp_mul(num, zp_qpow_minus_one(a.weight + a.weighted_height));
    }
    for (int i = 0; i < R.num_positive(); ++i)
        num = zp_divexact(num, zp_qpow_minus_one(R.positive(i).weighted_height));
    return num;
}

// --- affine Weyl group --------------------------------------------------------

namespace detail {

/// Solve (over the span of the simple roots) for the point v with
/// (v, alpha_i^vee) = 1 for every simple root; v/(max pairing + 1) is then
/// an interior point of the fundamental alcove.
inline std::vector<Rat> fundamental_interior_point(const RootSystem& R) {
    int n = R.rank(), d = R.ambient_dim();
    // v = sum x_k alpha_k; A x = 1 with A_{ik} = (alpha_k, alpha_i^vee)
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k)
            A[i][k] = R.coroot_pairing(R.positive(R.simple_index(k)).vec,
                                       R.simple_index(i));
        A[i][n] = 1;
    }
    for (int c = 0; c < n; ++c) { // Gaussian elimination
        int piv = c;
        while (piv < n && A[piv][c] == 0) ++piv;
        if (piv == n) throw std::runtime_error("singular Cartan system");
        std::swap(A[c], A[piv]);
        for (int rr = 0; rr < n; ++rr) {
            if (rr == c || A[rr][c] == 0) continue;
            Rat f = A[rr][c] / A[c][c];
            for (int k = c; k <= n; ++k) A[rr][k] -= f * A[c][k];
        }
    }
    std::vector<Rat> v(d, Rat(0));
    for (int k = 0; k < n; ++k) {
        Rat x = A[k][n] / A[k][k];
        const auto& a = R.positive(R.simple_index(k)).vec;
        for (int j = 0; j < d; ++j) v[j] += x * a[j];
    }
    Rat mx(0);
    for (int i = 0; i < R.num_positive(); ++i)
        mx = std::max(mx, R.coroot_pairing(v, i));
    Rat scale = mx + 1;
    for (auto& x : v) x /= scale;
    return v;
}

/// Index of the positive root whose coroot is the highest coroot; the
/// hyperplane {(x, alpha^vee) = 1} through it is the affine wall of the
/// fundamental alcove of the arrangement {(x, alpha^vee) = k}.
inline int highest_coroot_index(const RootSystem& R) {
    std::vector<Rat> v = fundamental_interior_point(R);
    int best = 0;
    Rat mx(-1);
    for (int i = 0; i < R.num_positive(); ++i) {
        Rat p = R.coroot_pairing(v, i);
        if (p > mx) {
            mx = p;
            best = i;
        }
    }
    return best;
}

inline long rat_floor(const Rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q.get_si();
}

/// Number of hyperplanes {(x, a^vee) = k}, k integer, separating a point
/// with pairing value v from the fundamental alcove (pairing in (0,1)).
inline long separations(const Rat& v) {
    // v is never an integer (interior points); for v > 0 the separating
    // levels are k = 1..floor(v), for v < 0 they are k = floor(v)+1..0
    return v > 0 ? rat_floor(v) : -rat_floor(v);
}

} // namespace detail

/// sum over the affine Weyl group of q^{L_S(w)} (or q^{l(w)}), truncated at
/// q^D. Alcoves are explored by BFS on the affine generators (the simple
/// reflections and the reflection in {(x, theta^vee) = 1}); the statistic of
/// an alcove is the weighted count of hyperplanes separating it from the
/// fundamental alcove, which bounds the BFS depth from below.
inline ZPoly affine_length_series(const RootSystem& R, int D, bool weighted) {
    int n = R.rank(), d = R.ambient_dim();
    std::vector<Rat> p0 = detail::fundamental_interior_point(R);
    // generator data: (root index, level k)
    std::vector<std::pair<int, int>> gens;
    for (int i = 0; i < n; ++i) gens.push_back({R.simple_index(i), 0});
    gens.push_back({detail::highest_coroot_index(R), 1});
    auto stat = [&](const std::vector<Rat>& p) {
        long L = 0;
        for (int i = 0; i < R.num_positive(); ++i)
            L += detail::separations(R.coroot_pairing(p, i)) *
                 (weighted ? R.positive(i).weight : 1);
        return L;
    };
    ZPoly out(D + 1, 0);
    std::set<std::vector<Rat>> seen{p0};
    std::vector<std::vector<Rat>> frontier{p0};
    out[0] = 1;
    int depth = 0;
    while (!frontier.empty() && depth <= D) {
        ++depth;
        std::vector<std::vector<Rat>> next;
        for (const auto& p : frontier)
            for (auto [ri, k] : gens) {
                Rat v = R.coroot_pairing(p, ri) - k;
                std::vector<Rat> q(d);
                const auto& a = R.positive(ri).vec;
                for (int j = 0; j < d; ++j) q[j] = p[j] - v * a[j];
                if (!seen.insert(q).second) continue;
                long L = stat(q);
                if (L <= D) out[L] += 1;
                next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return out;
}

/// Truncation of the affine closed form
///   (1-q)^{-n} prod_i (q^{d_i}-1)/(q^{e_i}-1)
/// and, when weighted, additionally for each reflexponent eps_i (writing
/// delta_i = eps_i + 1):
///   (q^{eps_i}-1)/(q^{eps_i r}-1) * (1+q^{delta_i}+...+q^{delta_i(r-1)})/(1+q+...+q^{r-1}).
/// The second factor is exactly the weighted/unweighted ratio of the finite
/// Poincare polynomials, so the whole product equals
///   (finite weighted sum) * prod (q^{eps_i}-1)/(q^{eps_i r}-1) * prod 1/(1-q^{e_i}),
/// matching the affine/finite ratio observed by direct alcove enumeration.
inline ZPoly affine_closed_series(const RootSystem& R, int D, bool weighted) {
    ZPoly s(D + 1, 0);
    s[0] = 1;
    auto inv_negated = [&](int d) { // 1/(1-q^d) truncated
        ZPoly g(D + 1, 0);
        for (int i = 0; i * d <= D; ++i) g[i * d] = 1;
        return g;
    };
    for (int i = 0; i < R.rank(); ++i) s = zs_mul(s, inv_negated(1), D);
    auto es = R.exponents();
    auto ds = R.degrees();
    for (int i = 0; i < R.rank(); ++i) {
        // (q^d - 1)/(q^e - 1) = (1 - q^d)/(1 - q^e)
        s = zs_mul(s, zp_mul(zp_qpow_minus_one(ds[i]), ZPoly{-1}), D);
        s = zs_mul(s, zs_inverse(zp_mul(zp_qpow_minus_one(es[i]), ZPoly{-1}), D), D);
    }
    if (weighted) {
        int r = R.r();
        for (int eps : R.short_exponents()) {
            s = zs_mul(s, zp_mul(zp_qpow_minus_one(eps), ZPoly{-1}), D);
            s = zs_mul(s, zs_inverse(zp_mul(zp_qpow_minus_one(eps * r), ZPoly{-1}), D), D);
            s = zs_mul(s, zp_geometric(eps + 1, r), D);
            s = zs_mul(s, zs_inverse(zp_geometric(1, r), D), D);
        }
    }
    return s;
}

// --- dihedral two-parameter sums ----------------------------------------------

/// sum over I_2(2b) of q1^{#(inv in even-root class)} q2^{#(inv in odd
/// class)}, computed from the action on the 4b roots at angles j*pi/(2b).
inline BiPoly dihedral_two_param_sum(int b) {
    int m = 2 * b, total = 2 * m;
    // reflections: j -> 2k + m - j (mod 2m) for k = 0..2m-1; rotations are
    // products of two reflections. Generate the group on indices.
    auto refl = [&](int k) {
        std::vector<int> im(total);
        for (int j = 0; j < total; ++j) im[j] = ((2 * k + m - j) % total + total) % total;
        return im;
    };
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    std::vector<int> id(total);
    for (int j = 0; j < total; ++j) id[j] = j;
    seen.insert(id);
    frontier.push_back(id);
    auto s = refl(0), t = refl(1);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (const auto& g : {s, t}) {
                std::vector<int> v(total);
                for (int j = 0; j < total; ++j) v[j] = g[w[j]];
                if (seen.insert(v).second) next.push_back(std::move(v));
            }
        frontier = std::move(next);
    }
    BiPoly out;
    for (const auto& w : seen) {
        int a = 0, c = 0;
        for (int j = 0; j < m; ++j)
            if (w[j] >= m) (j % 2 == 0 ? a : c) += 1;
        out[{a, c}] += 1;
    }
    return out;
}

/// (1+q1)(1+q2)(1-(q1 q2)^b)/(1-q1 q2), expanded.
inline BiPoly dihedral_two_param_closed(int b) {
    BiPoly geo;
    for (int k = 0; k < b; ++k) geo[{k, k}] = 1;
    BiPoly f1{{{0, 0}, 1}, {{1, 0}, 1}};
    BiPoly f2{{{0, 0}, 1}, {{0, 1}, 1}};
    return bipoly_mul(bipoly_mul(f1, f2), geo);
}

/// Substitute q1 = q^w1, q2 = q^w2 into a two-parameter sum.
inline ZPoly bipoly_specialize(const BiPoly& p, int w1, int w2) {
    int dmax = 0;
    for (const auto& [e, c] : p) dmax = std::max(dmax, e.first * w1 + e.second * w2);
    ZPoly out(dmax + 1, 0);
    for (const auto& [e, c] : p) out[e.first * w1 + e.second * w2] += (long)c;
    return out;
}

/// Weighting one reflection class by b: the closed form
/// ((1+q^{b+1}+...+q^{(b+1)(b-1)})/(1+q+...+q^{b-1})) (q^2-1)/(q-1) (q^{2b}-1)/(q-1).
inline ZPoly dihedral_weighted_closed(int b) {
    ZPoly p = zp_geometric(b + 1, b);
    p = zp_mul(p, zp_geometric(1, 2));
    p = zp_mul(p, zp_geometric(1, 2 * b));
    return zp_divexact(p, zp_geometric(1, b));
}

// --- Chevalley group orders -----------------------------------------------------

/// |X(q)| = q^N prod (q^{d_i}-1) for the untwisted group of type X.
inline mpz_class chevalley_order(char type, int rank, const mpz_class& q) {
    RootSystem R = RootSystem::build(type, rank);
    mpz_class order;
    mpz_pow_ui(order.get_mpz_t(), q.get_mpz_t(), R.num_positive());
    for (int d : R.degrees()) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), q.get_mpz_t(), d);
        order *= f - 1;
    }
    return order;
}

/// Twisted orders via q^N prod (1+q^{delta_i}+...+q^{delta_i(r-1)})
/// prod (q^{d_i}-1), N positive roots of the simply-laced type X, the rest
/// read from the folded type Y. `kind` is one of "2A" (X = A_n, n odd,
/// Y = B_{(n+1)/2}), "2D" (X = D_n, Y = C_{n-1}), "3D4" (Y = G2), "2E6"
/// (Y = F4); `n` is the rank of X.
inline mpz_class twisted_order(const std::string& kind, int n, const mpz_class& q) {
    int N = 0, r = 2;
    std::vector<int> degrees, short_degrees;
    if (kind == "2A") {
        if (n % 2 == 0 || n < 3) throw std::invalid_argument("2A needs odd rank >= 3");
        int k = (n + 1) / 2;
        N = n * (n + 1) / 2;
        for (int i = 1; i <= k; ++i) degrees.push_back(2 * i);
        for (int i = 1; i < k; ++i) short_degrees.push_back(2 * i + 1); // B_k
    } else if (kind == "2D") {
        if (n < 3) throw std::invalid_argument("2D needs rank >= 3");
        int k = n - 1;
        N = n * (n - 1);
        for (int i = 1; i < k; ++i) degrees.push_back(2 * i);
        degrees.push_back(2 * k);
        short_degrees = {k + 1}; // C_k
    } else if (kind == "3D4") {
        if (n != 4) throw std::invalid_argument("3D4 has rank 4");
        N = 12;
        r = 3;
        degrees = {2, 6};
        short_degrees = {4}; // G2
    } else if (kind == "2E6") {
        if (n != 6) throw std::invalid_argument("2E6 has rank 6");
        N = 36;
        degrees = {2, 6, 8, 12};
        short_degrees = {5, 9}; // F4
    } else {
        throw std::invalid_argument("unknown twist kind " + kind);
    }
    mpz_class order;
    mpz_pow_ui(order.get_mpz_t(), q.get_mpz_t(), N);
    for (int d : short_degrees) {
        mpz_class f = 0, qd;
        mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
        mpz_class pw = 1;
        for (int i = 0; i < r; ++i) {
            f += pw;
            pw *= qd;
        }
        order *= f;
    }
    for (int d : degrees) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), q.get_mpz_t(), d);
        order *= f - 1;
    }
    return order;
}

} // namespace reflex
