#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflex/polynomial.hpp"
#include "reflex/rational.hpp"

namespace reflex {

namespace detail {

/// Reduction data for one conductor: x^k mod Phi_N for k in [phi, 2*phi-2].
struct CycloReduction {
    int conductor = 1;
    int phi = 1;
    std::vector<std::vector<Rat>> high_powers; // high_powers[k - phi]
    std::vector<std::vector<Rat>> zeta_powers; // zeta^k for k in [0, N)
};

inline const CycloReduction& cyclo_reduction(int n) {
    static std::mutex mu;
    static std::map<int, CycloReduction> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    CycloReduction red;
    red.conductor = n;
    const QPoly& phi_poly = cyclotomic_polynomial(n);
    int d = phi_poly.degree();
    red.phi = d;
    if (d >= 1) {
        std::vector<Rat> cur(d, Rat(0)); // x^d mod Phi_N
        for (int i = 0; i < d; ++i) cur[i] = -phi_poly.coeff(i);
        red.high_powers.push_back(cur);
        for (int k = d + 1; k <= 2 * d - 2; ++k) {
            std::vector<Rat> nxt(d, Rat(0));
            Rat top = cur[d - 1];
            for (int i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
            if (top != 0)
                for (int i = 0; i < d; ++i) nxt[i] += top * red.high_powers[0][i];
            cur = std::move(nxt);
            red.high_powers.push_back(cur);
        }
    }
    // zeta^k tables: multiply by x repeatedly, reducing with high_powers[0]
    std::vector<Rat> z(d, Rat(0));
    z[0] = 1;
    red.zeta_powers.push_back(z);
    for (int k = 1; k < n; ++k) {
        std::vector<Rat> nxt(d, Rat(0));
        Rat top = z[d - 1];
        for (int i = d - 1; i >= 1; --i) nxt[i] = z[i - 1];
        if (d == 1) {
            // Phi_1 = x-1, Phi_2 = x+1
            nxt[0] = z[0] * (n == 1 ? 1 : -1);
        } else if (top != 0) {
            for (int i = 0; i < d; ++i) nxt[i] += top * red.high_powers[0][i];
        }
        z = std::move(nxt);
        red.zeta_powers.push_back(z);
    }
    return cache.emplace(n, std::move(red)).first->second;
}

} // namespace detail

/// An element of the cyclotomic field Q(zeta_N), stored fully reduced
/// modulo Phi_N so equality at a shared conductor is coefficient-wise.
/// Immutable after construction.
class Cyclo {
public:
    Cyclo() : n_(1), c_(1, Rat(0)) {}
    /*implicit*/ Cyclo(const Rat& r) : n_(1), c_(1, r) {}
    /*implicit*/ Cyclo(long v) : n_(1), c_(1, Rat(v)) {}

    /// zeta_N^k
    static Cyclo root_of_unity(int n, long k) {
        if (n < 1) throw std::invalid_argument("root_of_unity: N < 1");
        const auto& red = detail::cyclo_reduction(n);
        long kk = ((k % n) + n) % n;
        Cyclo out;
        out.n_ = n;
        out.c_ = red.zeta_powers[static_cast<std::size_t>(kk)];
        return out;
    }

    static Cyclo from_coeffs(int n, std::vector<Rat> coeffs) {
        const auto& red = detail::cyclo_reduction(n);
        if (static_cast<int>(coeffs.size()) != red.phi)
            throw std::invalid_argument("from_coeffs: wrong length");
        Cyclo out;
        out.n_ = n;
        out.c_ = std::move(coeffs);
        return out;
    }

    int conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    /// Requires is_rational().
    const Rat& rational_value() const {
        if (!is_rational()) throw std::domain_error("Cyclo: not rational");
        return c_[0];
    }

    /// Image under zeta_N -> zeta_M^(M/N); requires N | M.
    Cyclo embedded(int m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw std::invalid_argument("embedded: N does not divide M");
        const auto& red = detail::cyclo_reduction(m);
        int step = m / n_;
        std::vector<Rat> out(red.phi, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& zp = red.zeta_powers[(i * step) % m];
            for (int j = 0; j < red.phi; ++j) out[j] += c_[i] * zp[j];
        }
        Cyclo r;
        r.n_ = m;
        r.c_ = std::move(out);
        return r;
    }

    /// Galois image zeta_N -> zeta_N^k, gcd(k, N) = 1.
    Cyclo galois(long k) const {
        long kk = ((k % n_) + n_) % n_;
        if (std::gcd(kk, static_cast<long>(n_)) != 1)
            throw std::invalid_argument("galois: k not coprime to conductor");
        const auto& red = detail::cyclo_reduction(n_);
        std::vector<Rat> out(red.phi, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& zp = red.zeta_powers[(i * kk) % n_];
            for (int j = 0; j < red.phi; ++j) out[j] += c_[i] * zp[j];
        }
        Cyclo r;
        r.n_ = n_;
        r.c_ = std::move(out);
        return r;
    }

    /// Complex conjugation, zeta_N -> zeta_N^(N-1).
    Cyclo conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        auto [x, y] = to_common(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        auto [x, y] = to_common(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    Cyclo operator-() const {
        Cyclo r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        auto [x, y] = to_common(a, b);
        const auto& red = detail::cyclo_reduction(x.n_);
        int d = red.phi;
        std::vector<Rat> conv(2 * d - 1, Rat(0));
        for (int i = 0; i < d; ++i) {
            if (x.c_[i] == 0) continue;
            for (int j = 0; j < d; ++j)
                if (y.c_[j] != 0) conv[i + j] += x.c_[i] * y.c_[j];
        }
        std::vector<Rat> out(conv.begin(), conv.begin() + d);
        for (int k = d; k <= 2 * d - 2; ++k) {
            if (conv[k] == 0) continue;
            const auto& hp = red.high_powers[k - d];
            for (int i = 0; i < d; ++i) out[i] += conv[k] * hp[i];
        }
        Cyclo r;
        r.n_ = x.n_;
        r.c_ = std::move(out);
        return r;
    }

    /// Multiplicative inverse via extended gcd with Phi_N.
    Cyclo inverse() const {
        if (is_zero()) throw std::domain_error("Cyclo: division by zero");
        if (is_rational()) {
            Cyclo r = *this;
            r.c_[0] = 1 / r.c_[0];
            for (std::size_t i = 1; i < r.c_.size(); ++i) r.c_[i] = 0;
            return r;
        }
        QPoly a{std::vector<Rat>(c_)};
        QPoly r0 = cyclotomic_polynomial(n_), r1 = a;
        QPoly s0{}, s1 = QPoly::constant(Rat(1));
        // invariant: r_i == s_i * a  (mod Phi_N)
        while (true) {
            if (r1.degree() == 0) {
                QPoly u = s1 * QPoly::constant(1 / r1.coeff(0));
                std::vector<Rat> out(c_.size(), Rat(0));
                for (std::size_t i = 0; i < out.size(); ++i) out[i] = u.coeff(i);
                Cyclo res;
                res.n_ = n_;
                res.c_ = std::move(out);
                return res;
            }
            auto [q, r] = r0.divmod(r1);
            QPoly s = s0 - q * s1;
            r0 = std::move(r1);
            s0 = std::move(s1);
            r1 = std::move(r);
            s1 = std::move(s);
            if (r1.is_zero())
                throw std::domain_error("Cyclo: inverse of zero divisor");
        }
    }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        if (a.n_ == b.n_) return a.c_ == b.c_;
        auto [x, y] = to_common(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    /// Deterministic encoding used for canonical hashing of matrices.
    void append_encoding(std::string& out) const {
        for (const auto& x : c_) {
            out += x.get_str();
            out.push_back(',');
        }
        out.push_back(';');
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += c_[i].get_str();
        }
        s += "]@" + std::to_string(n_);
        return s;
    }

private:
    static std::pair<Cyclo, Cyclo> to_common(const Cyclo& a, const Cyclo& b) {
        if (a.n_ == b.n_) return {a, b};
        int m = std::lcm(a.n_, b.n_);
        return {a.embedded(m), b.embedded(m)};
    }

    int n_;
    std::vector<Rat> c_;
};

} // namespace reflex
