#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "reflex/rational.hpp"

namespace reflex {

/// Dense univariate polynomial over Q, coefficient of x^i at index i.
/// Normalized: no trailing zero coefficients (zero polynomial is empty).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly constant(Rat v) {
        if (v == 0) return QPoly{};
        return QPoly{{std::move(v)}};
    }
    /// c * x^k
    static QPoly monomial(Rat c, std::size_t k) {
        if (c == 0) return QPoly{};
        std::vector<Rat> v(k + 1);
        v[k] = std::move(c);
        return QPoly{std::move(v)};
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return QPoly{std::move(r)};
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return QPoly{std::move(r)};
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly{};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) r[i + j] += a.c_[i] * b.c_[j];
        }
        return QPoly{std::move(r)};
    }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("QPoly: division by zero");
        std::vector<Rat> rem = c_;
        int dd = d.degree();
        if (degree() < dd) return {QPoly{}, *this};
        std::vector<Rat> q(c_.size() - d.c_.size() + 1, Rat(0));
        Rat lead_inv = 1 / d.c_.back();
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            Rat f = rem[i + dd] * lead_inv;
            if (f == 0) continue;
            q[i] = f;
            for (int j = 0; j <= dd; ++j) rem[i + j] -= f * d.c_[j];
        }
        return {QPoly{std::move(q)}, QPoly{std::move(rem)}};
    }

    /// Exact division; throws if the remainder is nonzero.
    QPoly divexact(const QPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("QPoly: division not exact");
        return q;
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// x^n - 1
inline QPoly xn_minus_one(int n) {
    std::vector<Rat> v(n + 1, Rat(0));
    v[0] = -1;
    v[n] = 1;
    return QPoly{std::move(v)};
}

namespace detail {
struct CycloPolyCache {
    std::mutex mu;
    std::map<int, QPoly> table;
};
inline CycloPolyCache& cyclo_cache() {
    static CycloPolyCache c;
    return c;
}
} // namespace detail

/// N-th cyclotomic polynomial Phi_N, by exact division of x^N - 1 by the
/// Phi_d for proper divisors d.  Cached and safe for concurrent use.
inline const QPoly& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n < 1");
    auto& cache = detail::cyclo_cache();
    std::scoped_lock lock(cache.mu);
    auto it = cache.table.find(n);
    if (it != cache.table.end()) return it->second;
    // compute with the lock held; recursion depth is the divisor chain length
    std::function<const QPoly&(int)> get = [&](int m) -> const QPoly& {
        auto jt = cache.table.find(m);
        if (jt != cache.table.end()) return jt->second;
        QPoly p = xn_minus_one(m);
        for (int d = 1; d < m; ++d)
            if (m % d == 0) p = p.divexact(get(d));
        return cache.table.emplace(m, std::move(p)).first->second;
    };
    return get(n);
}

inline int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

} // namespace reflex
