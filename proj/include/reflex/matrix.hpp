#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "reflex/cyclotomic.hpp"
#include "reflex/polynomial.hpp"

namespace reflex {

/// Dense square matrix over a cyclotomic field. Entries keep their own
/// conductors; mixed-conductor arithmetic goes through the lcm.
class CycMatrix {
public:
    CycMatrix() : n_(0) {}
    explicit CycMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

    static CycMatrix identity(int n) {
        CycMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Cyclo(1);
        return m;
    }

    int dim() const { return n_; }
    Cyclo& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Cyclo& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix dim mismatch");
        CycMatrix c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < a.n_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
                }
            }
        return c;
    }
    friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
        CycMatrix c(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
        return c;
    }
    friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
        CycMatrix c(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
        return c;
    }
    friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    /// Canonical byte encoding at a fixed ambient conductor: dimension, then
    /// row-major entries embedded into that conductor. Using one shared
    /// conductor makes the encoding a faithful equality key (the same value
    /// can otherwise be carried at different conductors, e.g. 1 in Q vs
    /// 1 in Q(zeta_3)).
    std::string encoding(int conductor) const {
        std::string out = std::to_string(n_) + "#" + std::to_string(conductor) + "#";
        for (const auto& x : e_) x.embedded(std::lcm(conductor, x.conductor())).append_encoding(out);
        return out;
    }
    std::string encoding() const {
        int m = 1;
        for (const auto& x : e_) m = std::lcm(m, x.conductor());
        return encoding(m);
    }
    int common_conductor() const {
        int m = 1;
        for (const auto& x : e_) m = std::lcm(m, x.conductor());
        return m;
    }

    /// Characteristic polynomial det(q*I - A) by the Faddeev-LeVerrier
    /// recurrence (division only by integers).
    std::vector<Cyclo> char_poly() const {
        int n = n_;
        std::vector<Cyclo> c(static_cast<std::size_t>(n) + 1);
        c[n] = Cyclo(1);
        CycMatrix Mk(n); // M_0 = 0
        CycMatrix A = *this;
        for (int k = 1; k <= n; ++k) {
            // M_k = A*M_{k-1} + c_{n-k+1} * I
            CycMatrix t = A * Mk;
            for (int i = 0; i < n; ++i) t.at(i, i) = t.at(i, i) + c[n - k + 1];
            Mk = std::move(t);
            CycMatrix AM = A * Mk;
            Cyclo tr(0);
            for (int i = 0; i < n; ++i) tr = tr + AM.at(i, i);
            c[n - k] = tr * Cyclo(rat(-1, k));
        }
        return c; // c[i] is the coefficient of q^i
    }

    Cyclo det() const {
        auto c = char_poly();
        Cyclo d = c[0];
        if (n_ % 2) d = -d; // det(A) = (-1)^n * c_0
        return d;
    }

    /// det(I - q*A) as a polynomial in q: reverse of char_poly with signs.
    /// If char_poly(A) = prod (q - lambda_i) then
    /// det(I - qA) = prod (1 - lambda_i q) = sum_i c_{n-i} (-q)^i * (-1)^n ...
    /// computed directly as q^n * charpoly(1/q) * (-1)^n.
    std::vector<Cyclo> det_one_minus_q() const {
        auto c = char_poly();
        int n = n_;
        std::vector<Cyclo> out(static_cast<std::size_t>(n) + 1);
        // det(I - qA) = q^n det((1/q)I - A) = sum_k c_k q^{n-k};
        // with sign: det(I-qA) = sum_k c_k q^{n-k} * 1  -- check: q=0 gives c_n = 1. OK.
        for (int k = 0; k <= n; ++k) out[n - k] = c[k];
        return out;
    }

    /// Rank via fraction-free (cross-multiplication) elimination.
    int rank() const {
        CycMatrix a = *this;
        int n = n_, r = 0;
        for (int col = 0; col < n && r < n; ++col) {
            int piv = -1;
            for (int i = r; i < n; ++i)
                if (!a.at(i, col).is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            if (piv != r)
                for (int j = 0; j < n; ++j) std::swap(a.at(r, j), a.at(piv, j));
            for (int i = r + 1; i < n; ++i) {
                if (a.at(i, col).is_zero()) continue;
                Cyclo f = a.at(i, col), p = a.at(r, col);
                for (int j = col; j < n; ++j)
                    a.at(i, j) = a.at(i, j) * p - a.at(r, j) * f;
            }
            ++r;
        }
        return r;
    }

    Cyclo trace() const {
        Cyclo t(0);
        for (int i = 0; i < n_; ++i) t = t + at(i, i);
        return t;
    }

private:
    int n_;
    std::vector<Cyclo> e_;
};

} // namespace reflex
