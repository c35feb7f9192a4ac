#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "reflex/matrix.hpp"

namespace reflex {

/// A decorated permutation: g e_j = zeta_m^{decor[j]} e_{perm[j]}.
/// Decorations live on the source index.
struct MonoElt {
    std::vector<int> perm;
    std::vector<int> decor;
    bool operator==(const MonoElt&) const = default;
};

/// The imprimitive group G(m,b,n) (b | m) of monomial matrices whose
/// nonzero entries are m-th roots of unity with entry-product a power
/// of zeta_m^b, realized on decorated permutations.
class MonomialGroup {
public:
    MonomialGroup(int m, int b, int n, std::size_t cap = 100000)
        : m_(m), b_(b), n_(n) {
        if (m < 1 || n < 1 || b < 1 || m % b != 0)
            throw std::invalid_argument("G(m,b,n) requires b | m");
        std::size_t order = 1;
        for (int i = 2; i <= n; ++i) order *= i;
        for (int i = 0; i < n; ++i) order *= m;
        order /= b;
        if (order > cap) throw std::runtime_error("G(m,b,n) exceeds cap");

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> d(n, 0);
            while (true) {
                int sum = 0;
                for (int x : d) sum += x;
                if (sum % b == 0) els_.push_back({perm, d});
                int i = 0;
                while (i < n && ++d[i] == m) d[i++] = 0;
                if (i == n) break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (els_.size() != order) throw std::logic_error("enumeration bug");
        // identity first for convenience
        for (std::size_t i = 0; i < els_.size(); ++i)
            if (is_identity(els_[i])) { std::swap(els_[0], els_[i]); break; }
    }

    int m() const { return m_; }
    int b() const { return b_; }
    int a() const { return m_ / b_; }
    int rank() const { return n_; }
    std::size_t size() const { return els_.size(); }
    const MonoElt& elt(std::size_t i) const { return els_[i]; }

    /// Element id lookup; the index is built on first use.
    int id_of(const MonoElt& g) const {
        if (index_.empty())
            for (std::size_t i = 0; i < els_.size(); ++i)
                index_.emplace(std::make_pair(els_[i].perm, els_[i].decor), (int)i);
        auto it = index_.find(std::make_pair(g.perm, g.decor));
        if (it == index_.end()) throw std::runtime_error("element not in group");
        return it->second;
    }

    bool is_identity(const MonoElt& g) const {
        for (int j = 0; j < n_; ++j)
            if (g.perm[j] != j || g.decor[j] % m_ != 0) return false;
        return true;
    }

    MonoElt mul(const MonoElt& g, const MonoElt& h) const {
        MonoElt r;
        r.perm.resize(n_);
        r.decor.resize(n_);
        for (int j = 0; j < n_; ++j) {
            r.perm[j] = g.perm[h.perm[j]];
            r.decor[j] = (h.decor[j] + g.decor[h.perm[j]]) % m_;
        }
        return r;
    }

    MonoElt inv(const MonoElt& g) const {
        MonoElt r;
        r.perm.resize(n_);
        r.decor.resize(n_);
        for (int j = 0; j < n_; ++j) {
            r.perm[g.perm[j]] = j;
            r.decor[g.perm[j]] = (m_ - g.decor[j] % m_) % m_;
        }
        return r;
    }

    /// Cycles of the underlying permutation with their decoration sums.
    std::vector<std::pair<int, int>> cycles(const MonoElt& g) const {
        std::vector<std::pair<int, int>> out;
        std::vector<char> seen(n_, 0);
        for (int j = 0; j < n_; ++j) {
            if (seen[j]) continue;
            int len = 0, sum = 0, x = j;
            do {
                seen[x] = 1;
                sum += g.decor[x];
                ++len;
                x = g.perm[x];
            } while (x != j);
            out.push_back({len, sum % m_});
        }
        return out;
    }

    /// M_V(g) = n - #(cycles whose decoration sum is 0 mod m).
    int stat_MV(const MonoElt& g) const {
        int z = 0;
        for (auto [len, sum] : cycles(g))
            if (sum == 0) ++z;
        return n_ - z;
    }

    Cyclo det(const MonoElt& g) const {
        int sum = 0, sign = 1;
        for (auto [len, s] : cycles(g)) {
            sum += s;
            if (len % 2 == 0) sign = -sign;
        }
        Cyclo d = Cyclo::root_of_unity(m_, sum);
        return sign == 1 ? d : -d;
    }

    /// det(1 - q g) = prod over cycles (1 - zeta^{sum} q^{len}).
    std::vector<Cyclo> det_one_minus_q(const MonoElt& g) const {
        std::vector<Cyclo> p{Cyclo(1)};
        for (auto [len, sum] : cycles(g)) {
            std::vector<Cyclo> q(p.size() + len);
            Cyclo z = Cyclo::root_of_unity(m_, sum);
            for (std::size_t i = 0; i < p.size(); ++i) {
                q[i] = q[i] + p[i];
                q[i + len] = q[i + len] - p[i] * z;
            }
            p = std::move(q);
        }
        return p;
    }

    /// Monomial matrix realization (cross-check path only).
    CycMatrix matrix(const MonoElt& g) const {
        CycMatrix A(n_);
        for (int j = 0; j < n_; ++j)
            A.at(g.perm[j], j) = Cyclo::root_of_unity(m_, g.decor[j]);
        return A;
    }

private:
    int m_, b_, n_;
    std::vector<MonoElt> els_;
    mutable std::map<std::pair<std::vector<int>, std::vector<int>>, int> index_;
};

} // namespace reflex
