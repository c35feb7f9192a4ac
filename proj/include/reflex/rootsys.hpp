#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflex/rational.hpp"

namespace reflex {

struct Root {
    std::vector<Rat> vec;   // ambient coordinates
    std::vector<int> coeff; // over the simple roots
    int height = 0;         // sum of coeff
    int weight = 1;         // squared length, short = 1
    int weighted_height = 0;
};

/// A crystallographic root system with the short roots normalized to
/// squared length 1. Holds the full root set Phi (positives first),
/// precomputed simple-reflection tables on root indices, and the
/// height/weight data behind exponents and short exponents.
class RootSystem {
public:
    static RootSystem build(char type, int rank) {
        RootSystem R;
        R.type_ = type;
        R.rank_ = rank;
        std::vector<std::vector<Rat>> simple;
        auto e = [&](int dim, int i, long c = 1) {
            std::vector<Rat> v(dim, Rat(0));
            v[i] = c;
            return v;
        };
        switch (type) {
        case 'A': {
            if (rank < 1 || rank > 6) throw std::invalid_argument("A_n: n in 1..6");
            for (int i = 0; i < rank; ++i) {
                auto v = e(rank + 1, i);
                v[i + 1] = -1;
                simple.push_back(v);
            }
            break;
        }
        case 'B': {
            if (rank < 2 || rank > 6) throw std::invalid_argument("B_n: n in 2..6");
            for (int i = 0; i + 1 < rank; ++i) {
                auto v = e(rank, i);
                v[i + 1] = -1;
                simple.push_back(v);
            }
            simple.push_back(e(rank, rank - 1));
            break;
        }
        case 'C': {
            if (rank < 2 || rank > 6) throw std::invalid_argument("C_n: n in 2..6");
            // long simple root listed first (alpha_1 long, matching the C2
            // conventions used for the Weyl-element tables)
            simple.push_back(e(rank, rank - 1, 2));
            for (int i = rank - 2; i >= 0; --i) {
                auto v = e(rank, i);
                v[i + 1] = -1;
                simple.push_back(v);
            }
            break;
        }
        case 'D': {
            if (rank < 3 || rank > 6) throw std::invalid_argument("D_n: n in 3..6");
            for (int i = 0; i + 1 < rank; ++i) {
                auto v = e(rank, i);
                v[i + 1] = -1;
                simple.push_back(v);
            }
            auto v = e(rank, rank - 2);
            v[rank - 1] = 1;
            simple.push_back(v);
            break;
        }
        case 'F': {
            if (rank != 4) throw std::invalid_argument("F: rank must be 4");
            simple.push_back({Rat(0), Rat(1), Rat(-1), Rat(0)});
            simple.push_back({Rat(0), Rat(0), Rat(1), Rat(-1)});
            simple.push_back({Rat(0), Rat(0), Rat(0), Rat(1)});
            simple.push_back({rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)});
            break;
        }
        case 'G': {
            if (rank != 2) throw std::invalid_argument("G: rank must be 2");
            // realized in the sum-zero plane of R^3 to keep coordinates rational
            simple.push_back({Rat(1), Rat(-1), Rat(0)});
            simple.push_back({Rat(-2), Rat(1), Rat(1)});
            break;
        }
        default:
            throw std::invalid_argument("unsupported root system type");
        }
        R.init_from_simple(simple);
        return R;
    }

    char type() const { return type_; }
    int rank() const { return rank_; }
    int r() const { return r_; }
    int ambient_dim() const { return (int)roots_[0].vec.size(); }
    /// all roots; indices [0, num_positive) are the positive ones
    const std::vector<Root>& roots() const { return roots_; }
    int num_positive() const { return npos_; }
    const Root& positive(int i) const { return roots_[i]; }
    const Root& highest_root() const { return roots_[highest_]; }
    int coxeter_number() const { return roots_[highest_].height + 1; }

    /// index of the i-th simple root in roots()
    int simple_index(int i) const { return simple_idx_[i]; }
    /// index of s_i(root j) in roots()
    int reflect(int i, int j) const { return refl_[i][j]; }
    int negative_of(int j) const { return j < npos_ ? j + npos_ : j - npos_; }
    bool is_positive(int j) const { return j < npos_; }

    std::vector<int> degrees() const {
        auto d = exponents();
        for (int& x : d) ++x;
        return d;
    }

    /// dual partition of the positive-root heights
    std::vector<int> exponents() const { return dual_partition(heights_of(false)); }

    /// heights of the short roots in the dual system, dualized
    std::vector<int> short_exponents() const {
        if (r_ == 1) throw std::domain_error("short_exponents: simply-laced system");
        return dual().dual_partition(dual().heights_of(true));
    }

    /// system spanned by the coroots 2a/(a,a); swaps B and C
    RootSystem dual() const {
        RootSystem D;
        D.type_ = (type_ == 'B') ? 'C' : (type_ == 'C') ? 'B' : type_;
        D.rank_ = rank_;
        std::vector<std::vector<Rat>> simple;
        for (int i = 0; i < rank_; ++i) {
            std::vector<Rat> v = roots_[simple_idx_[i]].vec;
            Rat s = Rat(2) / norm2(v);
            for (auto& x : v) x *= s;
            simple.push_back(std::move(v));
        }
        D.init_from_simple(simple);
        return D;
    }

    /// matrix of the reflection through root j's hyperplane, in ambient
    /// coordinates (columns are images of the coordinate basis vectors)
    std::vector<std::vector<Rat>> reflection_matrix(int j) const {
        const auto& a = roots_[j].vec;
        int d = (int)a.size();
        Rat n2 = norm2(a);
        std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d, Rat(0)));
        for (int c = 0; c < d; ++c) {
            M[c][c] = 1;
            Rat f = Rat(2) * a[c] / n2;
            for (int r = 0; r < d; ++r) M[r][c] -= f * a[r];
        }
        return M;
    }

    /// (v, alpha_j^vee) = 2 (v, alpha_j) / (alpha_j, alpha_j)
    Rat coroot_pairing(const std::vector<Rat>& v, int j) const {
        const auto& a = roots_[j].vec;
        Rat dot(0);
        for (std::size_t i = 0; i < a.size(); ++i) dot += v[i] * a[i];
        return Rat(2) * dot / norm2(a);
    }

    std::vector<int> dual_partition(std::vector<int> heights) const {
        std::vector<int> cnt;
        for (int h : heights) {
            if ((int)cnt.size() < h) cnt.resize(h, 0);
            ++cnt[h - 1];
        }
        std::vector<int> out;
        for (int k = 1; !cnt.empty(); ++k) {
            int parts = 0;
            for (int c : cnt)
                if (c >= k) ++parts;
            if (parts == 0) break;
            out.push_back(parts);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> heights_of(bool short_only) const {
        std::vector<int> h;
        for (int i = 0; i < npos_; ++i)
            if (!short_only || roots_[i].weight == 1) h.push_back(roots_[i].height);
        return h;
    }

private:
    static Rat norm2(const std::vector<Rat>& v) {
        Rat s(0);
        for (const auto& x : v) s += x * x;
        return s;
    }

    void init_from_simple(const std::vector<std::vector<Rat>>& simple) {
        int n = rank_;
        // closure of {simple roots} under simple reflections
        std::map<std::vector<Rat>, int> idx;
        std::vector<Root> all;
        for (int i = 0; i < n; ++i) {
            Root r;
            r.vec = simple[i];
            r.coeff.assign(n, 0);
            r.coeff[i] = 1;
            idx[r.vec] = (int)all.size();
            all.push_back(r);
        }
        for (std::size_t head = 0; head < all.size(); ++head) {
            for (int i = 0; i < n; ++i) {
                std::vector<Rat> v = all[head].vec;
                Rat f = Rat(2) * dot(v, simple[i]) / norm2(simple[i]);
                std::vector<int> c = all[head].coeff;
                // pairing with a simple root is integral for crystallographic data
                if (f.get_den() != 1) throw std::logic_error("non-integer Cartan pairing");
                long fi = f.get_num().get_si();
                for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * simple[i][k];
                c[i] -= (int)fi;
                if (!idx.count(v)) {
                    Root r;
                    r.vec = v;
                    r.coeff = c;
                    idx[r.vec] = (int)all.size();
                    all.push_back(r);
                }
            }
        }
        // normalize weights so short = 1
        Rat minn2 = norm2(all[0].vec);
        for (const auto& r : all) minn2 = std::min(minn2, norm2(r.vec));
        r_ = 1;
        for (auto& r : all) {
            Rat w = norm2(r.vec) / minn2;
            if (w.get_den() != 1) throw std::logic_error("non-integer root weight");
            r.weight = (int)w.get_num().get_si();
            r_ = std::max(r_, r.weight);
            r.height = 0;
            r.weighted_height = 0;
        }
        // order: positives (all coeff >= 0) first, each followed later by its
        // negative at index + npos
        std::vector<Root> pos, neg;
        for (auto& r : all) {
            bool p = true;
            for (int c : r.coeff)
                if (c < 0) p = false;
            (p ? pos : neg).push_back(r);
        }
        if (pos.size() != neg.size()) throw std::logic_error("root sign split bug");
        std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
            return a.coeff < b.coeff;
        });
        roots_ = pos;
        npos_ = (int)pos.size();
        for (const auto& r : pos) {
            Root m = r;
            for (auto& x : m.vec) x = -x;
            for (auto& c : m.coeff) c = -c;
            roots_.push_back(m);
        }
        idx.clear();
        for (std::size_t i = 0; i < roots_.size(); ++i) idx[roots_[i].vec] = (int)i;
        // heights, weighted heights, highest root, simple indices
        std::vector<int> wsimple(n);
        simple_idx_.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            simple_idx_[i] = idx.at(simple[i]);
            wsimple[i] = roots_[simple_idx_[i]].weight;
        }
        highest_ = 0;
        for (int i = 0; i < (int)roots_.size(); ++i) {
            auto& r = roots_[i];
            for (int k = 0; k < n; ++k) {
                r.height += r.coeff[k];
                r.weighted_height += r.coeff[k] * wsimple[k];
            }
            if (i < npos_ && r.height > roots_[highest_].height) highest_ = i;
        }
        // verify the highest root dominates coefficient-wise
        for (int i = 0; i < npos_; ++i)
            for (int k = 0; k < n; ++k)
                if (roots_[i].coeff[k] > roots_[highest_].coeff[k])
                    throw std::logic_error("highest root not dominant");
        // simple-reflection action tables
        refl_.assign(n, std::vector<int>(roots_.size()));
        for (int i = 0; i < n; ++i)
            for (std::size_t j = 0; j < roots_.size(); ++j) {
                std::vector<Rat> v = roots_[j].vec;
                Rat f = Rat(2) * dot(v, simple[i]) / norm2(simple[i]);
                for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * simple[i][k];
                refl_[i][j] = idx.at(v);
            }
    }

    static Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        Rat s(0);
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }

    char type_ = '?';
    int rank_ = 0, r_ = 1, npos_ = 0, highest_ = 0;
    std::vector<Root> roots_;
    std::vector<int> simple_idx_;
    std::vector<std::vector<int>> refl_;
};

} // namespace reflex
