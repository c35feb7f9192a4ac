#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflex/matgroup.hpp"
#include "reflex/monomial.hpp"

namespace reflex {

struct OrbitData {
    char label = '?';             // 's', 't' or 'u'
    std::vector<int> reflections; // element ids, ascending
    int num_hyperplanes = 0;
};

/// Uniform per-element view of a reflection group, backed by either a
/// decorated-permutation realization (infinite family) or an enumerated
/// matrix group (exceptional groups). Immutable once built.
class ReflGroup {
public:
    const std::string& name() const { return name_; }
    int rank() const { return rank_; }
    std::size_t size() const { return MV_.size(); }

    int MV(int e) const { return MV_[e]; }
    const Cyclo& det(int e) const { return det_[e]; }
    const Cyclo& chiV(int e) const { return chiV_[e]; }

    /// det(1 - q g) shared between elements with equal characteristic data.
    int detq_key(int e) const { return detq_key_[e]; }
    const std::vector<std::vector<Cyclo>>& detq_polys() const { return detq_polys_; }

    const std::vector<int>& reflections() const { return reflections_; }
    int num_hyperplanes() const {
        int h = 0;
        for (const auto& o : orbits_) h += o.num_hyperplanes;
        return h;
    }
    const std::vector<OrbitData>& orbits() const { return orbits_; }
    const OrbitData& orbit(char label) const {
        for (const auto& o : orbits_)
            if (o.label == label) return o;
        throw std::invalid_argument(std::string("no hyperplane orbit ") + label);
    }
    bool has_orbit(char label) const {
        for (const auto& o : orbits_)
            if (o.label == label) return true;
        return false;
    }

    const MonomialGroup* mono() const { return mono_.get(); }
    const MatGroup* matgrp() const { return mat_.get(); }

    /// Group multiplication on element ids, backend independent.
    int mul_ids(int x, int y) const {
        if (mat_) return mat_->mul(x, y);
        return mono_->id_of(mono_->mul(mono_->elt(x), mono_->elt(y)));
    }

    /// Orbit label of a reflection (by element id).
    char orbit_of_reflection(int r) const {
        for (const auto& o : orbits_)
            for (int x : o.reflections)
                if (x == r) return o.label;
        throw std::invalid_argument("not a reflection id");
    }

    // --- construction -----------------------------------------------------

    /// G(m,b,n) on decorated permutations. Hyperplane orbit labels:
    /// 's' for the coordinate hyperplanes x_i = 0 (present iff m/b > 1),
    /// 't' for the x_i = zeta^k x_j family. For n = 2 with b even the t
    /// family splits into two G-orbits (even/odd k); in the dihedral case
    /// G(2b,2b,2) these are labeled 's'/'t' following the paper, otherwise
    /// 't'/'u'.
    static ReflGroup monomial(int m, int b, int n, std::size_t cap = 100000) {
        ReflGroup G;
        G.mono_ = std::make_unique<MonomialGroup>(m, b, n, cap);
        const MonomialGroup& M = *G.mono_;
        G.name_ = "G(" + std::to_string(m) + "," + std::to_string(b) + "," +
                  std::to_string(n) + ")";
        G.rank_ = n;
        G.cond_ = m;
        std::size_t N = M.size();
        G.MV_.resize(N);
        G.det_.resize(N);
        G.chiV_.resize(N);
        G.detq_key_.resize(N);
        std::map<std::string, int> keymap;
        for (std::size_t e = 0; e < N; ++e) {
            const MonoElt& g = M.elt(e);
            G.MV_[e] = M.stat_MV(g);
            G.det_[e] = M.det(g);
            Cyclo tr(0);
            for (int j = 0; j < n; ++j)
                if (g.perm[j] == j) tr = tr + Cyclo::root_of_unity(m, g.decor[j]);
            G.chiV_[e] = tr;
            G.detq_key_[e] = G.intern_detq(M.det_one_minus_q(g), keymap);
        }
        // reflections and hyperplane orbits, combinatorially
        bool t_splits = (n == 2 && b % 2 == 0);
        std::map<std::pair<char, std::vector<int>>, int> hyp;
        for (std::size_t e = 0; e < N; ++e) {
            if (G.MV_[e] != 1) continue;
            const MonoElt& g = M.elt(e);
            char lab;
            std::vector<int> key;
            int moved = -1;
            for (int j = 0; j < n; ++j)
                if (g.perm[j] != j) moved = j;
            if (moved < 0) {
                // diagonal reflection: one nonzero decoration -> x_j = 0
                lab = 's';
                for (int j = 0; j < n; ++j)
                    if (g.decor[j] % m != 0) key = {j};
            } else {
                int i = std::min(moved, g.perm[moved]);
                int j = std::max(moved, g.perm[moved]);
                int c = g.decor[i] % m; // hyperplane x_i = zeta^{-c} x_j
                if (!t_splits)
                    lab = 't';
                else if (m == b)
                    lab = (c % 2 == 0) ? 's' : 't'; // dihedral G(2b,2b,2)
                else
                    lab = (c % 2 == 0) ? 't' : 'u';
                key = {i, j, c};
            }
            auto hk = std::make_pair(lab, key);
            if (!hyp.count(hk)) hyp[hk] = 1;
            G.reflections_.push_back((int)e);
            bool seen = false;
            for (auto& o : G.orbits_)
                if (o.label == lab) {
                    o.reflections.push_back((int)e);
                    seen = true;
                }
            if (!seen) G.orbits_.push_back({lab, {(int)e}, 0});
        }
        for (auto& [hk, cnt] : hyp)
            for (auto& o : G.orbits_)
                if (o.label == hk.first) ++o.num_hyperplanes;
        std::sort(G.orbits_.begin(), G.orbits_.end(),
                  [](const OrbitData& a, const OrbitData& b) { return a.label < b.label; });
        return G;
    }

    /// A matrix-group realization. `orbit_sig` fixes the s/t/u labels by
    /// matching each computed orbit's (|R_eps|, |H_eps|) signature; orbits
    /// with equal signatures are interchangeable and assigned in
    /// deterministic discovery order.
    static ReflGroup from_matgroup(std::string name, std::shared_ptr<MatGroup> M,
                                   const std::vector<std::pair<char, std::pair<int, int>>>& orbit_sig) {
        ReflGroup G;
        G.mat_ = std::move(M);
        const MatGroup& W = *G.mat_;
        G.name_ = std::move(name);
        G.rank_ = W.dim();
        G.cond_ = W.ambient_conductor();
        std::size_t N = W.size();
        G.MV_.resize(N);
        G.det_.resize(N);
        G.chiV_.resize(N);
        G.detq_key_.resize(N);
        CycMatrix I = CycMatrix::identity(W.dim());
        std::map<std::string, int> keymap;
        for (std::size_t e = 0; e < N; ++e) {
            auto dq = W.mat(e).det_one_minus_q();
            G.detq_key_[e] = G.intern_detq(dq, keymap);
            G.det_[e] = W.mat(e).det();
            G.chiV_[e] = W.mat(e).trace();
            G.MV_[e] = (W.mat(e) - I).rank();
            if (G.MV_[e] == 1) G.reflections_.push_back((int)e);
        }
        // hyperplanes: canonical normal line = image of (r - 1), scaled so
        // its first nonzero coordinate is 1
        int cond = W.ambient_conductor();
        auto line_key = [&](std::vector<Cyclo> v) {
            int lead = -1;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero()) { lead = (int)i; break; }
            if (lead < 0) throw std::logic_error("zero root vector");
            Cyclo inv = v[lead].inverse();
            std::string key;
            for (auto& x : v) {
                x = x * inv;
                x.embedded(std::lcm(cond, x.conductor())).append_encoding(key);
            }
            return std::make_pair(key, v);
        };
        auto root_of = [&](int e) {
            CycMatrix d = W.mat(e) - I;
            for (int j = 0; j < W.dim(); ++j) {
                std::vector<Cyclo> col(W.dim());
                bool nz = false;
                for (int i = 0; i < W.dim(); ++i) {
                    col[i] = d.at(i, j);
                    if (!col[i].is_zero()) nz = true;
                }
                if (nz) return col;
            }
            throw std::logic_error("reflection with zero root");
        };
        // hyperplane index and reflection -> hyperplane map
        std::map<std::string, int> hyp_id;
        std::vector<std::vector<Cyclo>> hyp_vec;
        std::vector<int> refl_hyp;
        for (int r : G.reflections_) {
            auto [key, v] = line_key(root_of(r));
            auto it = hyp_id.find(key);
            if (it == hyp_id.end()) {
                it = hyp_id.emplace(key, (int)hyp_vec.size()).first;
                hyp_vec.push_back(v);
            }
            refl_hyp.push_back(it->second);
        }
        // orbits of the generator action on hyperplane lines
        int H = (int)hyp_vec.size();
        std::vector<int> comp(H, -1);
        int ncomp = 0;
        for (int h0 = 0; h0 < H; ++h0) {
            if (comp[h0] >= 0) continue;
            int c = ncomp++;
            std::vector<int> stack{h0};
            comp[h0] = c;
            while (!stack.empty()) {
                int h = stack.back();
                stack.pop_back();
                for (int j = 0; j < W.num_gens(); ++j) {
                    const CycMatrix& g = W.mat(W.generator_id(j));
                    std::vector<Cyclo> w(W.dim(), Cyclo(0));
                    for (int i = 0; i < W.dim(); ++i)
                        for (int k = 0; k < W.dim(); ++k)
                            if (!g.at(i, k).is_zero() && !hyp_vec[h][k].is_zero())
                                w[i] = w[i] + g.at(i, k) * hyp_vec[h][k];
                    auto [key, v] = line_key(std::move(w));
                    int h2 = hyp_id.at(key);
                    if (comp[h2] < 0) { comp[h2] = c; stack.push_back(h2); }
                }
            }
        }
        // orbit stats, in discovery order
        std::vector<OrbitData> orbs(ncomp);
        for (int h = 0; h < H; ++h) ++orbs[comp[h]].num_hyperplanes;
        for (std::size_t i = 0; i < G.reflections_.size(); ++i)
            orbs[comp[refl_hyp[i]]].reflections.push_back(G.reflections_[i]);
        // assign labels by (|R|,|H|) signature
        if (orbit_sig.size() != (std::size_t)ncomp)
            throw std::runtime_error(G.name_ + ": unexpected hyperplane orbit count");
        std::vector<char> used(orbit_sig.size(), 0);
        for (auto& o : orbs) {
            bool ok = false;
            for (std::size_t i = 0; i < orbit_sig.size() && !ok; ++i) {
                if (used[i]) continue;
                if (orbit_sig[i].second ==
                    std::make_pair((int)o.reflections.size(), o.num_hyperplanes)) {
                    o.label = orbit_sig[i].first;
                    used[i] = 1;
                    ok = true;
                }
            }
            if (!ok)
                throw std::runtime_error(G.name_ + ": orbit signature mismatch");
        }
        std::sort(orbs.begin(), orbs.end(),
                  [](const OrbitData& a, const OrbitData& b) { return a.label < b.label; });
        G.orbits_ = std::move(orbs);
        return G;
    }

private:
    int intern_detq(std::vector<Cyclo> p, std::map<std::string, int>& keymap) {
        std::string key;
        for (const auto& c : p) {
            c.embedded(std::lcm(cond_, c.conductor())).append_encoding(key);
            key += '|';
        }
        auto it = keymap.find(key);
        if (it != keymap.end()) return it->second;
        int id = (int)detq_polys_.size();
        detq_polys_.push_back(std::move(p));
        keymap.emplace(std::move(key), id);
        return id;
    }

    std::string name_;
    int rank_ = 0;
    int cond_ = 1; // ambient conductor for canonical keys
    std::vector<int> MV_;
    std::vector<Cyclo> det_, chiV_;
    std::vector<int> detq_key_;
    std::vector<std::vector<Cyclo>> detq_polys_;
    std::vector<int> reflections_;
    std::vector<OrbitData> orbits_;
    std::unique_ptr<MonomialGroup> mono_;
    std::shared_ptr<MatGroup> mat_;
};

} // namespace reflex
