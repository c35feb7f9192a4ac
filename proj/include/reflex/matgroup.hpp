#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "reflex/matrix.hpp"

namespace reflex {

/// A finite matrix group enumerated by breadth-first closure from its
/// generators. Element ids are deterministic: BFS layer by layer, with
/// elements inside a layer ordered lexicographically by canonical encoding.
class MatGroup {
public:
    MatGroup(std::vector<CycMatrix> gens, std::size_t cap = 100000)
        : gens_(std::move(gens)) {
        if (gens_.empty()) throw std::invalid_argument("MatGroup: no generators");
        int n = gens_[0].dim();
        cond_ = 1;
        for (const auto& g : gens_) cond_ = std::lcm(cond_, g.common_conductor());
        for (const auto& g : gens_)
            if (g.dim() != n) throw std::invalid_argument("MatGroup: dim mismatch");

        auto add = [&](CycMatrix m, int parent, int gen) -> int {
            std::string key = m.encoding(cond_);
            auto it = index_.find(key);
            if (it != index_.end()) return it->second;
            int id = static_cast<int>(els_.size());
            els_.push_back(std::move(m));
            word_parent_.push_back(parent);
            word_gen_.push_back(gen);
            index_.emplace(std::move(key), id);
            return id;
        };
        add(CycMatrix::identity(n), -1, -1);
        std::vector<int> frontier{0};
        while (!frontier.empty()) {
            // discover the next layer; a sorted map keyed by encoding makes
            // the id assignment independent of hash iteration order
            std::map<std::string, std::tuple<CycMatrix, int, int>> found;
            for (int e : frontier) {
                for (std::size_t j = 0; j < gens_.size(); ++j) {
                    CycMatrix p = els_[e] * gens_[j];
                    std::string key = p.encoding(cond_);
                    if (index_.count(key) || found.count(key)) continue;
                    found.emplace(std::move(key), std::tuple{std::move(p), e, (int)j});
                }
            }
            frontier.clear();
            for (auto& [key, v] : found) {
                if (els_.size() >= cap)
                    throw std::runtime_error("group closure exceeded cap");
                frontier.push_back(
                    add(std::move(std::get<0>(v)), std::get<1>(v), std::get<2>(v)));
            }
        }

        // right-multiplication permutations per generator, and their inverses
        gen_perm_.assign(gens_.size(), std::vector<int>(els_.size()));
        gen_perm_inv_.assign(gens_.size(), std::vector<int>(els_.size()));
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            for (std::size_t e = 0; e < els_.size(); ++e) {
                int p = id_of(els_[e] * gens_[j]);
                gen_perm_[j][e] = p;
                gen_perm_inv_[j][p] = static_cast<int>(e);
            }
        }
        // inverses by walking BFS words backwards
        inv_.assign(els_.size(), 0);
        for (std::size_t e = 0; e < els_.size(); ++e) {
            std::vector<int> word;
            for (int x = static_cast<int>(e); x != 0; x = word_parent_[x])
                word.push_back(word_gen_[x]);
            int r = 0; // word is stored last-letter-first, which is the order
            for (int j : word) r = gen_perm_inv_[j][r]; // we need for g^{-1}
            inv_[e] = r;
        }
    }

    /// Rebuild a group from previously enumerated state (cache load),
    /// skipping the BFS closure. The element list must be in BFS id order
    /// with valid word arrays; cheap invariants are re-checked here and a
    /// corrupt cache surfaces as an exception.
    static MatGroup from_parts(std::vector<CycMatrix> gens,
                               std::vector<CycMatrix> els,
                               std::vector<int> word_parent, std::vector<int> word_gen,
                               std::vector<std::vector<int>> gen_perm) {
        MatGroup G;
        G.gens_ = std::move(gens);
        G.els_ = std::move(els);
        G.word_parent_ = std::move(word_parent);
        G.word_gen_ = std::move(word_gen);
        G.gen_perm_ = std::move(gen_perm);
        std::size_t N = G.els_.size();
        if (G.gens_.empty() || N == 0 || G.word_parent_.size() != N ||
            G.word_gen_.size() != N || G.gen_perm_.size() != G.gens_.size())
            throw std::runtime_error("group cache: malformed data");
        G.cond_ = 1;
        for (const auto& g : G.gens_) G.cond_ = std::lcm(g.common_conductor(), G.cond_);
        for (std::size_t e = 0; e < N; ++e)
            if (!G.index_.emplace(G.els_[e].encoding(G.cond_), (int)e).second)
                throw std::runtime_error("group cache: duplicate element");
        if (!(G.els_[0] == CycMatrix::identity(G.els_[0].dim())))
            throw std::runtime_error("group cache: first element is not the identity");
        G.gen_perm_inv_.assign(G.gens_.size(), std::vector<int>(N));
        for (std::size_t j = 0; j < G.gens_.size(); ++j) {
            if (G.gen_perm_[j].size() != N)
                throw std::runtime_error("group cache: malformed permutation");
            for (std::size_t e = 0; e < N; ++e)
                G.gen_perm_inv_[j][G.gen_perm_[j][e]] = (int)e;
            // spot-check the permutation table against one real product
            if (G.gen_perm_[j][0] != G.id_of(G.gens_[j]))
                throw std::runtime_error("group cache: generator mismatch");
        }
        for (std::size_t e = 1; e < N; ++e) {
            int p = G.word_parent_[e], g = G.word_gen_[e];
            if (p < 0 || p >= (int)N || g < 0 || g >= (int)G.gens_.size() ||
                G.gen_perm_[g][p] != (int)e)
                throw std::runtime_error("group cache: inconsistent word data");
        }
        G.inv_.assign(N, 0);
        for (std::size_t e = 0; e < N; ++e) {
            std::vector<int> word;
            for (int x = (int)e; x != 0; x = G.word_parent_[x]) word.push_back(G.word_gen_[x]);
            int r = 0;
            for (int j : word) r = G.gen_perm_inv_[j][r];
            G.inv_[e] = r;
        }
        return G;
    }

    const std::vector<int>& word_parents() const { return word_parent_; }
    const std::vector<int>& word_gens() const { return word_gen_; }
    const std::vector<int>& gen_perm(int j) const { return gen_perm_[j]; }
    const std::vector<CycMatrix>& generators() const { return gens_; }

    std::size_t size() const { return els_.size(); }
    int num_gens() const { return static_cast<int>(gens_.size()); }
    int dim() const { return els_[0].dim(); }
    int ambient_conductor() const { return cond_; }
    const CycMatrix& mat(int e) const { return els_[e]; }
    int inverse(int e) const { return inv_[e]; }
    int generator_id(int j) const { return gen_perm_[j][0]; }

    int id_of(const CycMatrix& m) const {
        auto it = index_.find(m.encoding(cond_));
        if (it == index_.end()) throw std::runtime_error("element not in group");
        return it->second;
    }
    int mul_gen(int e, int j) const { return gen_perm_[j][e]; }
    int mul(int a, int b) const {
        // walk b's word applying generator permutations to a
        std::vector<int> word;
        for (int x = b; x != 0; x = word_parent_[x]) word.push_back(word_gen_[x]);
        int r = a;
        for (auto it = word.rbegin(); it != word.rend(); ++it) r = gen_perm_[*it][r];
        return r;
    }
    int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }

    int element_order(int e) const {
        int k = 1, x = e;
        while (x != 0) { x = mul(x, e); ++k; }
        return k;
    }

    /// Extend generator images to all elements along BFS words; verifying
    /// every (element, generator) edge proves the map is a homomorphism.
    std::vector<CycMatrix> extend_images(const std::vector<CycMatrix>& images) const {
        if (images.size() != gens_.size())
            throw std::invalid_argument("extend_images: wrong image count");
        std::vector<CycMatrix> img(els_.size());
        img[0] = CycMatrix::identity(images[0].dim());
        for (std::size_t e = 1; e < els_.size(); ++e)
            img[e] = img[word_parent_[e]] * images[word_gen_[e]];
        for (std::size_t e = 0; e < els_.size(); ++e)
            for (std::size_t j = 0; j < gens_.size(); ++j)
                if (!(img[gen_perm_[j][e]] == img[e] * images[j]))
                    throw std::runtime_error("generator images do not extend to a homomorphism");
        return img;
    }

    /// The derived subgroup [G,G]: normal closure of generator commutators.
    std::vector<int> commutator_subgroup() const {
        std::vector<char> in(els_.size(), 0);
        std::vector<int> members{0}, queue;
        in[0] = 1;
        auto push = [&](int x) {
            if (!in[x]) { in[x] = 1; members.push_back(x); queue.push_back(x); }
        };
        for (int a = 0; a < num_gens(); ++a)
            for (int b = 0; b < num_gens(); ++b) {
                int ga = generator_id(a), gb = generator_id(b);
                push(mul(mul(mul(ga, gb), inv_[ga]), inv_[gb]));
            }
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            // close under multiplication by current members and under
            // conjugation by group generators (normal closure)
            for (std::size_t i = 0; i < members.size(); ++i) {
                push(mul(members[i], x));
                push(mul(x, members[i]));
            }
            for (int j = 0; j < num_gens(); ++j) push(conj(generator_id(j), x));
        }
        std::sort(members.begin(), members.end());
        return members;
    }

    /// All homomorphisms G -> C^x, as value-per-element tables.
    std::vector<std::vector<Cyclo>> linear_characters() const {
        std::vector<int> ds = commutator_subgroup();
        std::size_t nchar = els_.size() / ds.size();
        int ng = num_gens();
        std::vector<int> ord(ng);
        std::vector<std::vector<Cyclo>> out;
        // order of each generator's image in the abelian quotient
        std::vector<char> in_ds(els_.size(), 0);
        for (int x : ds) in_ds[x] = 1;
        for (int j = 0; j < ng; ++j) {
            int g = generator_id(j), x = g, k = 1;
            while (!in_ds[x]) { x = mul(x, g); ++k; }
            ord[j] = k;
        }
        std::vector<int> pick(ng, 0);
        while (true) {
            // candidate character values on generators
            std::vector<Cyclo> val(els_.size());
            val[0] = Cyclo(1);
            bool ok = true;
            for (std::size_t e = 1; e < els_.size() && ok; ++e) {
                int j = word_gen_[e];
                val[e] = val[word_parent_[e]] * Cyclo::root_of_unity(ord[j], pick[j]);
            }
            // verify every (element, generator) edge -> genuine homomorphism
            for (std::size_t e = 0; e < els_.size() && ok; ++e)
                for (int j = 0; j < ng && ok; ++j) {
                    int p = gen_perm_[j][e];
                    int gj = generator_id(j);
                    if (!(val[p] == val[e] * val[gj])) ok = false;
                }
            if (ok) out.push_back(std::move(val));
            // next tuple
            int j = 0;
            while (j < ng && ++pick[j] == ord[j]) pick[j++] = 0;
            if (j == ng) break;
        }
        if (out.size() != nchar)
            throw std::runtime_error("linear character count mismatch");
        return out;
    }

private:
    MatGroup() = default;

    int cond_ = 1;
    std::vector<CycMatrix> gens_;
    std::vector<CycMatrix> els_;
    std::unordered_map<std::string, int> index_;
    std::vector<int> word_parent_, word_gen_;
    std::vector<std::vector<int>> gen_perm_, gen_perm_inv_;
    std::vector<int> inv_;
};

} // namespace reflex
