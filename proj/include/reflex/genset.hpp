#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "reflex/reflection_group.hpp"

namespace reflex {

/// Result of the exhaustive minimal-reflection-generating-set search.
struct GenSetData {
    int min_size = 0;                 // size of a minimal generating set
    std::map<char, int> n_eps;        // per-orbit count, shared by all minimal sets
    long long num_minimal_sets = 0;   // how many minimal sets exist
};

/// Enumerate all reflection generating sets of minimal size and check that
/// the per-orbit generator counts n_eps do not depend on the chosen set.
/// Exponential in |R|; intended for small groups (|G| <= ~200).
inline GenSetData minimal_generating_data(const ReflGroup& G, std::size_t cap = 500) {
    if (G.size() > cap) throw std::invalid_argument("minimal_generating_data: group too large");
    const auto& R = G.reflections();
    int nr = (int)R.size();
    std::size_t target = G.size();

    auto generates = [&](const std::vector<int>& gens) {
        std::vector<char> seen(target, 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            for (int g : gens) {
                int y = G.mul_ids(x, g);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    queue.push_back(y);
                }
            }
        }
        return count == target;
    };

    for (int k = 1; k <= nr; ++k) {
        GenSetData out;
        out.min_size = k;
        std::set<std::map<char, int>> profiles;
        std::vector<int> idx(k);
        // iterate k-subsets of R
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<int> gens(k);
            for (int i = 0; i < k; ++i) gens[i] = R[idx[i]];
            if (generates(gens)) {
                std::map<char, int> prof;
                for (int g : gens) prof[G.orbit_of_reflection(g)]++;
                profiles.insert(prof);
                ++out.num_minimal_sets;
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == nr - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (out.num_minimal_sets > 0) {
            if (profiles.size() != 1)
                throw std::runtime_error(G.name() +
                                         ": minimal generating sets have inconsistent orbit profiles");
            out.n_eps = *profiles.begin();
            return out;
        }
    }
    throw std::runtime_error(G.name() + ": reflections do not generate the group");
}

} // namespace reflex
