#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace reflex {

/// Stir_i(n): the number of permutations of n with n - i cycles
/// (unsigned Stirling numbers of the first kind), satisfying
/// sum_i Stir_i(n) q^i = prod_{i=1}^{n-1} (1 + i q).
inline std::vector<long long> stirling_numbers(int n) {
    if (n < 1) throw std::invalid_argument("stirling_numbers: n >= 1");
    std::vector<long long> s{1};
    for (int i = 1; i < n; ++i) {
        std::vector<long long> r(s.size() + 1, 0);
        for (std::size_t j = 0; j < s.size(); ++j) {
            r[j] += s[j];
            r[j + 1] += (long long)i * s[j];
        }
        s = std::move(r);
    }
    return s;
}

/// For m = a*b and d = gcd(a, b): the number m_j of j-tuples from
/// {1, ..., m-1} whose sum is 0 both mod a and mod b, and the number n_j
/// of such tuples whose sum is 0 mod b but nonzero mod a.
inline std::pair<long long, long long> count_decoration_tuples(int m, int a, int b, int j) {
    if (m != a * b) throw std::invalid_argument("count_decoration_tuples: m != a*b");
    int d = std::gcd(a, b);
    long long pw = 1; // (m-1)^j
    for (int i = 0; i < j; ++i) pw *= (m - 1);
    long long sgn = (j % 2 == 0) ? 1 : -1;
    long long core = (pw - sgn) / m;
    return {d * core + sgn, (a - d) * core};
}

} // namespace reflex
