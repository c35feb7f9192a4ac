#pragma once

#include <stdexcept>
#include <vector>

#include "reflex/cyclotomic.hpp"
#include "reflex/matrix.hpp"
#include "reflex/polynomial.hpp"

namespace reflex {

/// Truncated power series over the cyclotomic numbers, coefficient of q^i
/// at index i; every vector has length D+1 for its truncation order D.
using CSeries = std::vector<Cyclo>;

inline CSeries cseries_mul(const CSeries& a, const CSeries& b) {
    std::size_t d = a.size();
    CSeries out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < d; ++j)
            if (!b[j].is_zero()) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

/// 1/f as a truncated series; f(0) must be nonzero.
inline CSeries cseries_inverse(const std::vector<Cyclo>& f, std::size_t D) {
    if (f.empty() || f[0].is_zero())
        throw std::domain_error("series inverse: zero constant term");
    CSeries out(D + 1);
    Cyclo c0inv = f[0].inverse();
    out[0] = c0inv;
    for (std::size_t k = 1; k <= D; ++k) {
        Cyclo acc(0);
        for (std::size_t j = 1; j <= k && j < f.size(); ++j)
            if (!f[j].is_zero()) acc = acc + f[j] * out[k - j];
        out[k] = -(acc * c0inv);
    }
    return out;
}

/// Series expansion of 1/det(1 - q m), truncated at q^D.
inline CSeries char_series(const CycMatrix& m, std::size_t D) {
    return cseries_inverse(m.det_one_minus_q(), D);
}

} // namespace reflex
