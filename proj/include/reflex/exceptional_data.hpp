#pragma once

// Exact generator matrices for the exceptional groups handled as matrix
// groups over a cyclotomic field. Each generator is stored row-major; each
// entry is phi(conductor) rationals (num, den pairs) giving the residue
// modulo the conductor-th cyclotomic polynomial.

#include <vector>

#include "reflex/matrix.hpp"

namespace reflex::detail {

struct ExcGenTable {
    const char* name;
    int conductor;
    int dim;
    int ngens;
    const long* data; // ngens * dim * dim * phi(conductor) * 2 longs
};

inline constexpr long kG4_data[] = {
    0, 1, -1, 2, 1, 2, 1, 2, 0, 1, -1, 2, 1, 2, 1, 2,
    0, 1, -1, 2, -1, 2, 1, 2, 0, 1, 1, 2, 1, 2, -1, 2,
    0, 1, 1, 2, 1, 2, -1, 2, 0, 1, 1, 2, 1, 2, -1, 2,
    0, 1, 1, 2, -1, 2, -1, 2, 0, 1, -1, 2, 1, 2, 1, 2
};

inline constexpr long kG5_data[] = {
    0, 1, -1, 2, 1, 2, 1, 2, 0, 1, -1, 2, 1, 2, 1, 2,
    0, 1, -1, 2, -1, 2, 1, 2, 0, 1, 1, 2, 1, 2, -1, 2,
    0, 1, 1, 2, 1, 2, -1, 2, 0, 1, -1, 2, 1, 2, 1, 2,
    0, 1, -1, 2, -1, 2, 1, 2, 0, 1, -1, 2, 1, 2, 1, 2
};

inline constexpr long kG6_data[] = {
    -1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1,
    0, 1, -1, 2, 1, 2, 1, 2, 0, 1, -1, 2, 1, 2, 1, 2,
    0, 1, -1, 2, -1, 2, 1, 2, 0, 1, 1, 2, 1, 2, -1, 2
};

inline constexpr long kG7_data[] = {
    -1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1,
    0, 1, -1, 2, 1, 2, 1, 2, 0, 1, -1, 2, 1, 2, 1, 2,
    0, 1, -1, 2, -1, 2, 1, 2, 0, 1, 1, 2, 1, 2, -1, 2,
    0, 1, 1, 2, 1, 2, -1, 2, 0, 1, 1, 2, -1, 2, -1, 2,
    0, 1, 1, 2, 1, 2, -1, 2, 0, 1, -1, 2, 1, 2, 1, 2
};

inline constexpr long kG9_data[] = {
    0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, 1, 2, 0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 1, 2, 0, 1, 1, 2, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1
};

inline constexpr long kG10_data[] = {
    0, 1, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1, -1, 2, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1
};

inline constexpr long kG11_data[] = {
    0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, 1, 2, 0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 1, 2, 0, 1, 1, 2, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1, -1, 2, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1
};

inline constexpr long kG13_data[] = {
    -1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, 1, 2, 0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 1, 2, 0, 1, 1, 2, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, 1, 2, 0, 1, 1, 2, 0, 1, -1, 2, 0, 1, 0, 1
};

inline constexpr long kG14_data[] = {
    0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, 1, 2, 0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 1, 2, 0, 1, 1, 2, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1, -1, 2, 0, 1
};

inline constexpr long kG15_data[] = {
    -1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, 1, 2, 0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 1, 2, 0, 1, 1, 2, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, -1, 2, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1, -1, 2, 0, 1
};

inline constexpr long kG17_data[] = {
    -1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    1, 2, -1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 1, 2, 1, 2, 0, 1, 0, 1, 0, 1,
    1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 1, 2, 0, 1, 0, 1, 0, 1,
    -1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1, 0, 1, 0, 1,
    1, 2, 1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, -1, 2, 1, 2, 0, 1, 0, 1, 0, 1
};

inline constexpr long kG18_data[] = {
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, 1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, 1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, 1, 2, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2,
    1, 2, -1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 1, 2, 1, 2, 0, 1, 0, 1, 0, 1,
    1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 1, 2, 0, 1, 0, 1, 0, 1,
    -1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1, 0, 1, 0, 1,
    1, 2, 1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, -1, 2, 1, 2, 0, 1, 0, 1, 0, 1
};

inline constexpr long kG19_data[] = {
    -1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, 1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, 1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, -1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, 1, 2, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2,
    1, 2, -1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 1, 2, 1, 2, 0, 1, 0, 1, 0, 1,
    1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 1, 2, 0, 1, 0, 1, 0, 1,
    -1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1, 0, 1, 0, 1,
    1, 2, 1, 2, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, -1, 2, 1, 2, 0, 1, 0, 1, 0, 1
};

inline constexpr long kG21_data[] = {
    -1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2, 0, 1, 1, 2,
    0, 1, 0, 1, 1, 2, 0, 1, 0, 1, -1, 2, 0, 1, -1, 2,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 2,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, -1, 2, 0, 1, -1, 2,
    0, 1, 0, 1, 1, 2, 0, 1, 0, 1, 1, 2, 0, 1, 1, 2
};

inline constexpr long kG26_data[] = {
    0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1,
    0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    0, 1, 0, 1, 1, 1, 0, 1, 2, 3, 1, 3, 2, 3, 1, 3,
    2, 3, 1, 3, -1, 3, -2, 3, 2, 3, 1, 3, -1, 3, 1, 3,
    -1, 3, -2, 3, -1, 3, 1, 3, 2, 3, 1, 3
};

inline constexpr ExcGenTable kExcGenTables[] = {
    {"G4", 12, 2, 2, kG4_data},
    {"G5", 12, 2, 2, kG5_data},
    {"G6", 12, 2, 2, kG6_data},
    {"G7", 12, 2, 3, kG7_data},
    {"G9", 24, 2, 2, kG9_data},
    {"G10", 24, 2, 2, kG10_data},
    {"G11", 24, 2, 3, kG11_data},
    {"G13", 24, 2, 3, kG13_data},
    {"G14", 24, 2, 2, kG14_data},
    {"G15", 24, 2, 3, kG15_data},
    {"G17", 60, 2, 2, kG17_data},
    {"G18", 60, 2, 2, kG18_data},
    {"G19", 60, 2, 3, kG19_data},
    {"G21", 60, 2, 2, kG21_data},
    {"G26", 3, 3, 3, kG26_data},
};


inline std::vector<CycMatrix> exceptional_generators(const ExcGenTable& t) {
    int ph = euler_phi(t.conductor);
    std::vector<CycMatrix> gens;
    const long* p = t.data;
    for (int g = 0; g < t.ngens; ++g) {
        CycMatrix m(t.dim);
        for (int i = 0; i < t.dim; ++i)
            for (int j = 0; j < t.dim; ++j) {
                std::vector<Rat> c(ph);
                for (int k = 0; k < ph; ++k) {
                    c[k] = rat(p[0], p[1]);
                    p += 2;
                }
                m.at(i, j) = Cyclo::from_coeffs(t.conductor, std::move(c));
            }
        gens.push_back(std::move(m));
    }
    return gens;
}

} // namespace reflex::detail
