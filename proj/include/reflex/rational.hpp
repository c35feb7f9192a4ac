#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace reflex {

/// Exact rational number, always in lowest terms with positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace reflex
