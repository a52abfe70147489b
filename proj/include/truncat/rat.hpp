#pragma once

#include <gmpxx.h>
#include <string>

namespace truncat {

using Rat = mpq_class;
using Int = mpz_class;

inline bool isZero(const Rat& x) { return sgn(x) == 0; }

inline bool isInteger(const Rat& x) { return x.get_den() == 1; }

/// Exact conversion to long; throws if the value is not an integer that fits.
inline long toLong(const Rat& x) {
    if (!isInteger(x)) throw std::runtime_error("toLong: not an integer: " + x.get_str());
    if (!x.get_num().fits_slong_p()) throw std::runtime_error("toLong: overflow");
    return x.get_num().get_si();
}

} // namespace truncat
