#ifndef PWAVG_RATIONAL_HPP
#define PWAVG_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <cstdint>

#include "pwavg/errors.hpp"

namespace pwavg {

/// Exact rational numbers. GMP keeps values canonical (reduced, positive
/// denominator); all ring and field operations are exact.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat r = 1;
    Rat b = base;
    unsigned n = e;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline Rat rat_abs(const Rat& q) { return sgn(q) < 0 ? Rat(-q) : q; }

/// Parses "p", "p/q" or a decimal literal like "0.6" (converted exactly).
Rat rat_parse(const std::string& s);

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_double(const Rat& q) { return q.get_d(); }

} // namespace pwavg

#endif
