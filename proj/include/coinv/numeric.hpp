#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace coinv {

// Exact scalars. Degrees in this library stay tiny but coefficient and
// pivot growth in exact elimination is unbounded, so everything integer
// is arbitrary precision from the start.
using BigInt = mpz_class;
using Rational = mpq_class;

// Binomial coefficient with the stars-and-bars convention:
// C(a, 0) = 1 for every a (including a < 0), C(a, b) = 0 for b < 0,
// and C(a, b) = 0 for 0 <= a < b. The a < 0, b = 0 case matters: the
// all-ones Schur specializations hit C(k-1, 0) at k = 0 and the empty
// alphabet must still contribute 1.
inline BigInt binomial(std::int64_t a, std::int64_t b) {
    if (b < 0) return 0;
    if (b == 0) return 1;
    if (a < b) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    return c.get_str();
}

// Narrowing helper for values that are known to be small (dimension
// counts, ranks). Throws instead of truncating.
std::int64_t to_int64(const BigInt& v);

}  // namespace coinv
