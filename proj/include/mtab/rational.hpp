#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace mtab {

/// Exact rational scalar. All arithmetic in the library is over Q;
/// mpq_class keeps values canonical (positive denominator, reduced).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

/// Bit size of numerator+denominator; used as a pivot-selection heuristic.
inline std::size_t rat_bits(const Rat& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

/// "p" or "p/q", exact.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rat rat_parse(const std::string& s);

using RatVec = std::vector<Rat>;

long long binomial(int n, int k);
long long factorial(int n);

}  // namespace mtab
