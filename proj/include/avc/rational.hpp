#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "avc/errors.hpp"

namespace avc {

// Exact rational scalar. GMP's canonical form (coprime, positive denominator)
// is maintained by mpq_class for all arithmetic.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rat& r) { return sgn(r); }

// Parses "num/den" (den optional, defaults to 1). Whitespace is not accepted.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw InputError("bad rational literal: '" + s + "'");
    if (r.get_den() == 0) throw InputError("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

// Serializes as an explicit "num/den" pair, e.g. "3/4", "5/1", "-2/7".
inline std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rat& r) { return r.get_d(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Smallest integer >= r, as a rational.
inline Rat rat_ceil(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(q);
}

// Largest integer <= r, as a rational.
inline Rat rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(q);
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace avc
