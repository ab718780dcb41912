#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "coxwalk/errors.hpp"

namespace coxwalk {

// Exact arbitrary-precision arithmetic, backed by GMP.  Everything the
// solvers hand back is a bona fide rational; floats only appear when a
// caller explicitly asks for a numeric rendering.
using BigInt = mpz_class;
using Rational = mpq_class;

using RationalVec = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw SingularSystem("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// gmpxx has no long long overloads; on this ABI long is 64-bit, so these
// narrowing-free casts bridge the gap.
inline Rational rat_of(long long v) { return Rational(static_cast<long>(v)); }
inline BigInt big_of(long long v) { return BigInt(static_cast<long>(v)); }

inline RationalVec to_rational_vec(const std::vector<long long>& v) {
    RationalVec out;
    out.reserve(v.size());
    for (long long c : v) out.push_back(rat_of(c));
    return out;
}

// "p/q" with the canonical sign on the numerator; whole numbers print bare.
inline std::string to_fraction_string(const Rational& q) {
    mpq_class c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational parse_fraction(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw DimensionMismatch("cannot parse rational: " + text);
    if (q.get_den() == 0) throw SingularSystem("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace coxwalk
