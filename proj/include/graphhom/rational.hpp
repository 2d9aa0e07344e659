#ifndef GRAPHHOM_RATIONAL_HPP
#define GRAPHHOM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "graphhom/errors.hpp"

namespace graphhom {

// Exact rational scalar. mpq_class keeps results of arithmetic in canonical
// reduced form (gcd(num,den)=1, den>0) as long as the operands are canonical,
// so the only place that needs care is construction from raw num/den.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline int sign_of(const Rational& r) { return sgn(r); }

} // namespace graphhom

#endif
