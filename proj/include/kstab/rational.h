#pragma once

#include <gmpxx.h>

#include <string>

namespace kstab {

// Exact rational scalar. GMP keeps canonical form (lowest terms, positive
// denominator); the helpers below never leave a value uncanonicalized.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p/q", "p", and plain decimals such as "-1.25" (parsed exactly).
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign_of(const Rational& q) { return sgn(q); }

Rational pow_rational(const Rational& base, unsigned exponent);

}  // namespace kstab
