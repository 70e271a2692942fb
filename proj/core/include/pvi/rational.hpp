#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pvi {

// Exact rational numbers.  GMP's mpq_class already maintains the canonical
// form (gcd 1, positive denominator) once canonicalize() has run; the helpers
// here guarantee that for every construction path we use.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", "p/q".  Whitespace is not accepted.
std::optional<Rational> parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow_rational(const Rational& base, long exp);

// Largest integer k with k^2 <= n (n >= 0).
Integer isqrt(const Integer& n);

// n = square * sqfree with sqfree squarefree, via trial division.  Intended
// for the modest constants that appear in radicand contents.
void split_square(const Integer& n, Integer& square_root, Integer& sqfree);

}  // namespace pvi
