#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rbd {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

std::string to_string(const Integer& value);
// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);
// (a,b,c)
std::string format_tuple(const IntVector& v);

// Accepts "(a,b,c)", "a,b,c" or whitespace separated integers.
IntVector parse_tuple(std::string_view text);
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

IntVector make_vector(std::initializer_list<long> values);

Integer dot(const IntVector& a, const IntVector& b);
Integer gcd_of(const IntVector& v);
IntVector negated(const IntVector& v);

// Floor-style residue in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);

inline bool is_even(const Integer& a) { return mpz_even_p(a.get_mpz_t()) != 0; }
inline bool fits_long(const Integer& a) { return a.fits_slong_p(); }

}  // namespace rbd
