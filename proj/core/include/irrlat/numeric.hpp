#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace irrlat {

using Int = mpz_class;
using Rat = mpq_class;

// floor(sqrt(x)), x >= 0
Int isqrt(const Int& x);
std::optional<Int> exact_sqrt(const Int& x);
bool is_square(const Int& x);

// floor(x^(1/k)), k >= 1, x >= 0
Int iroot(const Int& x, unsigned long k);
std::optional<Int> exact_root(const Int& x, unsigned long k);

Int ipow(const Int& base, unsigned long exp);
// base != 0 required for negative exponents
Rat qpow(const Rat& base, long long exp);

// square root of a non-negative rational, when it is rational
std::optional<Rat> exact_sqrt(const Rat& r);
// the positive integer whose square is r, when there is one
std::optional<Int> exact_integer_sqrt(const Rat& r);

// canonicalized num/den, den != 0
Rat make_rat(Int num, Int den);

std::string to_decimal(const Int& v);
std::string to_decimal(const Rat& v);  // "p" or "p/q"
// strict: optional sign followed by decimal digits
Int int_from_decimal(std::string_view s);

// number of bits of |v|; bit_length(0) == 0
std::size_t bit_length(const Int& v);

}  // namespace irrlat
