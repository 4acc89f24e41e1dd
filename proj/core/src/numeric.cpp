#include <irrlat/numeric.hpp>

#include <cctype>

#include <irrlat/errors.hpp>

namespace irrlat {

Int isqrt(const Int& x) {
  if (x < 0) throw invariant_error("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::optional<Int> exact_sqrt(const Int& x) {
  if (x < 0) return std::nullopt;
  Int r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return r;
}

bool is_square(const Int& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

Int iroot(const Int& x, unsigned long k) {
  if (k == 0) throw invariant_error("iroot: k must be >= 1");
  if (x < 0) throw invariant_error("iroot: negative argument");
  Int r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

std::optional<Int> exact_root(const Int& x, unsigned long k) {
  if (k == 0 || x < 0) return std::nullopt;
  Int r;
  const int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  if (!exact) return std::nullopt;
  return r;
}

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat qpow(const Rat& base, long long exp) {
  if (exp == 0) return Rat(1);
  const unsigned long long mag =
      exp > 0 ? static_cast<unsigned long long>(exp)
              : -static_cast<unsigned long long>(exp);
  Int num = ipow(Int(base.get_num()), mag);
  Int den = ipow(Int(base.get_den()), mag);
  if (exp < 0) {
    if (num == 0) throw invariant_error("qpow: zero base with negative exponent");
    std::swap(num, den);
  }
  return make_rat(std::move(num), std::move(den));
}

std::optional<Rat> exact_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  auto num = exact_sqrt(Int(r.get_num()));
  if (!num) return std::nullopt;
  auto den = exact_sqrt(Int(r.get_den()));
  if (!den) return std::nullopt;
  return make_rat(std::move(*num), std::move(*den));
}

std::optional<Int> exact_integer_sqrt(const Rat& r) {
  if (r.get_den() != 1 || r <= 0) return std::nullopt;
  return exact_sqrt(Int(r.get_num()));
}

Rat make_rat(Int num, Int den) {
  if (den == 0) throw invariant_error("make_rat: zero denominator");
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

std::string to_decimal(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Int int_from_decimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw parse_error("not a decimal integer: \"" + std::string(s) + "\"");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw parse_error("not a decimal integer: \"" + std::string(s) + "\"");
    }
  }
  return Int(std::string(s), 10);
}

std::size_t bit_length(const Int& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace irrlat
