#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace avk {

using Rational = mpq_class;
using Integer = mpz_class;

/* Bad input (malformed data, unknown labels, violated preconditions). */
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/* A mathematical check that the input was supposed to satisfy failed. */
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "p", "p/q", "-p/q" with optional surrounding blanks.
Rational parse_rational(std::string_view text);

// Canonical text: "p" for integers, "p/q" otherwise, q > 0.
std::string to_string(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign_of(const Rational& r) { return sgn(r); }

inline bool is_integer(const Rational& r) {
  return r.get_den() == 1;
}

Rational binomial(long n, long k);

}  // namespace avk
