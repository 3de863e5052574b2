#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyparr {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input (bad rationals, zero normals, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Parses "p", "-p" or "p/q" (q != 0). Whitespace around the token is ignored.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer gcd_of(const std::vector<Integer>& values);

/// Clears denominators and divides by the content, keeping the sign of the
/// first nonzero entry positive. The zero vector maps to the zero vector.
std::vector<Integer> primitive_integer_vector(const RatVector& v);

}  // namespace hyparr
