#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace p2sd {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Input is well-formed but outside the domain where an operation is defined
/// (boundary cases, exhausted search depth, exceeded enumeration caps).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Parses "p/q", "-p/q" or an integer into a canonical rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical printer: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

BigInt parse_bigint(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt factorial(unsigned n);

}  // namespace p2sd
