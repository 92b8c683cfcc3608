#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace alder
{

/// Part sizes, weights and indices of counting functions.
using Part = std::int64_t;

/// Exact partition count. Signed so that differences of counts stay exact.
using Count = mpz_class;

inline std::string to_decimal(const Count &c) { return c.get_str(10); }

inline Count from_decimal(const std::string &s) { return Count{s, 10}; }

/// A parameter lies outside the domain where an operation is defined.
class DomainError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force request exceeds the configured enumeration ceiling.
class CeilingExceeded : public std::length_error
{
  public:
    using std::length_error::length_error;
};

/// An internal invariant failed; indicates a bug or a false mathematical claim.
class InvariantViolation : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

} // namespace alder
