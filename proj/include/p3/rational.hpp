#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace p3 {

/// Arbitrary-precision rational; always kept in canonical form.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact conversion; throws DomainError if r is not an integer in int64 range.
std::int64_t to_int64(const Rational& r);

/// "p/q", or just "p" for integers.
std::string to_string(const Rational& r);

} // namespace p3
