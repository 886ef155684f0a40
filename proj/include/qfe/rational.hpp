#ifndef QFE_RATIONAL_HPP
#define QFE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qfe {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) as long as every constructor path goes through canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a" or "a/b" with decimal integers; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "a" for integers, otherwise "a/b".
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace qfe

#endif  // QFE_RATIONAL_HPP
