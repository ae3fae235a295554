#pragma once

// Exact number types. Everything geometric in this library is computed with
// these; there is no floating point outside the spring embedder.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tightspan {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Raised for malformed textual input. `position()` is the 0-based token index
/// (or line number, for line-oriented readers) at which parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses "p", "-p" or "p/q" (q > 0) exactly. Throws ParseError on anything
/// else, including a zero or negative denominator.
Rational parse_rational(std::string_view token, std::size_t position = 0);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Clears denominators and divides by the gcd; the direction is preserved.
IntVector primitive(const RationalVector& v);
IntVector primitive(IntVector v);

RationalVector to_rational(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Lexicographic comparison (shorter vectors first on a common prefix).
bool lex_less(const IntVector& a, const IntVector& b);

std::string to_string(const IntVector& v, char sep = ' ');
std::string to_string(const RationalVector& v, char sep = ' ');

}  // namespace tightspan
