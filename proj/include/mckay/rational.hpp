#ifndef MCKAY_RATIONAL_HPP
#define MCKAY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "mckay/error.hpp"

namespace mckay {

// Exact arithmetic throughout: arbitrary-precision integers and rationals
// from GMP. mpq_class keeps values reduced with a positive denominator,
// which is exactly the canonical form equality tests rely on.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// num/den in canonical form (two-argument mpq_class does not reduce).
inline Rational make_rational(long num, long den) {
  if (den == 0) throw precondition_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Integer& n) { return n.get_str(); }

/// Parse "p", "-p" or "p/q" (base 10). Rejects empty input and zero
/// denominators instead of letting GMP abort on canonicalize.
inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Integer num(s, 10);
      return Rational(num);
    }
    Integer num(s.substr(0, slash), 10);
    Integer den(s.substr(slash + 1), 10);
    if (den == 0) throw precondition_error("rational with zero denominator: " + s);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw precondition_error("malformed rational literal: '" + s + "'");
  }
}

}  // namespace mckay

#endif  // MCKAY_RATIONAL_HPP
