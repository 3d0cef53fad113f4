#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "ricci/error.hpp"

namespace ricci {

// All lengths, masses, costs and curvatures are exact rationals.  GMP keeps
// them canonical (lowest terms, positive denominator) and unbounded, so no
// computation in the library can overflow or round.
using Rat = mpq_class;

// Renders "p/q" in lowest terms with q > 0; integers render as plain "p".
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Parses "p", "p/q" or a plain decimal like "0.25" into an exact rational.
inline Rat rat_from_string(const std::string& text) {
  if (text.empty()) fail(ErrorCode::ParseError, "empty rational literal");
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    // Decimal literal: scale the fractional part by a power of ten.
    const std::string head = text.substr(0, dot);
    const std::string tail = text.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos || tail.empty())
      fail(ErrorCode::ParseError, "bad decimal literal '" + text + "'");
    const bool negative = !head.empty() && head[0] == '-';
    const std::string whole = negative ? head.substr(1) : head;
    if (whole.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorCode::ParseError, "bad decimal literal '" + text + "'");
    mpz_class num(whole.empty() ? "0" : whole);
    mpz_class den(1);
    for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
    num = num * den + mpz_class(tail);
    Rat r(num, den);
    r.canonicalize();
    return negative ? Rat(-r) : r;
  }
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0 || mpz_sgn(mpq_denref(raw)) <= 0) {
    mpq_clear(raw);
    fail(ErrorCode::ParseError, "bad rational literal '" + text + "'");
  }
  Rat r(raw);
  mpq_clear(raw);
  r.canonicalize();
  return r;
}

}  // namespace ricci
