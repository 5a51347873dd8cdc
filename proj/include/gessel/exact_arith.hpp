#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "gessel/error.hpp"

namespace gessel {

using ExactInt = mpz_class;
// mpq_class keeps itself canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using ExactRat = mpq_class;

ExactRat make_rat(long num, long den);

// Falling-factorial binomial a(a-1)...(a-t+1)/t!, valid for negative a.
// Zero when t < 0.
ExactInt binom_general(const ExactInt& a, std::int64_t t);
inline ExactInt binom_general(std::int64_t a, std::int64_t t) {
  return binom_general(ExactInt(static_cast<long>(a)), t);
}

// Rising factorial (q)_n = q(q+1)...(q+n-1).
ExactRat pochhammer(const ExactRat& q, int n);

ExactInt catalan(int n);

ExactInt factorial(int n);

ExactInt pow_int(long base, int exp);

// 16^n (1/2)_n (5/6)_n / ((2)_n (5/3)_n)
ExactRat gessel_closed_form(int n);

// Formulas printed verbatim for individual walk families.
enum class Family {
  F201,  // F(2n; 0, 1)
  VERT,  // F(2n + 2k; 0, n), k = 0..3
  HOR,   // F(n + 2k; n, 0), k = 0..3
};

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

// Exact value of the displayed formula for (family, k) at n. k is ignored
// for F201; VERT and HOR cover k = 0..3 only, anything else throws Error.
ExactRat conjectured_value(Family family, int k, int n);

// Rational -> "p/q" or "p" when integral.
std::string to_string(const ExactRat& q);
inline std::string to_string(const ExactInt& z) { return z.get_str(); }

}  // namespace gessel
