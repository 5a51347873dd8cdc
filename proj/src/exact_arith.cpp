#include "gessel/exact_arith.hpp"

#include <array>

namespace gessel {

ExactRat make_rat(long num, long den) {
  ExactRat q(num, den);
  q.canonicalize();
  return q;
}

ExactInt binom_general(const ExactInt& a, std::int64_t t) {
  if (t < 0) return 0;
  ExactInt r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(t));
  return r;
}

ExactRat pochhammer(const ExactRat& q, int n) {
  ExactRat r = 1;
  ExactRat term = q;
  for (int i = 0; i < n; ++i) {
    r *= term;
    term += 1;
  }
  return r;
}

ExactInt catalan(int n) {
  ExactInt c = binom_general(2 * n, n);
  c /= n + 1;
  return c;
}

ExactInt factorial(int n) {
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactInt pow_int(long base, int exp) {
  ExactInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                static_cast<unsigned long>(exp));
  if (base < 0 && exp % 2 == 1) r = -r;
  return r;
}

ExactRat gessel_closed_form(int n) {
  ExactRat r = pow_int(16, n);
  r *= pochhammer(make_rat(1, 2), n) * pochhammer(make_rat(5, 6), n);
  r /= pochhammer(2, n) * pochhammer(make_rat(5, 3), n);
  if (r.get_den() != 1) throw Error("Gessel closed form is not integral at n=" + std::to_string(n));
  return r;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::F201: return "F201";
    case Family::VERT: return "VERT";
    case Family::HOR: return "HOR";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "F201") return Family::F201;
  if (name == "VERT") return Family::VERT;
  if (name == "HOR") return Family::HOR;
  throw Error("unknown closed-form family '" + std::string(name) + "'");
}

namespace {

ExactRat poly_eval(std::initializer_list<long> ascending, const ExactRat& n) {
  ExactRat acc = 0;
  ExactRat p = 1;
  for (long c : ascending) {
    acc += c * p;
    p *= n;
  }
  return acc;
}

ExactRat f201(int n) {
  const ExactRat nn = n;
  ExactRat bracket = make_rat(5, 27) * pochhammer(make_rat(7, 6), n) / pochhammer(make_rat(7, 3), n);
  bracket += poly_eval({-50, 183, 111}, nn) / 270 * pochhammer(make_rat(5, 6), n) /
             pochhammer(make_rat(8, 3), n);
  return ExactRat(pow_int(16, n)) * pochhammer(make_rat(1, 2), n) / pochhammer(3, n) * bracket;
}

// F(2n + 2k; 0, n)
ExactRat vertical(int k, int n) {
  const ExactRat nn = n;
  const ExactRat three_halves = pochhammer(make_rat(3, 2), n);
  switch (k) {
    case 0:
      return ExactRat(pow_int(4, n)) * pochhammer(make_rat(1, 2), n) / pochhammer(2, n);
    case 1:
      return ExactRat(pow_int(2, 2 * n + 1)) * (nn + 1) * three_halves / pochhammer(3, n);
    case 2:
      return ExactRat(pow_int(4, n)) * (nn + 1) * poly_eval({33, 32, 8}, nn) * three_halves /
             (3 * pochhammer(4, n));
    case 3:
      // 4^(n-1) kept rational so n = 0 works.
      return ExactRat(pow_int(4, n)) / 4 * (nn + 1) *
             poly_eval({3060, 4641, 2648, 672, 64}, nn) * three_halves / (9 * pochhammer(5, n));
    default:
      break;
  }
  throw Error("formula not displayed for VERT at k=" + std::to_string(k));
}

// F(n + 2k; n, 0)
ExactRat horizontal(int k, int n) {
  const ExactRat nn = n;
  switch (k) {
    case 0: return 1;
    case 1: return (nn + 1) * (nn + 4) / 2;
    case 2: return (nn + 1) * poly_eval({132, 74, 15, 1}, nn) / 12;
    case 3: return (nn + 1) * poly_eval({12240, 8604, 2620, 407, 32, 1}, nn) / 144;
    default: break;
  }
  throw Error("formula not displayed for HOR at k=" + std::to_string(k));
}

}  // namespace

ExactRat conjectured_value(Family family, int k, int n) {
  if (n < 0) throw Error("n must be nonnegative");
  switch (family) {
    case Family::F201: return f201(n);
    case Family::VERT: return vertical(k, n);
    case Family::HOR: return horizontal(k, n);
  }
  throw Error("unknown family");
}

std::string to_string(const ExactRat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace gessel
