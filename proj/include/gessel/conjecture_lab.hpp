#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gessel/exact_arith.hpp"

namespace gessel {

// Univariate polynomial in n with rational coefficients, ascending degree.
// Trailing zero coefficients are trimmed; the zero polynomial has no
// coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<ExactRat> ascending);
  RatPoly(std::initializer_list<long> ascending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ExactRat>& coeffs() const { return coeffs_; }
  ExactRat leading() const { return coeffs_.empty() ? ExactRat(0) : coeffs_.back(); }
  ExactRat operator()(const ExactRat& n) const;

  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const ExactRat& s);
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  // e.g. "1/2*n^2 + 5/2*n + 2"
  std::string to_string() const;

 private:
  std::vector<ExactRat> coeffs_;
};

// Solves the square system m * x = rhs exactly; nullopt when singular.
std::optional<std::vector<ExactRat>> solve_exact(std::vector<std::vector<ExactRat>> m,
                                                 std::vector<ExactRat> rhs);

struct GesselReport {
  int N = 0;
  bool all_agree = false;
  std::optional<int> first_mismatch;
  std::vector<ExactInt> values;  // F(2n; 0, 0), n = 0..N
};

// count_walks(2n, 0, 0) against the closed form for n = 0..N.
GesselReport verify_gessel(int N);

// Second-order recurrence for g(n) = F(2n+1; 1, 0):
//   (n+3)(3n+7)(3n+8) g(n+1) - 8(2n+3)(18n^2+54n+35) g(n)
//     + 256 n (3n+1)(3n+2) g(n-1) = 0.
struct RecurrenceCheck {
  int order = 2;
  std::vector<RatPoly> coeff_polys;  // multipliers of g(n+1), g(n), g(n-1)
  int range_checked = -1;            // residual checked for n = 0..range_checked
  bool holds = false;
  std::optional<int> first_failure;
};

std::vector<RatPoly> recurrence_g_coefficients();

// Checks the residual for every n with g(n+1) available in `g`.
RecurrenceCheck check_recurrence_g(std::span<const ExactInt> g);
// Uses g(0..N) from the walk oracle.
RecurrenceCheck verify_recurrence_g(int N);

enum class FitFamily {
  P_K,   // F(2n; 0, k), companion polynomial of the (7/6)_n term
  Q_K,   // F(2n; 0, k), polynomial of the (5/6)_n term
  R_K,   // F(2n + 2k; 0, n) = 4^n (3/2)_n / (k+2)_n r_k(n)
  S_K,   // F(n + 2k; n, 0) = s_k(n)
  RT_K,  // F~(2n + 2k + 1; 0, n) = 4^n (1/2)_n / (k+2)_n r~_k(n)
};

std::string_view fit_family_name(FitFamily f);
// Accepts "p", "q", "r", "s", "rt" and the enum spellings.
FitFamily parse_fit_family(std::string_view name);

// Degree the conjecture claims for (family, k).
int claimed_degree(FitFamily family, int k);

struct PolyFit {
  FitFamily family = FitFamily::S_K;
  int k = 0;
  RatPoly poly;
  std::vector<int> sample_points;
  std::vector<int> held_out_points;
  int verified_extra = 0;
};

inline constexpr int kDefaultHeldOut = 5;

// Exact interpolation of the family's polynomial(s) from consecutive
// samples n = 0, 1, ... after dividing out the ansatz prefactors, then
// validation on `held_out` further points. Throws Error on a singular
// system or a held-out mismatch.
PolyFit fit_family(FitFamily family, int k, int held_out = kDefaultHeldOut);

// Walk-oracle value at n with the family's prefactor divided out: the value
// the polynomial (for P_K/Q_K, the weighted pair) must take at n.
ExactRat ansatz_target(FitFamily family, int k, int n);

struct ClaimReport {
  std::map<std::string, bool> claims;  // "degree", "leading_coefficient", "divisible_by_n_plus_1"
  bool all() const;
};

ClaimReport verify_family_claims(const PolyFit& fit);

// {"family":..,"k":..,"degree":..,"coeffs":["p/q",..],"claims":{..},"held_out_ok":..}
std::string fit_report_json(const PolyFit& fit, const ClaimReport& claims);

}  // namespace gessel
