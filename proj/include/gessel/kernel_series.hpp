#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>

#include "gessel/exact_arith.hpp"

namespace gessel {

// Exponents of x, y, z.
using Exponents = std::array<int, 3>;

// Per-variable maximum retained exponent.
struct Caps {
  int dx = 0;
  int dy = 0;
  int dz = 0;

  bool contains(const Exponents& e) const {
    return e[0] >= 0 && e[1] >= 0 && e[2] >= 0 && e[0] <= dx && e[1] <= dy && e[2] <= dz;
  }
  friend bool operator==(const Caps&, const Caps&) = default;
};

Caps min_caps(const Caps& a, const Caps& b);

// Truncated power series in x, y, z with exact integer coefficients.
// Only nonzero coefficients inside the caps are stored.
class TruncSeries3 {
 public:
  using Terms = std::map<Exponents, ExactInt>;

  explicit TruncSeries3(Caps caps) : caps_(caps) {}

  static TruncSeries3 monomial(Caps caps, Exponents e, const ExactInt& coef = 1);

  const Caps& caps() const { return caps_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  ExactInt coeff(const Exponents& e) const;
  // Adds `delta` to the coefficient at e; dropped when e is outside the caps.
  void add_term(const Exponents& e, const ExactInt& delta);

  // Same coefficients, caps lowered to `caps` (terms outside are dropped).
  TruncSeries3 truncated(const Caps& caps) const;

  // Sections: set y = 0, z = 0, or both.
  TruncSeries3 at_y0() const;
  TruncSeries3 at_z0() const;

  // JSON array of {"ex":..,"ey":..,"ez":..,"coef":"<decimal>"} in exponent order.
  void write_json(std::ostream& out) const;

  friend bool operator==(const TruncSeries3&, const TruncSeries3&) = default;

 private:
  Caps caps_;
  Terms terms_;
};

// Both operands must share caps; throws Error otherwise.
TruncSeries3 series_add(const TruncSeries3& a, const TruncSeries3& b);
TruncSeries3 series_sub(const TruncSeries3& a, const TruncSeries3& b);
TruncSeries3 series_scale(const TruncSeries3& a, const ExactInt& s);
// Product truncated to the componentwise minimum of the operands' caps.
TruncSeries3 series_mul(const TruncSeries3& a, const TruncSeries3& b);
inline ExactInt series_coeff(const TruncSeries3& a, const Exponents& e) { return a.coeff(e); }

// sum F(m; n1, n2) x^m y^n1 z^n2
TruncSeries3 build_G(Caps caps);
// x (1 + z)(1 + y^2 z) - y z
TruncSeries3 build_K(Caps caps);
// K G + y z
TruncSeries3 build_H(const TruncSeries3& G);
inline TruncSeries3 build_H(Caps caps) { return build_H(build_G(caps)); }

struct Discrepancy {
  Exponents at{};
  ExactInt lhs;
  ExactInt rhs;
};

// Outcome of comparing two sides of an identity on an explicit window.
struct IdentityCheck {
  bool holds = false;
  Caps window;
  std::size_t monomials_compared = 0;
  std::optional<Discrepancy> first_discrepancy;
};

// Compares two series at every monomial of `window` in exponent order.
IdentityCheck compare_on_window(const TruncSeries3& lhs, const TruncSeries3& rhs, const Caps& window);

// K G = x(1+z) G(x,0,z) + x G(x,y,0) - x G(x,0,0) - y z
IdentityCheck verify_kernel_equation(const TruncSeries3& G);
IdentityCheck verify_kernel_equation(Caps caps);

// H = H(x,0,z) + H(x,y,0) - H(x,0,0), with H built from G.
IdentityCheck verify_H_equation(const TruncSeries3& G);
IdentityCheck verify_H_equation(Caps caps);

// Expansion of the kernel root y z / ((1 + z)(1 + y^2 z)) in y, z. The
// result has dx = 0; only caps.dy and caps.dz are used.
TruncSeries3 x_of_yz(Caps caps);

// Substitutes the bivariate series `x_sub` (zero constant term) for x in
// `f`, by Horner's scheme in x. The result has dx = 0 and y/z caps equal to
// the minimum of both operands.
TruncSeries3 compose_in_x(const TruncSeries3& f, const TruncSeries3& x_sub);

// H(x(y,z),0,z) + H(x(y,z),y,0) - H(x(y,z),0,0), on y/z caps
// min(dx, dy) x min(dx, dz) where every x^m with m <= dx is accounted for.
TruncSeries3 root_identity_lhs(const TruncSeries3& G);

// root_identity_lhs(G) == y z on its window.
IdentityCheck verify_root_identity(const TruncSeries3& G);
IdentityCheck verify_root_identity(Caps caps);

}  // namespace gessel
