#include "gessel/kernel_series.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "json.hpp"

#include "gessel/walk_dp.hpp"

namespace gessel {

Caps min_caps(const Caps& a, const Caps& b) {
  return {std::min(a.dx, b.dx), std::min(a.dy, b.dy), std::min(a.dz, b.dz)};
}

namespace {

std::string caps_str(const Caps& c) {
  return "(" + std::to_string(c.dx) + "," + std::to_string(c.dy) + "," + std::to_string(c.dz) + ")";
}

void require_same_caps(const TruncSeries3& a, const TruncSeries3& b) {
  if (!(a.caps() == b.caps())) {
    throw Error("series caps mismatch: " + caps_str(a.caps()) + " vs " + caps_str(b.caps()));
  }
}

}  // namespace

TruncSeries3 TruncSeries3::monomial(Caps caps, Exponents e, const ExactInt& coef) {
  TruncSeries3 s(caps);
  s.add_term(e, coef);
  return s;
}

ExactInt TruncSeries3::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ExactInt(0) : it->second;
}

void TruncSeries3::add_term(const Exponents& e, const ExactInt& delta) {
  if (delta == 0 || !caps_.contains(e)) return;
  auto [it, inserted] = terms_.try_emplace(e, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncSeries3 TruncSeries3::truncated(const Caps& caps) const {
  TruncSeries3 out(caps);
  for (const auto& [e, c] : terms_) {
    if (caps.contains(e)) out.terms_.emplace(e, c);
  }
  return out;
}

TruncSeries3 TruncSeries3::at_y0() const {
  TruncSeries3 out(caps_);
  for (const auto& [e, c] : terms_) {
    if (e[1] == 0) out.terms_.emplace(e, c);
  }
  return out;
}

TruncSeries3 TruncSeries3::at_z0() const {
  TruncSeries3 out(caps_);
  for (const auto& [e, c] : terms_) {
    if (e[2] == 0) out.terms_.emplace(e, c);
  }
  return out;
}

void TruncSeries3::write_json(std::ostream& out) const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json t;
    t["ex"] = e[0];
    t["ey"] = e[1];
    t["ez"] = e[2];
    t["coef"] = c.get_str();
    arr.push_back(std::move(t));
  }
  out << arr.dump();
}

TruncSeries3 series_add(const TruncSeries3& a, const TruncSeries3& b) {
  require_same_caps(a, b);
  TruncSeries3 out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

TruncSeries3 series_sub(const TruncSeries3& a, const TruncSeries3& b) {
  require_same_caps(a, b);
  TruncSeries3 out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
  return out;
}

TruncSeries3 series_scale(const TruncSeries3& a, const ExactInt& s) {
  TruncSeries3 out(a.caps());
  if (s == 0) return out;
  for (const auto& [e, c] : a.terms()) out.add_term(e, c * s);
  return out;
}

TruncSeries3 series_mul(const TruncSeries3& a, const TruncSeries3& b) {
  const Caps caps = min_caps(a.caps(), b.caps());
  TruncSeries3 out(caps);
  ExactInt prod;
  for (const auto& [ea, ca] : a.terms()) {
    if (ea[0] > caps.dx || ea[1] > caps.dy || ea[2] > caps.dz) continue;
    for (const auto& [eb, cb] : b.terms()) {
      const Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      if (!caps.contains(e)) continue;
      prod = ca * cb;
      out.add_term(e, prod);
    }
  }
  return out;
}

TruncSeries3 build_G(Caps caps) {
  TruncSeries3 g(caps);
  const auto table = shared_walk_table(std::max(caps.dx, 0));
  for (int m = 0; m <= caps.dx; ++m) {
    for (int n1 = 0; n1 <= std::min(m, caps.dy); ++n1) {
      for (int n2 = 0; n2 <= caps.dz; ++n2) g.add_term({m, n1, n2}, table->at(m, n1, n2));
    }
  }
  return g;
}

TruncSeries3 build_K(Caps caps) {
  TruncSeries3 k(caps);
  k.add_term({1, 0, 0}, 1);
  k.add_term({1, 0, 1}, 1);
  k.add_term({1, 2, 1}, 1);
  k.add_term({1, 2, 2}, 1);
  k.add_term({0, 1, 1}, -1);
  return k;
}

TruncSeries3 build_H(const TruncSeries3& G) {
  TruncSeries3 h = series_mul(build_K(G.caps()), G);
  h.add_term({0, 1, 1}, 1);
  return h;
}

IdentityCheck compare_on_window(const TruncSeries3& lhs, const TruncSeries3& rhs, const Caps& window) {
  IdentityCheck r;
  r.window = window;
  r.monomials_compared = window.dx < 0 || window.dy < 0 || window.dz < 0
                             ? 0
                             : static_cast<std::size_t>(window.dx + 1) * (window.dy + 1) * (window.dz + 1);
  if (!(lhs.caps().dx >= window.dx && lhs.caps().dy >= window.dy && lhs.caps().dz >= window.dz &&
        rhs.caps().dx >= window.dx && rhs.caps().dy >= window.dy && rhs.caps().dz >= window.dz)) {
    throw Error("comparison window " + caps_str(window) + " exceeds the series caps");
  }
  // Merge both sparse term lists in exponent order.
  auto a = lhs.terms().begin();
  auto b = rhs.terms().begin();
  const auto a_end = lhs.terms().end();
  const auto b_end = rhs.terms().end();
  const ExactInt zero = 0;
  while (a != a_end || b != b_end) {
    Exponents e;
    const ExactInt* lv = &zero;
    const ExactInt* rv = &zero;
    if (b == b_end || (a != a_end && a->first < b->first)) {
      e = a->first;
      lv = &a->second;
      ++a;
    } else if (a == a_end || b->first < a->first) {
      e = b->first;
      rv = &b->second;
      ++b;
    } else {
      e = a->first;
      lv = &a->second;
      rv = &b->second;
      ++a;
      ++b;
    }
    if (!window.contains(e) || *lv == *rv) continue;
    r.holds = false;
    r.first_discrepancy = Discrepancy{e, *lv, *rv};
    return r;
  }
  r.holds = true;
  return r;
}

IdentityCheck verify_kernel_equation(const TruncSeries3& G) {
  const Caps caps = G.caps();
  const TruncSeries3 lhs = series_mul(build_K(caps), G);

  const TruncSeries3 x = TruncSeries3::monomial(caps, {1, 0, 0});
  TruncSeries3 x_one_plus_z = x;
  x_one_plus_z.add_term({1, 0, 1}, 1);

  TruncSeries3 rhs = series_mul(x_one_plus_z, G.at_y0());
  rhs = series_add(rhs, series_mul(x, G.at_z0()));
  rhs = series_sub(rhs, series_mul(x, G.at_y0().at_z0()));
  rhs.add_term({0, 1, 1}, -1);
  return compare_on_window(lhs, rhs, caps);
}

IdentityCheck verify_kernel_equation(Caps caps) { return verify_kernel_equation(build_G(caps)); }

IdentityCheck verify_H_equation(const TruncSeries3& G) {
  const TruncSeries3 h = build_H(G);
  TruncSeries3 rhs = series_add(h.at_y0(), h.at_z0());
  rhs = series_sub(rhs, h.at_y0().at_z0());
  return compare_on_window(h, rhs, G.caps());
}

IdentityCheck verify_H_equation(Caps caps) { return verify_H_equation(build_G(caps)); }

TruncSeries3 x_of_yz(Caps caps) {
  // y z * sum_b (-z)^b * sum_a (-y^2 z)^a
  const Caps c{0, caps.dy, caps.dz};
  TruncSeries3 out(c);
  for (int a = 0; 1 + 2 * a <= c.dy; ++a) {
    for (int b = 0; 1 + a + b <= c.dz; ++b) {
      out.add_term({0, 1 + 2 * a, 1 + a + b}, (a + b) % 2 == 0 ? 1 : -1);
    }
  }
  return out;
}

TruncSeries3 compose_in_x(const TruncSeries3& f, const TruncSeries3& x_sub) {
  if (x_sub.coeff({0, 0, 0}) != 0) throw Error("substituted series must have zero constant term");
  const Caps caps{0, std::min(f.caps().dy, x_sub.caps().dy), std::min(f.caps().dz, x_sub.caps().dz)};
  std::map<int, TruncSeries3> by_power;
  int top = 0;
  for (const auto& [e, c] : f.terms()) {
    if (e[1] > caps.dy || e[2] > caps.dz) continue;
    auto it = by_power.try_emplace(e[0], caps).first;
    it->second.add_term({0, e[1], e[2]}, c);
    top = std::max(top, e[0]);
  }
  const TruncSeries3 sub = x_sub.truncated(caps);
  TruncSeries3 acc(caps);
  for (int m = top; m >= 0; --m) {
    acc = series_mul(acc, sub);
    if (auto it = by_power.find(m); it != by_power.end()) acc = series_add(acc, it->second);
  }
  return acc;
}

TruncSeries3 root_identity_lhs(const TruncSeries3& G) {
  const Caps caps = G.caps();
  const Caps window{0, std::min(caps.dx, caps.dy), std::min(caps.dx, caps.dz)};
  const TruncSeries3 h = build_H(G);
  TruncSeries3 sections = series_add(h.at_y0(), h.at_z0());
  sections = series_sub(sections, h.at_y0().at_z0());
  return compose_in_x(sections, x_of_yz(window));
}

IdentityCheck verify_root_identity(const TruncSeries3& G) {
  const TruncSeries3 lhs = root_identity_lhs(G);
  const TruncSeries3 rhs = TruncSeries3::monomial(lhs.caps(), {0, 1, 1});
  return compare_on_window(lhs, rhs, lhs.caps());
}

IdentityCheck verify_root_identity(Caps caps) { return verify_root_identity(build_G(caps)); }

}  // namespace gessel
