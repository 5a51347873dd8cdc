#include "gessel/conjecture_lab.hpp"

#include <sstream>
#include <utility>

#include "json.hpp"

#include "gessel/walk_dp.hpp"

namespace gessel {

RatPoly::RatPoly(std::vector<ExactRat> ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly::RatPoly(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactRat RatPoly::operator()(const ExactRat& n) const {
  ExactRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  return acc;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<ExactRat> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const ExactRat& s) {
  std::vector<ExactRat> out = a.coeffs_;
  for (auto& c : out) c *= s;
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const ExactRat& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const ExactRat mag = negative ? ExactRat(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (d == 0 || !unit) out += gessel::to_string(mag);
    if (d > 0) {
      if (!unit) out += "*";
      out += "n";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

std::optional<std::vector<ExactRat>> solve_exact(std::vector<std::vector<ExactRat>> m,
                                                 std::vector<ExactRat> rhs) {
  const std::size_t n = rhs.size();
  if (m.size() != n) throw Error("solve_exact: row count does not match right-hand side");
  for (const auto& row : m) {
    if (row.size() != n) throw Error("solve_exact: matrix is not square");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const ExactRat inv = 1 / m[col][col];
    for (std::size_t c = col; c < n; ++c) m[col][c] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const ExactRat factor = m[r][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  return rhs;
}

GesselReport verify_gessel(int N) {
  GesselReport r;
  r.N = N;
  r.all_agree = true;
  for (int n = 0; n <= N; ++n) {
    ExactInt dp = count_walks(2 * n, 0, 0);
    if (ExactRat(dp) != gessel_closed_form(n) && !r.first_mismatch) {
      r.first_mismatch = n;
      r.all_agree = false;
    }
    r.values.push_back(std::move(dp));
  }
  return r;
}

std::vector<RatPoly> recurrence_g_coefficients() {
  return {
      RatPoly{3, 1} * RatPoly{7, 3} * RatPoly{8, 3},
      RatPoly{3, 2} * RatPoly{35, 54, 18} * ExactRat(-8),
      RatPoly{0, 1} * RatPoly{1, 3} * RatPoly{2, 3} * ExactRat(256),
  };
}

RecurrenceCheck check_recurrence_g(std::span<const ExactInt> g) {
  RecurrenceCheck r;
  r.coeff_polys = recurrence_g_coefficients();
  r.holds = true;
  for (std::size_t n = 0; n + 1 < g.size(); ++n) {
    const ExactRat nn = static_cast<long>(n);
    ExactRat residual = r.coeff_polys[0](nn) * g[n + 1] + r.coeff_polys[1](nn) * g[n];
    if (n >= 1) residual += r.coeff_polys[2](nn) * g[n - 1];
    r.range_checked = static_cast<int>(n);
    if (residual != 0 && !r.first_failure) {
      r.first_failure = static_cast<int>(n);
      r.holds = false;
    }
  }
  return r;
}

RecurrenceCheck verify_recurrence_g(int N) {
  if (N < 1) throw Error("verify_recurrence_g needs N >= 1");
  std::vector<ExactInt> g;
  for (int n = 0; n <= N; ++n) g.push_back(count_walks(2 * n + 1, 1, 0));
  return check_recurrence_g(g);
}

std::string_view fit_family_name(FitFamily f) {
  switch (f) {
    case FitFamily::P_K: return "P_K";
    case FitFamily::Q_K: return "Q_K";
    case FitFamily::R_K: return "R_K";
    case FitFamily::S_K: return "S_K";
    case FitFamily::RT_K: return "RT_K";
  }
  return "?";
}

FitFamily parse_fit_family(std::string_view name) {
  if (name == "p" || name == "P_K") return FitFamily::P_K;
  if (name == "q" || name == "Q_K") return FitFamily::Q_K;
  if (name == "r" || name == "R_K") return FitFamily::R_K;
  if (name == "s" || name == "S_K") return FitFamily::S_K;
  if (name == "rt" || name == "RT_K") return FitFamily::RT_K;
  throw Error("unknown fit family '" + std::string(name) + "'");
}

int claimed_degree(FitFamily family, int k) {
  switch (family) {
    case FitFamily::P_K: return 2 * k - 2;
    case FitFamily::Q_K: return 2 * k;
    case FitFamily::R_K: return 2 * k - 1;
    case FitFamily::S_K: return 2 * k;
    case FitFamily::RT_K: return 2 * k + 1;
  }
  return -1;
}

ExactRat ansatz_target(FitFamily family, int k, int n) {
  switch (family) {
    case FitFamily::P_K:
    case FitFamily::Q_K:
      return ExactRat(count_walks(2 * n, 0, k)) * pochhammer(k + 2, n) /
             (ExactRat(pow_int(16, n)) * pochhammer(make_rat(1, 2), n));
    case FitFamily::R_K:
      return ExactRat(count_walks(2 * n + 2 * k, 0, n)) * pochhammer(k + 2, n) /
             (ExactRat(pow_int(4, n)) * pochhammer(make_rat(3, 2), n));
    case FitFamily::S_K:
      return count_walks(n + 2 * k, n, 0);
    case FitFamily::RT_K:
      return ExactRat(f_tilde(2 * n + 2 * k + 1, 0, n)) * pochhammer(k + 2, n) /
             (ExactRat(pow_int(4, n)) * pochhammer(make_rat(1, 2), n));
  }
  throw Error("unknown fit family");
}

namespace {

// Weights of the two polynomials in the F(2n; 0, k) ansatz:
// (7/6)_n / ((3k+4)/3)_n for p_k and (5/6)_n / ((3k+5)/3)_n for q_k.
std::pair<ExactRat, ExactRat> pq_weights(int k, int n) {
  return {pochhammer(make_rat(7, 6), n) / pochhammer(make_rat(3 * k + 4, 3), n),
          pochhammer(make_rat(5, 6), n) / pochhammer(make_rat(3 * k + 5, 3), n)};
}

struct Model {
  int p_terms = 0;  // coefficients of the companion polynomial (P_K/Q_K only)
  int q_terms = 0;  // coefficients of the main polynomial

  int unknowns() const { return p_terms + q_terms; }
};

Model model_for(FitFamily family, int k) {
  if (k < 0) throw Error("k must be nonnegative");
  switch (family) {
    case FitFamily::P_K:
    case FitFamily::Q_K:
      if (family == FitFamily::P_K && k < 1) throw Error("p_k is absent for k = 0");
      return {std::max(2 * k - 1, 0), 2 * k + 1};
    case FitFamily::R_K:
      if (k < 1) throw Error("r_0(n) = 1/(2n+1) is not a polynomial; use the VERT closed form");
      return {0, 2 * k};
    case FitFamily::S_K:
      return {0, 2 * k + 1};
    case FitFamily::RT_K:
      return {0, 2 * k + 2};
  }
  throw Error("unknown fit family");
}

std::vector<ExactRat> design_row(FitFamily family, const Model& model, int k, int n) {
  std::vector<ExactRat> row;
  row.reserve(static_cast<std::size_t>(model.unknowns()));
  ExactRat wp = 0;
  ExactRat wq = 1;
  if (family == FitFamily::P_K || family == FitFamily::Q_K) std::tie(wp, wq) = pq_weights(k, n);
  ExactRat power = 1;
  for (int d = 0; d < model.p_terms; ++d, power *= n) row.push_back(wp * power);
  power = 1;
  for (int d = 0; d < model.q_terms; ++d, power *= n) row.push_back(wq * power);
  return row;
}

std::string family_tag(FitFamily family, int k) {
  return "(" + std::string(fit_family_name(family)) + "," + std::to_string(k) + ")";
}

}  // namespace

PolyFit fit_family(FitFamily family, int k, int held_out) {
  const Model model = model_for(family, k);
  const int unknowns = model.unknowns();

  PolyFit fit;
  fit.family = family;
  fit.k = k;

  std::vector<std::vector<ExactRat>> rows;
  std::vector<ExactRat> rhs;
  for (int n = 0; n < unknowns; ++n) {
    rows.push_back(design_row(family, model, k, n));
    rhs.push_back(ansatz_target(family, k, n));
    fit.sample_points.push_back(n);
  }
  const auto solution = solve_exact(rows, rhs);
  if (!solution) throw Error("ansatz inconsistent at " + family_tag(family, k));

  for (int n = unknowns; n < unknowns + held_out; ++n) {
    const auto row = design_row(family, model, k, n);
    ExactRat predicted = 0;
    for (std::size_t c = 0; c < row.size(); ++c) predicted += row[c] * (*solution)[c];
    if (predicted != ansatz_target(family, k, n)) {
      throw Error("conjecture fails at n=" + std::to_string(n) + " for " + family_tag(family, k));
    }
    fit.held_out_points.push_back(n);
    ++fit.verified_extra;
  }

  const auto split = solution->begin() + model.p_terms;
  if (family == FitFamily::P_K) {
    fit.poly = RatPoly(std::vector<ExactRat>(solution->begin(), split));
  } else {
    fit.poly = RatPoly(std::vector<ExactRat>(split, solution->end()));
  }
  return fit;
}

bool ClaimReport::all() const {
  for (const auto& [name, ok] : claims) {
    if (!ok) return false;
  }
  return true;
}

ClaimReport verify_family_claims(const PolyFit& fit) {
  ClaimReport r;
  r.claims["degree"] = fit.poly.degree() == claimed_degree(fit.family, fit.k);
  if (fit.family == FitFamily::S_K) {
    const ExactRat expected = ExactRat(1) / ExactRat(factorial(fit.k) * factorial(fit.k + 1));
    r.claims["leading_coefficient"] = fit.poly.leading() == expected;
  }
  if ((fit.family == FitFamily::S_K || fit.family == FitFamily::R_K) && fit.k >= 1) {
    r.claims["divisible_by_n_plus_1"] = fit.poly(-1) == 0;
  }
  return r;
}

std::string fit_report_json(const PolyFit& fit, const ClaimReport& claims) {
  nlohmann::ordered_json j;
  j["family"] = fit_family_name(fit.family);
  j["k"] = fit.k;
  j["degree"] = fit.poly.degree();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : fit.poly.coeffs()) coeffs.push_back(to_string(c));
  j["coeffs"] = std::move(coeffs);
  nlohmann::ordered_json cl = nlohmann::ordered_json::object();
  for (const auto& [name, ok] : claims.claims) cl[name] = ok;
  j["claims"] = std::move(cl);
  j["sample_points"] = fit.sample_points;
  j["held_out_points"] = fit.held_out_points;
  j["held_out_ok"] = fit.verified_extra == static_cast<int>(fit.held_out_points.size()) &&
                     !fit.held_out_points.empty();
  return j.dump();
}

}  // namespace gessel
