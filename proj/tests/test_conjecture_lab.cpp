#include "doctest.h"

#include "json.hpp"

#include "gessel/conjecture_lab.hpp"
#include "gessel/triangular_system.hpp"
#include "gessel/walk_dp.hpp"

using namespace gessel;

namespace {

RatPoly scaled(const RatPoly& p, long num, long den) { return p * make_rat(num, den); }

}  // namespace

TEST_CASE("RatPoly basics") {
  const RatPoly p{4, 5, 1};
  CHECK(p.degree() == 2);
  CHECK(p(2) == 18);
  CHECK((RatPoly{1, 1} * RatPoly{4, 1}) == p);
  CHECK(RatPoly{0, 0, 0}.degree() == -1);
  CHECK(scaled(p, 1, 2).to_string() == "1/2*n^2 + 5/2*n + 2");
  CHECK(RatPoly{-1, 0, -3}.to_string() == "-3*n^2 - 1");
}

TEST_CASE("solve_exact") {
  const auto x = solve_exact({{2, 1}, {1, 3}}, {3, 5});
  REQUIRE(x);
  CHECK((*x)[0] == make_rat(4, 5));
  CHECK((*x)[1] == make_rat(7, 5));
  CHECK_FALSE(solve_exact({{1, 2}, {2, 4}}, {1, 2}));
}

TEST_CASE("verify_gessel") {
  auto r = verify_gessel(0);
  CHECK(r.all_agree);
  r = verify_gessel(20);
  CHECK(r.all_agree);
  CHECK_FALSE(r.first_mismatch);
  CHECK(r.values.size() == 21);
  CHECK(r.values[3] == 85);
}

TEST_CASE("recurrence for g(n) = F(2n+1; 1, 0)") {
  const auto coeffs = recurrence_g_coefficients();
  CHECK(coeffs[0](0) == 168);
  CHECK(coeffs[1](0) == -840);
  CHECK(coeffs[2](0) == 0);
  CHECK(count_walks(1, 1, 0) == 1);
  CHECK(count_walks(3, 1, 0) == 5);

  auto r = verify_recurrence_g(30);
  CHECK(r.holds);
  CHECK(r.range_checked == 29);

  std::vector<ExactInt> g;
  for (int n = 0; n <= 12; ++n) g.push_back(count_walks(2 * n + 1, 1, 0));
  g[5] += 1;
  r = check_recurrence_g(g);
  CHECK_FALSE(r.holds);
  REQUIRE(r.first_failure);
  CHECK(*r.first_failure == 4);
}

TEST_CASE("fit S_K reproduces the displayed polynomials") {
  const std::vector<RatPoly> expected = {
      RatPoly{1},
      scaled(RatPoly{1, 1} * RatPoly{4, 1}, 1, 2),
      scaled(RatPoly{1, 1} * RatPoly{132, 74, 15, 1}, 1, 12),
      scaled(RatPoly{1, 1} * RatPoly{12240, 8604, 2620, 407, 32, 1}, 1, 144),
  };
  for (int k = 0; k <= 3; ++k) {
    const PolyFit fit = fit_family(FitFamily::S_K, k);
    CHECK(fit.poly == expected[static_cast<std::size_t>(k)]);
    CHECK(fit.verified_extra >= 5);
    CHECK(verify_family_claims(fit).all());
    for (int n = 0; n <= 8; ++n) CHECK(fit.poly(n) == conjectured_value(Family::HOR, k, n));
  }
  const PolyFit s1 = fit_family(FitFamily::S_K, 1);
  CHECK(s1.poly.leading() == make_rat(1, 2));
  CHECK(fit_family(FitFamily::S_K, 2).poly.leading() == make_rat(1, 12));
}

TEST_CASE("s_k(0) is the Gessel number F(2k; 0, 0)") {
  for (int k = 0; k <= 8; ++k) CHECK(fit_family(FitFamily::S_K, k).poly(0) == gessel_closed_form(k));
}

TEST_CASE("fit R_K") {
  const std::vector<RatPoly> expected = {
      RatPoly{2, 2},
      scaled(RatPoly{1, 1} * RatPoly{33, 32, 8}, 1, 3),
      scaled(RatPoly{1, 1} * RatPoly{3060, 4641, 2648, 672, 64}, 1, 36),
  };
  for (int k = 1; k <= 3; ++k) {
    const PolyFit fit = fit_family(FitFamily::R_K, k);
    CHECK(fit.poly == expected[static_cast<std::size_t>(k - 1)]);
    const auto claims = verify_family_claims(fit);
    CHECK(claims.claims.at("degree"));
    CHECK(claims.claims.at("divisible_by_n_plus_1"));
  }
  CHECK_THROWS_AS(fit_family(FitFamily::R_K, 0), Error);
  // r_0(n) = 1/(2n+1) through the k = 0 closed form
  for (int n = 0; n <= 10; ++n) {
    CHECK(ansatz_target(FitFamily::R_K, 0, n) == make_rat(1, 2 * n + 1));
    CHECK(conjectured_value(Family::VERT, 0, n) == count_walks(2 * n, 0, n));
  }
}

TEST_CASE("fit P_K / Q_K at k = 1 gives the F(2n; 0, 1) constants") {
  const PolyFit p = fit_family(FitFamily::P_K, 1);
  const PolyFit q = fit_family(FitFamily::Q_K, 1);
  CHECK(p.poly == RatPoly(std::vector<ExactRat>{make_rat(5, 27)}));
  CHECK(q.poly == scaled(RatPoly{-50, 183, 111}, 1, 270));
  CHECK(p.sample_points.size() == 4);
  CHECK(q.verified_extra == 5);
  for (int n = 0; n <= 10; ++n) CHECK(conjectured_value(Family::F201, 1, n) == count_walks(2 * n, 0, 1));
}

TEST_CASE("fit P_K / Q_K degrees for k = 2") {
  const PolyFit p = fit_family(FitFamily::P_K, 2);
  const PolyFit q = fit_family(FitFamily::Q_K, 2);
  CHECK(verify_family_claims(p).claims.at("degree"));
  CHECK(verify_family_claims(q).claims.at("degree"));
  CHECK(fit_family(FitFamily::Q_K, 0).poly == RatPoly{1});
  CHECK_THROWS_AS(fit_family(FitFamily::P_K, 0), Error);
}

TEST_CASE("fit RT_K") {
  const PolyFit r0 = fit_family(FitFamily::RT_K, 0);
  CHECK(r0.poly == RatPoly{1, 2});
  for (int k = 0; k <= 2; ++k) CHECK(verify_family_claims(fit_family(FitFamily::RT_K, k)).all());
}

TEST_CASE("fit report json") {
  const PolyFit fit = fit_family(FitFamily::S_K, 1);
  const auto j = nlohmann::json::parse(fit_report_json(fit, verify_family_claims(fit)));
  CHECK(j["family"] == "S_K");
  CHECK(j["k"] == 1);
  CHECK(j["degree"] == 2);
  CHECK(j["coeffs"] == nlohmann::json::array({"2", "5/2", "1/2"}));
  CHECK(j["claims"]["leading_coefficient"] == true);
  CHECK(j["held_out_ok"] == true);
}

TEST_CASE("determinant pipeline agrees with the closed form") {
  for (int n = 0; n <= 4; ++n) CHECK(gessel_via_determinant(n) == gessel_closed_form(n));
}
