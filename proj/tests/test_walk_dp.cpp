#include "doctest.h"

#include <sstream>

#include "gessel/walk_dp.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

using namespace gessel;

TEST_CASE("count_walks examples") {
  CHECK(count_walks(0, 0, 0) == 1);
  CHECK(count_walks(2, 0, 0) == 2);
  CHECK(count_walks(4, 0, 0) == 11);
  CHECK(count_walks(2, 0, 1) == 1);
  CHECK(count_walks(3, 0, 0) == 0);
  CHECK(count_walks(5, -1, 0) == 0);
  CHECK(count_walks(5, 1, -1) == 0);
}

TEST_CASE("count_walks agrees with exhaustive enumeration") {
  for (int m = 0; m <= 9; ++m) {
    for (int n1 = 0; n1 <= m; ++n1) {
      for (int n2 = 0; n2 <= m; ++n2) {
        CAPTURE(m);
        CAPTURE(n1);
        CAPTURE(n2);
        CHECK(count_walks(m, n1, n2) == oracle::enumerate_walks(m, n1, n2));
      }
    }
  }
}

TEST_CASE("reachable") {
  CHECK(reachable(3, 1, 0));
  CHECK_FALSE(reachable(3, 0, 0));
  CHECK_FALSE(reachable(2, 0, 2));
  CHECK_FALSE(reachable(2, 3, 0));
  CHECK_FALSE(reachable(2, -1, 0));
}

TEST_CASE("table satisfies the step recurrence") {
  const WalkTable t(30);
  auto at = [&](int m, int a, int b) { return a < 0 || b < 0 || a > m || b > m ? ExactInt(0) : t.at(m, a, b); };
  for (int m = 1; m <= 30; ++m) {
    for (int n1 = 0; n1 <= m; ++n1) {
      for (int n2 = 0; n2 <= m; ++n2) {
        const ExactInt expect =
            at(m - 1, n1 + 1, n2) + at(m - 1, n1 - 1, n2) + at(m - 1, n1 + 1, n2 + 1) + at(m - 1, n1 - 1, n2 - 1);
        REQUIRE(t.at(m, n1, n2) == expect);
      }
    }
  }
  CHECK_THROWS_AS(t.at(31, 1, 0), std::out_of_range);
}

TEST_CASE("support is exactly the reachable set up to m = 20") {
  // Sufficiency is not claimed by the necessary conditions; this is an
  // empirical check.
  const WalkTable t(20);
  for (int m = 0; m <= 20; ++m) {
    for (int n1 = 0; n1 <= m; ++n1) {
      for (int n2 = 0; n2 <= m; ++n2) CHECK((t.at(m, n1, n2) > 0) == reachable(m, n1, n2));
    }
  }
}

TEST_CASE("shortest_walk") {
  auto s = shortest_walk(3, 2);
  CHECK(s.length == 3);
  CHECK(s.count == 3);
  s = shortest_walk(1, 2);
  CHECK(s.length == 3);
  CHECK(s.count == 2);
  for (int n = 0; n <= 15; ++n) {
    CHECK(shortest_walk(n, 0).length == n);
    CHECK(shortest_walk(n, 0).count == 1);
    CHECK(shortest_walk(0, n).length == 2 * n);
    CHECK(shortest_walk(0, n).count == catalan(n));
  }
}

TEST_CASE("shortest_walk branches agree on the diagonal and with the oracle") {
  for (int n = 0; n <= 20; ++n) {
    CHECK(shortest_count_east(n, n) == shortest_count_west(n, n));
    CHECK(shortest_walk(n, n).count == 1);
    CHECK(shortest_walk(n, n).length == n);
  }
  CHECK_THROWS_AS(shortest_count_east(1, 2), Error);
  CHECK_THROWS_AS(shortest_count_west(2, 1), Error);
  for (int n1 = 0; n1 <= 12; ++n1) {
    for (int n2 = 0; n2 <= 12; ++n2) {
      const auto s = shortest_walk(n1, n2);
      CHECK(s.count == count_walks(s.length, n1, n2));
      if (s.length > 0) CHECK(count_walks(s.length - 2, n1, n2) == 0);
    }
  }
}

TEST_CASE("f_tilde") {
  for (int n = 0; n <= 8; ++n) CHECK(f_tilde(2 * n + 1, 0, 0) == count_walks(2 * n, 0, 0));
  CHECK(f_tilde(1, 1, 1) == 0);
  CHECK(f_tilde(3, 0, 1) == 3);
  CHECK(f_tilde(0, 0, 0) == 0);
}

TEST_CASE("f-matrix reproduces the displayed block") {
  const FMatrix f = build_f_matrix(reference::kFMatrixSize);
  for (int i = 0; i <= reference::kFMatrixSize; ++i) {
    for (int j = 0; j <= reference::kFMatrixSize; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(f.at(i, j) == reference::kFMatrix[i][j]);
    }
  }
  const FMatrix small = build_f_matrix(5);
  CHECK(small.at(3, 3) == 2);
  CHECK(small.at(5, 5) == 11);
  for (int j = 0; j <= 5; ++j) CHECK(small.at(0, j) == 0);
  CHECK_THROWS_AS(small.at(6, 0), std::out_of_range);
}

TEST_CASE("jsonl export round-trips") {
  const WalkTable t(12);
  std::stringstream buf;
  t.write_jsonl(buf);
  const std::string text = buf.str();
  CHECK(text.rfind("{\"m\":0,\"n1\":0,\"n2\":0,\"F\":\"1\"}\n", 0) == 0);
  const WalkTable back = WalkTable::read_jsonl(buf);
  REQUIRE(back.m_max() == 12);
  for (int m = 0; m <= 12; ++m) {
    for (int n1 = 0; n1 <= m; ++n1) {
      for (int n2 = 0; n2 <= m; ++n2) CHECK(back.at(m, n1, n2) == t.at(m, n1, n2));
    }
  }
  std::stringstream bad("{\"m\":3,\"n1\":0,\"n2\":0,\"F\":\"4\"}\n");
  CHECK_THROWS_AS(WalkTable::read_jsonl(bad), Error);
}

TEST_CASE("extended table matches a fresh one") {
  const WalkTable small(10);
  const WalkTable grown = small.extended(25);
  const WalkTable fresh(25);
  for (int n1 = 0; n1 <= 25; n1 += 1) CHECK(grown.at(25, n1, n1 / 2) == fresh.at(25, n1, n1 / 2));
}
