#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "spectra/counting.hpp"
#include "spectra/matchings.hpp"

using namespace spectra;

namespace {

const std::vector<BigCount> kTableT = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
const std::vector<BigCount> kTableP = {1, 1, 2, 3, 6, 10, 20, 35, 70};

}  // namespace

TEST_CASE("frozen tables for J = 0..8 on every route") {
  for (int J = 0; J <= 8; ++J) {
    CHECK(count_T_recurrence(J) == kTableT[J]);
    CHECK(count_T_closed(J) == kTableT[J]);
    CHECK(count_P_recurrence(J) == kTableP[J]);
    CHECK(count_P_closed(J) == kTableP[J]);
  }
  CHECK(series_f(9).coefficients == kTableT);
  CHECK(series_g(9).coefficients == kTableP);
}

TEST_CASE("big-value spot checks") {
  CHECK(count_T_closed(12) == 208012);
  CHECK(count_P_closed(12) == 924);
  CHECK(count_T_closed(30) == BigCount("3814986502092304"));
  // Independent digit check: Catalan(100) has 57 digits and starts 8965...
  const BigCount c100 = count_T_recurrence(100);
  CHECK(c100 == count_T_closed(100));
  CHECK(c100.str().size() == 57);
  CHECK(c100.str().substr(0, 4) == "8965");
}

TEST_CASE("recurrence equals closed form up to J = 200") {
  const auto T = table_T_recurrence(200);
  const auto P = table_P_recurrence(200);
  for (int J = 0; J <= 200; ++J) {
    CHECK(T[J] == count_T_closed(J));
    CHECK(P[J] == count_P_closed(J));
  }
}

TEST_CASE("series coefficients equal the closed forms") {
  const Series f = series_f(200);
  const Series g = series_g(200);
  REQUIRE(f.order() == 200);
  REQUIRE(g.order() == 200);
  for (int k = 0; k < 200; ++k) {
    CHECK(f.coefficients[k] == count_T_closed(k));
    CHECK(g.coefficients[k] == count_P_closed(k));
  }
  CHECK(f.coefficients[7] == 429);
  CHECK(g.coefficients[12] == 924);
  const Series f4 = series_f(4);
  CHECK(f4.coefficients == std::vector<BigCount>{1, 1, 2, 5});
}

TEST_CASE("counts agree with enumeration sizes") {
  for (int J = 1; J <= 9; ++J) {
    CHECK(BigCount(enumerate_noncrossing(J).size()) == count_T_recurrence(J));
    CHECK(BigCount(enumerate_symmetric(J).size()) == count_P_recurrence(J));
  }
}

TEST_CASE("P never exceeds T") {
  const auto T = table_T_recurrence(300);
  const auto P = table_P_recurrence(300);
  for (int J = 0; J <= 300; ++J) CHECK(P[J] <= T[J]);
}

TEST_CASE("binomial is exact and obeys Pascal's identity") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  for (int n = 1; n <= 120; n += 17)
    for (int k = 0; k <= n; k += 3)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(count_T_recurrence(-1), std::invalid_argument);
  CHECK_THROWS_AS(count_P_closed(-2), std::invalid_argument);
  CHECK_THROWS_AS(series_f(0), std::invalid_argument);
  CHECK_THROWS_AS(series_g(-5), std::invalid_argument);
}
