#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equiv_check.hpp"

// Randomized two-route comparison: overlap resolution vs exact linear
// algebra, generator multisets per level and Yoneda vs concatenation
// products.  The acceptance suite runs the same check with its own seed.

TEST_CASE("overlap and linear-algebra resolutions agree on random monomial algebras") {
  auto result = equiv::run_suite(602214076, 24, 8);
  CHECK(result.fixtures_checked >= 24);
  for (const auto& d : result.discrepancies) {
    CAPTURE(d);
    CHECK(false);
  }
}
