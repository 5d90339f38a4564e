#include "doctest.h"
#include "tlcat/braid.hpp"

using namespace tlcat;

TEST_CASE("commutor words") {
  CHECK(commutor_word(2, 3, CommutorForm::LeftNested) == std::vector<int>{3, 4, 2, 3, 1, 2});
  CHECK(commutor_word(2, 3, CommutorForm::RightNested) == std::vector<int>{3, 2, 1, 4, 3, 2});
  CHECK(commutor_word(0, 3, CommutorForm::LeftNested).empty());
  CHECK(commutor(1, 1) == t(1, 2));
  CHECK(commutor(2, 1) == t(1, 3) * t(2, 3));
  CHECK(commutor(1, 2) == t(2, 3) * t(1, 3));
}

TEST_CASE("skein relation and braid relation") {
  for (int n : {2, 3}) CHECK(t(1, n) - t_inv(1, n) == (q_pow(1, 2) - q_pow(-1, 2)) * (identity(n) - e(1, n)));
  CHECK(t(1, 3) * t(2, 3) * t(1, 3) == t(2, 3) * t(1, 3) * t(2, 3));
  CHECK(t(1, 4) * t(3, 4) == t(3, 4) * t(1, 4));
}

TEST_CASE("commutors are invertible") {
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; r + s <= 4; ++s) {
      CHECK(commutor(r, s) * commutor_inverse(r, s) == identity(r + s));
      CHECK(commutor(r, s, CommutorForm::LeftNested) == commutor(r, s, CommutorForm::RightNested));
    }
}

TEST_CASE("suites at small size") {
  CHECK(verify_tl_relations(5).ok());
  CHECK(verify_hexagons(4).ok());
  CHECK(verify_naturality(3, 20, 5).ok());
  CHECK(verify_braid_relations(4).ok());
}

TEST_CASE("double braiding is not central") {
  const Morphism e1 = e(1, 3), e2 = e(2, 3);
  const Morphism expected = q_pow(-2) * (q_pow(1) - q_pow(-1)) * (e1 * e2 - e2 * e1);
  CHECK(expected_noncentral_witness() == expected);
  CHECK(monodromy_noncentral_witness() == expected);
  CHECK_FALSE(expected.is_zero());
  CHECK(verify_noncentral_witness().ok());
}
