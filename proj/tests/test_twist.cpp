#include "doctest.h"
#include "tlcat/braid.hpp"
#include "tlcat/repr.hpp"
#include "tlcat/twist.hpp"

using namespace tlcat;

TEST_CASE("small twists") {
  CHECK(twist_element(0).value == identity(0));
  CHECK(twist_element(1).value == q_pow(3, 2) * identity(1));
  CHECK(twist_element(2).value == q_pow(3) * t(1, 2) * t(1, 2));
  CHECK(twist_element(3, TwistForm::Rho, false).value == chain({rho(3), rho(3), rho(3)}));
  for (int n = 0; n <= 4; ++n) {
    CHECK(twist_element(n, TwistForm::Rho).value == twist_element(n, TwistForm::Lambda).value);
    CHECK(twist_element(n).value * twist_inverse(n) == identity(n));
  }
}

TEST_CASE("cyclic generators") {
  // e_n joins the last strand to the first through the back.
  CHECK(en(2) == e(1, 2));
  CHECK(rho(3) * rho_inv(3) == identity(3));
  CHECK(lambda(3) * lambda_inv(3) == identity(3));
  CHECK(verify_cyclic_lemma(4).ok());
}

TEST_CASE("twist laws at small size") {
  CHECK(verify_centrality(4).ok());
  CHECK(verify_twist_forms(4).ok());
  CHECK(verify_twist_axiom(4).ok());
  CHECK(verify_twist_naturality(3).ok());
  CHECK(verify_twist_fixes_cups(2).ok());
}

TEST_CASE("twist eigenvalues") {
  CHECK(expected_gamma(2) == q_pow(4));
  CHECK(eigenvalue_on_standard(twist_element(4).value, StandardModule(4, 2)) == q_pow(4));
  for (int n = 0; n <= 5; ++n)
    for (int k = n % 2; k <= n; k += 2)
      CHECK(eigenvalue_on_standard(twist_element(n).value, StandardModule(n, k)) == q_pow(k * (k + 2), 2));
}
