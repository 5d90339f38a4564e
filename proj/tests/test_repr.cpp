#include <map>

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "tlcat/errors.hpp"
#include "tlcat/repr.hpp"

using namespace tlcat;

namespace {

// The left half of a basis diagram of S_{n,k} as a link state.
oracle::LinkState link_state(const Diagram& d) {
  oracle::LinkState s;
  for (int i = 0; i < d.dst(); ++i) {
    const int p = d.partner(d.left(i));
    s.push_back(d.is_left(p) ? d.row(p) : -1);
  }
  return s;
}

}  // namespace

TEST_CASE("standard modules match link-state combinatorics") {
  for (int n = 0; n <= 8; ++n)
    for (int k = n % 2; k <= n; k += 2) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(standard_dimension(n, k) == oracle::standard_dim(n, k));
      if (n <= 6) CHECK(StandardModule(n, k).dim() == (int)oracle::link_states(n, k).size());
    }
  for (int n = 0; n <= 6; ++n) CHECK((long long)enumerate(n, n, false).size() == oracle::catalan(n));
}

TEST_CASE("e_i acts on S_{n,k} as on link states") {
  for (int n = 2; n <= 6; ++n)
    for (int k = n % 2; k <= n; k += 2) {
      const StandardModule s(n, k);
      std::map<oracle::LinkState, int> index;
      for (int j = 0; j < s.dim(); ++j) index[link_state(s.basis()[std::size_t(j)])] = j;
      REQUIRE(int(index.size()) == s.dim());
      for (int i = 1; i < n; ++i) {
        const Matrix<Scalar> m = act(e(i, n), s);
        Matrix<Scalar> want(s.dim(), s.dim());
        for (const auto& [state, col] : index) {
          const auto a = oracle::act_e(i, state);
          if (a.zero) continue;
          want(index.at(a.state), col) += a.loop ? beta() : Scalar(1);
        }
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(i);
        CHECK(m == want);
      }
    }
}

TEST_CASE("Wenzl-Jones projectors") {
  CHECK(wenzl_jones(1) == identity(1));
  CHECK(wenzl_jones(2) == identity(2) - beta().inv() * e(1, 2));
  for (int m = 2; m <= 4; ++m) {
    const Morphism p = wenzl_jones(m);
    CHECK(p * p == p);
    for (int i = 1; i < m; ++i) CHECK((e(i, m) * p).is_zero());
  }
  CHECK(verify_wenzl_jones(4).ok());
  CHECK(verify_rigidity(3, 2).ok());
}

TEST_CASE("actions are homomorphisms") {
  CHECK(verify_homomorphism(2, 10, 4).ok());
  CHECK_THROWS_AS(eigenvalue_on_standard(t(1, 3), StandardModule(3, 1)), NotScalarAction);
}

TEST_CASE("det t_1") {
  // S_{2,0}: t_1 acts by q^{1/2}(1 + q^{-1}β) = -q^{-3/2}.
  CHECK(expected_det_t1(2, 0) == -q_pow(-3, 2));
  CHECK(verify_det_t1(4).ok());
  CHECK(verify_dimensions(6).ok());
}
