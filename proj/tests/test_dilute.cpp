#include "doctest.h"
#include "tlcat/braid.hpp"
#include "tlcat/dilute.hpp"

using namespace tlcat;

TEST_CASE("elementary dilute crossing") {
  const auto eta = dilute_elementary_commutor();
  CHECK(eta.value.size() == 5);
  CHECK(eta.value == dilute_crossing_ansatz(q_pow(1, 2), 1, 1, 1, q_pow(-1, 2)));
  CHECK(eta.value * eta.inverse == identity(2, true));
  CHECK(eta.inverse * eta.value == identity(2, true));
  CHECK(dilute_commutor(1, 1) == eta.value);
  CHECK(dilute_commutor(1, 0) == identity(1, true));
}

TEST_CASE("dilute commutor is natural on the example diagrams") {
  for (const Diagram& c : dilute_example_diagrams()) {
    const Morphism cm(c);
    const Morphism one = identity(1, true);
    CHECK(dilute_commutor(c.dst(), 1) * tensor(cm, one) == tensor(one, cm) * dilute_commutor(c.src(), 1));
  }
}

TEST_CASE("the vacant strand passes through") {
  const auto eta = dilute_elementary_commutor();
  const Morphism point(Diagram::vacant(1, 0));
  const Morphism one = identity(1, true);
  CHECK(eta.value * tensor(one, point) == tensor(point, one));
}

TEST_CASE("dilute suite") {
  const Report r = verify_dilute_braiding(3);
  for (const auto& c : r.cases())
    if (!c.pass) FAIL_CHECK(c.identity);
  CHECK(r.ok());
  CHECK(verify_hexagons(4, true).ok());
}
