#include <random>

#include "doctest.h"
#include "tlcat/errors.hpp"
#include "tlcat/morphism.hpp"
#include "tlcat/render.hpp"

using namespace tlcat;

namespace {

Morphism random_morphism(std::mt19937& rng, int m, int n, bool dilute) {
  const auto basis = enumerate(m, n, dilute);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> ex(-6, 6), co(-3, 3);
  Morphism f(m, n, dilute);
  for (int i = 0; i < 4; ++i)
    f += Morphism(basis[pick(rng)], Scalar(co(rng)) * Scalar::var(kS, ex(rng)) + Scalar::var(kU, co(rng)));
  return f;
}

}  // namespace

TEST_CASE("serialized morphisms re-parse to equal morphisms") {
  std::mt19937 rng(3);
  for (bool dilute : {false, true})
    for (int trial = 0; trial < 40; ++trial) {
      const int m = trial % 4, n = dilute ? (trial / 4) % 4 : m + 2 * ((trial / 4) % 2);
      const Morphism f = random_morphism(rng, m, n, dilute);
      CAPTURE(f.str());
      CHECK(Morphism::parse(f.str()) == f);
      CHECK(parse_diagram_or_morphism(f.str()) == f);
    }
  CHECK(Morphism::parse(Morphism(2, 2).str()) == Morphism(2, 2));
  CHECK_THROWS_AS(Morphism::parse("2<-2 : (1)*3x3:[(1,2),(3,4),(5,6)]"), Error);
}

TEST_CASE("composition is bilinear and associative") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Morphism a = random_morphism(rng, 2, 4, false), b = random_morphism(rng, 4, 2, false),
                   c = random_morphism(rng, 2, 2, false), c2 = random_morphism(rng, 2, 2, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b * (c + c2)) == a * b * c + a * b * c2);
  }
}

TEST_CASE("interchange law for tensor and composition") {
  std::mt19937 rng(9);
  for (bool dilute : {false, true}) {
    const Morphism f = random_morphism(rng, 2, 2, dilute), g = random_morphism(rng, 2, 2, dilute);
    const Morphism h = random_morphism(rng, 1, 1, dilute), k = random_morphism(rng, 1, 1, dilute);
    CHECK(tensor(f * g, h * k) == tensor(f, h) * tensor(g, k));
  }
}

TEST_CASE("generators") {
  const Morphism e1 = e(1, 2);
  CHECK(e1 * e1 == beta() * e1);
  CHECK(t(1, 3) * t_inv(1, 3) == identity(3));
  CHECK(t(2, 3) == q_pow(1, 2) * (identity(3) + q_pow(-1) * e(2, 3)));
  CHECK(cap() * cup() == Morphism(Diagram::identity(0), beta()));
  CHECK(transpose(cup()) == cap());
  CHECK(identity(2, true).size() == 4);
}

TEST_CASE("embed") {
  const Morphism x = e(1, 2);
  CHECK(embed(x, 1, 3) == e(1, 3));
  CHECK(embed(x, 2, 3) == e(2, 3));
  CHECK_THROWS_AS(embed(x, 3, 3), IndexOutOfRange);
  CHECK_THROWS_AS(embed(identity(3), 1, 4), InterfaceMismatch);
  CHECK_THROWS_AS(e(1, 2) * e(1, 3), InterfaceMismatch);
}
