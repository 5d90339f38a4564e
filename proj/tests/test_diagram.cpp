#include <random>
#include <set>

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "tlcat/errors.hpp"
#include "tlcat/diagram.hpp"
#include "tlcat/dilute.hpp"

using namespace tlcat;

namespace {

oracle::Pairing raw(const Diagram& d) {
  oracle::Pairing p{d.dst(), d.src(), {}};
  for (int i = 0; i < d.size(); ++i) p.link.push_back(d.partner(i));
  return p;
}

Diagram cooked(const oracle::Pairing& p, bool dilute) {
  Diagram d(p.dst, p.src, dilute);
  for (int i = 0; i < p.dst + p.src; ++i)
    if (p.link[std::size_t(i)] > i) d.link(i, p.link[std::size_t(i)]);
  return d;
}

void compare_all(int k, int mid, int n, bool dilute) {
  const auto cs = enumerate(k, mid, dilute);
  const auto bs = enumerate(mid, n, dilute);
  for (const Diagram& c : cs)
    for (const Diagram& b : bs) {
      const ComposeOutcome got = compose(c, b);
      const oracle::Composite want = oracle::compose(raw(c), raw(b));
      CAPTURE(c.str());
      CAPTURE(b.str());
      REQUIRE(got.annihilated == !want.result.has_value());
      if (got.annihilated) continue;
      CHECK(got.loops == want.loops);
      CHECK(got.diagram == cooked(*want.result, dilute));
    }
}

}  // namespace

TEST_CASE("enumeration matches brute-force planar pairings") {
  for (bool dilute : {false, true})
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) {
        if (!dilute && (m + n) % 2 != 0) continue;
        std::set<Diagram> want;
        for (const auto& link : oracle::all_pairings(m + n, dilute))
          want.insert(cooked({m, n, link}, dilute));
        const auto got = enumerate(m, n, dilute);
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(dilute);
        CHECK(std::set<Diagram>(got.begin(), got.end()) == want);
        CHECK(got.size() == want.size());
      }
}

TEST_CASE("ordinary composition agrees with union-find gluing") {
  for (int k = 0; k <= 4; ++k)
    for (int mid = 0; mid <= 4; ++mid)
      for (int n = 0; n <= 4; ++n)
        if ((k + mid) % 2 == 0 && (mid + n) % 2 == 0) compare_all(k, mid, n, false);
}

TEST_CASE("dilute composition agrees with union-find gluing") {
  for (int k = 0; k <= 3; ++k)
    for (int mid = 0; mid <= 3; ++mid)
      for (int n = 0; n <= 3; ++n) compare_all(k, mid, n, true);
}

TEST_CASE("text form") {
  const Diagram d = Diagram::parse("4x2:[(1,6),(2,3),(4,5)]");
  CHECK(d.dst() == 4);
  CHECK(d.src() == 2);
  CHECK(d.partner(0) == 5);
  CHECK(d.through_lines() == 2);
  CHECK(Diagram::parse(d.str()) == d);
  for (bool dilute : {false, true})
    for (const Diagram& e : enumerate(3, 3, dilute)) CHECK(Diagram::parse(e.str()) == e);
  CHECK_THROWS_AS(Diagram::parse("2x2:[(1,3),(2,4)]"), ParseError);  // crossing
  CHECK_THROWS_AS(Diagram::parse("2x2:[(1,2)]"), ParseError);        // node 3 unpaired
  CHECK_THROWS_AS(Diagram::parse("2x2[(1,2),(3,4)]"), ParseError);
}

TEST_CASE("tensor places the first factor on top") {
  const Diagram a = Diagram::cup(), b = Diagram::identity(1);
  const Diagram t = tensor(a, b);
  CHECK(t.dst() == 3);
  CHECK(t.src() == 1);
  CHECK(t.partner(t.left(0)) == t.left(1));
  CHECK(t.partner(t.left(2)) == t.right(0));
}

TEST_CASE("through-line factorisation rebuilds the diagram") {
  for (int m = 0; m <= 5; ++m)
    for (int n = m % 2; n <= 5; n += 2)
      for (const Diagram& c : enumerate(m, n, false)) {
        const auto f = factor_through_lines(c);
        const auto mid = compose(standard_through_diagram(m, f.k, n), f.b);
        const auto whole = compose(f.a, mid.diagram);
        CHECK(mid.loops + whole.loops == 0);
        CHECK(whole.diagram == c);
      }
}

TEST_CASE("dilute example diagrams") {
  const auto ex = dilute_example_diagrams();
  REQUIRE(ex.size() == 3);
  for (const Diagram& d : ex) {
    CHECK(d.dilute());
    CHECK(d.is_valid());
  }
  CHECK(ex[0].dst() == 4);
  CHECK(ex[0].src() == 2);
  CHECK(ex[2].dst() == 5);
  CHECK(ex[2].src() == 4);
  // b ∘ c with c in Hom(2,4).
  const Diagram c = Diagram::parse("d4x2:[(1,6),(2),(3,5),(4)]");
  const auto bc = compose(ex[2], c);
  REQUIRE_FALSE(bc.annihilated);
  CHECK(bc.loops == 0);
  CHECK(bc.diagram == Diagram::parse("d5x2:[(1,7),(2,4),(3),(5,6)]"));
  // A strand ending on a vacancy kills the product.
  CHECK(compose(Diagram::parse("d1x1:[(1,2)]"), Diagram::parse("d1x1:[(1),(2)]")).annihilated);
}
