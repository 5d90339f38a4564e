#include <random>

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "tlcat/errors.hpp"
#include "tlcat/scalar.hpp"
#include "tlcat/specialize.hpp"

using namespace tlcat;

namespace {

oracle::SPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 5), ex(-12, 12), co(-9, 9);
  oracle::SPoly p;
  for (int i = len(rng); i > 0; --i) oracle::add_term(p, ex(rng), co(rng));
  return p;
}

Scalar to_scalar(const oracle::SPoly& p) {
  std::vector<Laurent::Term> terms;
  for (const auto& [e, c] : p) terms.emplace_back(Monomial::of(kS, e), c);
  return Scalar(Laurent::from_terms(std::move(terms)));
}

oracle::SPoly from_scalar(const Scalar& x) {
  REQUIRE(x.is_polynomial());
  oracle::SPoly p;
  for (const auto& [m, c] : x.num().terms()) oracle::add_term(p, m.exp(kS), c);
  return p;
}

}  // namespace

TEST_CASE("Laurent products agree with schoolbook multiplication") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng);
    CHECK(from_scalar(to_scalar(a) * to_scalar(b)) == oracle::mul(a, b));
    CHECK(from_scalar(to_scalar(a) + to_scalar(b)) == oracle::add(a, b));
  }
}

TEST_CASE("ring axioms on random rational functions") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Scalar a = to_scalar(random_poly(rng)), b = to_scalar(random_poly(rng));
    Scalar c = to_scalar(random_poly(rng));
    if (!c.is_zero()) c = Scalar(1) / (c + Scalar(100));  // keep denominators nonzero
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Scalar(0));
    if (!c.is_zero()) CHECK(c * c.inv() == Scalar(1));
  }
}

TEST_CASE("q powers and the loop weight") {
  CHECK(q_pow(1) == Scalar::var(kS, 4));
  CHECK(q_pow(1, 2) == Scalar::var(kS, 2));
  CHECK(q_pow(-3, 4) == Scalar::var(kS, -3));
  CHECK(beta() == -(q_pow(1) + q_pow(-1)));
  CHECK(quantum_int(2) == -beta());
  CHECK(quantum_int(3) == q_pow(2) + 1 + q_pow(-2));
  CHECK_THROWS_AS(q_pow(1, 3), Error);
}

TEST_CASE("beta evaluates to -q - 1/q numerically") {
  for (double theta : {0.3, 1.1, 2.5}) {
    const std::complex<double> s = std::polar(1.3, theta);
    const std::complex<double> q = std::pow(s, 4);
    CHECK(std::abs(eval_complex(beta(), s) - (-q - 1.0 / q)) < 1e-9);
  }
}

TEST_CASE("text form round-trips") {
  const Scalar x = Scalar::fraction(Laurent::var(kS, 3) - Laurent(2), Laurent::var(kS, 2) + Laurent(1));
  for (const Scalar& a : {Scalar(0), Scalar(-7), q_pow(3, 2), beta(), x, x * Scalar::var(kU, -2) + Scalar::var(kV)}) {
    CAPTURE(a.str());
    CHECK(Scalar::parse(a.str()) == a);
  }
  CHECK_THROWS_AS(Scalar::parse("s^"), ParseError);
}

TEST_CASE("inverse needs a single spectral monomial") {
  CHECK((Scalar::var(kU) * q_pow(1)).inv() == Scalar::var(kU, -1) * q_pow(-1));
  CHECK_THROWS_AS((Scalar::var(kU) + Scalar::var(kV)).inv(), NotInvertibleInRing);
  CHECK_THROWS_AS(Scalar(0).inv(), DivisionByZero);
}

TEST_CASE("roots of unity") {
  const auto sp3 = Specialization::root_of_unity(3);
  CHECK(std::abs(eval_cyclotomic(q_pow(1), sp3).to_complex() - std::polar(1.0, 2 * M_PI / 3)) < 1e-12);
  const auto sp2 = Specialization::root_of_unity(2);
  CHECK(eval_cyclotomic(beta(), sp2).is_zero());
  CHECK(Specialization::parse("root:3") == sp3);
  CHECK(Specialization::parse(sp3.str()) == sp3);
  CHECK_THROWS_AS(Specialization::parse("root:"), ParseError);
  // q = 1 kills q - 1/q.
  CHECK_THROWS_AS(eval_rational((q_pow(1) - q_pow(-1)).inv(), mpq_class(1)), PoleAtSpecialization);
}
