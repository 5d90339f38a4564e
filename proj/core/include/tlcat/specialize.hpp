#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <string>
#include <variant>

#include "tlcat/cyclotomic.hpp"
#include "tlcat/scalar.hpp"

namespace tlcat {

struct Specialization {
  enum class Kind { Generic, Cyclotomic, Rational, Complex };

  Kind kind = Kind::Generic;
  // Cyclotomic: s ↦ ζ_order^exponent, stored in lowest terms.
  int order = 1;
  long exponent = 0;
  // Rational: s ↦ s0.
  mpq_class s0;
  // Complex: s ↦ z0.
  std::complex<double> z0;

  static Specialization generic() { return {}; }
  static Specialization cyclotomic(int n, long a);
  // q = exp(iπ(ℓ-1)/ℓ), i.e. s = ζ_{8ℓ}^{ℓ-1}.  ℓ = 2 gives q = i and ℓ = 3
  // gives q = exp(2πi/3); both satisfy q^{2ℓ} = 1.
  static Specialization root_of_unity(int ell);
  static Specialization rational(const mpq_class& s0);
  static Specialization complex(std::complex<double> z0);

  // Accepts "generic", "root:L", "rational:P/Q", "cyclo:N:A".
  static Specialization parse(const std::string& text);
  std::string str() const;

  const CyclotomicField& field() const { return CyclotomicField::get(order); }
  bool operator==(const Specialization&) const = default;
};

// Values for the variables s, u, v, w.  A zero entry means "unassigned"; using
// an unassigned variable is an error.
struct RationalPoint {
  std::array<mpq_class, kNumVars> value;
};

using SpecializedValue = std::variant<Scalar, Cyclotomic, mpq_class, std::complex<double>>;

SpecializedValue specialize(const Scalar& a, const Specialization& sp);
std::string to_string(const SpecializedValue& v);

mpq_class eval_rational(const Scalar& a, const mpq_class& s0);
mpq_class eval_rational(const Scalar& a, const RationalPoint& p);
Cyclotomic eval_cyclotomic(const Scalar& a, const Specialization& sp);
std::complex<double> eval_complex(const Scalar& a, std::complex<double> s0);

// Substitutes a rational value for one spectral variable, keeping the rest.
Scalar substitute(const Scalar& a, Var x, const mpq_class& value);

}  // namespace tlcat
