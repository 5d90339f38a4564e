#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "tlcat/laurent.hpp"

namespace tlcat {

// Q(ζ_N) presented as Q[x]/Φ_N(x).  Instances are interned per N and live for
// the whole process, so elements can hold a plain pointer.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int n);

  int order() const { return n_; }
  int degree() const { return int(phi_.size()) - 1; }
  const upoly::Poly& modulus() const { return phi_; }
  // ζ^j reduced, for any integer j.
  const upoly::Poly& power(long j) const;

  upoly::Poly reduce(upoly::Poly p) const;

 private:
  explicit CyclotomicField(int n);
  int n_;
  upoly::Poly phi_;
  std::vector<upoly::Poly> powers_;
};

// Integer coefficients of the n-th cyclotomic polynomial.
upoly::Poly cyclotomic_polynomial(int n);

class Cyclotomic {
 public:
  Cyclotomic() = default;  // zero, compatible with every field
  Cyclotomic(const CyclotomicField& f, upoly::Poly c);
  Cyclotomic(const CyclotomicField& f, const mpq_class& c);
  static Cyclotomic zeta_power(const CyclotomicField& f, long j);

  const CyclotomicField* field() const { return f_; }
  const upoly::Poly& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inv(); }
  Cyclotomic operator-() const;
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic inv() const;

  bool operator==(const Cyclotomic& o) const { return c_ == o.c_; }

  std::complex<double> to_complex() const;
  // Polynomial in z = exp(2πi/N), e.g. "-1 - z^4".
  std::string str() const;

 private:
  void adopt(const Cyclotomic& o);
  const CyclotomicField* f_ = nullptr;
  upoly::Poly c_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Cyclotomic inverse(const Cyclotomic& x) { return x.inv(); }

}  // namespace tlcat
