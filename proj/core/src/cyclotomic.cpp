#include "tlcat/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "tlcat/errors.hpp"

namespace tlcat {

upoly::Poly cyclotomic_polynomial(int n) {
  if (n <= 0) throw Error("cyclotomic order must be positive");
  // x^n - 1 divided by Φ_d for every proper divisor d.
  upoly::Poly p(std::size_t(n) + 1, mpq_class(0));
  p[0] = -1;
  p[std::size_t(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    upoly::Poly q;
    upoly::divmod(p, cyclotomic_polynomial(d), &q, nullptr);
    p = std::move(q);
  }
  return p;
}

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(cyclotomic_polynomial(n)) {
  powers_.reserve(std::size_t(n));
  upoly::Poly x{mpq_class(1)};
  for (int j = 0; j < n; ++j) {
    powers_.push_back(reduce(x));
    x.insert(x.begin(), mpq_class(0));
  }
}

const CyclotomicField& CyclotomicField::get(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[n];
  if (!slot) slot.reset(new CyclotomicField(n));
  return *slot;
}

const upoly::Poly& CyclotomicField::power(long j) const {
  long r = j % n_;
  if (r < 0) r += n_;
  return powers_[std::size_t(r)];
}

upoly::Poly CyclotomicField::reduce(upoly::Poly p) const {
  upoly::trim(p);
  const std::size_t d = phi_.size() - 1;
  // Φ_N is monic, so each step cancels the top coefficient.
  while (p.size() > d) {
    const mpq_class c = p.back();
    const std::size_t off = p.size() - 1 - d;
    for (std::size_t j = 0; j < d; ++j) p[off + j] -= c * phi_[j];
    p.pop_back();
    upoly::trim(p);
  }
  return p;
}

Cyclotomic::Cyclotomic(const CyclotomicField& f, upoly::Poly c) : f_(&f), c_(f.reduce(std::move(c))) {}

Cyclotomic::Cyclotomic(const CyclotomicField& f, const mpq_class& c) : f_(&f) {
  if (sgn(c) != 0) c_.push_back(c);
}

Cyclotomic Cyclotomic::zeta_power(const CyclotomicField& f, long j) {
  Cyclotomic r;
  r.f_ = &f;
  r.c_ = f.power(j);
  return r;
}

void Cyclotomic::adopt(const Cyclotomic& o) {
  if (f_ == nullptr) f_ = o.f_;
  else if (o.f_ != nullptr && o.f_ != f_) throw Error("mixing different cyclotomic fields");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  adopt(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  upoly::trim(c_);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  adopt(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  upoly::trim(c_);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  adopt(o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  c_ = f_->reduce(upoly::mul(c_, o.c_));
  return *this;
}

Cyclotomic Cyclotomic::inv() const {
  if (c_.empty()) throw DivisionByZero();
  Cyclotomic r;
  r.f_ = f_;
  r.c_ = upoly::inverse_mod(c_, f_->modulus());
  return r;
}

std::complex<double> Cyclotomic::to_complex() const {
  if (f_ == nullptr) return {0.0, 0.0};
  std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / f_->order());
  std::complex<double> acc(0.0, 0.0), p(1.0, 0.0);
  for (const auto& c : c_) {
    acc += c.get_d() * p;
    p *= z;
  }
  return acc;
}

std::string Cyclotomic::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool lead = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    mpq_class c = c_[i];
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    os << (lead ? (neg ? "-" : "") : (neg ? " - " : " + "));
    lead = false;
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace tlcat
