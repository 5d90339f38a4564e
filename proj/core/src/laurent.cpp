#include "tlcat/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "tlcat/errors.hpp"

namespace tlcat {

const char* var_name(Var x) {
  switch (x) {
    case kS: return "s";
    case kU: return "u";
    case kV: return "v";
    case kW: return "w";
  }
  return "?";
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  for (int x = 0; x < kNumVars; ++x) r = r * of(Var(x), exp(Var(x)) * k);
  return r;
}

Laurent::Laurent(long c) {
  if (c != 0) t_.emplace_back(Monomial(), mpq_class(c));
}

Laurent::Laurent(const mpq_class& c) {
  if (sgn(c) != 0) t_.emplace_back(Monomial(), c);
}

Laurent::Laurent(Monomial m, mpq_class c) {
  if (sgn(c) != 0) t_.emplace_back(m, std::move(c));
}

bool Laurent::is_one() const {
  return t_.size() == 1 && t_[0].first.is_one() && t_[0].second == 1;
}

bool Laurent::s_only() const {
  return std::all_of(t_.begin(), t_.end(), [](const Term& t) { return t.first.s_only(); });
}

int Laurent::min_exp(Var x) const {
  int r = std::numeric_limits<int>::max();
  for (const auto& t : t_) r = std::min(r, t.first.exp(x));
  return t_.empty() ? 0 : r;
}

int Laurent::max_exp(Var x) const {
  int r = std::numeric_limits<int>::min();
  for (const auto& t : t_) r = std::max(r, t.first.exp(x));
  return t_.empty() ? 0 : r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  auto a = t_.begin();
  auto b = o.t_.begin();
  while (a != t_.end() || b != o.t_.end()) {
    if (b == o.t_.end() || (a != t_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == t_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      mpq_class c = a->second + b->second;
      if (sgn(c) != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  t_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

Laurent& Laurent::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    t_.clear();
  } else {
    for (auto& t : t_) t.second *= c;
  }
  return *this;
}

Laurent& Laurent::operator*=(Monomial m) {
  // Multiplying by a monomial is a translation, so the order is preserved.
  for (auto& t : t_) t.first = t.first * m;
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.t_.empty() || b.t_.empty()) return {};
  if (b.t_.size() == 1) {
    Laurent r = a;
    r *= b.t_[0].first;
    r *= b.t_[0].second;
    return r;
  }
  if (a.t_.size() == 1) return b * a;
  std::vector<Laurent::Term> prod;
  prod.reserve(a.t_.size() * b.t_.size());
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) prod.emplace_back(x.first * y.first, x.second * y.second);
  return Laurent::from_terms(std::move(prod));
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  Laurent r;
  for (auto& t : terms) {
    if (!r.t_.empty() && r.t_.back().first == t.first) {
      r.t_.back().second += t.second;
    } else {
      if (!r.t_.empty() && sgn(r.t_.back().second) == 0) r.t_.pop_back();
      r.t_.push_back(std::move(t));
    }
  }
  if (!r.t_.empty() && sgn(r.t_.back().second) == 0) r.t_.pop_back();
  return r;
}

std::vector<std::pair<Monomial, Laurent>> Laurent::spectral_groups() const {
  std::vector<std::pair<Monomial, Laurent>> out;
  for (const auto& t : t_) {
    Monomial sp = t.first.spectral_part();
    if (out.empty() || out.back().first != sp) out.emplace_back(sp, Laurent());
    out.back().second.t_.emplace_back(t.first * sp.inverse(), t.second);
  }
  return out;
}

namespace {

void append_power(std::ostringstream& os, Var x, int e, bool& first) {
  if (e == 0) return;
  if (!first) os << '*';
  first = false;
  os << var_name(x);
  if (e != 1) os << '^' << e;
}

}  // namespace

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool lead = true;
  // Highest spectral part and highest s power first.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    mpq_class c = it->second;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (lead) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    lead = false;
    bool first = true;
    if (c != 1 || it->first.is_one()) {
      os << c.get_str();
      first = false;
    }
    append_power(os, kS, it->first.exp(kS), first);
    append_power(os, kU, it->first.exp(kU), first);
    append_power(os, kV, it->first.exp(kV), first);
    append_power(os, kW, it->first.exp(kW), first);
  }
  return os.str();
}

namespace upoly {

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const Poly& p) { return int(p.size()) - 1; }

Poly from_laurent(const Laurent& p, int* shift) {
  const int lo = p.min_exp(kS);
  Poly out(std::size_t(p.max_exp(kS) - lo + 1));
  for (const auto& t : p.terms()) {
    if (!t.first.s_only()) throw Error("univariate conversion of a spectral polynomial");
    out[std::size_t(t.first.exp(kS) - lo)] = t.second;
  }
  if (shift != nullptr) *shift = lo;
  if (p.is_zero()) out.clear();
  return out;
}

Laurent to_laurent(const Poly& p, int shift) {
  std::vector<Laurent::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (sgn(p[i]) != 0) terms.emplace_back(Monomial::of(kS, int(i) + shift), p[i]);
  return Laurent::from_terms(std::move(terms));
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly* quot, Poly* rem) {
  if (b.empty()) throw DivisionByZero();
  Poly r = a;
  trim(r);
  Poly q;
  if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, mpq_class(0));
  const mpq_class lead_inv = 1 / b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t d = r.size() - b.size();
    mpq_class c = r.back() * lead_inv;
    for (std::size_t j = 0; j < b.size(); ++j) r[d + j] -= c * b[j];
    q[d] = c;
    r.pop_back();  // leading term cancels exactly
    trim(r);
  }
  trim(q);
  if (quot != nullptr) *quot = std::move(q);
  if (rem != nullptr) *rem = std::move(r);
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r;
    divmod(a, b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class inv = 1 / a.back();
    for (auto& c : a) c *= inv;
  }
  return a;
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = m, r1 = a, s0, s1{mpq_class(1)};
  trim(r1);
  {
    Poly q, r;
    divmod(r1, m, nullptr, &r);
    r1 = r;
  }
  if (r1.empty()) throw DivisionByZero();
  while (degree(r1) > 0) {
    Poly q, r;
    divmod(r0, r1, &q, &r);
    Poly qs = mul(q, s1);
    Poly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw NotInvertibleInRing("element shares a factor with the modulus");
  }
  const mpq_class inv = 1 / r1[0];
  for (auto& c : s1) c *= inv;
  Poly out;
  divmod(s1, m, nullptr, &out);
  return out;
}

}  // namespace upoly
}  // namespace tlcat
