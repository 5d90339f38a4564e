#include "tlcat/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "tlcat/errors.hpp"

namespace tlcat {

Morphism::Morphism(const Diagram& d, Scalar c) : dst_(d.dst()), src_(d.src()), dilute_(d.dilute()) {
  if (!c.is_zero()) terms_.emplace_back(d, std::move(c));
}

Scalar Morphism::coeff(const Diagram& d) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                             [](const Term& t, const Diagram& x) { return t.first < x; });
  if (it != terms_.end() && it->first == d) return it->second;
  return Scalar();
}

void Morphism::add_term(const Diagram& d, const Scalar& c) {
  if (d.dst() != dst_ || d.src() != src_ || d.dilute() != dilute_)
    throw InterfaceMismatch("term " + d.str() + " does not fit " + std::to_string(dst_) + "<-" + std::to_string(src_));
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                             [](const Term& t, const Diagram& x) { return t.first < x; });
  if (it != terms_.end() && it->first == d) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term(d, c));
  }
}

Morphism Morphism::from_terms(int dst, int src, bool dilute, std::vector<Term> terms) {
  Morphism r(dst, src, dilute);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (t.first.dst() != dst || t.first.src() != src || t.first.dilute() != dilute)
      throw InterfaceMismatch("term " + t.first.str() + " has the wrong shape");
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

Morphism& Morphism::operator+=(const Morphism& o) {
  if (o.dst_ != dst_ || o.src_ != src_ || o.dilute_ != dilute_) throw InterfaceMismatch("adding morphisms of different shapes");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Scalar c = a->second + b->second;
      if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) { return *this += -o; }

Morphism& Morphism::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Morphism Morphism::operator-() const {
  Morphism r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

bool Morphism::operator==(const Morphism& o) const {
  return dst_ == o.dst_ && src_ == o.src_ && dilute_ == o.dilute_ && terms_ == o.terms_;
}

std::string Morphism::str() const {
  std::ostringstream os;
  if (dilute_) os << 'd';
  os << dst_ << "<-" << src_ << " : ";
  if (terms_.empty()) {
    os << '0';
    return os.str();
  }
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")*" << d.str();
  }
  return os.str();
}

Morphism Morphism::parse(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("morphism: " + why + " in '" + std::string(text) + "'");
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> int {
    skip();
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("number expected");
    return std::stoi(std::string(text.substr(start, i - start)));
  };
  skip();
  bool dilute = false;
  if (i < text.size() && text[i] == 'd') {
    dilute = true;
    ++i;
  }
  const int dst = number();
  skip();
  if (text.substr(i, 2) != "<-") fail("'<-' expected");
  i += 2;
  const int src = number();
  skip();
  if (i >= text.size() || text[i] != ':') fail("':' expected");
  ++i;
  skip();
  Morphism r(dst, src, dilute);
  {
    std::string_view rest = text.substr(i);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
    if (rest == "0") return r;
  }
  std::vector<Term> terms;
  for (;;) {
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      neg = text[i] == '-';
      ++i;
      skip();
    }
    Scalar c(1);
    if (i < text.size() && text[i] == '(') {
      int depth = 0;
      const std::size_t start = i;
      for (; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')' && --depth == 0) break;
      }
      if (i >= text.size()) fail("unbalanced parentheses");
      c = Scalar::parse(text.substr(start + 1, i - start - 1));
      ++i;
      skip();
      if (i >= text.size() || text[i] != '*') fail("'*' expected");
      ++i;
      skip();
    }
    const std::size_t start = i;
    const std::size_t close = text.find(']', i);
    if (close == std::string_view::npos) fail("diagram expected");
    i = close + 1;
    const Diagram d = Diagram::parse(text.substr(start, i - start));
    terms.emplace_back(d, neg ? -c : c);
    skip();
    if (i == text.size()) break;
    if (text[i] != '+' && text[i] != '-') fail("'+' expected");
  }
  return from_terms(dst, src, dilute, std::move(terms));
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.src() != g.dst())
    throw InterfaceMismatch("compose: source " + std::to_string(f.src()) + " vs target " + std::to_string(g.dst()));
  if (f.dilute() != g.dilute()) throw InterfaceMismatch("compose: mixing dilute and ordinary morphisms");
  std::unordered_map<Diagram, Scalar> acc;
  acc.reserve(f.size() * 2 + g.size() * 2);
  for (const auto& [d1, c1] : f.terms()) {
    for (const auto& [d2, c2] : g.terms()) {
      ComposeOutcome o = compose(d1, d2);
      if (o.annihilated) continue;
      Scalar c = c1 * c2;
      if (o.loops > 0) c *= beta_pow(o.loops);
      auto [it, fresh] = acc.try_emplace(o.diagram, std::move(c));
      if (!fresh) it->second += c;
    }
  }
  std::vector<Morphism::Term> terms;
  terms.reserve(acc.size());
  for (auto& kv : acc)
    if (!kv.second.is_zero()) terms.emplace_back(kv.first, std::move(kv.second));
  return Morphism::from_terms(f.dst(), g.src(), f.dilute(), std::move(terms));
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  if (f.dilute() != g.dilute()) throw InterfaceMismatch("tensor: mixing dilute and ordinary morphisms");
  std::vector<Morphism::Term> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& [d1, c1] : f.terms())
    for (const auto& [d2, c2] : g.terms()) terms.emplace_back(tensor(d1, d2), c1 * c2);
  return Morphism::from_terms(f.dst() + g.dst(), f.src() + g.src(), f.dilute(), std::move(terms));
}

Morphism transpose(const Morphism& f) {
  std::vector<Morphism::Term> terms;
  for (const auto& [d, c] : f.terms()) terms.emplace_back(d.transpose(), c);
  return Morphism::from_terms(f.src(), f.dst(), f.dilute(), std::move(terms));
}

Morphism chain(const std::vector<Morphism>& factors) {
  if (factors.empty()) throw InterfaceMismatch("empty product");
  Morphism r = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) r = compose(r, factors[i]);
  return r;
}

namespace {

Morphism dilute_strand() {
  // A dashed line: the strand plus the vacancy pair.
  Morphism r(Diagram::identity(1, true));
  r.add_term(Diagram::vacant(1, 1), Scalar(1));
  return r;
}

}  // namespace

Morphism identity(int n, bool dilute) {
  if (!dilute) return Morphism(Diagram::identity(n));
  Morphism r(Diagram(0, 0, true));
  const Morphism one = dilute_strand();
  for (int i = 0; i < n; ++i) r = tensor(r, one);
  return r;
}

Morphism embed(const Morphism& core, int i, int n) {
  if (core.src() != 2 || core.dst() != 2) throw InterfaceMismatch("embed expects an End(2) morphism");
  if (i < 1 || i > n - 1) throw IndexOutOfRange("generator index " + std::to_string(i) + " on " + std::to_string(n) + " strands");
  const bool dilute = core.dilute();
  return tensor(tensor(identity(i - 1, dilute), core), identity(n - i - 1, dilute));
}

Morphism e(int i, int n, bool dilute) {
  if (!dilute) return Morphism(Diagram::e(i, n));
  return embed(Morphism(Diagram::e(1, 2, true)), i, n);
}

Morphism elementary_crossing(bool dilute, bool inverse) {
  const Scalar a = q_pow(inverse ? -1 : 1, 2);
  const Scalar b = q_pow(inverse ? 1 : -1, 2);
  Morphism r(Diagram::identity(2, dilute), a);
  r.add_term(Diagram::e(1, 2, dilute), b);
  if (dilute) {
    Diagram down(2, 2, true);  // top-left to bottom-right
    down.link(down.left(0), down.right(1));
    Diagram up(2, 2, true);  // bottom-left to top-right
    up.link(up.left(1), up.right(0));
    r.add_term(down, Scalar(1));
    r.add_term(up, Scalar(1));
    r.add_term(Diagram::vacant(2, 2), Scalar(1));
  }
  return r;
}

Morphism t(int i, int n, bool dilute) { return embed(elementary_crossing(dilute, false), i, n); }

Morphism t_inv(int i, int n, bool dilute) { return embed(elementary_crossing(dilute, true), i, n); }

Morphism cup(bool dilute) { return Morphism(Diagram::cup(dilute)); }
Morphism cap(bool dilute) { return Morphism(Diagram::cap(dilute)); }
Morphism big_cup(int m) { return Morphism(Diagram::big_cup(m)); }
Morphism big_cap(int m) { return Morphism(Diagram::big_cap(m)); }

Morphism cups(int p) {
  Morphism r(Diagram(0, 0, false));
  for (int i = 0; i < p; ++i) r = tensor(r, cup());
  return r;
}

Morphism caps(int p) { return transpose(cups(p)); }

}  // namespace tlcat
