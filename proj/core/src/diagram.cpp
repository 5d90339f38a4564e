#include "tlcat/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>

#include "tlcat/errors.hpp"

namespace tlcat {

Diagram::Diagram(int dst, int src, bool dilute)
    : m_(uint8_t(dst)), n_(uint8_t(src)), dilute_(dilute) {
  if (dst < 0 || src < 0 || dst + src > kMaxNodes)
    throw IndexOutOfRange("diagram size out of range: " + std::to_string(dst) + "x" + std::to_string(src));
  p_.fill(-1);
}

void Diagram::link(int a, int b) {
  if (a < 0 || b < 0 || a >= size() || b >= size() || a == b)
    throw IndexOutOfRange("bad node pair");
  p_[std::size_t(a)] = int8_t(b);
  p_[std::size_t(b)] = int8_t(a);
}

void Diagram::unlink(int a) {
  const int b = p_[std::size_t(a)];
  p_[std::size_t(a)] = -1;
  if (b >= 0) p_[std::size_t(b)] = -1;
}

int Diagram::through_lines() const {
  int t = 0;
  for (int i = 0; i < m_; ++i)
    if (p_[std::size_t(i)] >= m_) ++t;
  return t;
}

bool Diagram::is_planar() const {
  // A stack walk along the boundary: each pair must close the innermost open arc.
  std::array<int, kMaxNodes> stack{};
  int top = 0;
  for (int i = 0; i < size(); ++i) {
    const int j = p_[std::size_t(i)];
    if (j < 0) continue;
    if (j > i) {
      stack[std::size_t(top++)] = i;
    } else {
      if (top == 0 || stack[std::size_t(top - 1)] != j) return false;
      --top;
    }
  }
  return top == 0;
}

bool Diagram::is_valid() const {
  for (int i = 0; i < size(); ++i) {
    const int j = p_[std::size_t(i)];
    if (j < 0) {
      if (!dilute_) return false;
      continue;
    }
    if (j >= size() || j == i || p_[std::size_t(j)] != i) return false;
  }
  for (int i = size(); i < kMaxNodes; ++i)
    if (p_[std::size_t(i)] != -1) return false;
  return is_planar();
}

Diagram Diagram::identity(int n, bool dilute) {
  Diagram d(n, n, dilute);
  for (int i = 0; i < n; ++i) d.link(d.left(i), d.right(i));
  return d;
}

Diagram Diagram::e(int i, int n, bool dilute) {
  if (i < 1 || i > n - 1) throw IndexOutOfRange("e_" + std::to_string(i) + " on " + std::to_string(n) + " strands");
  Diagram d(n, n, dilute);
  for (int r = 0; r < n; ++r) {
    if (r == i - 1 || r == i) continue;
    d.link(d.left(r), d.right(r));
  }
  d.link(d.left(i - 1), d.left(i));
  d.link(d.right(i - 1), d.right(i));
  return d;
}

Diagram Diagram::cup(bool dilute) {
  Diagram d(2, 0, dilute);
  d.link(0, 1);
  return d;
}

Diagram Diagram::cap(bool dilute) { return cup(dilute).transpose(); }

Diagram Diagram::big_cup(int m, bool dilute) {
  Diagram d(2 * m, 0, dilute);
  for (int i = 0; i < m; ++i) d.link(i, 2 * m - 1 - i);
  return d;
}

Diagram Diagram::big_cap(int m, bool dilute) { return big_cup(m, dilute).transpose(); }

Diagram Diagram::vacant(int dst, int src) { return Diagram(dst, src, true); }

Diagram Diagram::transpose() const {
  Diagram t(n_, m_, dilute_);
  // A node at (side, row) moves to (other side, row).
  auto image = [&](int node) { return is_left(node) ? t.right(row(node)) : t.left(row(node)); };
  for (int i = 0; i < size(); ++i) {
    const int j = p_[std::size_t(i)];
    if (j > i) t.link(image(i), image(j));
  }
  return t;
}

bool Diagram::operator==(const Diagram& o) const {
  return m_ == o.m_ && n_ == o.n_ && dilute_ == o.dilute_ &&
         std::memcmp(p_.data(), o.p_.data(), std::size_t(size())) == 0;
}

bool Diagram::operator<(const Diagram& o) const {
  if (m_ != o.m_) return m_ < o.m_;
  if (n_ != o.n_) return n_ < o.n_;
  if (dilute_ != o.dilute_) return dilute_ < o.dilute_;
  return std::lexicographical_compare(p_.begin(), p_.begin() + size(), o.p_.begin(), o.p_.begin() + size());
}

std::size_t Diagram::hash() const {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&](unsigned v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(m_);
  mix(n_);
  mix(dilute_ ? 1u : 0u);
  for (int i = 0; i < size(); ++i) mix(uint8_t(p_[std::size_t(i)]));
  return h;
}

std::string Diagram::str() const {
  std::ostringstream os;
  if (dilute_) os << 'd';
  os << int(m_) << 'x' << int(n_) << ":[";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    const int j = p_[std::size_t(i)];
    if (j >= 0 && j < i) continue;
    if (!first) os << ',';
    first = false;
    if (j < 0) os << '(' << i + 1 << ')';
    else os << '(' << i + 1 << ',' << j + 1 << ')';
  }
  os << ']';
  return os.str();
}

Diagram Diagram::parse(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("diagram: " + why + " in '" + std::string(text) + "'");
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
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) fail(std::string("'") + c + "' expected");
    ++i;
  };
  skip();
  bool dilute = false;
  if (i < text.size() && text[i] == 'd') {
    dilute = true;
    ++i;
  }
  const int m = number();
  expect('x');
  const int n = number();
  if (m + n > kMaxNodes) fail("too many nodes");
  expect(':');
  expect('[');
  Diagram d(m, n, dilute);
  std::vector<bool> seen(std::size_t(m + n), false);
  auto claim = [&](int node) {
    if (node < 1 || node > m + n) fail("node out of range");
    if (seen[std::size_t(node - 1)]) fail("node listed twice");
    seen[std::size_t(node - 1)] = true;
  };
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    for (;;) {
      expect('(');
      const int a = number();
      claim(a);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        const int b = number();
        claim(b);
        d.link(a - 1, b - 1);
      } else if (!dilute) {
        fail("vacancy in a non-dilute diagram");
      }
      expect(')');
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip();
  if (i != text.size()) fail("trailing input");
  if (!dilute && std::find(seen.begin(), seen.end(), false) != seen.end()) fail("unpaired node");
  if (!d.is_planar()) fail("pairs interleave");
  return d;
}

ComposeOutcome compose(const Diagram& c, const Diagram& b) {
  if (c.src() != b.dst())
    throw InterfaceMismatch("compose: source " + std::to_string(c.src()) + " vs target " + std::to_string(b.dst()));
  if (c.dilute() != b.dilute()) throw InterfaceMismatch("compose: mixing dilute and ordinary diagrams");
  const int k = c.dst();
  const int mid = c.src();
  const int n = b.src();
  ComposeOutcome out;
  out.diagram = Diagram(k, n, c.dilute());
  Diagram& r = out.diagram;

  if (c.dilute()) {
    for (int j = 0; j < mid; ++j) {
      if (c.vacant(c.right(j)) != b.vacant(j)) {
        out.annihilated = true;
        out.diagram = Diagram();
        return out;
      }
    }
  }

  std::array<bool, Diagram::kMaxNodes> seen{};
  // Follow a strand that leaves c at node x (a node of c) until it exits.
  // Returns the result node it reaches.
  auto run_from_c = [&](int x) {
    for (;;) {
      const int y = c.partner(x);
      if (c.is_left(y)) return r.left(y);
      const int j = c.row(y);
      seen[std::size_t(j)] = true;
      const int z = b.partner(j);
      if (!b.is_left(z)) return r.right(b.row(z));
      seen[std::size_t(z)] = true;
      x = c.right(z);
    }
  };
  auto run_from_b = [&](int x) {
    for (;;) {
      const int y = b.partner(x);
      if (!b.is_left(y)) return r.right(b.row(y));
      seen[std::size_t(y)] = true;
      const int z = c.partner(c.right(y));
      if (c.is_left(z)) return r.left(z);
      const int j = c.row(z);
      seen[std::size_t(j)] = true;
      x = j;
    }
  };

  for (int i = 0; i < k; ++i) {
    if (c.vacant(i) || !r.vacant(r.left(i))) continue;
    r.link(r.left(i), run_from_c(i));
  }
  for (int j = 0; j < n; ++j) {
    const int x = b.right(j);
    if (b.vacant(x) || !r.vacant(r.right(j))) continue;
    r.link(r.right(j), run_from_b(x));
  }
  for (int j = 0; j < mid; ++j) {
    if (seen[std::size_t(j)] || b.vacant(j)) continue;
    ++out.loops;
    int cur = j;
    do {
      seen[std::size_t(cur)] = true;
      const int other = b.partner(cur);  // a middle row
      seen[std::size_t(other)] = true;
      cur = c.row(c.partner(c.right(other)));
    } while (cur != j);
  }
  return out;
}

Diagram tensor(const Diagram& a, const Diagram& b) {
  if (a.dilute() != b.dilute()) throw InterfaceMismatch("tensor: mixing dilute and ordinary diagrams");
  Diagram r(a.dst() + b.dst(), a.src() + b.src(), a.dilute());
  auto from_a = [&](int x) { return a.is_left(x) ? r.left(a.row(x)) : r.right(a.row(x)); };
  auto from_b = [&](int x) { return b.is_left(x) ? r.left(a.dst() + b.row(x)) : r.right(a.src() + b.row(x)); };
  for (int x = 0; x < a.size(); ++x)
    if (a.partner(x) > x) r.link(from_a(x), from_a(a.partner(x)));
  for (int x = 0; x < b.size(); ++x)
    if (b.partner(x) > x) r.link(from_b(x), from_b(b.partner(x)));
  return r;
}

std::vector<Diagram> enumerate(int m, int n, bool dilute, std::optional<int> through) {
  std::vector<Diagram> out;
  const int total = m + n;
  if (m < 0 || n < 0) return out;
  if (!dilute && total % 2 != 0) return out;
  Diagram d(m, n, dilute);
  std::vector<int> stack;
  std::function<void(int)> rec = [&](int i) {
    if (i == total) {
      if (stack.empty() && (!through || d.through_lines() == *through)) out.push_back(d);
      return;
    }
    const int remaining = total - i - 1;
    if (dilute) rec(i + 1);
    if (!stack.empty()) {
      const int open = stack.back();
      stack.pop_back();
      d.link(open, i);
      rec(i + 1);
      d.unlink(open);
      stack.push_back(open);
    }
    if (int(stack.size()) + 1 <= remaining) {
      stack.push_back(i);
      rec(i + 1);
      stack.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Diagram standard_through_diagram(int r, int k, int n) {
  if ((r - k) % 2 != 0 || (n - k) % 2 != 0 || k > r || k > n || k < 0)
    throw InterfaceMismatch("standard diagram shape");
  Diagram d(r, n, false);
  for (int i = 0; i < k; ++i) d.link(d.left(i), d.right(i));
  for (int i = k; i < r; i += 2) d.link(d.left(i), d.left(i + 1));
  for (int i = k; i < n; i += 2) d.link(d.right(i), d.right(i + 1));
  return d;
}

namespace {

// For a (r,k)-diagram h whose k right nodes are all through lines, returns
// a in End(r) with a ∘ (1_k ⊗ z^{⊗(r-k)/2}) = h and no loops.
Diagram lift_left_half(const Diagram& h) {
  const int r = h.dst();
  const int k = h.src();
  if (r == k) return h;
  if (k >= 1) {
    // g in Hom(r,k) zig-zags through the cups so that g ∘ (1_k ⊗ z^p) = 1_k.
    Diagram g(k, r, false);
    for (int j = 0; j + 1 < k; ++j) g.link(g.left(j), g.right(j));
    for (int j = k - 1; j + 1 < r - 1; j += 2) g.link(g.right(j), g.right(j + 1));
    g.link(g.left(k - 1), g.right(r - 1));
    ComposeOutcome a = compose(h, g);
    return a.diagram;
  }
  // No through lines: open the arc at the top node and thread it through the cups.
  Diagram a(r, r, false);
  const int j = h.partner(0);
  for (int x = 1; x < r; ++x) {
    const int y = h.partner(x);
    if (x == j || y == 0 || y < x) continue;
    a.link(a.left(x), a.left(y));
  }
  a.link(a.left(0), a.right(0));
  a.link(a.left(j), a.right(r - 1));
  for (int x = 1; x + 1 < r - 1; x += 2) a.link(a.right(x), a.right(x + 1));
  return a;
}

}  // namespace

ThroughLineFactorization factor_through_lines(const Diagram& c) {
  if (c.dilute()) throw InterfaceMismatch("through-line factorization is for ordinary diagrams");
  const int r = c.dst();
  const int n = c.src();
  const int k = c.through_lines();
  // Split c into its left half (r,k) and right half (k,n).
  Diagram left_half(r, k, false), right_half(k, n, false);
  int t = 0;
  for (int x = 0; x < r; ++x) {
    const int y = c.partner(x);
    if (c.is_left(y)) {
      if (y > x) left_half.link(left_half.left(x), left_half.left(y));
    } else {
      left_half.link(left_half.left(x), left_half.right(t));
      right_half.link(right_half.left(t), right_half.right(c.row(y)));
      ++t;
    }
  }
  for (int j = 0; j < n; ++j) {
    const int x = c.right(j);
    const int y = c.partner(x);
    if (!c.is_left(y) && y < x) right_half.link(right_half.right(j), right_half.right(c.row(y)));
  }
  ThroughLineFactorization f;
  f.k = k;
  f.a = lift_left_half(left_half);
  f.b = lift_left_half(right_half.transpose()).transpose();

  const ComposeOutcome s1 = compose(f.a, standard_through_diagram(r, k, n));
  const ComposeOutcome s2 = compose(s1.diagram, f.b);
  if (s1.loops != 0 || s2.loops != 0 || !(s2.diagram == c))
    throw Error("through-line factorization failed for " + c.str());
  return f;
}

}  // namespace tlcat
