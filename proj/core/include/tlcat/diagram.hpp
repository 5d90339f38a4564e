#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tlcat {

// A planar (m,n)-diagram: m nodes on the left column (the target) and n on the
// right column (the source), so the diagram lives in Hom(n, m).
//
// Boundary nodes are numbered 0..m+n-1: the left column top to bottom, then the
// right column bottom to top.  With that numbering, planarity is the usual
// non-interleaving condition.  partner(i) is -1 for a vacancy (dilute only).
class Diagram {
 public:
  static constexpr int kMaxNodes = 40;

  Diagram() = default;
  // All nodes vacant; callers connect them with link().
  Diagram(int dst, int src, bool dilute);

  int dst() const { return m_; }
  int src() const { return n_; }
  bool dilute() const { return dilute_; }
  int size() const { return m_ + n_; }
  int partner(int node) const { return p_[std::size_t(node)]; }
  bool vacant(int node) const { return p_[std::size_t(node)] < 0; }

  // Boundary index of the i-th left node / j-th right node, counted from the top.
  int left(int i) const { return i; }
  int right(int j) const { return m_ + n_ - 1 - j; }
  bool is_left(int node) const { return node < m_; }
  // Position from the top within the node's own column.
  int row(int node) const { return node < m_ ? node : m_ + n_ - 1 - node; }

  void link(int a, int b);
  void unlink(int a);

  int through_lines() const;
  bool is_planar() const;
  bool is_valid() const;

  static Diagram identity(int n, bool dilute = false);
  // The generator e_i on n strands (1 <= i <= n-1).
  static Diagram e(int i, int n, bool dilute = false);
  static Diagram cup(bool dilute = false);  // z in Hom(0,2)
  static Diagram cap(bool dilute = false);  // z^t in Hom(2,0)
  static Diagram big_cup(int m, bool dilute = false);  // nested cups in Hom(0,2m)
  static Diagram big_cap(int m, bool dilute = false);
  // Every node vacant; dilute only.
  static Diagram vacant(int dst, int src);

  Diagram transpose() const;

  bool operator==(const Diagram& o) const;
  bool operator<(const Diagram& o) const;

  // Text form `MxN:[(a,b),...,(c)]`, 1-based boundary indices, M = dst, N = src,
  // singletons for vacancies; dilute diagrams carry a leading 'd'.
  std::string str() const;
  static Diagram parse(std::string_view text);

  std::size_t hash() const;

 private:
  std::array<int8_t, kMaxNodes> p_{};
  uint8_t m_ = 0;
  uint8_t n_ = 0;
  bool dilute_ = false;
};

struct ComposeOutcome {
  Diagram diagram;
  int loops = 0;
  bool annihilated = false;
};

// c ∘ b with c in Hom(mid, k) and b in Hom(n, mid).
ComposeOutcome compose(const Diagram& c, const Diagram& b);
// a drawn on top of b.
Diagram tensor(const Diagram& a, const Diagram& b);

// All (m,n)-diagrams (m = dst, n = src), sorted, optionally restricted to a
// given number of through lines.
std::vector<Diagram> enumerate(int m, int n, bool dilute, std::optional<int> through = std::nullopt);

struct ThroughLineFactorization {
  Diagram a;  // in End(dst)
  int k = 0;
  Diagram b;  // in End(src)
};

// Writes c = a ∘ (1_k ⊗ z^{⊗(r-k)/2}) ∘ (1_k ⊗ (z^t)^{⊗(n-k)/2}) ∘ b with no loops.
ThroughLineFactorization factor_through_lines(const Diagram& c);
// The middle piece (1_k ⊗ z^{⊗p}) ∘ (1_k ⊗ (z^t)^{⊗p'}) for dst r and src n.
Diagram standard_through_diagram(int r, int k, int n);

}  // namespace tlcat

template <>
struct std::hash<tlcat::Diagram> {
  std::size_t operator()(const tlcat::Diagram& d) const { return d.hash(); }
};
