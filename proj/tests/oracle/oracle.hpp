#pragma once

// Reference implementations used only by the tests.  Each is written from
// scratch with plain containers so that it shares no code with the library.

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

// ---- Laurent polynomials in one variable, schoolbook arithmetic ----

using SPoly = std::map<int, mpq_class>;  // exponent -> coefficient, no zeros

inline void add_term(SPoly& p, int e, const mpq_class& c) {
  mpq_class& slot = p[e];
  slot += c;
  if (slot == 0) p.erase(e);
}

inline SPoly add(const SPoly& a, const SPoly& b) {
  SPoly r = a;
  for (const auto& [e, c] : b) add_term(r, e, c);
  return r;
}

inline SPoly mul(const SPoly& a, const SPoly& b) {
  SPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term(r, ea + eb, ca * cb);
  return r;
}

inline std::complex<double> eval(const SPoly& p, std::complex<double> s) {
  std::complex<double> r = 0;
  for (const auto& [e, c] : p) r += c.get_d() * std::pow(s, e);
  return r;
}

// ---- Counting ----

inline std::vector<std::vector<long long>> pascal(int n) {
  std::vector<std::vector<long long>> t(std::size_t(n + 1));
  for (int i = 0; i <= n; ++i) {
    t[std::size_t(i)].assign(std::size_t(i + 1), 1);
    for (int j = 1; j < i; ++j) t[std::size_t(i)][std::size_t(j)] = t[std::size_t(i - 1)][std::size_t(j - 1)] + t[std::size_t(i - 1)][std::size_t(j)];
  }
  return t;
}

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  return pascal(n)[std::size_t(n)][std::size_t(k)];
}

inline long long catalan(int n) { return binom(2 * n, n) / (n + 1); }

inline long long standard_dim(int n, int k) {
  if (k < 0 || k > n || (n - k) % 2 != 0) return 0;
  const int p = (n - k) / 2;
  return binom(n, p) - binom(n, p - 1);
}

// ---- Diagrams as raw pairings ----
//
// `link[i]` is the partner of boundary node i or -1 for a vacancy.  Nodes are
// numbered left column top to bottom, then right column bottom to top, so a
// planar pairing is one without interleaved pairs.

struct Pairing {
  int dst = 0, src = 0;
  std::vector<int> link;
  int left(int i) const { return i; }
  int right(int j) const { return dst + src - 1 - j; }
};

inline bool planar(const std::vector<int>& link) {
  const int n = int(link.size());
  for (int a = 0; a < n; ++a) {
    const int b = link[std::size_t(a)];
    if (b <= a) continue;
    for (int c = a + 1; c < b; ++c) {
      const int d = link[std::size_t(c)];
      if (d >= 0 && (d < a || d > b)) return false;
    }
  }
  return true;
}

// Every planar pairing of `size` nodes; with `dilute` nodes may stay single.
inline void all_pairings(std::vector<int>& link, int from, bool dilute, std::vector<std::vector<int>>& out) {
  const int n = int(link.size());
  while (from < n && link[std::size_t(from)] != -2) ++from;
  if (from == n) {
    if (planar(link)) out.push_back(link);
    return;
  }
  if (dilute) {
    link[std::size_t(from)] = -1;
    all_pairings(link, from + 1, dilute, out);
  }
  for (int j = from + 1; j < n; ++j) {
    if (link[std::size_t(j)] != -2) continue;
    link[std::size_t(from)] = j;
    link[std::size_t(j)] = from;
    all_pairings(link, from + 1, dilute, out);
    link[std::size_t(j)] = -2;
  }
  link[std::size_t(from)] = -2;
}

inline std::vector<std::vector<int>> all_pairings(int size, bool dilute) {
  std::vector<int> link(std::size_t(size), -2);
  std::vector<std::vector<int>> out;
  all_pairings(link, 0, dilute, out);
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(std::size_t(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[std::size_t(x)] == x ? x : parent[std::size_t(x)] = find(parent[std::size_t(x)]); }
  void unite(int a, int b) { parent[std::size_t(find(a))] = find(b); }
};

struct Composite {
  std::optional<Pairing> result;  // empty when a strand ends on a vacancy
  int loops = 0;
};

// c ∘ b: glue the right column of c to the left column of b and follow the
// strands with a union-find over all c and b nodes.
inline Composite compose(const Pairing& c, const Pairing& b) {
  const int nc = c.dst + c.src, nb = b.dst + b.src;
  UnionFind uf(nc + nb);
  for (int i = 0; i < nc; ++i)
    if (c.link[std::size_t(i)] >= 0) uf.unite(i, c.link[std::size_t(i)]);
  for (int i = 0; i < nb; ++i)
    if (b.link[std::size_t(i)] >= 0) uf.unite(nc + i, nc + b.link[std::size_t(i)]);
  // Middle row j: c's right node j meets b's left node j.
  for (int j = 0; j < c.src; ++j) {
    const int x = c.right(j), y = nc + b.left(j);
    const bool vx = c.link[std::size_t(x)] < 0, vy = b.link[std::size_t(y - nc)] < 0;
    if (vx != vy) return {};
    if (!vx) uf.unite(x, y);
  }
  Pairing r{c.dst, b.src, std::vector<int>(std::size_t(c.dst + b.src), -1)};
  // Outer nodes: c's left column, then b's right column.
  std::vector<int> outer_of(std::size_t(nc + nb), -1);
  for (int i = 0; i < c.dst; ++i) outer_of[std::size_t(c.left(i))] = r.left(i);
  for (int j = 0; j < b.src; ++j) outer_of[std::size_t(nc + b.right(j))] = r.right(j);
  std::map<int, std::vector<int>> comp_outer;
  std::map<int, bool> comp_has_node;
  for (int i = 0; i < nc + nb; ++i) {
    const bool vacant = i < nc ? c.link[std::size_t(i)] < 0 : b.link[std::size_t(i - nc)] < 0;
    if (vacant) continue;
    const int root = uf.find(i);
    comp_has_node[root] = true;
    if (outer_of[std::size_t(i)] >= 0) comp_outer[root].push_back(outer_of[std::size_t(i)]);
  }
  Composite out;
  for (const auto& [root, has] : comp_has_node) {
    (void)has;
    auto it = comp_outer.find(root);
    if (it == comp_outer.end()) {
      ++out.loops;
      continue;
    }
    const auto& ends = it->second;
    if (ends.size() == 2) {
      r.link[std::size_t(ends[0])] = ends[1];
      r.link[std::size_t(ends[1])] = ends[0];
    }
  }
  out.result = r;
  return out;
}

// ---- Link states for S_{n,k} ----
//
// A link state on n points: state[i] is the partner of point i or -1 for a
// defect.  e_i joins points i, i+1 (0-based i-1, i) with the usual rules:
// a loop gives β, two defects joined give zero, otherwise arcs are rerouted.

using LinkState = std::vector<int>;

inline void link_states(LinkState& s, int from, int defects_left, std::vector<LinkState>& out) {
  const int n = int(s.size());
  while (from < n && s[std::size_t(from)] != -2) ++from;
  if (from == n) {
    if (defects_left == 0 && planar(s)) {
      // Defects may not sit inside arcs.
      for (int i = 0; i < n; ++i)
        if (s[std::size_t(i)] > i)
          for (int j = i + 1; j < s[std::size_t(i)]; ++j)
            if (s[std::size_t(j)] == -1) return;
      out.push_back(s);
    }
    return;
  }
  if (defects_left > 0) {
    s[std::size_t(from)] = -1;
    link_states(s, from + 1, defects_left - 1, out);
  }
  for (int j = from + 1; j < n; ++j) {
    if (s[std::size_t(j)] != -2) continue;
    s[std::size_t(from)] = j;
    s[std::size_t(j)] = from;
    link_states(s, from + 1, defects_left, out);
    s[std::size_t(j)] = -2;
  }
  s[std::size_t(from)] = -2;
}

inline std::vector<LinkState> link_states(int n, int k) {
  LinkState s(std::size_t(n), -2);
  std::vector<LinkState> out;
  link_states(s, 0, k, out);
  return out;
}

struct Action {
  bool zero = false;
  bool loop = false;  // result is β times the same state
  LinkState state;
};

// e_i (1-based) on a link state.
inline Action act_e(int i, const LinkState& s) {
  const int a = i - 1, b = i;
  const int pa = s[std::size_t(a)], pb = s[std::size_t(b)];
  if (pa == b) return {false, true, s};
  if (pa < 0 && pb < 0) return {true, false, {}};
  LinkState r = s;
  if (pa >= 0) r[std::size_t(pa)] = pb;
  if (pb >= 0) r[std::size_t(pb)] = pa;
  r[std::size_t(a)] = b;
  r[std::size_t(b)] = a;
  return {false, false, r};
}

}  // namespace oracle
