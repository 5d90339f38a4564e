#include "tlcat/braid.hpp"

#include <map>
#include <mutex>
#include <random>
#include <tuple>

#include "tlcat/errors.hpp"

namespace tlcat {

std::vector<int> commutor_word(int r, int s, CommutorForm form) {
  std::vector<int> w;
  if (r == 0 || s == 0) return w;
  if (form == CommutorForm::LeftNested) {
    for (int i = s; i >= 1; --i)
      for (int j = 0; j < r; ++j) w.push_back(i + j);
  } else {
    for (int i = 1; i <= r; ++i)
      for (int j = s - 1; j >= 0; --j) w.push_back(i + j);
  }
  return w;
}

Morphism crossing_word(const std::vector<int>& word, int n, bool inverse, bool dilute) {
  Morphism r = identity(n, dilute);
  for (int i : word) r = compose(r, inverse ? t_inv(i, n, dilute) : t(i, n, dilute));
  return r;
}

namespace {

using CacheKey = std::tuple<int, int, int, bool>;  // r, s, form (2 = inverse), dilute

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<CacheKey, Morphism>& cache() {
  static std::map<CacheKey, Morphism> c;
  return c;
}

Morphism cached(const CacheKey& key, const std::function<Morphism()>& build) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  Morphism m = build();
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache().emplace(key, std::move(m)).first->second;
}

Params rs(int r, int s) { return {{"r", (long long)r}, {"s", (long long)s}}; }

}  // namespace

Morphism commutor(int r, int s, CommutorForm form, bool dilute) {
  if (r < 0 || s < 0) throw IndexOutOfRange("negative commutor index");
  return cached({r, s, int(form), dilute},
                [&] { return crossing_word(commutor_word(r, s, form), r + s, false, dilute); });
}

Morphism commutor_inverse(int r, int s, bool dilute) {
  return cached({r, s, 2, dilute}, [&] {
    auto w = commutor_word(r, s, CommutorForm::LeftNested);
    std::reverse(w.begin(), w.end());
    return crossing_word(w, r + s, true, dilute);
  });
}

Report verify_tl_relations(int max_n, const RunOptions& opt) {
  Report rep("tl-relations");
  std::vector<CaseTask> tasks;
  for (int n = 2; n <= max_n; ++n) {
    tasks.push_back([n] {
      std::vector<CaseRecord> out;
      for (int i = 1; i < n; ++i) {
        Params p{{"n", (long long)n}, {"i", (long long)i}};
        out.push_back(check_equal("e_i^2 = beta e_i", p, e(i, n) * e(i, n), beta() * e(i, n)));
        if (i + 1 < n) {
          out.push_back(check_equal("e_i e_{i+1} e_i = e_i", p, chain({e(i, n), e(i + 1, n), e(i, n)}), e(i, n)));
          out.push_back(check_equal("e_{i+1} e_i e_{i+1} = e_{i+1}", p, chain({e(i + 1, n), e(i, n), e(i + 1, n)}),
                                    e(i + 1, n)));
        }
        for (int j = i + 2; j < n; ++j) {
          Params pj{{"n", (long long)n}, {"i", (long long)i}, {"j", (long long)j}};
          out.push_back(check_equal("e_i e_j = e_j e_i", pj, e(i, n) * e(j, n), e(j, n) * e(i, n)));
        }
      }
      out.push_back(check_equal("unit", {{"n", (long long)n}}, identity(n) * e(1, n), e(1, n) * identity(n)));
      return out;
    });
  }
  run_into(rep, tasks, opt.jobs);
  return rep;
}

Report verify_hexagons(int max_total, bool dilute, const RunOptions& opt) {
  Report rep(dilute ? "dilute-hexagons" : "hexagons");
  std::vector<CaseTask> tasks;
  for (int total = 0; total <= max_total; ++total) {
    tasks.push_back([total, dilute] {
      std::vector<CaseRecord> out;
      for (int r = 0; r <= total; ++r) {
        const int s = total - r;
        out.push_back(check_equal("closed forms agree", rs(r, s), commutor(r, s, CommutorForm::LeftNested, dilute),
                                  commutor(r, s, CommutorForm::RightNested, dilute)));
        out.push_back(check_equal("commutor inverse", rs(r, s), commutor(r, s, CommutorForm::LeftNested, dilute) *
                                                                     commutor_inverse(r, s, dilute),
                                  identity(total, dilute)));
      }
      for (int n = 0; n <= total; ++n) {
        for (int m = 0; n + m <= total; ++m) {
          const int k = total - n - m;
          Params p{{"n", (long long)n}, {"m", (long long)m}, {"k", (long long)k}};
          const Morphism lhs = commutor(n, m + k, CommutorForm::LeftNested, dilute);
          const Morphism rhs = tensor(identity(m, dilute), commutor(n, k, CommutorForm::LeftNested, dilute)) *
                               tensor(commutor(n, m, CommutorForm::LeftNested, dilute), identity(k, dilute));
          out.push_back(check_equal("hexagon eta_{n,m+k}", p, lhs, rhs));
          // Second hexagon with (u, v, w) = (n, m, k).
          const Morphism lhs2 = commutor(n + m, k, CommutorForm::LeftNested, dilute);
          const Morphism rhs2 = tensor(commutor(n, k, CommutorForm::LeftNested, dilute), identity(m, dilute)) *
                                tensor(identity(n, dilute), commutor(m, k, CommutorForm::LeftNested, dilute));
          out.push_back(check_equal("hexagon eta_{u+v,w}", {{"u", (long long)n}, {"v", (long long)m}, {"w", (long long)k}},
                                    lhs2, rhs2));
        }
      }
      return out;
    });
  }
  run_into(rep, tasks, opt.jobs);
  return rep;
}

namespace {

CaseRecord naturality_case(const Diagram& c, const Diagram& d, bool dilute) {
  const int r = c.dst(), n = c.src(), s = d.dst(), m = d.src();
  const Morphism lhs = commutor(r, s, CommutorForm::LeftNested, dilute) * Morphism(tensor(c, d));
  const Morphism rhs = Morphism(tensor(d, c)) * commutor(n, m, CommutorForm::LeftNested, dilute);
  return check_equal("naturality", {{"c", c.str()}, {"d", d.str()}}, lhs, rhs);
}

std::vector<Diagram> cached_enumerate(int m, int n, bool dilute) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, std::vector<Diagram>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(m, n, dilute);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, enumerate(m, n, dilute)).first;
  return it->second;
}

}  // namespace

Report verify_naturality(int max_total, int random_pairs, int random_max_total, bool dilute, const RunOptions& opt) {
  Report rep(dilute ? "dilute-naturality" : "naturality");
  std::vector<CaseTask> tasks;
  for (int r = 0; r <= max_total; ++r)
    for (int s = 0; r + s <= max_total; ++s)
      for (int n = 0; n <= max_total; ++n)
        for (int m = 0; n + m <= max_total; ++m) {
          if (!dilute && ((r + n) % 2 != 0 || (s + m) % 2 != 0)) continue;
          tasks.push_back([=] {
            std::vector<CaseRecord> out;
            for (const Diagram& c : cached_enumerate(r, n, dilute))
              for (const Diagram& d : cached_enumerate(s, m, dilute)) out.push_back(naturality_case(c, d, dilute));
            return out;
          });
        }

  if (random_pairs > 0) {
    std::mt19937_64 rng(opt.seed);
    auto pick = [&](int lo, int hi) { return int(std::uniform_int_distribution<int>(lo, hi)(rng)); };
    for (int k = 0; k < random_pairs; ++k) {
      int r, s, n, m;
      do {
        const int rs_total = pick(max_total + 1, random_max_total);
        r = pick(0, rs_total);
        s = rs_total - r;
        n = pick(0, random_max_total);
        m = pick(0, random_max_total - n);
      } while (!dilute && ((r + n) % 2 != 0 || (s + m) % 2 != 0));
      const auto& cs = cached_enumerate(r, n, dilute);
      const auto& ds = cached_enumerate(s, m, dilute);
      if (cs.empty() || ds.empty()) {
        --k;
        continue;
      }
      const Diagram c = cs[std::size_t(pick(0, int(cs.size()) - 1))];
      const Diagram d = ds[std::size_t(pick(0, int(ds.size()) - 1))];
      tasks.push_back([c, d, dilute] { return std::vector<CaseRecord>{naturality_case(c, d, dilute)}; });
    }
  }
  run_into(rep, tasks, opt.jobs);
  return rep;
}

Report verify_braid_relations(int n, const RunOptions& opt) {
  Report rep("braid-relations");
  std::vector<CaseTask> tasks;
  tasks.push_back([n] {
    std::vector<CaseRecord> out;
    for (int i = 1; i < n; ++i) {
      Params p{{"n", (long long)n}, {"i", (long long)i}};
      out.push_back(check_equal("t_i t_i^-1 = 1", p, t(i, n) * t_inv(i, n), identity(n)));
    }
    for (int i = 1; i + 1 < n; ++i) {
      Params p{{"n", (long long)n}, {"i", (long long)i}};
      const Morphism ti = t(i, n), tj = t(i + 1, n), ei = e(i, n), ej = e(i + 1, n);
      out.push_back(check_equal("t_i t_{i+1} e_i = e_{i+1} e_i", p, chain({ti, tj, ei}), ej * ei));
      out.push_back(check_equal("e_{i+1} e_i = e_{i+1} t_i t_{i+1}", p, ej * ei, chain({ej, ti, tj})));
      out.push_back(check_equal("t_{i+1} t_i e_{i+1} = e_i e_{i+1}", p, chain({tj, ti, ej}), ei * ej));
      out.push_back(check_equal("e_i e_{i+1} = e_i t_{i+1} t_i", p, ei * ej, chain({ei, tj, ti})));
      out.push_back(check_equal("t_i t_{i+1} t_i = t_{i+1} t_i t_{i+1}", p, chain({ti, tj, ti}), chain({tj, ti, tj})));
    }
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        out.push_back(check_equal("t_i t_j = t_j t_i", {{"n", (long long)n}, {"i", (long long)i}, {"j", (long long)j}},
                                  t(i, n) * t(j, n), t(j, n) * t(i, n)));
    // Palindromes with top index m = n-1.
    const int top = n - 1;
    for (int i = 1; i < top; ++i) {
      std::vector<int> lw, rw;
      for (int k = i; k <= top; ++k) lw.push_back(k);
      for (int k = top - 1; k >= i; --k) lw.push_back(k);
      for (int k = top; k >= i; --k) rw.push_back(k);
      for (int k = i + 1; k <= top; ++k) rw.push_back(k);
      out.push_back(check_equal("palindrome", {{"n", (long long)n}, {"i", (long long)i}}, crossing_word(lw, n),
                                crossing_word(rw, n)));
    }
    return out;
  });
  // Transport of e_i across the commutor.
  tasks.push_back([n] {
    std::vector<CaseRecord> out;
    for (int a = 1; a < n; ++a) {
      const int b = n - a;
      const Morphism eta = commutor(a, b);
      for (int i = 1; i < a; ++i)
        out.push_back(check_equal("eta_{n,m} e_i = e_{m+i} eta_{n,m}", {{"n", (long long)a}, {"m", (long long)b}, {"i", (long long)i}},
                                  eta * e(i, n), e(b + i, n) * eta));
      for (int j = 1; j < b; ++j)
        out.push_back(check_equal("eta_{n,m} e_{n+j} = e_j eta_{n,m}", {{"n", (long long)a}, {"m", (long long)b}, {"j", (long long)j}},
                                  eta * e(a + j, n), e(j, n) * eta));
    }
    return out;
  });
  // Bubble lemma on n strands in total.
  tasks.push_back([n] {
    std::vector<CaseRecord> out;
    for (int p = 1; 2 * p < n; ++p) {
      const int a = n - 2 * p;
      Params prm{{"n", (long long)a}, {"p", (long long)p}};
      out.push_back(check_equal("bubble cups", prm, commutor(a, 2 * p) * tensor(identity(a), cups(p)),
                                tensor(cups(p), identity(a))));
      out.push_back(check_equal("bubble caps", prm, tensor(caps(p), identity(a)),
                                tensor(identity(a), caps(p)) * commutor(2 * p, a)));
    }
    return out;
  });
  run_into(rep, tasks, opt.jobs);
  return rep;
}

Morphism monodromy_noncentral_witness() {
  const Morphism mono = commutor(2, 1) * commutor(1, 2);
  return mono * e(1, 3) - e(1, 3) * mono;
}

Morphism expected_noncentral_witness() {
  const Scalar c = q_pow(-2) * (q_pow(1) - q_pow(-1));
  return c * (e(1, 3) * e(2, 3) - e(2, 3) * e(1, 3));
}

Report verify_noncentral_witness() {
  Report rep("noncentral-witness");
  const Morphism w = monodromy_noncentral_witness();
  rep.add(check_equal("eta21 eta12 e1 - e1 eta21 eta12", {}, w, expected_noncentral_witness()));
  rep.add(check_true("witness nonzero", {}, !w.is_zero()));
  // On 2⊗1 the monodromy commutes with e₁; e₂ plays the role e₁ played on 1⊗2
  // and the commutator comes out as the transpose, i.e. the negative.
  const Morphism mono = commutor(1, 2) * commutor(2, 1);
  rep.add(check_equal("eta12 eta21 e1 - e1 eta12 eta21", {}, mono * e(1, 3) - e(1, 3) * mono, Morphism(3, 3)));
  rep.add(check_equal("eta12 eta21 e2 - e2 eta12 eta21", {}, mono * e(2, 3) - e(2, 3) * mono, transpose(w)));
  rep.add(check_equal("transposed witness is its negative", {}, transpose(w), -w));
  return rep;
}

}  // namespace tlcat
