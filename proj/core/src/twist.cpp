#include "tlcat/twist.hpp"

#include <map>
#include <mutex>

#include "tlcat/braid.hpp"
#include "tlcat/diagram.hpp"
#include "tlcat/errors.hpp"

namespace tlcat {

namespace {

std::vector<int> ascending(int n) {
  std::vector<int> w;
  for (int i = 1; i < n; ++i) w.push_back(i);
  return w;
}

std::vector<int> descending(int n) {
  std::vector<int> w;
  for (int i = n - 1; i >= 1; --i) w.push_back(i);
  return w;
}

Morphism power(const Morphism& a, int k) {
  Morphism r = identity(a.src(), a.dilute());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

Params np(int n) { return {{"n", (long long)n}}; }

}  // namespace

Morphism rho(int n) { return crossing_word(ascending(n), n); }
Morphism lambda(int n) { return crossing_word(descending(n), n); }
// (t₁…t_{n-1})⁻¹ = t_{n-1}⁻¹…t₁⁻¹
Morphism rho_inv(int n) { return crossing_word(descending(n), n, true); }
Morphism lambda_inv(int n) { return crossing_word(ascending(n), n, true); }

Morphism en(int n) {
  if (n < 2) throw IndexOutOfRange("e_n needs n >= 2");
  return chain({rho(n), e(n - 1, n), rho_inv(n)});
}

Morphism e0(int n) {
  if (n < 2) throw IndexOutOfRange("e_0 needs n >= 2");
  return chain({lambda(n), e(1, n), lambda_inv(n)});
}

TwistElement twist_element(int n, TwistForm form, bool prefactor) {
  if (n < 0) throw IndexOutOfRange("negative strand count");
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, Morphism> memo;
  const auto key = std::make_tuple(n, int(form), prefactor);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return {n, it->second};
  }
  Morphism v = power(form == TwistForm::Rho ? rho(n) : lambda(n), n);
  if (prefactor) v *= q_pow(3 * n, 2);
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, v);
  return {n, v};
}

Morphism twist_inverse(int n) { return q_pow(-3 * n, 2) * power(rho_inv(n), n); }

Report verify_centrality(int max_n, const RunOptions& opt) {
  Report rep("twist-centrality");
  std::vector<CaseTask> tasks;
  for (int n = 0; n <= max_n; ++n) {
    tasks.push_back([n] {
      std::vector<CaseRecord> out;
      const Morphism c = twist_element(n).value;
      for (int i = 1; i < n; ++i)
        out.push_back(check_equal("c_n e_i = e_i c_n", {{"n", (long long)n}, {"i", (long long)i}}, c * e(i, n),
                                  e(i, n) * c));
      out.push_back(check_equal("c_n c_n^-1 = 1", np(n), c * twist_inverse(n), identity(n)));
      return out;
    });
  }
  run_into(rep, tasks, opt.jobs);
  return rep;
}

Report verify_twist_forms(int max_n, const RunOptions& opt) {
  Report rep("twist-forms");
  rep.add(check_equal("c_0 = 1_0", {}, twist_element(0).value, identity(0)));
  rep.add(check_equal("c_1 = q^{3/2} 1_1", {}, twist_element(1).value, q_pow(3, 2) * identity(1)));
  rep.add(check_equal("c_2 = q^3 t_1^2", {}, twist_element(2).value, q_pow(3) * (t(1, 2) * t(1, 2))));
  std::vector<CaseTask> tasks;
  for (int n = 0; n <= max_n; ++n)
    tasks.push_back([n] {
      return std::vector<CaseRecord>{check_equal("rho form = lambda form", np(n), twist_element(n, TwistForm::Rho).value,
                                                 twist_element(n, TwistForm::Lambda).value)};
    });
  run_into(rep, tasks, opt.jobs);
  return rep;
}

Report verify_twist_axiom(int max_total, const RunOptions& opt) {
  Report rep("twist-axiom");
  std::vector<CaseTask> tasks;
  for (int total = 0; total <= max_total; ++total) {
    tasks.push_back([total] {
      std::vector<CaseRecord> out;
      const Morphism c = twist_element(total).value;
      for (int r = 0; r <= total; ++r) {
        const int s = total - r;
        Params p{{"r", (long long)r}, {"s", (long long)s}};
        out.push_back(check_equal("c_{r+s} = eta_{s,r} eta_{r,s} (c_r x c_s)", p,
                                  commutor(s, r) * commutor(r, s) * tensor(twist_element(r).value, twist_element(s).value),
                                  c));
      }
      if (total >= 1) {
        const int n = total - 1;
        const Morphism c1 = twist_element(1).value, cn = twist_element(n).value;
        out.push_back(check_equal("c_{n+1} = eta_{1,n} eta_{n,1} (c_n x c_1)", np(n),
                                  commutor(1, n) * commutor(n, 1) * tensor(cn, c1), c));
        out.push_back(check_equal("c_{n+1} = eta_{n,1} eta_{1,n} (c_1 x c_n)", np(n),
                                  commutor(n, 1) * commutor(1, n) * tensor(c1, cn), c));
      }
      // Commutor shift identities with r + s = total, r >= 1.
      for (int r = 1; r <= total; ++r) {
        const int s = total - r;
        Params p{{"r", (long long)r}, {"s", (long long)s}};
        out.push_back(check_equal("eta_{s+1,r-1}(eta_{s,1} x 1) = eta_{s,r}(1 x eta_{1,r-1})", p,
                                  commutor(s + 1, r - 1) * tensor(commutor(s, 1), identity(r - 1)),
                                  commutor(s, r) * tensor(identity(s), commutor(1, r - 1))));
        out.push_back(check_equal("eta_{r-1,s+1}(1 x eta_{1,s}) = eta_{r,s}(eta_{r-1,1} x 1)", p,
                                  commutor(r - 1, s + 1) * tensor(identity(r - 1), commutor(1, s)),
                                  commutor(r, s) * tensor(commutor(r - 1, 1), identity(s))));
      }
      return out;
    });
  }
  run_into(rep, tasks, opt.jobs);
  return rep;
}

Report verify_cyclic_lemma(int max_n, const RunOptions& opt) {
  Report rep("cyclic-lemma");
  std::vector<CaseTask> tasks;
  for (int n = 3; n <= max_n; ++n) {
    tasks.push_back([n] {
      std::vector<CaseRecord> out;
      const Morphism r = rho(n), ri = rho_inv(n), l = lambda(n), li = lambda_inv(n);
      const Morphism e_n = en(n), e_0 = e0(n);
      const Scalar b = beta();
      for (int i = 1; i < n; ++i) {
        Params p{{"n", (long long)n}, {"i", (long long)i}};
        const Morphism shifted_up = i + 1 < n ? e(i + 1, n) : e_n;
        const Morphism shifted_down = i > 1 ? e(i - 1, n) : e_0;
        out.push_back(check_equal("rho e_i rho^-1 = e_{i+1}", p, chain({r, e(i, n), ri}), shifted_up));
        out.push_back(check_equal("lambda e_i lambda^-1 = e_{i-1}", p, chain({l, e(i, n), li}), shifted_down));
      }
      out.push_back(check_equal("rho e_n rho^-1 = e_1", np(n), chain({r, e_n, ri}), e(1, n)));
      out.push_back(check_equal("lambda e_0 lambda^-1 = e_{n-1}", np(n), chain({l, e_0, li}), e(n - 1, n)));
      out.push_back(check_equal("e_{n-1} e_n e_{n-1} = e_{n-1}", np(n), chain({e(n - 1, n), e_n, e(n - 1, n)}), e(n - 1, n)));
      out.push_back(check_equal("e_n e_{n-1} e_n = e_n", np(n), chain({e_n, e(n - 1, n), e_n}), e_n));
      out.push_back(check_equal("e_n^2 = beta e_n", np(n), e_n * e_n, b * e_n));
      out.push_back(check_equal("e_0 e_1 e_0 = e_0", np(n), chain({e_0, e(1, n), e_0}), e_0));
      out.push_back(check_equal("e_1 e_0 e_1 = e_1", np(n), chain({e(1, n), e_0, e(1, n)}), e(1, n)));
      out.push_back(check_equal("e_0^2 = beta e_0", np(n), e_0 * e_0, b * e_0));
      return out;
    });
  }
  run_into(rep, tasks, opt.jobs);
  return rep;
}

namespace {

CaseRecord naturality_record(const Morphism& f, Params p) {
  return check_equal("c_dst f = f c_src", std::move(p), twist_element(f.dst()).value * f, f * twist_element(f.src()).value);
}

}  // namespace

Report twist_naturality_check(const Morphism& f) {
  Report rep("twist-naturality");
  rep.add(naturality_record(f, {{"f", f.str()}}));
  return rep;
}

Report verify_twist_naturality(int max_side, const RunOptions& opt) {
  Report rep("twist-naturality");
  std::vector<CaseTask> tasks;
  for (int m = 0; m <= max_side; ++m)
    for (int n = m % 2; n <= max_side; n += 2)
      tasks.push_back([m, n] {
        std::vector<CaseRecord> out;
        for (const Diagram& d : enumerate(m, n, false)) out.push_back(naturality_record(Morphism(d), {{"f", d.str()}}));
        return out;
      });
  run_into(rep, tasks, opt.jobs);
  return rep;
}

Report verify_twist_fixes_cups(int max_p) {
  Report rep("twist-fixes-cups");
  for (int p = 0; p <= max_p; ++p)
    rep.add(check_equal("c_{2p} z^p = z^p", {{"p", (long long)p}}, twist_element(2 * p).value * cups(p), cups(p)));
  return rep;
}

}  // namespace tlcat
