#include "tlcat/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"
#include "tlcat/braid.hpp"
#include "tlcat/repr.hpp"
#include "tlcat/twist.hpp"

namespace tlcat {

FieldContext<mpq_class> rational_context(const mpq_class& s0) {
  return {mpq_class(1), [s0](const Scalar& x) { return eval_rational(x, s0); }, "rational:" + s0.get_str()};
}

FieldContext<Cyclotomic> cyclotomic_context(const Specialization& sp) {
  const CyclotomicField& f = sp.field();
  return {Cyclotomic(f, mpq_class(1)), [sp](const Scalar& x) { return eval_cyclotomic(x, sp); }, sp.str()};
}

FieldContext<Scalar> symbolic_context() {
  return {Scalar(1), [](const Scalar& x) { return x; }, "generic"};
}

int ModuleSpec::dim() const {
  if (kind == Kind::Regular) return int(enumerate(n, n, false).size());
  return int(standard_dimension(n, k));
}

Matrix<Scalar> ModuleSpec::action(const Morphism& f) const {
  if (kind == Kind::Standard) return act(f, StandardModule(n, k));
  const auto basis = enumerate(n, n, false);
  std::unordered_map<Diagram, int> idx;
  for (int i = 0; i < int(basis.size()); ++i) idx.emplace(basis[std::size_t(i)], i);
  Matrix<Scalar> m(int(basis.size()), int(basis.size()));
  for (int col = 0; col < int(basis.size()); ++col)
    for (const auto& [d, c] : f.terms()) {
      const ComposeOutcome o = compose(d, basis[std::size_t(col)]);
      Scalar w = c;
      if (o.loops > 0) w *= beta_pow(o.loops);
      m(idx.at(o.diagram), col) += w;
    }
  return m;
}

std::string ModuleSpec::str() const {
  if (kind == Kind::Regular) return "TL" + std::to_string(n);
  return "S" + std::to_string(n) + "," + std::to_string(k);
}

namespace {

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!is_zero(b(k, l))) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

template <class T>
T power_of(const T& x, int k, const T& one) {
  T r = one;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

template <class T>
Matrix<T> FusedModule<T>::factor_matrix(const ModuleSpec& spec, const Morphism& f) const {
  return spec.action(f).map(ctx_.from);
}

template <class T>
FusedModule<T>::FusedModule(const ModuleSpec& left, const ModuleSpec& right, FieldContext<T> ctx)
    : left_(left), right_(right), ctx_(std::move(ctx)) {
  beta_ = ctx_.from(beta());
  const int m = left.n, n = right.n, total = m + n;
  const int dm = left.dim(), dn = right.dim();
  mn_ = dm * dn;
  diagrams_ = enumerate(total, total, false);
  for (int i = 0; i < int(diagrams_.size()); ++i) diagram_index_.emplace(diagrams_[std::size_t(i)], i);
  const int ncols = int(diagrams_.size()) * mn_;
  pivot_rows_.assign(std::size_t(ncols), {});

  // Subalgebra generators with their action on M ⊗ N.
  struct Gen {
    Diagram diagram;
    Matrix<T> on_factors;
  };
  std::vector<Gen> gens;
  const Matrix<T> id_m = Matrix<T>::identity(dm, ctx_.one), id_n = Matrix<T>::identity(dn, ctx_.one);
  for (int i = 1; i < m; ++i) gens.push_back({Diagram::e(i, total), kron(factor_matrix(left, e(i, m)), id_n)});
  for (int j = 1; j < n; ++j) gens.push_back({Diagram::e(m + j, total), kron(id_m, factor_matrix(right, e(j, n)))});

  std::vector<T> acc(static_cast<std::size_t>(ncols));
  for (int di = 0; di < int(diagrams_.size()); ++di) {
    for (const Gen& g : gens) {
      const ComposeOutcome o = compose(diagrams_[std::size_t(di)], g.diagram);
      const int target = diagram_index_.at(o.diagram);
      const T w = power_of(beta_, o.loops, ctx_.one);
      for (int v = 0; v < mn_; ++v) {
        std::fill(acc.begin(), acc.end(), T());
        if (!is_zero(w)) acc[std::size_t(column(target, v))] += w;
        for (int u = 0; u < mn_; ++u)
          if (!is_zero(g.on_factors(u, v))) acc[std::size_t(column(di, u))] -= g.on_factors(u, v);
        add_relation(acc);
      }
    }
  }
  basis_index_.assign(std::size_t(ncols), -1);
  for (int c = 0; c < ncols; ++c)
    if (pivot_rows_[std::size_t(c)].empty()) {
      basis_index_[std::size_t(c)] = int(basis_.size());
      basis_.push_back(c);
    }
}

template <class T>
void FusedModule<T>::add_relation(std::vector<T>& acc) {
  int lead = -1;
  for (int c = 0; c < int(acc.size()); ++c) {
    if (is_zero(acc[std::size_t(c)])) continue;
    const Sparse& p = pivot_rows_[std::size_t(c)];
    if (p.empty()) {
      if (lead < 0) lead = c;
      continue;
    }
    const T f = acc[std::size_t(c)];
    for (const auto& [col, x] : p) acc[std::size_t(col)] -= f * x;
  }
  if (lead < 0) return;
  const T inv = inverse(acc[std::size_t(lead)]);
  Sparse row;
  for (int c = lead; c < int(acc.size()); ++c)
    if (!is_zero(acc[std::size_t(c)])) row.emplace_back(c, acc[std::size_t(c)] * inv);
  pivot_rows_[std::size_t(lead)] = std::move(row);
}

template <class T>
std::vector<T> FusedModule<T>::normal_form(std::vector<T> acc) const {
  for (int c = 0; c < int(acc.size()); ++c) {
    if (is_zero(acc[std::size_t(c)])) continue;
    const Sparse& p = pivot_rows_[std::size_t(c)];
    if (p.empty()) continue;
    const T f = acc[std::size_t(c)];
    for (const auto& [col, x] : p) acc[std::size_t(col)] -= f * x;
  }
  std::vector<T> out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) out[i] = acc[std::size_t(basis_[i])];
  return out;
}

template <class T>
Matrix<T> FusedModule<T>::from_raw_images(const std::function<void(int, std::vector<T>&)>& image) const {
  Matrix<T> r(dim(), dim());
  std::vector<T> acc(pivot_rows_.size());
  for (int j = 0; j < dim(); ++j) {
    std::fill(acc.begin(), acc.end(), T());
    image(basis_[std::size_t(j)], acc);
    const auto nf = normal_form(acc);
    for (int i = 0; i < dim(); ++i) r(i, j) = nf[std::size_t(i)];
  }
  return r;
}

template <class T>
Matrix<T> FusedModule<T>::left_action(const Morphism& f) const {
  std::vector<std::pair<Diagram, T>> terms;
  for (const auto& [d, c] : f.terms()) terms.emplace_back(d, ctx_.from(c));
  return from_raw_images([&](int col, std::vector<T>& acc) {
    const int di = col / mn_, v = col % mn_;
    for (const auto& [d, c] : terms) {
      const ComposeOutcome o = compose(d, diagrams_[std::size_t(di)]);
      acc[std::size_t(column(diagram_index_.at(o.diagram), v))] += c * power_of(beta_, o.loops, ctx_.one);
    }
  });
}

template <class T>
Matrix<T> FusedModule<T>::right_action(const Morphism& g) const {
  std::vector<std::pair<Diagram, T>> terms;
  for (const auto& [d, c] : g.terms()) terms.emplace_back(d, ctx_.from(c));
  return from_raw_images([&](int col, std::vector<T>& acc) {
    const int di = col / mn_, v = col % mn_;
    for (const auto& [d, c] : terms) {
      const ComposeOutcome o = compose(diagrams_[std::size_t(di)], d);
      acc[std::size_t(column(diagram_index_.at(o.diagram), v))] += c * power_of(beta_, o.loops, ctx_.one);
    }
  });
}

template <class T>
Matrix<T> FusedModule<T>::module_action(const Matrix<T>& a) const {
  return from_raw_images([&](int col, std::vector<T>& acc) {
    const int di = col / mn_, v = col % mn_;
    for (int u = 0; u < mn_; ++u)
      if (!is_zero(a(u, v))) acc[std::size_t(column(di, u))] += a(u, v);
  });
}

template <class T>
Matrix<T> FusedModule<T>::monodromy() const {
  return right_action(commutor(n(), m()) * commutor(m(), n()));
}

template <class T>
Matrix<T> FusedModule<T>::monodromy_from_twists() const {
  const Matrix<T> inv_m = factor_matrix(left_, twist_inverse(m()));
  const Matrix<T> inv_n = factor_matrix(right_, twist_inverse(n()));
  return left_action(twist_element(m() + n()).value) * module_action(kron(inv_m, inv_n));
}

template <class T>
std::vector<Matrix<T>> FusedModule<T>::generator_matrices() const {
  std::vector<Matrix<T>> out;
  for (int i = 1; i < m() + n(); ++i) out.push_back(left_action(e(i, m() + n())));
  return out;
}

template class FusedModule<mpq_class>;
template class FusedModule<Cyclotomic>;
template class FusedModule<Scalar>;

Scalar monodromy_eigenvalue(int k1, int k2, int k) {
  return q_pow(k * (k + 2) - k1 * (k1 + 2) - k2 * (k2 + 2), 2);
}

mpq_class generic_point(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(2, 97), den(1, 97);
  for (;;) {
    mpq_class s0(num(rng), den(rng));
    s0.canonicalize();
    if (abs(s0) != 1) return s0;
  }
}

namespace {

Params pair_params(int n1, int k1, int n2, int k2) {
  return {{"n1", (long long)n1}, {"k1", (long long)k1}, {"n2", (long long)n2}, {"k2", (long long)k2}};
}

std::string mult_text(const std::vector<std::pair<int, int>>& km) {
  std::string s;
  for (auto [k, m] : km) s += (s.empty() ? "" : ", ") + std::string("k=") + std::to_string(k) + " x" + std::to_string(m);
  return s.empty() ? "{}" : s;
}

template <class T>
CaseRecord matrices_equal(std::string id, Params p, const Matrix<T>& a, const Matrix<T>& b) {
  CaseRecord c = check_true(std::move(id), std::move(p), a == b);
  if (!c.pass) {
    c.lhs = a.str();
    c.rhs = b.str();
    c.diff = a.rows() == b.rows() && a.cols() == b.cols() ? (a - b).str() : "shape mismatch";
  }
  return c;
}

// TL relations on the given generator matrices.
template <class T>
std::vector<CaseRecord> tl_relations(const std::vector<Matrix<T>>& es, const T& beta, Params p) {
  std::vector<CaseRecord> out;
  bool ok = true;
  std::string where;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!(es[i] * es[i] == beta * es[i])) ok = false, where += " e" + std::to_string(i + 1) + "^2";
    if (i + 1 < es.size()) {
      if (!(es[i] * es[i + 1] * es[i] == es[i])) ok = false, where += " e" + std::to_string(i + 1) + "e" + std::to_string(i + 2) + "e" + std::to_string(i + 1);
      if (!(es[i + 1] * es[i] * es[i + 1] == es[i + 1])) ok = false, where += " e" + std::to_string(i + 2) + "e" + std::to_string(i + 1) + "e" + std::to_string(i + 2);
    }
    for (std::size_t j = i + 2; j < es.size(); ++j)
      if (!(es[i] * es[j] == es[j] * es[i])) ok = false, where += " far" + std::to_string(i + 1) + "," + std::to_string(j + 1);
  }
  out.push_back(check_true("induced action satisfies TL relations", std::move(p), ok, where));
  return out;
}

template <class T>
bool commutes_with_all(const Matrix<T>& x, const std::vector<Matrix<T>>& es) {
  for (const auto& a : es)
    if (!(x * a == a * x)) return false;
  return true;
}

// Everything checked for one generic standard pair over the field T.
template <class T>
std::vector<CaseRecord> generic_pair_cases(int n1, int k1, int n2, int k2, const FieldContext<T>& ctx) {
  std::vector<CaseRecord> out;
  Params p = pair_params(n1, k1, n2, k2);
  p.emplace_back("field", ctx.label);
  const FusedModule<T> f(ModuleSpec::standard(n1, k1), ModuleSpec::standard(n2, k2), ctx);
  const int n = n1 + n2;

  long long expect_dim = 0;
  for (int k = std::abs(k1 - k2); k <= k1 + k2; k += 2) expect_dim += standard_dimension(n, k);
  out.push_back(check_true("fused dimension", p, f.dim() == expect_dim,
                           std::to_string(f.dim()) + " vs " + std::to_string(expect_dim)));

  const auto es = f.generator_matrices();
  for (auto& c : tl_relations(es, ctx.from(beta()), p)) out.push_back(std::move(c));

  const Matrix<T> c = f.left_action(twist_element(n).value);
  const Matrix<T> mono = f.monodromy();
  const Matrix<T> ratio = f.monodromy_from_twists();
  out.push_back(matrices_equal("monodromy routes agree", p, mono, ratio));
  out.push_back(check_true("monodromy commutes with the induced action", p, commutes_with_all(mono, es)));

  // Spectra: nullity(c - γ_k) = dim S_{n,k} and nullity(mono - μ_k) likewise.
  std::vector<std::pair<int, int>> got, expect;
  int c_total = 0, mono_total = 0;
  bool mono_ok = true;
  for (int k = n % 2; k <= n; k += 2) {
    const int d = int(standard_dimension(n, k));
    const int in_range = (k >= std::abs(k1 - k2) && k <= k1 + k2) ? 1 : 0;
    const T gamma = ctx.from(expected_gamma(k));
    const int nc = f.dim() - rank(c - gamma * Matrix<T>::identity(f.dim(), ctx.one));
    c_total += nc;
    if (nc % d == 0 && nc > 0) got.emplace_back(k, nc / d);
    else if (nc > 0) got.emplace_back(k, -nc);
    if (in_range) expect.emplace_back(k, 1);
    if (in_range) {
      const T mu = ctx.from(monodromy_eigenvalue(k1, k2, k));
      const int nm = f.dim() - rank(mono - mu * Matrix<T>::identity(f.dim(), ctx.one));
      mono_total += nm;
      if (nm != d) mono_ok = false;
    }
  }
  CaseRecord spec = check_true("c-spectrum matches the fusion rule", p, got == expect && c_total == f.dim());
  spec.lhs = mult_text(got);
  spec.rhs = mult_text(expect);
  out.push_back(std::move(spec));
  out.push_back(check_true("monodromy eigenvalues mu_{k1,k2,k}", p, mono_ok && mono_total == f.dim()));
  return out;
}

}  // namespace

std::vector<FusionSummand> fusion_decomposition_generic(int n1, int k1, int n2, int k2, uint64_t seed) {
  const auto ctx = rational_context(generic_point(seed));
  const FusedModule<mpq_class> f(ModuleSpec::standard(n1, k1), ModuleSpec::standard(n2, k2), ctx);
  const int n = n1 + n2;
  const Matrix<mpq_class> c = f.left_action(twist_element(n).value);
  std::vector<FusionSummand> out;
  std::vector<mpq_class> seen;
  int covered = 0;
  for (int k = n % 2; k <= n; k += 2) {
    const mpq_class gamma = ctx.from(expected_gamma(k));
    if (std::find(seen.begin(), seen.end(), gamma) != seen.end())
      throw AmbiguousEigenvalue("gamma values collide at s = " + ctx.label);
    seen.push_back(gamma);
    const int nul = f.dim() - rank(c - gamma * Matrix<mpq_class>::identity(f.dim(), ctx.one));
    if (nul == 0) continue;
    const int d = int(standard_dimension(n, k));
    if (nul % d != 0) throw NotScalarAction("eigenspace of dimension " + std::to_string(nul) + " for k = " + std::to_string(k));
    covered += nul;
    out.push_back({k, nul / d, monodromy_eigenvalue(k1, k2, k)});
  }
  if (covered != f.dim()) throw NotScalarAction("c_n is not diagonalisable on the fused module");
  return out;
}

Report verify_fusion_generic(int max_total, const RunOptions& opt) {
  Report rep("fusion-generic");
  const auto ctx = rational_context(generic_point(opt.seed));
  std::vector<CaseTask> tasks;
  for (int n1 = 1; n1 < max_total; ++n1)
    for (int n2 = 1; n1 + n2 <= max_total; ++n2)
      for (int k1 = n1 % 2; k1 <= n1; k1 += 2)
        for (int k2 = n2 % 2; k2 <= n2; k2 += 2)
          tasks.push_back([=] { return generic_pair_cases(n1, k1, n2, k2, ctx); });
  // Quoted values: μ_{2,1,3} = q² and the eigenvalues on S₁,₁ ×_f S₁,₁.
  tasks.push_back([] {
    return std::vector<CaseRecord>{
        check_equal("mu_{2,1,3} = q^2", {}, monodromy_eigenvalue(2, 1, 3), q_pow(2)),
        check_equal("mu_{1,1,0} = q^-3", {}, monodromy_eigenvalue(1, 1, 0), q_pow(-3)),
        check_equal("mu_{1,1,2} = q", {}, monodromy_eigenvalue(1, 1, 2), q_pow(1)),
    };
  });
  run_into(rep, tasks, opt.jobs);
  return rep;
}

namespace {

// The field-independent part of generic_pair_cases: the induced action is a TL
// representation, the two monodromy routes agree, and every generalised
// eigenvalue of the monodromy is γ_k/(γ_k1 γ_k2) for some k ≡ n1+n2 mod 2.
// At a root of unity the fused module can be larger than generically (S₂,₀ at
// β = 0 does this), so k is not restricted to |k1-k2|..k1+k2.
template <class T>
std::vector<CaseRecord> specialized_pair_cases(int n1, int k1, int n2, int k2, const FieldContext<T>& ctx) {
  std::vector<CaseRecord> out;
  Params p = pair_params(n1, k1, n2, k2);
  p.emplace_back("field", ctx.label);
  const FusedModule<T> f(ModuleSpec::standard(n1, k1), ModuleSpec::standard(n2, k2), ctx);
  const auto es = f.generator_matrices();
  for (auto& c : tl_relations(es, ctx.from(beta()), p)) out.push_back(std::move(c));
  const Matrix<T> mono = f.monodromy();
  out.push_back(matrices_equal("monodromy routes agree", p, mono, f.monodromy_from_twists()));
  out.push_back(check_true("monodromy commutes with the induced action", p, commutes_with_all(mono, es)));
  std::vector<T> seen;
  int covered = 0;
  std::string detail;
  for (int k = (n1 + n2) % 2; k <= n1 + n2; k += 2) {
    const T lam = ctx.from(monodromy_eigenvalue(k1, k2, k));
    if (std::find(seen.begin(), seen.end(), lam) != seen.end()) continue;
    seen.push_back(lam);
    const auto nul = nullity_sequence(mono, lam, ctx.one);
    covered += nul.back();
    detail += "k=" + std::to_string(k) + ":" + std::to_string(nul.back()) + " ";
  }
  CaseRecord c = check_true("generalised eigenspaces of the expected mu fill the module", p, covered == f.dim(), detail);
  long long generic_dim = 0;
  for (int k = std::abs(k1 - k2); k <= k1 + k2; k += 2) generic_dim += standard_dimension(n1 + n2, k);
  c.note = detail + "dim " + std::to_string(f.dim()) + " (generic " + std::to_string(generic_dim) + ")";
  out.push_back(std::move(c));
  return out;
}

template <class T>
void add_specialized_pairs(std::vector<CaseTask>& tasks, int max_total, const FieldContext<T>& ctx) {
  for (int n1 = 1; n1 < max_total; ++n1)
    for (int n2 = 1; n1 + n2 <= max_total; ++n2)
      for (int k1 = n1 % 2; k1 <= n1; k1 += 2)
        for (int k2 = n2 % 2; k2 <= n2; k2 += 2)
          tasks.push_back([=] { return specialized_pair_cases(n1, k1, n2, k2, ctx); });
}

}  // namespace

Report verify_fusion_specialized(const Specialization& sp, int max_total, const RunOptions& opt) {
  Report rep("fusion-" + sp.str());
  std::vector<CaseTask> tasks;
  if (sp.kind == Specialization::Kind::Cyclotomic)
    add_specialized_pairs(tasks, max_total, cyclotomic_context(sp));
  else if (sp.kind == Specialization::Kind::Rational)
    add_specialized_pairs(tasks, max_total, rational_context(sp.s0));
  else
    throw InvalidArgument("fusion at a specialization needs a cyclotomic or rational value of q");
  run_into(rep, tasks, opt.jobs);
  return rep;
}

Report verify_fusion_symbolic(const RunOptions& opt) {
  Report rep("fusion-symbolic");
  const auto ctx = symbolic_context();
  std::vector<CaseTask> tasks;
  for (auto [n1, k1, n2, k2] : std::vector<std::array<int, 4>>{{1, 1, 1, 1}, {2, 2, 1, 1}, {2, 0, 1, 1}, {2, 0, 2, 0}})
    tasks.push_back([=] { return generic_pair_cases(n1, k1, n2, k2, ctx); });
  // The monodromy on S₁,₁ ×_f S₁,₁ has eigenvalues q^-3 and q, exactly.
  tasks.push_back([ctx] {
    const FusedModule<Scalar> f(ModuleSpec::standard(1, 1), ModuleSpec::standard(1, 1), ctx);
    const Matrix<Scalar> mono = f.monodromy();
    const Matrix<Scalar> id = Matrix<Scalar>::identity(f.dim(), Scalar(1));
    const Matrix<Scalar> prod = (mono - q_pow(-3) * id) * (mono - q_pow(1) * id);
    return std::vector<CaseRecord>{check_true("(M - q^-3)(M - q) = 0 on S1,1 x S1,1", pair_params(1, 1, 1, 1), prod.is_zero()),
                                   check_true("M is not scalar on S1,1 x S1,1", pair_params(1, 1, 1, 1),
                                              !scalar_value(mono).has_value())};
  });
  run_into(rep, tasks, opt.jobs);
  return rep;
}

Report verify_fusion_laws(const RunOptions& opt) {
  Report rep("fusion-laws");
  const auto ctx = rational_context(generic_point(opt.seed));
  std::vector<CaseTask> tasks;
  // I ×_f S ≅ S ≅ S ×_f I.
  for (int n = 0; n <= 5; ++n)
    for (int k = n % 2; k <= n; k += 2)
      tasks.push_back([=] {
        const FusedModule<mpq_class> a(ModuleSpec::standard(0, 0), ModuleSpec::standard(n, k), ctx);
        const FusedModule<mpq_class> b(ModuleSpec::standard(n, k), ModuleSpec::standard(0, 0), ctx);
        const long long d = standard_dimension(n, k);
        Params p{{"n", (long long)n}, {"k", (long long)k}};
        return std::vector<CaseRecord>{check_true("I x S has dim S", p, a.dim() == d, std::to_string(a.dim())),
                                       check_true("S x I has dim S", p, b.dim() == d, std::to_string(b.dim()))};
      });
  // S_{k,k} ×_f S_{2,0} ≅ S_{k+2,k}: dimension and the c eigenvalue.
  for (int k = 0; k <= 4; ++k)
    tasks.push_back([=] {
      const FusedModule<mpq_class> f(ModuleSpec::standard(k, k), ModuleSpec::standard(2, 0), ctx);
      const Matrix<mpq_class> c = f.left_action(twist_element(k + 2).value);
      Params p{{"k", (long long)k}};
      const auto lam = scalar_value(c);
      return std::vector<CaseRecord>{
          check_true("dim S_{k,k} x S_{2,0} = dim S_{k+2,k}", p, f.dim() == standard_dimension(k + 2, k),
                     std::to_string(f.dim())),
          check_true("c_{k+2} acts as gamma_k", p, lam.has_value() && *lam == ctx.from(expected_gamma(k)))};
    });
  // TL₂ ×_f TL₂ ≅ TL₄ at generic q, monodromy eigenvalues 1 (x8), q^-8 (x2), q^-4 (x3), q^4 (x1).
  tasks.push_back([ctx] {
    const FusedModule<mpq_class> f(ModuleSpec::regular(2), ModuleSpec::regular(2), ctx);
    std::vector<CaseRecord> out;
    out.push_back(check_true("dim TL2 x TL2 = 14", {}, f.dim() == 14, std::to_string(f.dim())));
    const Matrix<mpq_class> mono = f.monodromy();
    out.push_back(matrices_equal("TL2 x TL2 monodromy routes agree", {}, mono, f.monodromy_from_twists()));
    const auto id = Matrix<mpq_class>::identity(f.dim(), ctx.one);
    std::vector<std::pair<int, int>> expect{{0, 8}, {-8, 2}, {-4, 3}, {4, 1}}, got;
    for (auto [e, mult] : expect) got.emplace_back(e, f.dim() - rank(mono - ctx.from(q_pow(e)) * id));
    CaseRecord c = check_true("TL2 x TL2 generic monodromy spectrum", {}, got == expect);
    for (auto [e, mult] : got) c.lhs += "q^" + std::to_string(e) + " x" + std::to_string(mult) + " ";
    out.push_back(std::move(c));
    return out;
  });
  run_into(rep, tasks, opt.jobs);
  return rep;
}

Report verify_fusion_root_of_unity(const RunOptions& opt) {
  Report rep("fusion-root-of-unity");
  std::vector<CaseTask> tasks;
  tasks.push_back([] {
    std::vector<CaseRecord> out;
    const Specialization sp = Specialization::root_of_unity(3);
    const auto ctx = cyclotomic_context(sp);
    Params p{{"spec", sp.str()}, {"left", "S2,2"}, {"right", "S1,1"}, {"product", "P3,3"}};
    out.push_back(check_true("q = exp(2 pi i/3)", p,
                             std::abs(ctx.from(q_pow(1)).to_complex() - std::polar(1.0, 2 * M_PI / 3)) < 1e-12));
    const FusedModule<Cyclotomic> f(ModuleSpec::standard(2, 2), ModuleSpec::standard(1, 1), ctx);
    out.push_back(check_true("S2,2 x S1,1 is 3-dimensional", p, f.dim() == 3, std::to_string(f.dim())));
    const auto es = f.generator_matrices();
    for (auto& c : tl_relations(es, ctx.from(beta()), p)) out.push_back(std::move(c));
    const Matrix<Cyclotomic> mono = f.monodromy();
    out.push_back(matrices_equal("monodromy routes agree", p, mono, f.monodromy_from_twists()));
    const Cyclotomic lambda = ctx.from(q_pow(2));
    out.push_back(check_true("lambda = exp(4 pi i/3)", p, std::abs(lambda.to_complex() - std::polar(1.0, 4 * M_PI / 3)) < 1e-12));
    const JordanType j = jordan_type(mono, lambda, ctx.one);
    CaseRecord c = check_true("Jordan type (2,1), sole eigenvalue", p, j.sole_eigenvalue && j.blocks == std::vector<int>{2, 1});
    for (int b : j.blocks) c.lhs += std::to_string(b) + " ";
    c.rhs = "2 1";
    out.push_back(std::move(c));
    // The nilpotent part ν f has rank one and squares to zero.
    const Matrix<Cyclotomic> nil = mono - lambda * Matrix<Cyclotomic>::identity(3, ctx.one);
    out.push_back(check_true("nilpotent part has rank 1 and squares to 0", p, rank(nil) == 1 && (nil * nil).is_zero()));
    return out;
  });
  tasks.push_back([] {
    std::vector<CaseRecord> out;
    const Specialization sp = Specialization::root_of_unity(2);
    const auto ctx = cyclotomic_context(sp);
    Params p{{"spec", sp.str()}, {"left", "TL2"}, {"right", "TL2"}};
    out.push_back(check_true("beta = 0 at q = i", p, ctx.from(beta()).is_zero()));
    const FusedModule<Cyclotomic> f(ModuleSpec::regular(2), ModuleSpec::regular(2), ctx);
    out.push_back(check_true("TL2 x TL2 is 14-dimensional", p, f.dim() == 14, std::to_string(f.dim())));
    const auto es = f.generator_matrices();
    for (auto& c : tl_relations(es, ctx.from(beta()), p)) out.push_back(std::move(c));
    const Matrix<Cyclotomic> mono = f.monodromy();
    out.push_back(matrices_equal("monodromy routes agree", p, mono, f.monodromy_from_twists()));
    out.push_back(check_true("monodromy commutes with the induced action", p, commutes_with_all(mono, es)));
    const JordanType j = jordan_type(mono, ctx.one, ctx.one);
    const int threes = int(std::count(j.blocks.begin(), j.blocks.end(), 3));
    const int twos = int(std::count(j.blocks.begin(), j.blocks.end(), 2));
    const int ones = int(std::count(j.blocks.begin(), j.blocks.end(), 1));
    CaseRecord c = check_true("sole eigenvalue 1, two 3-blocks, two 2-blocks, rest 1-blocks", p,
                              j.sole_eigenvalue && threes == 2 && twos == 2 && threes * 3 + twos * 2 + ones == 14 &&
                                  int(j.blocks.size()) == threes + twos + ones);
    for (int b : j.blocks) c.lhs += std::to_string(b) + " ";
    c.rhs = "3 3 2 2 1 1 1 1";
    out.push_back(std::move(c));
    return out;
  });
  run_into(rep, tasks, opt.jobs);
  return rep;
}

namespace {

template <class T>
nlohmann::ordered_json table_for(const FusedModule<T>& f, const ModuleSpec& left, const ModuleSpec& right,
                                 const FieldContext<T>& ctx, bool symbolic_lambda) {
  nlohmann::ordered_json j;
  const int n = left.n + right.n;
  const Matrix<T> c = f.left_action(twist_element(n).value);
  const Matrix<T> mono = f.monodromy();
  const auto id = Matrix<T>::identity(f.dim(), ctx.one);
  auto summands = nlohmann::ordered_json::array();
  std::vector<T> seen;
  for (int k = n % 2; k <= n; k += 2) {
    const int nul = f.dim() - rank(c - ctx.from(expected_gamma(k)) * id);
    if (nul == 0) continue;
    nlohmann::ordered_json s;
    s["k"] = k;
    s["multiplicity"] = nul / int(standard_dimension(n, k));
    s["eigenspace_dim"] = nul;
    if (left.kind == ModuleSpec::Kind::Standard && right.kind == ModuleSpec::Kind::Standard)
      s["mu"] = monodromy_eigenvalue(left.k, right.k, k).str();
    summands.push_back(std::move(s));
  }
  j["summands"] = std::move(summands);
  // Jordan data for every distinct expected monodromy eigenvalue.
  auto jordan = nlohmann::ordered_json::array();
  std::vector<Scalar> candidates;
  if (left.kind == ModuleSpec::Kind::Standard && right.kind == ModuleSpec::Kind::Standard) {
    for (int k = std::abs(left.k - right.k); k <= left.k + right.k; k += 2) candidates.push_back(monodromy_eigenvalue(left.k, right.k, k));
  } else {
    for (int k1 = left.n % 2; k1 <= left.n; k1 += 2)
      for (int k2 = right.n % 2; k2 <= right.n; k2 += 2)
        for (int k = std::abs(k1 - k2); k <= k1 + k2; k += 2) candidates.push_back(monodromy_eigenvalue(k1, k2, k));
  }
  for (const Scalar& cand : candidates) {
    const T lam = ctx.from(cand);
    if (std::find(seen.begin(), seen.end(), lam) != seen.end()) continue;
    seen.push_back(lam);
    try {
      const JordanType jt = jordan_type(mono, lam, ctx.one);
      nlohmann::ordered_json e;
      e["lambda"] = symbolic_lambda ? cand.str() : jt.eigenvalue;
      e["blocks"] = jt.blocks;
      jordan.push_back(std::move(e));
    } catch (const EigenvalueMismatch&) {
    }
  }
  j["jordan"] = std::move(jordan);
  return j;
}

}  // namespace

std::string fusion_table_json(const ModuleSpec& left, const ModuleSpec& right, const Specialization& sp, uint64_t seed) {
  nlohmann::ordered_json j;
  j["n1"] = left.n;
  j["k1"] = left.k;
  j["n2"] = right.n;
  j["k2"] = right.k;
  j["left"] = left.str();
  j["right"] = right.str();
  j["spec"] = sp.str();
  nlohmann::ordered_json body;
  int dim = 0;
  switch (sp.kind) {
    case Specialization::Kind::Cyclotomic: {
      const auto ctx = cyclotomic_context(sp);
      const FusedModule<Cyclotomic> f(left, right, ctx);
      dim = f.dim();
      body = table_for(f, left, right, ctx, false);
      break;
    }
    case Specialization::Kind::Rational: {
      const auto ctx = rational_context(sp.s0);
      const FusedModule<mpq_class> f(left, right, ctx);
      dim = f.dim();
      body = table_for(f, left, right, ctx, false);
      break;
    }
    default: {
      // Generic: computed at a random rational point, reported symbolically.
      const mpq_class s0 = generic_point(seed);
      const auto ctx = rational_context(s0);
      const FusedModule<mpq_class> f(left, right, ctx);
      dim = f.dim();
      body = table_for(f, left, right, ctx, true);
      j["sample_point"] = s0.get_str();
      break;
    }
  }
  j["dim"] = dim;
  j["summands"] = body["summands"];
  j["jordan"] = body["jordan"];
  return j.dump(2) + "\n";
}

}  // namespace tlcat
