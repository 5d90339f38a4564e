#include <benchmark/benchmark.h>

#include "tlcat/braid.hpp"
#include "tlcat/fusion.hpp"
#include "tlcat/integrable.hpp"
#include "tlcat/repr.hpp"
#include "tlcat/twist.hpp"

using namespace tlcat;

static void BM_ScalarProduct(benchmark::State& state) {
  Scalar a = beta(), b = quantum_int(5) * Scalar::var(kU, 2) + q_pow(-3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarProduct);

static void BM_ComposeAllPairs(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto basis = enumerate(n, n, false);
  for (auto _ : state)
    for (const Diagram& c : basis)
      for (const Diagram& b : basis) benchmark::DoNotOptimize(compose(c, b));
  state.SetItemsProcessed(state.iterations() * int64_t(basis.size() * basis.size()));
}
BENCHMARK(BM_ComposeAllPairs)->DenseRange(3, 5);

static void BM_Enumerate(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(n, n, state.range(1) != 0));
}
BENCHMARK(BM_Enumerate)->Args({6, 0})->Args({8, 0})->Args({4, 1});

// Uncached: the word is multiplied out every time.
static void BM_CommutorWord(benchmark::State& state) {
  const int r = int(state.range(0)), s = int(state.range(1));
  const auto w = commutor_word(r, s, CommutorForm::LeftNested);
  for (auto _ : state) benchmark::DoNotOptimize(crossing_word(w, r + s));
}
BENCHMARK(BM_CommutorWord)->Args({2, 2})->Args({3, 3})->Args({2, 4});

static void BM_Twist(benchmark::State& state) {
  const int n = int(state.range(0));
  const Morphism r = rho(n);
  for (auto _ : state) {
    Morphism c = identity(n);
    for (int k = 0; k < n; ++k) c = c * r;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Twist)->DenseRange(3, 5);

static void BM_StandardAction(benchmark::State& state) {
  const int n = int(state.range(0));
  const StandardModule s(n, n % 2);
  const Morphism f = t(1, n) * t(n - 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(act(f, s));
}
BENCHMARK(BM_StandardAction)->DenseRange(4, 7);

static void BM_FusedModule(benchmark::State& state) {
  const auto ctx = rational_context(mpq_class(3, 2));
  const int n1 = int(state.range(0)), n2 = int(state.range(1));
  for (auto _ : state) {
    FusedModule<mpq_class> f(ModuleSpec::standard(n1, n1 % 2), ModuleSpec::standard(n2, n2 % 2), ctx);
    benchmark::DoNotOptimize(f.monodromy());
  }
}
BENCHMARK(BM_FusedModule)->Args({2, 2})->Args({3, 3})->Args({2, 4})->Unit(benchmark::kMillisecond);

static void BM_FaceYBE(benchmark::State& state) {
  const auto family = FaceFamily(state.range(0));
  const Scalar u = Scalar::var(kU), v = Scalar::var(kV);
  for (auto _ : state) {
    auto X = [&](int i, const Scalar& a) { return face(i, 3, family, a).value; };
    benchmark::DoNotOptimize(X(1, u) * X(2, v) * X(1, v * u.inv()) - X(2, v * u.inv()) * X(1, v) * X(2, u));
  }
  state.SetLabel(family_name(family));
}
BENCHMARK(BM_FaceYBE)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_TransferMatrix(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transfer_matrix(n));
}
BENCHMARK(BM_TransferMatrix)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
