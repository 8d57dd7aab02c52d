#include <benchmark/benchmark.h>

#include <random>

#include "sctool/cc.hpp"
#include "sctool/oracle.hpp"
#include "sctool/sctree.hpp"

using namespace sctool;

namespace {

Tree seeded_tree(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vertex(1, n);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = vertex(rng);
  return tree_from_pruefer(seq, n);
}

}  // namespace

static void BM_CcOptimal(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const Tree t = seeded_tree(m, 42);
  const GeneratedProfile g = generate_profile(t);
  const PositionalModel borda = borda_model(m);
  for (auto _ : state) {
    auto r = cc_optimal(g.profile, t, k, borda, Mode::Utilitarian);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CcOptimal)->Args({10, 3})->Args({20, 5})->Args({40, 5})->Args({40, 10});

static void BM_CcOptimalEgalitarian(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const Tree t = seeded_tree(m, 42);
  const GeneratedProfile g = generate_profile(t);
  const PositionalModel borda = borda_model(m);
  for (auto _ : state) {
    auto r = cc_optimal(g.profile, t, k, borda, Mode::Egalitarian);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CcOptimalEgalitarian)->Args({20, 5})->Args({40, 10});

static void BM_CcCloned(benchmark::State& state) {
  const int classes = 20;
  const long long copies = state.range(0) / classes;
  const GeneratedProfile g = generate_profile(seeded_tree(classes, 42));
  const Profile p(g.profile.candidates(), g.profile.voters(),
                  std::vector<long long>(classes, copies));
  const auto rec = std::get<RecognitionResult>(recognize(p));
  const PositionalModel borda = borda_model(classes);
  for (auto _ : state) {
    auto r = cc_optimal(p, rec.full_tree, 5, borda, Mode::Utilitarian);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CcCloned)->Arg(60)->Arg(100);

static void BM_CcBruteForce(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const GeneratedProfile g = generate_profile(seeded_tree(m, 42));
  const PositionalModel borda = borda_model(m);
  for (auto _ : state) {
    auto r = cc_brute_force(g.profile, 3, borda, Mode::Utilitarian);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CcBruteForce)->Arg(8)->Arg(12)->Arg(16);
