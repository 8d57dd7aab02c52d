#include <benchmark/benchmark.h>

#include <random>

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

static void BM_Verify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tree t = seeded_tree(n, 42);
  const GeneratedProfile g = generate_profile(t);
  for (auto _ : state) {
    auto r = verify_single_crossing(g.profile, t);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Verify)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_Recognize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GeneratedProfile g = generate_profile(seeded_tree(n, 42));
  for (auto _ : state) {
    auto r = recognize(g.profile);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Recognize)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_RecognizeCloned(benchmark::State& state) {
  const int classes = 20;
  const long long copies = state.range(0) / classes;
  const GeneratedProfile g = generate_profile(seeded_tree(classes, 42));
  const Profile p(g.profile.candidates(), g.profile.voters(),
                  std::vector<long long>(classes, copies));
  for (auto _ : state) {
    auto r = recognize(p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RecognizeCloned)->Arg(40)->Arg(100)->Arg(200);

static void BM_GenerateProfile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Tree t = seeded_tree(n, 42);
  for (auto _ : state) {
    auto g = generate_profile(t);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_GenerateProfile)->Arg(16)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
