#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pullback/boundary.hpp"
#include "pullback/cf.hpp"
#include "pullback/sampling.hpp"
#include "pullback/schreier.hpp"
#include "pullback/twister.hpp"
#include "pullback/virtual_endo.hpp"
#include "pullback/wreath.hpp"

using namespace pullback;

namespace {

std::vector<ExtRational> sample_points(std::size_t n) {
  std::mt19937_64 rng(6741);
  std::uniform_int_distribution<long long> coeff(-100000, 100000);
  std::vector<ExtRational> pts;
  while (pts.size() < n) {
    long long p = coeff(rng), q = coeff(rng);
    if (p == 0 && q == 0) continue;
    pts.emplace_back(p, q);
  }
  return pts;
}

std::vector<Word> sample_h_words(std::size_t n, std::size_t max_length) {
  std::mt19937_64 rng(88113);
  std::vector<Word> ws;
  ws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ws.push_back(random_h_word(rng, max_length));
  return ws;
}

void BM_Decompose(benchmark::State& state) {
  auto pts = sample_points(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(pts[i++ % pts.size()]));
  }
}
BENCHMARK(BM_Decompose);

void BM_Sigma(benchmark::State& state) {
  auto pts = sample_points(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma(pts[i++ % pts.size()]));
  }
}
BENCHMARK(BM_Sigma);

void BM_Orbit(benchmark::State& state) {
  auto pts = sample_points(256);
  SigmaFn map = make_sigma();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit(map, pts[i++ % pts.size()]));
  }
}
BENCHMARK(BM_Orbit);

void BM_AttractorScan(benchmark::State& state) {
  SigmaFn map = make_sigma();
  long height = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(attractor_scan(map, height));
  }
  state.SetComplexityN(height);
}
BENCHMARK(BM_AttractorScan)->Arg(20)->Arg(50)->Arg(100);

void BM_PhiTransducer(benchmark::State& state) {
  auto words = sample_h_words(64, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_PhiTransducer)->Arg(64)->Arg(256);

void BM_Rewrite(benchmark::State& state) {
  auto words = sample_h_words(64, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rewrite(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_Rewrite);

void BM_WreathApply(benchmark::State& state) {
  Recursion rec = Recursion::builtin("phi-moduli");
  std::mt19937_64 rng(5150);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i)
    words.push_back(random_reduced_word(rng, Context::ModuliFree2, 32));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rec.apply(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_WreathApply);

void BM_NucleusSearch(benchmark::State& state) {
  Recursion rec = Recursion::builtin("phi-f-b2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(nucleus_search(rec, 200, 50));
  }
}
BENCHMARK(BM_NucleusSearch);

void BM_ClassifyTwist(benchmark::State& state) {
  std::mt19937_64 rng(424243);
  std::vector<Word> words;
  for (int i = 0; i < 32; ++i)
    words.push_back(random_reduced_word(rng, Context::ModuliFree2, 12));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_ClassifyTwist);

}  // namespace

BENCHMARK_MAIN();
