// Serial references against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "qbax/catalog.hpp"
#include "qbax/cyclicrep.hpp"
#include "qbax/qdilog.hpp"

using namespace qbax;

namespace {

NCPoly big_polynomial() {
  auto pres = build_presentation(AlgebraId::GLq2Ext);
  const auto& gens = pres->generators();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> g(0, static_cast<int>(gens.size()) - 1), site(0, 2), k(-2, 2);
  NCPoly p(pres->tag());
  for (int t = 0; t < 400; ++t) {
    SiteWord w;
    for (int i = 0; i < 7; ++i) w.push_back({static_cast<std::uint16_t>(site(rng)), static_cast<GenId>(g(rng))});
    p.add_term(w, Coefficient::q_pow(k(rng)));
  }
  return p;
}

void BM_NormalFormSerial(benchmark::State& st) {
  auto pres = build_presentation(AlgebraId::GLq2Ext);
  NCPoly p = big_polynomial();
  for (auto _ : st) benchmark::DoNotOptimize(normal_form_serial(p, *pres));
}

void BM_NormalFormParallel(benchmark::State& st) {
  auto pres = build_presentation(AlgebraId::GLq2Ext);
  NCPoly p = big_polynomial();
  for (auto _ : st) benchmark::DoNotOptimize(normal_form_parallel(p, *pres));
}

void BM_QdilogSerial(benchmark::State& st) {
  DilogParams p;
  p.omega = 0.7;
  for (auto _ : st) benchmark::DoNotOptimize(log_s_omega_serial(cplx(0.4, 0.1), p));
}

void BM_QdilogParallel(benchmark::State& st) {
  DilogParams p;
  p.omega = 0.7;
  for (auto _ : st) benchmark::DoNotOptimize(log_s_omega(cplx(0.4, 0.1), p));
}

void rll_sweep_bench(benchmark::State& st, bool parallel) {
  MatrixRep rep = qosc_rep(static_cast<int>(st.range(0)), 1);
  auto pts = unit_circle_points(7, 20);
  for (auto _ : st) benchmark::DoNotOptimize(rll_sweep(RKind::R, LKind::LqDST, rep, pts, parallel));
}

void BM_RllSweepSerial(benchmark::State& st) { rll_sweep_bench(st, false); }
void BM_RllSweepParallel(benchmark::State& st) { rll_sweep_bench(st, true); }

}  // namespace

BENCHMARK(BM_NormalFormSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalFormParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QdilogSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_QdilogParallel)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RllSweepSerial)->Arg(7)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RllSweepParallel)->Arg(7)->Arg(15)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
