// Microbenchmarks for the hot paths: truncated products, derivation
// application, commutators, cohomology ranks, and the two flagship pipelines.

#include <benchmark/benchmark.h>

#include <vector>

#include "gradedq/basis.hpp"
#include "gradedq/derivation.hpp"
#include "gradedq/koszul_tate.hpp"
#include "gradedq/normal_form.hpp"
#include "gradedq/qmanifold.hpp"

using namespace gradedq;

namespace {

Context bench_chart(int jet, int filt) {
  return Context::make({VarDecl{"x", 0}, VarDecl{"y", 0}, VarDecl{"eta", -1},
                        VarDecl{"mu", -2}, VarDecl{"theta", 1}},
                       jet, filt);
}

// Dense polynomial of one total degree: every basis monomial with a small
// deterministic coefficient.
GradedPolynomial dense_poly(const Context& ctx, int degree) {
  GradedPolynomial p = GradedPolynomial::zero(ctx);
  int k = 0;
  for (const Monomial& m : monomial_basis(ctx, degree))
    p += GradedPolynomial::monomial(ctx, m, Rational(1 + (k++ % 3)));
  return p;
}

void bm_poly_multiply(benchmark::State& state) {
  Context ctx = bench_chart(static_cast<int>(state.range(0)), 4);
  GradedPolynomial a = dense_poly(ctx, 0), b = dense_poly(ctx, 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_poly_multiply)->Arg(3)->Arg(5)->Arg(7);

void bm_derivation_apply(benchmark::State& state) {
  Context ctx = bench_chart(static_cast<int>(state.range(0)), 4);
  Derivation q = Derivation::zero(ctx, 1);
  q.set_value(2, dense_poly(ctx, 0));
  q.set_value(3, dense_poly(ctx, -1));
  GradedPolynomial p = dense_poly(ctx, 0);
  for (auto _ : state) benchmark::DoNotOptimize(q.apply(p));
}
BENCHMARK(bm_derivation_apply)->Arg(3)->Arg(5);

void bm_commutator(benchmark::State& state) {
  Context ctx = bench_chart(static_cast<int>(state.range(0)), 4);
  Derivation q = Derivation::zero(ctx, 1);
  q.set_value(2, dense_poly(ctx, 0));
  Derivation e = Derivation::zero(ctx, 0);
  e.set_value(0, dense_poly(ctx, 0));
  e.set_value(2, dense_poly(ctx, -1));
  for (auto _ : state) benchmark::DoNotOptimize(commutator(q, e));
}
BENCHMARK(bm_commutator)->Arg(3)->Arg(5);

void bm_advf_cohomology(benchmark::State& state) {
  Context ctx = Context::make({VarDecl{"x", 0}, VarDecl{"y", 0}, VarDecl{"xi", -1}},
                              static_cast<int>(state.range(0)), 2);
  Derivation delta = Derivation::zero(ctx, 1);
  delta.set_value(2, GradedPolynomial::variable(ctx, 0) * GradedPolynomial::variable(ctx, 1));
  for (auto _ : state) benchmark::DoNotOptimize(advf_cohomology(delta, 1));
}
BENCHMARK(bm_advf_cohomology)->Arg(4)->Arg(6);

void bm_trivialize(benchmark::State& state) {
  Context ctx = Context::make(
      {VarDecl{"x", 0}, VarDecl{"y", 0}, VarDecl{"eta", -1}, VarDecl{"theta", 1}}, 3, 2);
  GradedPolynomial x = GradedPolynomial::variable(ctx, 0);
  GradedPolynomial y = GradedPolynomial::variable(ctx, 1);
  Derivation q = Derivation::zero(ctx, 1);
  q.set_value(2, GradedPolynomial::constant(ctx, 1) + x + x * y);
  Derivation gauge = Derivation::zero(ctx, 0);
  gauge.set_value(0, Rational(-1) * GradedPolynomial::variable(ctx, 2) *
                         GradedPolynomial::variable(ctx, 3));
  Derivation gauged = push_forward(gauge, q);
  for (auto _ : state) benchmark::DoNotOptimize(trivialize(gauged));
}
BENCHMARK(bm_trivialize);

void bm_kt_build(benchmark::State& state) {
  Context base = Context::make({VarDecl{"x", 0}, VarDecl{"y", 0}},
                               static_cast<int>(state.range(0)), 4);
  GradedPolynomial x = GradedPolynomial::variable(base, 0);
  GradedPolynomial y = GradedPolynomial::variable(base, 1);
  std::vector<GradedPolynomial> ideal = {x * x, x * y};
  for (auto _ : state) benchmark::DoNotOptimize(kt_build(base, ideal, 2));
}
BENCHMARK(bm_kt_build)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
