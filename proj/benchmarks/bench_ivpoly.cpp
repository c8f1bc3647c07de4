#include <benchmark/benchmark.h>

#include <random>

#include "ivpoly/ivpoly.hpp"

namespace {

using namespace ivpoly;

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
  return a;
}

void BM_CharPoly(benchmark::State& state) {
  const IntMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_CharPoly)->DenseRange(2, 12, 2);

template <Oracle kOracle>
void BM_Membership(benchmark::State& state) {
  const RationalPoly f = generate_family(static_cast<long>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_membership(f, 2, kOracle));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK_TEMPLATE(BM_Membership, Oracle::kDivisibility)->Arg(2)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK_TEMPLATE(BM_Membership, Oracle::kCompanion)->Arg(2)->Arg(3)->Arg(5)->Arg(7);
BENCHMARK_TEMPLATE(BM_Membership, Oracle::kIrreducibleCompanion)->Arg(2)->Arg(3)->Arg(5);

void BM_MembershipJobs(benchmark::State& state) {
  const RationalPoly f = generate_family(7, 2);
  MembershipOptions opts;
  opts.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(member_via_divisibility(f, 2, opts));
}
BENCHMARK(BM_MembershipJobs)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_IrreducibleLift(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IntPoly h = IntPoly::monomial(1, static_cast<unsigned>(n)) + IntPoly::x();
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_lift(h, 30));
}
BENCHMARK(BM_IrreducibleLift)->DenseRange(2, 6);

void BM_PadicImage(benchmark::State& state) {
  const RationalPoly f = generate_family(2, 3);
  const auto m = static_cast<unsigned long>(state.range(0));
  const PadicMatrix c(2, cancellation_modulus(f.denominator(), 2, m), random_matrix(3, 11));
  for (auto _ : state) benchmark::DoNotOptimize(padic_image(f, c, m));
}
BENCHMARK(BM_PadicImage)->Arg(4)->Arg(16)->Arg(64);

void BM_MatrixMembership(benchmark::State& state) {
  MatOfPoly m(2);
  m(0, 0) = generate_family(2, 2);
  m(0, 1) = generate_family(3, 2);
  m(1, 0) = RationalPoly(IntPoly{1, 2, 3});
  m(1, 1) = generate_family(2, 2) * generate_family(3, 2);
  const MatCoeffPoly f = phi_inv(m);
  for (auto _ : state) benchmark::DoNotOptimize(member_matrix_poly(f));
}
BENCHMARK(BM_MatrixMembership);

}  // namespace

BENCHMARK_MAIN();
