#include <benchmark/benchmark.h>

#include <dendrikit/dendrikit.hpp>

using namespace dendrikit;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kG3 = FieldSpec::gf(3);

void BM_RationalArithmetic(benchmark::State& state) {
  const Scalar a = Scalar::fraction(kQ, 355, 113);
  const Scalar b = Scalar::fraction(kQ, -22, 7);
  for (auto _ : state) {
    Scalar c = a * b + a - b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_RationalArithmetic);

void BM_ResidueArithmetic(benchmark::State& state) {
  const Scalar a = Scalar::of(kG3, 2);
  const Scalar b = Scalar::of(kG3, 1);
  for (auto _ : state) {
    Scalar c = a * b + a - b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ResidueArithmetic);

void BM_CheckDendriform(benchmark::State& state) {
  const DendriformAlgebra e = example_e(kQ);
  for (auto _ : state) {
    auto report = check_dendriform(e);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_CheckDendriform);

void BM_ValidateDatum(benchmark::State& state) {
  const ExtendingDatum w =
      flag_to_datum(fixtures::flag_family(kQ, 3, Scalar::one(kQ), Scalar::zero(kQ)));
  for (auto _ : state) {
    auto report = validate_datum(w);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_ValidateDatum);

void BM_UnifiedProduct(benchmark::State& state) {
  const ExtendingDatum w = fixtures::cocycle_example(kQ);
  for (auto _ : state) {
    auto algebra = unified_product_raw(w);
    benchmark::DoNotOptimize(algebra);
  }
}
BENCHMARK(BM_UnifiedProduct);

void BM_EnumerateBimodulesGF3(benchmark::State& state) {
  const DendriformAlgebra d = example_d(kG3);
  for (auto _ : state) {
    auto modules = enumerate_bimodules(d, 1, kG3);
    benchmark::DoNotOptimize(modules);
  }
}
BENCHMARK(BM_EnumerateBimodulesGF3);

void BM_ClassifyFlagsGF2(benchmark::State& state) {
  const FieldSpec g2 = FieldSpec::gf(2);
  const DendriformAlgebra d = example_d(g2);
  for (auto _ : state) {
    auto orbits = classify_flags(d, g2);
    benchmark::DoNotOptimize(orbits);
  }
}
BENCHMARK(BM_ClassifyFlagsGF2);

void BM_EnumerateComplementsGF3(benchmark::State& state) {
  const Extension ext =
      flag_to_extension(fixtures::flag_family(kG3, 3, Scalar::one(kG3), Scalar::one(kG3)));
  for (auto _ : state) {
    auto classes = enumerate_complements(ext, kG3);
    benchmark::DoNotOptimize(classes);
  }
}
BENCHMARK(BM_EnumerateComplementsGF3);

}  // namespace

BENCHMARK_MAIN();
