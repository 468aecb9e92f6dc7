#include <benchmark/benchmark.h>

#include "singlet6/pipeline.hpp"
#include "singlet6/random.hpp"
#include "singlet6/witness.hpp"

using namespace singlet6;

static void BM_Pipeline(benchmark::State& state) {
  const PipelineConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(config).success_probability);
  }
}
BENCHMARK(BM_Pipeline);

static void BM_PauliDecompose(benchmark::State& state) {
  const QubitState psi = named_state(StateName::Psi6Minus);
  const Matrix projector = DensityOperator::pure(psi).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pauli_decompose(projector).terms().size());
  }
}
BENCHMARK(BM_PauliDecompose);

static void BM_JacobiEigenvalues(benchmark::State& state) {
  Rng rng(1);
  const Matrix a = random_hermitian(64, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigenvalues(a).back());
  }
}
BENCHMARK(BM_JacobiEigenvalues);

static void BM_ReduceWitness(benchmark::State& state) {
  const WitnessOperator wmax =
      witness_max_overlap(named_state(StateName::Psi6Minus), 2.0 / 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_witness(wmax).detection_scale);
  }
}
BENCHMARK(BM_ReduceWitness);

static void BM_SampleCounts(benchmark::State& state) {
  const QubitState psi = named_state(StateName::Psi6Minus);
  const MeasurementSetting setting = MeasurementSetting::uniform(QubitBasis::z(), 6);
  const OutcomeDistribution dist = outcome_distribution(psi, setting);
  Rng rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_counts(dist, state.range(0), setting, rng).total);
  }
}
BENCHMARK(BM_SampleCounts)->Arg(113)->Arg(100000);

static void BM_BootstrapWitness(benchmark::State& state) {
  const WitnessOperator wred =
      reduce_witness(witness_max_overlap(named_state(StateName::Psi6Minus), 2.0 / 3.0));
  const DensityOperator rho = add_white_noise(named_state(StateName::Psi6Minus), 0.126);
  const QubitBasis bases[3] = {QubitBasis::x(), QubitBasis::y(), QubitBasis::z()};
  CountsTable tables[3] = {
      sample_counts(outcome_distribution(rho, MeasurementSetting::uniform(bases[0], 6)), 113,
                    MeasurementSetting::uniform(bases[0], 6), std::uint64_t{1}),
      sample_counts(outcome_distribution(rho, MeasurementSetting::uniform(bases[1], 6)), 113,
                    MeasurementSetting::uniform(bases[1], 6), std::uint64_t{2}),
      sample_counts(outcome_distribution(rho, MeasurementSetting::uniform(bases[2], 6)), 113,
                    MeasurementSetting::uniform(bases[2], 6), std::uint64_t{3})};
  for (auto _ : state) {
    const WitnessReport report = witness_expectation_from_counts(
        wred, tables[0], tables[1], tables[2],
        {.resamples = static_cast<int>(state.range(0)), .seed = 4});
    benchmark::DoNotOptimize(report.std_error);
  }
}
BENCHMARK(BM_BootstrapWitness)->Arg(200)->Arg(2000);

BENCHMARK_MAIN();
