// Copyright 2026 The extremal-states Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "extremal/certifier.hpp"
#include "extremal/decomp.hpp"
#include "extremal/eigh.hpp"
#include "extremal/qubit.hpp"
#include "extremal/random.hpp"
#include "extremal/sampler.hpp"

using namespace extremal;

namespace {

HermitianMatrix random_hermitian(std::size_t order, Rng& rng) {
    return HermitianMatrix::symmetrized(complex_gaussian(order, order, rng));
}

HermitianMatrix random_density(std::size_t order, std::size_t rank, Rng& rng) {
    const Matrix g = complex_gaussian(order, rank, rng);
    Matrix m = g * g.adjoint();
    m *= Complex(1.0 / m.trace().real(), 0.0);
    return HermitianMatrix::symmetrized(m);
}

MarginalPair maximally_mixed_marginals(const DimensionPair& dims) {
    HermitianMatrix r1 = HermitianMatrix::identity(dims.d1);
    r1 *= 1.0 / static_cast<double>(dims.d1);
    HermitianMatrix r2 = HermitianMatrix::identity(dims.d2);
    r2 *= 1.0 / static_cast<double>(dims.d2);
    return MarginalPair(std::move(r1), std::move(r2));
}

void BM_Eigh(benchmark::State& state) {
    Rng rng(1u);
    const HermitianMatrix h = random_hermitian(state.range(0), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigh(h));
    }
}
BENCHMARK(BM_Eigh)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_BlockDecompose(benchmark::State& state) {
    Rng rng(2u);
    const std::size_t order = state.range(0);
    const HermitianMatrix rho = random_density(order, (order + 1) / 2, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(block_decompose(rho, 1e-9));
    }
}
BENCHMARK(BM_BlockDecompose)->Arg(4)->Arg(9)->Arg(16);

void BM_CheckExtremalQubitRank2(benchmark::State& state) {
    Rng rng(3u);
    const CoupledState member = random_rank2_member(rng);
    const MarginalPair mm = maximally_mixed_marginals(DimensionPair(2, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_extremal(member, mm));
    }
}
BENCHMARK(BM_CheckExtremalQubitRank2);

void BM_CheckExtremalQutritFullRank(benchmark::State& state) {
    Rng rng(4u);
    const DimensionPair dims(3, 3);
    const MarginalPair mm = maximally_mixed_marginals(dims);
    const CoupledState member = sample_interior(mm, rng, 0.5);
    CertifierOptions opts;
    opts.full_rank_shortcut = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_extremal(member, mm, opts));
    }
}
BENCHMARK(BM_CheckExtremalQutritFullRank);

void BM_OracleExtremal(benchmark::State& state) {
    Rng rng(5u);
    const DimensionPair dims(3, 3);
    const HermitianMatrix rho = random_density(9, 4, rng);
    const Matrix m = rho.matrix();
    const MarginalPair marginals(HermitianMatrix::symmetrized(partial_trace_over_2(m, dims)),
                                 HermitianMatrix::symmetrized(partial_trace_over_1(m, dims)));
    const CoupledState member(dims, m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_extremal(member, marginals));
    }
}
BENCHMARK(BM_OracleExtremal);

void BM_Extremize(benchmark::State& state) {
    const DimensionPair dims(3, 3);
    const MarginalPair mm = maximally_mixed_marginals(dims);
    Matrix rho = Matrix::identity(9);
    rho *= Complex(1.0 / 9.0, 0.0);
    const CoupledState start(dims, std::move(rho));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Rng rng(seed++);
        benchmark::DoNotOptimize(extremize(start, mm, rng));
    }
}
BENCHMARK(BM_Extremize);

}  // namespace

BENCHMARK_MAIN();
