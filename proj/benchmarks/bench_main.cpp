/*
 * Copyright 2026 The Hyperforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "hyperforge/axioms.hpp"
#include "hyperforge/congruence.hpp"
#include "hyperforge/factory.hpp"
#include "hyperforge/ideals.hpp"
#include "hyperforge/morphisms.hpp"

using namespace hyperforge;

namespace {

void BM_axiom_conjunction(benchmark::State& state) {
    const Structure s = b_construction(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(check_mn_semihyperring(s).holds);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_axiom_conjunction)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Complexity();

void BM_axiom_conjunction_parallel(benchmark::State& state) {
    const Structure s = b_construction(32, 2);
    SweepOptions opt;
    opt.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_mn_semihyperring(s, opt).holds);
}
BENCHMARK(BM_axiom_conjunction_parallel)->Arg(1)->Arg(2)->Arg(4);

void BM_eval_f_subsets(benchmark::State& state) {
    const Structure s = b_construction(64, 2);
    const std::vector<SubsetMask> args{SubsetMask::from_raw(0x5555555555555555ull),
                                       SubsetMask::from_raw(0xAAAAAAAAAAAAAAAAull)};
    for (auto _ : state) benchmark::DoNotOptimize(eval_f_subsets(s, args).raw());
}
BENCHMARK(BM_eval_f_subsets);

void BM_ideal_enumeration(benchmark::State& state) {
    const Structure s = b_construction(static_cast<int>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_hyperideals(s, IdealKind::two_sided).size());
}
BENCHMARK(BM_ideal_enumeration)->Arg(8)->Arg(12);

void BM_congruence_enumeration(benchmark::State& state) {
    const Structure s = b_construction(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_congruences(s).size());
}
BENCHMARK(BM_congruence_enumeration)->Arg(6)->Arg(8);

void BM_hom_search(benchmark::State& state) {
    const auto s = std::make_shared<const Structure>(
        b_construction(static_cast<int>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_homomorphisms(s, s).size());
}
BENCHMARK(BM_hom_search)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
