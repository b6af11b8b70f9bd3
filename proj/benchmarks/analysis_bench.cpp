// Copyright 2026 The frontal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "frontal/expr.hpp"
#include "frontal/frontal_analysis.hpp"
#include "frontal/normal_form.hpp"

namespace frontal {
namespace {

Surface swallowtail() {
  return surface_from_def(
      std::get<SurfaceDef>(parse_file("x = u\ny = 4*v^3 + 2*u*v\nz = 3*v^4 + u*v^2")));
}

Generator reference_pair() {
  return generator_from_def(std::get<GeneratorDef>(parse_file("g = v^3/6\nh = u^2/2 + v^4/24")));
}

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_file("x = u\ny = 4*v^3 + 2*u*v\nz = 3*v^4 + u*v^2"));
  }
}
BENCHMARK(BM_Parse);

void BM_ClassifySwallowtail(benchmark::State& state) {
  const Surface s = swallowtail();
  for (auto _ : state) benchmark::DoNotOptimize(classify_point(s, {0, 0}));
}
BENCHMARK(BM_ClassifySwallowtail)->Unit(benchmark::kMicrosecond);

void BM_TraceSingularSet(benchmark::State& state) {
  const Surface s = swallowtail();
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_singular_set(s, {0, 0}, {-0.5, 0.5, -0.3, 0.3}, 0.01));
  }
}
BENCHMARK(BM_TraceSingularSet)->Unit(benchmark::kMillisecond);

void BM_BuildNormalForm(benchmark::State& state) {
  const Generator g = reference_pair();
  for (auto _ : state) benchmark::DoNotOptimize(build_kth_kind(g).point({0.1, 0.1}));
}
BENCHMARK(BM_BuildNormalForm)->Unit(benchmark::kMicrosecond);

void BM_InvariantsGeneral(benchmark::State& state) {
  const Surface s = build_kth_kind(reference_pair());
  for (auto _ : state) benchmark::DoNotOptimize(invariants_general(s));
}
BENCHMARK(BM_InvariantsGeneral)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace frontal
