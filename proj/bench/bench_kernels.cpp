// Copyright 2026 The grassembed Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "grassembed/embeddings.hpp"
#include "grassembed/parallel.hpp"

using namespace grassembed;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Elem>(rng() % f.order());
  }
  return m;
}

SemilinearMap embedding(const Field& f, std::size_t n, std::size_t n2, std::size_t m) {
  for (std::uint64_t seed = 1;; ++seed) {
    SemilinearMap l = SemilinearMap::linear(random_matrix(f, n, n2, seed));
    if (is_m_embedding_serial(l, m)) return l;
  }
}

void BM_DistanceMatrix(benchmark::State& state) {
  const GrassmannGraph g(Field::of_order(2), 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(g));
}

void BM_DistanceMatrixSerial(benchmark::State& state) {
  const GrassmannGraph g(Field::of_order(2), 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix_serial(g));
}

GrassmannMap sample_map() {
  const Field f = Field::of_order(2);
  return induced_map(embedding(f, 6, 7, 6), 3);
}

void BM_Verify(benchmark::State& state) {
  const GrassmannMap m = sample_map();
  for (auto _ : state) benchmark::DoNotOptimize(verify(m));
}

void BM_VerifySerial(benchmark::State& state) {
  const GrassmannMap m = sample_map();
  for (auto _ : state) benchmark::DoNotOptimize(verify_serial(m));
}

void BM_MEmbeddingFailure(benchmark::State& state) {
  const SemilinearMap l = embedding(Field::of_order(2), 7, 8, 4);
  for (auto _ : state) benchmark::DoNotOptimize(m_embedding_failure(l, 4));
}

void BM_MEmbeddingFailureSerial(benchmark::State& state) {
  const SemilinearMap l = embedding(Field::of_order(2), 7, 8, 4);
  for (auto _ : state) benchmark::DoNotOptimize(m_embedding_failure_serial(l, 4));
}

void BM_RrefPacked(benchmark::State& state) {
  const Matrix m = random_matrix(Field::of_order(2), 64, 64, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void BM_RrefGeneric(benchmark::State& state) {
  const Matrix m = random_matrix(Field::of_order(2), 64, 64, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref_generic(m));
}

}  // namespace

BENCHMARK(BM_DistanceMatrix)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceMatrixSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MEmbeddingFailure)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MEmbeddingFailureSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefPacked)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RrefGeneric)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
