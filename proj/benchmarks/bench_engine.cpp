// Microbenchmarks for the exact pipeline: construction, hull membership, the
// shared-point feasibility solve, the partition stream, and both enumeration
// engines.

#include <benchmark/benchmark.h>

#include "tverberg/construction.hpp"
#include "tverberg/engine.hpp"
#include "tverberg/hull.hpp"
#include "tverberg/partition.hpp"

namespace tv = tverberg;

namespace {

tv::PointSet constructed(int d, int r, std::vector<int> parts) {
  return tv::build_point_set(tv::ConstructionSpec::make(d, r, std::move(parts)));
}

void BM_BuildPointSet(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(constructed(3, 3, {4, 3, 2}));
  }
}
BENCHMARK(BM_BuildPointSet);

void BM_HullMembership(benchmark::State& state) {
  const tv::PointSet points = constructed(3, 3, {4, 3, 2});
  std::vector<tv::Point> hull;
  for (int k = 0; k < points.size(); ++k) hull.push_back(points[k]);
  const tv::Point origin = tv::Point::zero(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tv::hull_membership(origin, hull));
  }
}
BENCHMARK(BM_HullMembership);

void BM_CommonPointSolve(benchmark::State& state) {
  const tv::PointSet points = constructed(2, 3, {3, 2, 2});
  const tv::Partition partition = tv::closed_form_partitions(points).front();
  std::vector<std::vector<tv::Point>> blocks;
  for (int b = 0; b < partition.block_count(); ++b) {
    std::vector<tv::Point> block;
    for (int index : partition.block(b)) block.push_back(points[index]);
    blocks.push_back(std::move(block));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(tv::hulls_common_point(blocks));
  }
}
BENCHMARK(BM_CommonPointSolve);

void BM_PartitionStream(benchmark::State& state) {
  for (auto _ : state) {
    tv::SetPartitionEnumerator stream(9, 3, 14);
    long long count = 0;
    while (stream.next().has_value()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PartitionStream);

void BM_BruteForceLine(benchmark::State& state) {
  const tv::PointSet points = constructed(1, 3, {2, 2, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(tv::brute_force_tverberg_partitions(points, 3));
  }
}
BENCHMARK(BM_BruteForceLine);

void BM_ClosedFormCube(benchmark::State& state) {
  const tv::PointSet points = constructed(3, 3, {3, 3, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(tv::closed_form_partitions(points));
  }
}
BENCHMARK(BM_ClosedFormCube);

}  // namespace

BENCHMARK_MAIN();
