#include <benchmark/benchmark.h>

#include "golayks/bases.hpp"
#include "golayks/codes.hpp"
#include "golayks/kscheck.hpp"
#include "golayks/rays.hpp"

using namespace golayks;

static void BM_BuildBinaryRaySystem(benchmark::State& state) {
    const GeneratorMatrix G = golay_binary_generator();
    for (auto _ : state) {
        RaySystem rs = build_ray_system(G);
        benchmark::DoNotOptimize(rs.orthogonal_pair_count());
    }
}
BENCHMARK(BM_BuildBinaryRaySystem)->Unit(benchmark::kMillisecond);

static void BM_Weight9Enumeration(benchmark::State& state) {
    const RaySystem w9 =
        filter_rays_by_weight(build_ray_system(golay_ternary_generator()), 9);
    for (auto _ : state) {
        BasisSystem bs = enumerate_all_bases(w9, 12);
        benchmark::DoNotOptimize(bs.bases.size());
    }
}
BENCHMARK(BM_Weight9Enumeration)->Unit(benchmark::kMillisecond);

static void BM_TranslatedSystem(benchmark::State& state) {
    const RaySystem rs = build_ray_system(golay_binary_generator());
    const SeedResult seed = find_seed_basis(rs);
    for (auto _ : state) {
        BasisSystem bs = generate_translated_system(*seed.basis, rs);
        benchmark::DoNotOptimize(bs.bases.size());
    }
}
BENCHMARK(BM_TranslatedSystem)->Unit(benchmark::kMillisecond);

static void BM_DiophantineTernaryInstance(benchmark::State& state) {
    const DiophantineInstance inst{{27, 9496, 35696}, {220, 132, 12}, 140647};
    for (auto _ : state) {
        DiophantineResult r = diophantine_feasible(inst);
        benchmark::DoNotOptimize(r.feasible);
    }
}
BENCHMARK(BM_DiophantineTernaryInstance);

static void BM_ExactCoverWeight9(benchmark::State& state) {
    const RaySystem w9 =
        filter_rays_by_weight(build_ray_system(golay_ternary_generator()), 9);
    const BasisSystem bs = enumerate_all_bases(w9, 12);
    for (auto _ : state) {
        ExactCoverResult r = exact_cover_search(bs);
        benchmark::DoNotOptimize(r.verdict);
    }
}
BENCHMARK(BM_ExactCoverWeight9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
