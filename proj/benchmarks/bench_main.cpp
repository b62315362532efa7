#include <benchmark/benchmark.h>

#include "hls/linalg.hpp"
#include "hls/matrix.hpp"
#include "hls/spaces.hpp"
#include "hls/verification.hpp"
#include "hls/zoo.hpp"

namespace {

// Deterministic dense rational matrix with mixed denominators.
hls::Matrix dense_matrix(std::size_t rows, std::size_t cols) {
    hls::Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            long num = static_cast<long>((i * 7 + j * 3) % 23) - 11;
            long den = static_cast<long>((i + 2 * j) % 5) + 1;
            m.at(i, j) = hls::Rational(num, den);
        }
    }
    return m;
}

void bm_rref_dense(benchmark::State& state) {
    auto m = dense_matrix(static_cast<std::size_t>(state.range(0)),
                          static_cast<std::size_t>(state.range(0)) + 10);
    for (auto _ : state) {
        auto r = hls::rref(m);
        benchmark::DoNotOptimize(r.pivots.data());
    }
}
BENCHMARK(bm_rref_dense)->Arg(10)->Arg(20)->Arg(40);

void bm_nullspace_dense(benchmark::State& state) {
    auto m = dense_matrix(30, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto ns = hls::nullspace_basis(m);
        benchmark::DoNotOptimize(ns.dim());
    }
}
BENCHMARK(bm_nullspace_dense)->Arg(40)->Arg(80);

void bm_biderivation_space_sl2(benchmark::State& state) {
    auto h = hls::zoo_get("sl2");
    for (auto _ : state) {
        auto space = hls::biderivation_space(h, hls::Parity::Even);
        benchmark::DoNotOptimize(space.dim());
    }
}
BENCHMARK(bm_biderivation_space_sl2);

void bm_verify_sl2(benchmark::State& state) {
    auto h = hls::zoo_get("sl2");
    for (auto _ : state) {
        auto rep = hls::run_verification(h);
        benchmark::DoNotOptimize(rep.rows.size());
    }
}
BENCHMARK(bm_verify_sl2);

void bm_verify_twisted(benchmark::State& state) {
    auto h = hls::zoo_get("sl2_twist", {{"lambda", hls::Rational(2)}});
    for (auto _ : state) {
        auto rep = hls::run_verification(h);
        benchmark::DoNotOptimize(rep.rows.size());
    }
}
BENCHMARK(bm_verify_twisted);

}  // namespace

BENCHMARK_MAIN();
