#include <benchmark/benchmark.h>

#include "biamalg/biamalg.hpp"
#include "biamalg/corpus.hpp"
#include "biamalg/dsl.hpp"
#include "biamalg/isocheck.hpp"
#include "biamalg/spectrum.hpp"

using namespace biamalg;

namespace {

const std::vector<CorpusInstance>& corpus() {
    static const auto c = generate_corpus({7, 64, 64});
    return c;
}

const std::vector<BiAmalgamation>& built() {
    static const auto ws = [] {
        std::vector<BiAmalgamation> out;
        for (const auto& i : corpus()) out.push_back(bi_amalgamate(i.f, i.g, i.j, i.jp));
        return out;
    }();
    return ws;
}

const char* const kScript =
    "ring A = Z(12)\n"
    "ideal I in A = gen(6)\n"
    "dup W = dup(A, I)\n"
    "check pullback W\n"
    "check conductor W\n"
    "check quotients W I\n"
    "check spec W\n";

}  // namespace

static void BM_BiAmalgamate(benchmark::State& state) {
    for (auto _ : state)
        for (const auto& i : corpus()) benchmark::DoNotOptimize(bi_amalgamate(i.f, i.g, i.j, i.jp));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}
BENCHMARK(BM_BiAmalgamate)->Unit(benchmark::kMillisecond);

static void BM_Pullback(benchmark::State& state) {
    for (auto _ : state)
        for (const auto& w : built()) benchmark::DoNotOptimize(as_pullback(w));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(built().size()));
}
BENCHMARK(BM_Pullback)->Unit(benchmark::kMillisecond);

static void BM_ConductorSquare(benchmark::State& state) {
    for (auto _ : state)
        for (const auto& w : built()) benchmark::DoNotOptimize(conductor_square(w));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(built().size()));
}
BENCHMARK(BM_ConductorSquare)->Unit(benchmark::kMillisecond);

static void BM_SpecBowtie(benchmark::State& state) {
    for (auto _ : state)
        for (const auto& w : built()) benchmark::DoNotOptimize(spec_bowtie(w));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(built().size()));
}
BENCHMARK(BM_SpecBowtie)->Unit(benchmark::kMillisecond);

static void BM_Isomorphism(benchmark::State& state) {
    // Z/n duplicated along (n/2) against its idealization, n = range(0).
    const auto n = state.range(0);
    const FiniteRing a = make_zmod(n);
    const Ideal i = ideal_generated(a, {a.scale(a.one(), n / 2)});
    const FiniteRing w = duplication(a, i).w;
    const FiniteRing m = idealization(a, i);
    for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(w, m));
}
BENCHMARK(BM_Isomorphism)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_QuotientRing(benchmark::State& state) {
    const FiniteRing a = make_product(make_zmod(8), make_zmod(8)).ring;
    const Ideal i = ideal_generated(a, {a.element({2, 4})});
    for (auto _ : state) benchmark::DoNotOptimize(quotient_ring(a, i));
}
BENCHMARK(BM_QuotientRing);

static void BM_DslRun(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dsl::run(kScript));
}
BENCHMARK(BM_DslRun)->Unit(benchmark::kMillisecond);

static void BM_DslParsePrint(benchmark::State& state) {
    std::string text;
    for (int k = 0; k < 50; ++k) {
        const std::string n = std::to_string(k);
        text += "ring A" + n + " = Z(12)\nideal I" + n + " in A" + n + " = gen(6, <3>)\ndup W" + n + " = dup(A" + n +
                ", I" + n + ")\ncheck quotients W" + n + " I" + n + " as Q" + n + "\nexport Q" + n + "\n";
    }
    for (auto _ : state) benchmark::DoNotOptimize(dsl::print(dsl::parse(text).ast));
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_DslParsePrint);

BENCHMARK_MAIN();
