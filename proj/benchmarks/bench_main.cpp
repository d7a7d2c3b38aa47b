#include <benchmark/benchmark.h>

#include <random>

#include "pda/search.hpp"
#include "pda/simulate.hpp"
#include "pda/transform.hpp"
#include "pda/witness.hpp"

namespace {

pda::Pda random_machine(std::mt19937& rng) {
    pda::PdaDescription d;
    int k = 1 + static_cast<int>(rng() % 4);
    d.states = {"s"};
    d.input_alphabet = {"a", "b"};
    for (int i = 0; i < k; ++i) d.stack_alphabet.push_back("X" + std::to_string(i));
    d.initial_state = "s";
    d.initial_stack = {d.stack_alphabet[0]};
    d.final_states = {"s"};
    for (int i = 0; i < k; ++i) {
        bool eps = rng() % 3 == 0;
        std::vector<std::string> push;
        for (std::size_t l = rng() % 4; l > 0; --l) push.push_back(d.stack_alphabet[rng() % k]);
        if (eps) {
            d.transitions.push_back(pda::RawTransition{"s", d.stack_alphabet[i], std::nullopt,
                                                       "s", push});
        } else {
            d.transitions.push_back(pda::RawTransition{"s", d.stack_alphabet[i],
                                                       std::string("a"), "s", push});
            d.transitions.push_back(pda::RawTransition{"s", d.stack_alphabet[i],
                                                       std::string("b"), "s", {}});
        }
    }
    return pda::validate(d);
}

void BM_RunCounterMachine(benchmark::State& state) {
    pda::Pda m = pda::build_stateless(8);
    pda::Word input;
    for (int i = 0; i < 7; ++i) input.emplace_back("b");
    input.emplace_back("a");
    for (auto _ : state) benchmark::DoNotOptimize(pda::run(m, input, 100).verdict);
}
BENCHMARK(BM_RunCounterMachine);

void BM_EnumerateWitness(benchmark::State& state) {
    pda::Pda m = pda::build_mstate(3, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(pda::enumerate_language(m, 18, 100).strings.size());
}
BENCHMARK(BM_EnumerateWitness);

void BM_EpsilonElimination(benchmark::State& state) {
    std::mt19937 rng(5);
    std::vector<pda::Pda> machines;
    for (int i = 0; i < 64; ++i) machines.push_back(random_machine(rng));
    std::size_t i = 0;
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(pda::to_realtime(machines[i % machines.size()]).log
                                         .alphabet_after);
        } catch (const pda::Error&) {
        }
        ++i;
    }
}
BENCHMARK(BM_EpsilonElimination);

void BM_CertifyTwoSymbols(benchmark::State& state) {
    pda::SearchBounds b;
    b.max_pushdown_symbols = 1;
    b.max_push_length = 2;
    b.max_initial_length = 2;
    b.length_bound = 4;
    for (auto _ : state)
        benchmark::DoNotOptimize(pda::certify_lower_bound(2, b).candidates_examined);
}
BENCHMARK(BM_CertifyTwoSymbols);

void BM_CertifyThreeSymbols(benchmark::State& state) {
    pda::SearchBounds b;
    b.max_pushdown_symbols = 2;
    b.max_push_length = 2;
    b.max_initial_length = 3;
    b.length_bound = 5;
    for (auto _ : state)
        benchmark::DoNotOptimize(pda::certify_lower_bound(3, b).candidates_examined);
}
BENCHMARK(BM_CertifyThreeSymbols);

} // namespace

BENCHMARK_MAIN();
