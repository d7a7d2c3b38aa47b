#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pda/simulate.hpp"
#include "pda/transform.hpp"
#include "pda/witness.hpp"
#include "support/corpus.hpp"

using namespace pda;
using corpus::kGenerousBudget;

namespace {

Pda stateless(std::vector<std::string> stack, std::vector<std::string> alpha,
              std::vector<std::tuple<std::string, std::optional<std::string>,
                                     std::vector<std::string>>> rules) {
    PdaDescription d;
    d.states = {"s"};
    d.input_alphabet = {"a", "b"};
    d.stack_alphabet = std::move(stack);
    d.initial_state = "s";
    d.initial_stack = std::move(alpha);
    d.final_states = {"s"};
    for (auto& [top, input, push] : rules)
        d.transitions.push_back(RawTransition{"s", top, input, "s", push});
    return validate(d);
}

bool same_bounded_language(const Pda& before, const Pda& after, std::size_t bound) {
    // Diverging runs of the input machine count as rejections.
    LanguageSample lhs = enumerate_language(before, bound, kGenerousBudget);
    LanguageSample rhs = enumerate_language(after, bound, kGenerousBudget);
    return lhs.strings == rhs.strings && rhs.diverged.empty();
}

} // namespace

TEST_CASE("a realtime machine passes through unchanged") {
    Pda m3 = build_stateless(3);
    RealtimeResult result = to_realtime(m3);
    CHECK(result.machine == m3);
    CHECK(result.log.eliminated.empty());
    CHECK(result.log.removed_dead.empty());
    CHECK(result.log.alphabet_before == 3);
    CHECK(result.log.alphabet_after == 3);
}

TEST_CASE("an epsilon pop above the useful symbol is eliminated") {
    Pda m = stateless({"Z", "E"}, {"Z", "E"},
                      {{"E", std::nullopt, {}}, {"Z", std::string("a"), {}}});
    RealtimeResult result = to_realtime(m);
    CHECK(result.machine.stack_alphabet() == std::vector<std::string>{"Z"});
    CHECK(result.machine.initial_stack().size() == 1);
    CHECK(classify(result.machine).realtime);
    REQUIRE(result.log.eliminated.size() == 1);
    CHECK(result.log.eliminated[0].first == "E");
    CHECK(result.log.eliminated[0].second.empty());
    CHECK(same_bounded_language(m, result.machine, 6));
    CHECK(enumerate_language(result.machine, 6, 100).strings == corpus::words({"a"}));
}

TEST_CASE("an epsilon rewrite into another symbol is substituted") {
    Pda m = stateless({"A", "B"}, {"A"},
                      {{"A", std::nullopt, {"B"}}, {"B", std::string("a"), {}}});
    RealtimeResult result = to_realtime(m);
    CHECK(result.machine.stack_alphabet() == std::vector<std::string>{"B"});
    CHECK(result.machine ==
          stateless({"B"}, {"B"}, {{"B", std::string("a"), {}}}));
    CHECK(same_bounded_language(m, result.machine, 6));
}

TEST_CASE("a self-reinstating symbol yields the empty-language machine") {
    Pda m = stateless({"X"}, {"X"}, {{"X", std::nullopt, {"X"}}});
    RealtimeResult result = to_realtime(m);
    CHECK(result.log.removed_dead.count("X") == 1);
    CHECK(result.machine.stack_alphabet().size() == 1);
    CHECK(result.machine.transitions().empty());
    CHECK(enumerate_language(result.machine, 6, 100).strings.empty());
    // The original accepts nothing either; every word just diverges.
    LanguageSample original = enumerate_language(m, 6, 100);
    CHECK(original.strings.empty());
    CHECK_FALSE(original.diverged.empty());
}

TEST_CASE("a self-reinstating symbol reachable only through dead rules is dropped") {
    Pda m = stateless({"X", "Y"}, {"X"},
                      {{"X", std::string("a"), {"Y"}},
                       {"X", std::string("b"), {}},
                       {"Y", std::nullopt, {"Y", "Y"}}});
    RealtimeResult result = to_realtime(m);
    CHECK(classify(result.machine).realtime);
    CHECK(result.log.removed_dead.count("Y") == 1);
    CHECK(result.machine.stack_alphabet() == std::vector<std::string>{"X"});
    // 'a' used to park the run on Y forever; now it is plainly stuck.
    CHECK(same_bounded_language(m, result.machine, 6));
    CHECK(enumerate_language(result.machine, 6, 100).strings == corpus::words({"b"}));
}

TEST_CASE("the empty-word machine is rejected with a dedicated error") {
    try {
        to_realtime(build_unary(0));
        FAIL("expected EpsilonLanguage");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EpsilonLanguage);
    }

    // Two-step erasure of the whole initial pushdown is detected too.
    Pda m = stateless({"A", "B"}, {"A", "B"},
                      {{"A", std::nullopt, {}}, {"B", std::nullopt, {}}});
    CHECK_THROWS_AS(to_realtime(m), Error);
}

TEST_CASE("preconditions are enforced") {
    try {
        to_realtime(build_mstate(2, 2));
        FAIL("expected NotStateless");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotStateless);
    }

    PdaDescription d;
    d.states = {"s"};
    d.input_alphabet = {"a", "b"};
    d.stack_alphabet = {"X"};
    d.initial_state = "s";
    d.initial_stack = {"X"};
    d.final_states = {"s"};
    d.transitions.push_back(RawTransition{"s", "X", std::nullopt, "s", {}});
    d.transitions.push_back(RawTransition{"s", "X", "a", "s", {}});
    try {
        to_realtime(validate(d));
        FAIL("expected NotDeterministic");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotDeterministic);
    }
}

TEST_CASE("unreachable symbols are removed without changing the language") {
    Pda m = stateless({"X", "J"}, {"X"},
                      {{"X", std::string("a"), {}}, {"J", std::string("b"), {"J"}}});
    RealtimeResult result = to_realtime(m);
    CHECK(result.machine.stack_alphabet() == std::vector<std::string>{"X"});
    CHECK(result.log.removed_dead.count("J") == 1);
    CHECK(same_bounded_language(m, result.machine, 5));
}

TEST_CASE("elimination preserves the language of random machines") {
    std::mt19937 rng(23);
    int transformed = 0, epsilon_language = 0;
    for (int i = 0; i < 150; ++i) {
        Pda m = corpus::random_stateless_dpda(rng);
        try {
            RealtimeResult result = to_realtime(m);
            ++transformed;
            ClassReport before = classify(m);
            ClassReport after = classify(result.machine);
            CHECK(after.realtime);
            CHECK(after.deterministic);
            CHECK(after.pushdown_alphabet_size <= before.pushdown_alphabet_size);
            CHECK(result.log.alphabet_after <= result.log.alphabet_before);
            CHECK(same_bounded_language(m, result.machine, 8));
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::EpsilonLanguage);
            ++epsilon_language;
            LanguageSample sample = enumerate_language(m, 4, kGenerousBudget);
            CHECK(sample.strings == corpus::words({""}));
        }
    }
    CHECK(transformed > 0);
    (void)epsilon_language; // rare but legitimate
}
