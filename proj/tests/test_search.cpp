#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "pda/format.hpp"
#include "pda/search.hpp"
#include "pda/simulate.hpp"
#include "pda/witness.hpp"
#include "support/corpus.hpp"

using namespace pda;

namespace {

SearchBounds make_bounds(int gamma, int push, int alpha, int states, int length,
                         std::uint64_t ceiling = 100'000'000) {
    SearchBounds b;
    b.max_pushdown_symbols = gamma;
    b.max_push_length = push;
    b.max_initial_length = alpha;
    b.max_states = states;
    b.length_bound = length;
    b.candidate_ceiling = ceiling;
    return b;
}

std::vector<Pda> collect(const SearchBounds& bounds) {
    std::vector<Pda> out;
    enumerate_machines(bounds, [&](const Pda& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::set<std::string> serialized_set(const std::vector<Pda>& machines) {
    std::set<std::string> out;
    for (const Pda& m : machines) out.insert(serialize(m));
    return out;
}

// Renaming-equivalent copy: symbol X_i takes the name X_{perm[i]} while the
// declaration list stays X0..X(k-1).
Pda permute_symbols(const Pda& m, const std::vector<int>& perm) {
    auto renamed = [&](StackId id) { return "X" + std::to_string(perm[id]); };
    PdaDescription d;
    d.states = m.state_names();
    d.input_alphabet = m.input_alphabet();
    d.stack_alphabet.resize(m.stack_alphabet_size());
    for (std::size_t i = 0; i < d.stack_alphabet.size(); ++i)
        d.stack_alphabet[i] = "X" + std::to_string(i);
    d.initial_state = m.state_name(m.initial_state());
    for (StackId id : m.initial_stack()) d.initial_stack.push_back(renamed(id));
    for (StateId q : m.final_states()) d.final_states.push_back(m.state_name(q));
    for (const auto& [key, targets] : m.transitions())
        for (const auto& t : targets) {
            RawTransition raw;
            raw.state = m.state_name(key.state);
            raw.top = renamed(key.top);
            raw.input = key.input ? std::optional<std::string>(m.input_name(*key.input))
                                  : std::nullopt;
            raw.target_state = m.state_name(t.state);
            for (StackId id : t.push) raw.push.push_back(renamed(id));
            d.transitions.push_back(std::move(raw));
        }
    return validate(d);
}

// Independent brute-force orbit count for the two-symbol, push<=1, one-cell
// initial pushdown space: every raw assignment, restricted to machines whose
// symbols are all reachable from the initial pushdown through push strings,
// quotiented by the symbol swap.
int brute_orbit_count_two_symbols() {
    // choices per key: 0 undefined, 1 push eps, 2 push X0, 3 push X1
    std::set<std::array<int, 5>> orbit_reps; // alpha, then 4 keys (X0a X0b X1a X1b)
    for (int alpha = 0; alpha < 2; ++alpha)
        for (int c0 = 0; c0 < 4; ++c0)
            for (int c1 = 0; c1 < 4; ++c1)
                for (int c2 = 0; c2 < 4; ++c2)
                    for (int c3 = 0; c3 < 4; ++c3) {
                        std::array<int, 5> m{alpha, c0, c1, c2, c3};
                        // reachability closure over {X0, X1}
                        std::array<bool, 2> reach{};
                        reach[alpha] = true;
                        for (int round = 0; round < 2; ++round)
                            for (int sym = 0; sym < 2; ++sym) {
                                if (!reach[sym]) continue;
                                for (int x = 0; x < 2; ++x) {
                                    int c = m[1 + sym * 2 + x];
                                    if (c >= 2) reach[c - 2] = true;
                                }
                            }
                        if (!(reach[0] && reach[1])) continue;
                        // swap X0 <-> X1 everywhere
                        auto swap_choice = [](int c) { return c < 2 ? c : (c == 2 ? 3 : 2); };
                        std::array<int, 5> swapped{1 - alpha, swap_choice(m[3]), swap_choice(m[4]),
                                                   swap_choice(m[1]), swap_choice(m[2])};
                        orbit_reps.insert(std::min(m, swapped));
                    }
    return static_cast<int>(orbit_reps.size());
}

} // namespace

TEST_CASE("raw space sizes follow the counting formulas") {
    CHECK(raw_space_size(make_bounds(1, 1, 1, 1, 4)) == 9);
    CHECK(raw_space_size(make_bounds(1, 2, 2, 1, 4)) == 32);
    // one state, one symbol, push <= 1: 3 choices per key, 2 keys; plus the
    // two-symbol slice: 4 keys with 1 + 1*(1+2) = 4 choices... checked
    // against the stream below instead of a hand formula.
    CHECK(raw_space_size(make_bounds(2, 1, 1, 2, 6)) > 0);
}

TEST_CASE("the canonical stream matches the counted tiny spaces") {
    auto tiny = collect(make_bounds(1, 1, 1, 1, 2));
    CHECK(tiny.size() == 9);

    auto wider = collect(make_bounds(1, 2, 2, 1, 2));
    CHECK(wider.size() == 32); // single-symbol machines are all canonical
}

TEST_CASE("every streamed machine is a canonical stateless realtime acceptor shell") {
    for (const Pda& m : collect(make_bounds(2, 2, 2, 1, 2))) {
        ClassReport r = classify(m);
        CHECK(r.stateless);
        CHECK(r.realtime);
        CHECK(canonical_form(m) == m);
        CHECK(parse(serialize(m)) == m); // streamed machines pass validation
    }
}

TEST_CASE("the stream yields each renaming class exactly once") {
    auto machines = collect(make_bounds(2, 1, 1, 1, 2));
    std::set<std::string> forms;
    for (const Pda& m : machines) forms.insert(serialize(canonical_form(m)));
    CHECK(forms.size() == machines.size()); // no two streamed machines share a form
    // 9 one-symbol machines plus the permutation quotient of the covered
    // two-symbol space, counted by brute force.
    CHECK(static_cast<int>(machines.size()) == 9 + brute_orbit_count_two_symbols());
}

TEST_CASE("canonical forms are invariant under symbol renaming") {
    auto machines = collect(make_bounds(3, 1, 2, 1, 2));
    std::mt19937 rng(41);
    int checked = 0;
    for (std::size_t i = 0; i < machines.size(); i += 7) {
        const Pda& m = machines[i];
        std::vector<int> perm(m.stack_alphabet_size());
        for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = static_cast<int>(j);
        std::shuffle(perm.begin(), perm.end(), rng);
        Pda copy = permute_symbols(m, perm);
        CHECK(canonical_form(copy) == canonical_form(m));
        ++checked;
    }
    CHECK(checked >= 1000);
}

TEST_CASE("enlarging bounds never removes machines from the stream") {
    // grow push and alpha ceilings
    auto small = serialized_set(collect(make_bounds(2, 1, 1, 1, 2)));
    auto medium = serialized_set(collect(make_bounds(2, 1, 2, 1, 2)));
    auto large = serialized_set(collect(make_bounds(2, 2, 2, 1, 2)));
    CHECK(std::includes(medium.begin(), medium.end(), small.begin(), small.end()));
    CHECK(std::includes(large.begin(), large.end(), medium.begin(), medium.end()));
    // grow the alphabet ceiling
    auto gamma1 = serialized_set(collect(make_bounds(1, 1, 1, 1, 2)));
    auto gamma2 = serialized_set(collect(make_bounds(2, 1, 1, 1, 2)));
    auto gamma3 = serialized_set(collect(make_bounds(3, 1, 1, 1, 2)));
    CHECK(std::includes(gamma2.begin(), gamma2.end(), gamma1.begin(), gamma1.end()));
    CHECK(std::includes(gamma3.begin(), gamma3.end(), gamma2.begin(), gamma2.end()));
}

TEST_CASE("the stream stops when the callback declines") {
    int calls = 0;
    enumerate_machines(make_bounds(2, 2, 2, 1, 2), [&](const Pda&) {
        ++calls;
        return false;
    });
    CHECK(calls == 1);
}

TEST_CASE("no one-symbol machine accepts the two-symbol witness language") {
    SearchReport report = certify_lower_bound(2, make_bounds(1, 2, 2, 1, 4));
    CHECK(report.accepting_machines.empty());
    // the pruned traversal still accounts for the whole raw space
    CHECK(report.candidates_examined == raw_space_size(make_bounds(1, 2, 2, 1, 4)));
}

TEST_CASE("the positive control finds the counter machine itself") {
    SearchReport report = certify_lower_bound(2, make_bounds(2, 2, 2, 1, 4));
    CHECK(report.candidates_examined == raw_space_size(make_bounds(2, 2, 2, 1, 4)));
    REQUIRE_FALSE(report.accepting_machines.empty());
    CHECK(std::any_of(report.accepting_machines.begin(), report.accepting_machines.end(),
                      [&](const Pda& m) { return m == build_stateless(2); }));
    // every reported machine reproduces the target exactly
    for (const Pda& m : report.accepting_machines)
        CHECK_FALSE(accepts_exactly(m, report.target_language, 4).has_value());
}

TEST_CASE("no two-state one-symbol machine accepts the (2,2) witness language") {
    SearchReport report = certify_mstate_lower_bound(2, 2, make_bounds(1, 1, 1, 2, 6));
    CHECK(report.accepting_machines.empty());
    CHECK(report.candidates_examined == raw_space_size(make_bounds(1, 1, 1, 2, 6)));
}

TEST_CASE("the (2,2) positive control finds the two-state builder machine") {
    SearchReport report = certify_mstate_lower_bound(2, 2, make_bounds(2, 1, 1, 2, 6));
    REQUIRE_FALSE(report.accepting_machines.empty());
    CHECK(std::any_of(report.accepting_machines.begin(), report.accepting_machines.end(),
                      [&](const Pda& m) { return m == build_mstate(2, 2); }));
}

TEST_CASE("a one-state search through the m-state entry point matches the stateless one") {
    SearchBounds b = make_bounds(2, 2, 3, 1, 5);
    SearchReport stateless = certify_lower_bound(3, b);
    SearchReport mstate = certify_mstate_lower_bound(1, 3, b);
    CHECK(stateless.accepting_machines.size() == mstate.accepting_machines.size());
    CHECK(stateless.candidates_examined == mstate.candidates_examined);
    CHECK(stateless.candidates_after_symmetry == mstate.candidates_after_symmetry);
}

TEST_CASE("minimal pushdown alphabets") {
    CHECK(min_pushdown_alphabet(corpus::words({"aaa"}), make_bounds(2, 2, 3, 1, 5)) == 1);
    CHECK(min_pushdown_alphabet(witness_language({WitnessFamily::StatelessLn, 1, 2, 0}),
                                make_bounds(2, 2, 2, 1, 4)) == 2);
    CHECK(min_pushdown_alphabet(corpus::words({"ab"}), make_bounds(2, 2, 2, 1, 4)) == 2);
    // not prefix-free, hence no stateless acceptor at all
    CHECK_FALSE(min_pushdown_alphabet(corpus::words({"a", "ab"}), make_bounds(2, 2, 2, 1, 4))
                    .has_value());
}

TEST_CASE("three-state hits are reported once per isomorphism class") {
    // One pushdown symbol, three states: the transition skeleton can have an
    // automorphism swapping the two non-initial states, so two final-state
    // sets may describe the same machine. No reported pair may be related by
    // such a swap.
    SearchBounds b = make_bounds(1, 1, 1, 3, 3);
    SearchReport report = search_for_target(corpus::words({"ab"}), b);
    REQUIRE_FALSE(report.accepting_machines.empty());

    auto swap_states = [](const Pda& m, const std::string& x, const std::string& y) {
        auto renamed = [&](const std::string& name) {
            return name == x ? y : (name == y ? x : name);
        };
        PdaDescription d;
        d.states = m.state_names(); // declaration order unchanged
        d.input_alphabet = m.input_alphabet();
        d.stack_alphabet = m.stack_alphabet();
        d.initial_state = renamed(m.state_name(m.initial_state()));
        for (StackId id : m.initial_stack()) d.initial_stack.push_back(m.stack_name(id));
        for (StateId q : m.final_states()) d.final_states.push_back(renamed(m.state_name(q)));
        for (const auto& [key, targets] : m.transitions())
            for (const auto& t : targets) {
                RawTransition raw;
                raw.state = renamed(m.state_name(key.state));
                raw.top = m.stack_name(key.top);
                raw.input = key.input ? std::optional<std::string>(m.input_name(*key.input))
                                      : std::nullopt;
                raw.target_state = renamed(m.state_name(t.state));
                for (StackId id : t.push) raw.push.push_back(m.stack_name(id));
                d.transitions.push_back(std::move(raw));
            }
        return validate(d);
    };

    // A swapped duplicate keeps the transition skeleton fixed and moves only
    // the final-state set, so grouping by everything except the final line
    // isolates the candidate pairs.
    std::map<std::string, std::vector<const Pda*>> by_skeleton;
    int three_state = 0;
    for (const Pda& m : report.accepting_machines) {
        if (m.state_count() != 3) continue;
        ++three_state;
        std::string text = serialize(m);
        auto f = text.find("final:");
        auto nl = text.find('\n', f);
        by_skeleton[text.erase(f, nl - f)].push_back(&m);
    }
    REQUIRE(three_state > 0);
    for (const auto& [skeleton, group] : by_skeleton)
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j)
                CHECK_FALSE(swap_states(*group[j], "q1", "q2") == *group[i]);
}

TEST_CASE("oversized spaces are refused before searching") {
    try {
        search_for_target(corpus::words({"ba"}), make_bounds(3, 3, 3, 1, 6, 1000));
        FAIL("expected SpaceTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SpaceTooLarge);
    }
}

TEST_CASE("bound preconditions are enforced") {
    CHECK_THROWS_AS(certify_lower_bound(3, make_bounds(2, 2, 3, 1, 3)), Error);
    CHECK_THROWS_AS(certify_mstate_lower_bound(2, 2, make_bounds(1, 1, 1, 2, 4)), Error);
    CHECK_THROWS_AS(search_for_target(corpus::words({"aaaaaa"}), make_bounds(1, 1, 1, 1, 3)),
                    Error);
    CHECK_THROWS_AS(search_for_target(corpus::words({"xy"}), make_bounds(1, 1, 1, 1, 3)), Error);
    CHECK_THROWS_AS(raw_space_size(make_bounds(0, 1, 1, 1, 1)), Error);
}

TEST_CASE("the normal form rejects machines the scan cannot cover") {
    PdaDescription d;
    d.states = {"s"};
    d.input_alphabet = {"a", "b"};
    d.stack_alphabet = {"X", "J"}; // J only ever appears as a key top
    d.initial_state = "s";
    d.initial_stack = {"X"};
    d.final_states = {"s"};
    d.transitions.push_back(RawTransition{"s", "X", "a", "s", {}});
    d.transitions.push_back(RawTransition{"s", "J", "a", "s", {}});
    CHECK_THROWS_AS(canonical_form(validate(d)), Error);
    CHECK_THROWS_AS(canonical_form(build_example(2, 2)), Error); // not realtime
}
