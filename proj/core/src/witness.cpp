#include "pda/witness.hpp"

#include <string>

namespace pda {

namespace {

Word bk_a(int k) {
    Word w(static_cast<std::size_t>(k), "b");
    w.push_back("a");
    return w;
}

WordSet bk_a_family(int max_k) {
    WordSet words;
    for (int k = 1; k <= max_k; ++k) words.insert(bk_a(k));
    return words;
}

} // namespace

void check_spec(const WitnessSpec& spec) {
    switch (spec.family) {
        case WitnessFamily::StatelessLn:
            if (spec.n < 2)
                fail(ErrorKind::BadSpec,
                     "the stateless family needs n >= 2; unary languages are the unary family");
            return;
        case WitnessFamily::MStateLmn:
            if (spec.m < 1 || spec.n < 2)
                fail(ErrorKind::BadSpec, "the m-state family needs m >= 1 and n >= 2");
            return;
        case WitnessFamily::ExampleTwoState:
            if (spec.m < 1 || spec.n < 2)
                fail(ErrorKind::BadSpec, "the two-state example needs m >= 1 and n >= 2");
            return;
        case WitnessFamily::UnaryL1:
            if (spec.c < 0) fail(ErrorKind::BadSpec, "the unary family needs c >= 0");
            return;
        case WitnessFamily::NonInputKn:
            if (spec.n < 0) fail(ErrorKind::BadSpec, "the non-input family needs n >= 0");
            return;
    }
    fail(ErrorKind::BadSpec, "unknown witness family");
}

WordSet witness_language(const WitnessSpec& spec) {
    check_spec(spec);
    switch (spec.family) {
        case WitnessFamily::StatelessLn: return bk_a_family(spec.n - 1);
        case WitnessFamily::MStateLmn:
        case WitnessFamily::ExampleTwoState: return bk_a_family(spec.m * spec.n - 1);
        case WitnessFamily::UnaryL1: {
            WordSet words;
            words.insert(Word(static_cast<std::size_t>(spec.c), "a"));
            return words;
        }
        case WitnessFamily::NonInputKn:
            return witness_language({WitnessFamily::StatelessLn, 1, spec.n + 2, 0});
    }
    fail(ErrorKind::BadSpec, "unknown witness family");
}

Pda build_stateless(int n) {
    if (n < 2) fail(ErrorKind::BadSpec, "build_stateless needs n >= 2; use build_unary instead");

    PdaDescription d;
    d.states = {std::string(kStatelessStateName)};
    d.input_alphabet = {"a", "b"};
    for (int i = 0; i < n; ++i) d.stack_alphabet.push_back("X" + std::to_string(i));
    d.initial_state = d.states.front();
    d.initial_stack = {d.stack_alphabet.front()};
    d.final_states = d.states;

    auto rule = [&](int top, const std::string& input, std::vector<std::string> push) {
        d.transitions.push_back(RawTransition{d.states.front(), d.stack_alphabet[top], input,
                                              d.states.front(), std::move(push)});
    };
    for (int i = 0; i + 1 < n; ++i) rule(i, "b", {d.stack_alphabet[i + 1]});
    for (int i = 1; i < n; ++i) rule(i, "a", {});
    return validate(d);
}

Pda build_unary(int c) {
    if (c < 0) fail(ErrorKind::BadSpec, "build_unary needs c >= 0");

    PdaDescription d;
    d.states = {std::string(kStatelessStateName)};
    d.input_alphabet = {"a"};
    d.initial_state = d.states.front();
    d.final_states = d.states;
    if (c == 0) {
        // The initial pushdown may not be empty, so {eps} needs one symbol
        // that erases itself without reading input.
        d.stack_alphabet = {"E"};
        d.initial_stack = {"E"};
        d.transitions.push_back(
            RawTransition{d.states.front(), "E", std::nullopt, d.states.front(), {}});
    } else {
        // Pushdown symbol equal to the input symbol.
        d.stack_alphabet = {"a"};
        d.initial_stack.assign(static_cast<std::size_t>(c), "a");
        d.transitions.push_back(
            RawTransition{d.states.front(), "a", std::string("a"), d.states.front(), {}});
    }
    return validate(d);
}

Pda build_mstate(int m, int n) {
    if (m < 1 || n < 2) fail(ErrorKind::BadSpec, "build_mstate needs m >= 1 and n >= 2");

    PdaDescription d;
    for (int j = 0; j < m; ++j) d.states.push_back("q" + std::to_string(j));
    d.input_alphabet = {"a", "b"};
    for (int i = 0; i < n; ++i) d.stack_alphabet.push_back("X" + std::to_string(i));
    d.initial_state = d.states.front();
    d.initial_stack = {d.stack_alphabet.front()};
    d.final_states = {d.states.back()};

    auto rule = [&](int from, int top, const std::string& input, int to,
                    std::vector<std::string> push) {
        d.transitions.push_back(
            RawTransition{d.states[from], d.stack_alphabet[top], input, d.states[to],
                          std::move(push)});
    };
    // b counts up through the pushdown symbols within a state and rolls over
    // into the next state; a pops and jumps to the final state.
    for (int j = 0; j < m; ++j)
        for (int i = 0; i + 1 < n; ++i) rule(j, i, "b", j, {d.stack_alphabet[i + 1]});
    for (int j = 0; j + 1 < m; ++j) rule(j, n - 1, "b", j + 1, {d.stack_alphabet[0]});
    for (int i = 1; i < n; ++i) rule(0, i, "a", m - 1, {});
    for (int j = 1; j < m; ++j)
        for (int i = 0; i < n; ++i) rule(j, i, "a", m - 1, {});
    return validate(d);
}

Pda build_example(int m, int n) {
    if (m < 1 || n < 1 || m * n < 2)
        fail(ErrorKind::BadSpec, "build_example needs m, n >= 1 with m*n >= 2");

    PdaDescription d;
    d.states = {"f", "q"};
    d.input_alphabet = {"a", "b"};
    d.stack_alphabet = {"Z", "B"};
    d.initial_state = "f";
    d.initial_stack = {"Z"};
    d.final_states = {"f"};

    std::vector<std::string> burst(static_cast<std::size_t>(m * n - 1), "B");
    d.transitions.push_back(RawTransition{"f", "Z", std::string("b"), "q", burst});
    d.transitions.push_back(RawTransition{"q", "B", std::string("b"), "q", {}});
    d.transitions.push_back(RawTransition{"q", "B", std::string("a"), "f", {}});
    d.transitions.push_back(RawTransition{"f", "B", std::nullopt, "f", {}});
    return validate(d);
}

Pda build_witness(const WitnessSpec& spec) {
    check_spec(spec);
    switch (spec.family) {
        case WitnessFamily::StatelessLn: return build_stateless(spec.n);
        case WitnessFamily::MStateLmn: return build_mstate(spec.m, spec.n);
        case WitnessFamily::ExampleTwoState: return build_example(spec.m, spec.n);
        case WitnessFamily::UnaryL1: return build_unary(spec.c);
        case WitnessFamily::NonInputKn: return build_stateless(spec.n + 2);
    }
    fail(ErrorKind::BadSpec, "unknown witness family");
}

} // namespace pda
