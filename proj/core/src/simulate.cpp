#include "pda/simulate.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>

namespace pda {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Accepted: return "Accepted";
        case Verdict::Rejected: return "Rejected";
        case Verdict::Diverged: return "Diverged";
    }
    return "?";
}

std::size_t default_epsilon_budget(const Pda& m) {
    return 10 * m.stack_alphabet_size() * std::max<std::size_t>(1, m.max_push_length());
}

std::vector<Configuration> step(const Pda& m, const Configuration& c) {
    std::vector<Configuration> out;
    if (c.stack.empty()) return out; // no top symbol, no move
    StackId top = c.stack.back();

    auto expand = [&](const TransitionTarget& target, bool consume) {
        Configuration next;
        next.state = target.state;
        next.stack.assign(c.stack.begin(), c.stack.end() - 1);
        next.stack.insert(next.stack.end(), target.push.begin(), target.push.end());
        next.remaining.assign(c.remaining.begin() + (consume ? 1 : 0), c.remaining.end());
        out.push_back(std::move(next));
    };

    if (const auto* eps = m.targets(c.state, top, std::nullopt))
        for (const auto& target : *eps) expand(target, false);
    if (!c.remaining.empty())
        if (const auto* in = m.targets(c.state, top, c.remaining.front()))
            for (const auto& target : *in) expand(target, true);
    return out;
}

RunOutcome run(const Pda& m, const std::vector<InputId>& input, std::size_t epsilon_budget) {
    if (epsilon_budget < 1) fail(ErrorKind::BadBounds, "epsilon budget must be at least 1");
    if (!classify(m).deterministic)
        fail(ErrorKind::NotDeterministic,
             "run() requires a deterministic machine; use enumerate_language instead");

    RunOutcome outcome;
    Configuration c{m.initial_state(), m.initial_stack(), input};
    outcome.trace.push_back(c);
    std::size_t consecutive_eps = 0;

    while (true) {
        if (c.stack.empty()) {
            outcome.verdict = (c.remaining.empty() && m.is_final(c.state)) ? Verdict::Accepted
                                                                           : Verdict::Rejected;
            break;
        }
        auto successors = step(m, c);
        if (successors.size() > 1)
            throw std::logic_error("deterministic machine produced two moves from one configuration");
        if (successors.empty()) {
            outcome.verdict = Verdict::Rejected; // stuck with a nonempty pushdown
            break;
        }
        bool is_eps = successors.front().remaining.size() == c.remaining.size();
        if (is_eps) {
            if (consecutive_eps == epsilon_budget) {
                outcome.verdict = Verdict::Diverged;
                break;
            }
            ++consecutive_eps;
            ++outcome.epsilon_steps_used;
        } else {
            consecutive_eps = 0;
        }
        c = std::move(successors.front());
        outcome.trace.push_back(c);
        ++outcome.steps_used;
    }
    return outcome;
}

RunOutcome run(const Pda& m, const Word& input, std::size_t epsilon_budget) {
    auto ids = m.input_ids(input);
    if (!ids)
        fail(ErrorKind::UnknownSymbol, "input word contains symbols outside the input alphabet");
    return run(m, *ids, epsilon_budget);
}

namespace {

// Fast deterministic run without trace bookkeeping. Assumes the machine has
// already been classified deterministic.
Verdict run_quick(const Pda& m, const std::vector<InputId>& input, std::size_t budget) {
    StateId q = m.initial_state();
    std::vector<StackId> st = m.initial_stack();
    std::size_t pos = 0;
    std::size_t consecutive_eps = 0;

    while (true) {
        if (st.empty())
            return (pos == input.size() && m.is_final(q)) ? Verdict::Accepted : Verdict::Rejected;
        StackId top = st.back();
        if (const auto* eps = m.targets(q, top, std::nullopt)) {
            if (consecutive_eps == budget) return Verdict::Diverged;
            ++consecutive_eps;
            const auto& t = eps->front();
            st.pop_back();
            st.insert(st.end(), t.push.begin(), t.push.end());
            q = t.state;
            continue;
        }
        if (pos < input.size()) {
            if (const auto* in = m.targets(q, top, input[pos])) {
                const auto& t = in->front();
                st.pop_back();
                st.insert(st.end(), t.push.begin(), t.push.end());
                q = t.state;
                ++pos;
                consecutive_eps = 0;
                continue;
            }
        }
        return Verdict::Rejected;
    }
}

// Prefix-sharing enumeration for deterministic machines. Each node is the
// configuration reached after consuming one prefix; the epsilon chain after
// a consumption is input-independent, so a chain that overflows the budget
// condemns the whole extension subtree to Diverged at once.
struct DetEnumerator {
    const Pda& m;
    std::size_t bound;
    std::size_t budget;
    LanguageSample out;

    void mark_diverged(Word& prefix) {
        out.diverged.insert(prefix);
        if (prefix.size() == bound) return;
        for (std::size_t a = 0; a < m.input_alphabet_size(); ++a) {
            prefix.push_back(m.input_name(static_cast<InputId>(a)));
            mark_diverged(prefix);
            prefix.pop_back();
        }
    }

    // Follows epsilon moves until the top symbol has none (or the pushdown
    // empties). False = budget exceeded.
    bool chase(StateId& q, std::vector<StackId>& st) const {
        std::size_t eps = 0;
        while (!st.empty()) {
            const auto* tgt = m.targets(q, st.back(), std::nullopt);
            if (!tgt) return true;
            if (eps == budget) return false;
            ++eps;
            const auto& t = tgt->front();
            st.pop_back();
            st.insert(st.end(), t.push.begin(), t.push.end());
            q = t.state;
        }
        return true;
    }

    void explore(Word& prefix, StateId q, std::vector<StackId> st) {
        if (!chase(q, st)) {
            mark_diverged(prefix);
            return;
        }
        if (st.empty()) {
            if (m.is_final(q)) out.strings.insert(prefix);
            return; // no move is possible from an empty pushdown
        }
        if (prefix.size() == bound) return;
        StackId top = st.back();
        for (std::size_t a = 0; a < m.input_alphabet_size(); ++a) {
            const auto* tgt = m.targets(q, top, static_cast<InputId>(a));
            if (!tgt) continue;
            const auto& t = tgt->front();
            std::vector<StackId> next = st;
            next.pop_back();
            next.insert(next.end(), t.push.begin(), t.push.end());
            prefix.push_back(m.input_name(static_cast<InputId>(a)));
            explore(prefix, t.state, std::move(next));
            prefix.pop_back();
        }
    }
};

// Breadth-first search over configurations for nondeterministic machines.
// Branches that exceed the per-branch epsilon budget are dropped, so the
// diverged set stays empty here; only the deterministic paths report it.
LanguageSample nondet_bfs(const Pda& m, std::size_t bound, std::size_t budget) {
    LanguageSample out;
    out.length_bound = bound;

    using Node = std::tuple<StateId, std::size_t, std::vector<InputId>, std::vector<StackId>>;
    std::set<Node> visited;
    std::deque<Node> queue;
    queue.emplace_back(m.initial_state(), 0, std::vector<InputId>{}, m.initial_stack());
    visited.insert(queue.front());

    auto enqueue = [&](Node node) {
        if (visited.insert(node).second) queue.push_back(std::move(node));
    };

    while (!queue.empty()) {
        auto [q, eps, consumed, st] = std::move(queue.front());
        queue.pop_front();

        if (st.empty()) {
            if (m.is_final(q)) out.strings.insert(m.input_word(consumed));
            continue;
        }
        StackId top = st.back();
        auto push_children = [&](const std::vector<TransitionTarget>& targets, bool consume,
                                 InputId symbol) {
            for (const auto& t : targets) {
                std::vector<StackId> next = st;
                next.pop_back();
                next.insert(next.end(), t.push.begin(), t.push.end());
                std::vector<InputId> word = consumed;
                if (consume) word.push_back(symbol);
                enqueue(Node{t.state, consume ? 0 : eps + 1, std::move(word), std::move(next)});
            }
        };
        if (const auto* tgt = m.targets(q, top, std::nullopt))
            if (eps < budget) push_children(*tgt, false, 0);
        if (consumed.size() < bound)
            for (std::size_t a = 0; a < m.input_alphabet_size(); ++a)
                if (const auto* tgt = m.targets(q, top, static_cast<InputId>(a)))
                    push_children(*tgt, true, static_cast<InputId>(a));
    }
    return out;
}

} // namespace

LanguageSample enumerate_language(const Pda& m, std::size_t length_bound,
                                  std::size_t epsilon_budget) {
    if (epsilon_budget < 1) fail(ErrorKind::BadBounds, "epsilon budget must be at least 1");
    if (!classify(m).deterministic) return nondet_bfs(m, length_bound, epsilon_budget);

    DetEnumerator enumerator{m, length_bound, epsilon_budget, {}};
    enumerator.out.length_bound = length_bound;
    Word prefix;
    enumerator.explore(prefix, m.initial_state(), m.initial_stack());
    return enumerator.out;
}

LanguageSample enumerate_language_by_runs(const Pda& m, std::size_t length_bound,
                                          std::size_t epsilon_budget) {
    if (epsilon_budget < 1) fail(ErrorKind::BadBounds, "epsilon budget must be at least 1");
    if (!classify(m).deterministic)
        fail(ErrorKind::NotDeterministic, "per-word enumeration requires a deterministic machine");

    LanguageSample out;
    out.length_bound = length_bound;
    std::size_t alphabet = m.input_alphabet_size();

    std::vector<InputId> word;
    for (std::size_t len = 0; len <= length_bound; ++len) {
        word.assign(len, 0);
        while (true) {
            switch (run_quick(m, word, epsilon_budget)) {
                case Verdict::Accepted: out.strings.insert(m.input_word(word)); break;
                case Verdict::Diverged: out.diverged.insert(m.input_word(word)); break;
                case Verdict::Rejected: break;
            }
            // Odometer over the alphabet.
            std::size_t i = len;
            while (i > 0 && word[i - 1] + 1 == alphabet) word[--i] = 0;
            if (i == 0) break;
            ++word[i - 1];
        }
    }
    return out;
}

std::optional<std::pair<Word, Word>> prefix_free(const LanguageSample& sample) {
    // After a plain lexicographic sort, a word and any extension of it
    // enclose only words that extend it too, so checking neighbours is
    // enough.
    std::vector<Word> words(sample.strings.begin(), sample.strings.end());
    std::sort(words.begin(), words.end());
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        const Word& u = words[i];
        const Word& v = words[i + 1];
        if (u.size() < v.size() && std::equal(u.begin(), u.end(), v.begin()))
            return std::make_pair(u, v);
    }
    return std::nullopt;
}

std::optional<Word> accepts_exactly(const Pda& m, const WordSet& reference,
                                    std::size_t length_bound, std::size_t epsilon_budget) {
    std::size_t longest = reference.empty() ? 0 : reference.rbegin()->size();
    if (length_bound < longest)
        fail(ErrorKind::BadBounds, "length bound " + std::to_string(length_bound) +
                                       " is below the longest reference word (" +
                                       std::to_string(longest) + ")");
    if (epsilon_budget == 0) epsilon_budget = default_epsilon_budget(m);

    LanguageSample sample = enumerate_language(m, length_bound, epsilon_budget);
    if (!sample.diverged.empty()) return *sample.diverged.begin();
    for (const Word& w : sample.strings)
        if (!reference.count(w)) return w;
    for (const Word& w : reference)
        if (!sample.strings.count(w)) return w;
    return std::nullopt;
}

} // namespace pda
