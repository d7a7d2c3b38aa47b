#include "pda/transform.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace pda {

namespace {

using Push = std::vector<std::string>;
using RuleKey = std::pair<std::string, std::optional<std::string>>; // (top, input)

struct Working {
    std::string state;
    std::vector<std::string> inputs;
    std::vector<std::string> stack; // current alphabet, declaration order
    Push alpha;
    bool state_final = false;
    std::map<RuleKey, Push> rules; // deterministic: one target per key
};

bool contains(const Push& push, const std::string& name) {
    return std::find(push.begin(), push.end(), name) != push.end();
}

Push substitute(const Push& push, const std::string& name, const Push& replacement) {
    Push out;
    for (const auto& sym : push) {
        if (sym == name)
            out.insert(out.end(), replacement.begin(), replacement.end());
        else
            out.push_back(sym);
    }
    return out;
}

void drop_symbol(std::vector<std::string>& stack, const std::string& name) {
    stack.erase(std::remove(stack.begin(), stack.end(), name), stack.end());
}

Pda rebuild(const Working& w) {
    PdaDescription d;
    d.states = {w.state};
    d.input_alphabet = w.inputs;
    d.stack_alphabet = w.stack;
    d.initial_state = w.state;
    d.initial_stack = w.alpha;
    if (w.state_final) d.final_states = {w.state};
    for (const auto& [key, push] : w.rules) {
        RawTransition t;
        t.state = w.state;
        t.top = key.first;
        t.input = key.second;
        t.target_state = w.state;
        t.push = push;
        d.transitions.push_back(std::move(t));
    }
    return validate(d);
}

// The one-symbol machine with no transitions: accepts nothing, realtime.
Pda empty_language_machine(const Working& w, const std::string& keep) {
    Working e = w;
    e.stack = {keep};
    e.alpha = {keep};
    e.rules.clear();
    return rebuild(e);
}

} // namespace

RealtimeResult to_realtime(const Pda& m) {
    ClassReport cls = classify(m);
    if (!cls.stateless)
        fail(ErrorKind::NotStateless, "epsilon elimination is defined for one-state machines");
    if (!cls.deterministic)
        fail(ErrorKind::NotDeterministic, "epsilon elimination requires a deterministic machine");

    Working w;
    w.state = m.state_name(0);
    w.inputs = m.input_alphabet();
    w.stack = m.stack_alphabet();
    for (StackId id : m.initial_stack()) w.alpha.push_back(m.stack_name(id));
    w.state_final = m.is_final(0);
    for (const auto& [key, targets] : m.transitions()) {
        RuleKey rk{m.stack_name(key.top),
                   key.input ? std::optional<std::string>(m.input_name(*key.input)) : std::nullopt};
        w.rules[rk] = [&] {
            Push p;
            for (StackId id : targets.front().push) p.push_back(m.stack_name(id));
            return p;
        }();
    }

    TransformLog log;
    log.alphabet_before = m.stack_alphabet_size();
    const std::string fallback = m.stack_name(0); // survivor for the empty-language machine

    while (true) {
        // Lowest-named symbol that still has an epsilon rule; fixed order
        // keeps the log reproducible.
        std::string sym;
        for (const auto& [key, push] : w.rules)
            if (!key.second && (sym.empty() || key.first < sym)) sym = key.first;
        if (sym.empty()) break;

        Push sigma = w.rules.at(RuleKey{sym, std::nullopt});

        if (contains(sigma, sym)) {
            // The rule reinstates its own symbol, so the symbol can never
            // leave the pushdown; no computation through it accepts.
            log.removed_dead.insert(sym);
            if (contains(w.alpha, sym)) {
                log.alphabet_after = 1;
                return {empty_language_machine(w, fallback), std::move(log)};
            }
            std::erase_if(w.rules, [&](const auto& entry) {
                return entry.first.first == sym || contains(entry.second, sym);
            });
            drop_symbol(w.stack, sym);
            continue;
        }

        w.rules.erase(RuleKey{sym, std::nullopt});
        for (auto& [key, push] : w.rules) push = substitute(push, sym, sigma);
        w.alpha = substitute(w.alpha, sym, sigma);
        drop_symbol(w.stack, sym);
        log.eliminated.emplace_back(sym, sigma);

        if (w.alpha.empty()) {
            // The whole initial pushdown erases through epsilon rules, so
            // the machine accepts the empty word.
            if (w.state_final)
                fail(ErrorKind::EpsilonLanguage,
                     "the machine accepts exactly the empty word, which no realtime machine "
                     "with a nonempty initial pushdown can");
            log.alphabet_after = 1;
            return {empty_language_machine(w, fallback), std::move(log)};
        }
    }

    // Symbols that cannot reach the pushdown anymore are dead weight.
    std::set<std::string> reachable(w.alpha.begin(), w.alpha.end());
    while (true) {
        std::size_t before = reachable.size();
        for (const auto& [key, push] : w.rules)
            if (reachable.count(key.first))
                for (const auto& sym : push) reachable.insert(sym);
        if (reachable.size() == before) break;
    }
    for (const auto& sym : w.stack)
        if (!reachable.count(sym)) log.removed_dead.insert(sym);
    std::erase_if(w.rules,
                  [&](const auto& entry) { return !reachable.count(entry.first.first); });
    std::erase_if(w.stack, [&](const std::string& sym) { return !reachable.count(sym); });

    log.alphabet_after = w.stack.size();
    return {rebuild(w), std::move(log)};
}

} // namespace pda
