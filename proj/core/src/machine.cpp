#include "pda/machine.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pda {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownSymbol: return "unknown symbol";
        case ErrorKind::EmptyAlphabet: return "empty alphabet";
        case ErrorKind::BadInitial: return "bad initial configuration";
        case ErrorKind::BadFinal: return "bad final states";
        case ErrorKind::DuplicateName: return "duplicate name";
        case ErrorKind::BadName: return "bad name";
        case ErrorKind::SyntaxError: return "syntax error";
        case ErrorKind::NotDeterministic: return "not deterministic";
        case ErrorKind::NotStateless: return "not stateless";
        case ErrorKind::EpsilonLanguage: return "accepts exactly the empty word";
        case ErrorKind::BadSpec: return "bad parameters";
        case ErrorKind::BadBounds: return "bad bounds";
        case ErrorKind::SpaceTooLarge: return "search space too large";
    }
    return "error";
}

std::string render_word(const Word& word) {
    if (word.empty()) return std::string(kEpsilonToken);
    bool single = std::all_of(word.begin(), word.end(),
                              [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !single) out += ' ';
        out += word[i];
    }
    return out;
}

namespace {

// A usable name: nonempty, printable, no whitespace, not a token the text
// format claims for itself (otherwise serialize would emit an unparseable
// document and break the round-trip guarantee).
void check_name(const std::string& name, const char* what) {
    if (name.empty()) fail(ErrorKind::BadName, std::string(what) + " name is empty");
    for (unsigned char ch : name) {
        if (std::isspace(ch) || !std::isprint(ch))
            fail(ErrorKind::BadName,
                 std::string(what) + " name '" + name + "' contains whitespace or unprintable characters");
    }
    if (name == kEpsilonToken)
        fail(ErrorKind::BadName,
             std::string(what) + " name '" + name + "' is reserved for the empty string");
    if (name == "->" || name.find('#') != std::string::npos || name.find(':') != std::string::npos)
        fail(ErrorKind::BadName,
             std::string(what) + " name '" + name + "' collides with the file format");
}

std::unordered_map<std::string, std::uint32_t> intern(const std::vector<std::string>& names,
                                                      const char* what) {
    std::unordered_map<std::string, std::uint32_t> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
        check_name(names[i], what);
        if (!index.emplace(names[i], static_cast<std::uint32_t>(i)).second)
            fail(ErrorKind::DuplicateName,
                 std::string(what) + " '" + names[i] + "' declared twice");
    }
    return index;
}

} // namespace

bool Pda::is_final(StateId q) const {
    return std::binary_search(finals_.begin(), finals_.end(), q);
}

const std::vector<TransitionTarget>* Pda::targets(StateId state, StackId top,
                                                  std::optional<InputId> input) const {
    auto it = transitions_.find(TransitionKey{state, top, input});
    return it == transitions_.end() ? nullptr : &it->second;
}

std::optional<StateId> Pda::state_id(std::string_view name) const {
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i] == name) return static_cast<StateId>(i);
    return std::nullopt;
}

std::optional<InputId> Pda::input_id(std::string_view name) const {
    for (std::size_t i = 0; i < inputs_.size(); ++i)
        if (inputs_[i] == name) return static_cast<InputId>(i);
    return std::nullopt;
}

std::optional<StackId> Pda::stack_id(std::string_view name) const {
    for (std::size_t i = 0; i < stack_.size(); ++i)
        if (stack_[i] == name) return static_cast<StackId>(i);
    return std::nullopt;
}

std::size_t Pda::max_push_length() const {
    std::size_t longest = 0;
    for (const auto& [key, targets] : transitions_)
        for (const auto& target : targets)
            longest = std::max(longest, target.push.size());
    return longest;
}

std::optional<std::vector<InputId>> Pda::input_ids(const Word& word) const {
    std::vector<InputId> ids;
    ids.reserve(word.size());
    for (const auto& name : word) {
        auto id = input_id(name);
        if (!id) return std::nullopt;
        ids.push_back(*id);
    }
    return ids;
}

Word Pda::input_word(const std::vector<InputId>& ids) const {
    Word word;
    word.reserve(ids.size());
    for (InputId id : ids) word.push_back(inputs_[id]);
    return word;
}

std::vector<InputId> Pda::input_ids_from_text(std::string_view text) const {
    bool single = std::all_of(inputs_.begin(), inputs_.end(),
                              [](const std::string& s) { return s.size() == 1; });
    Word word;
    if (single) {
        for (char ch : text) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            word.emplace_back(1, ch);
        }
    } else {
        std::istringstream in{std::string(text)};
        std::string token;
        while (in >> token) word.push_back(token);
    }
    auto ids = input_ids(word);
    if (!ids)
        fail(ErrorKind::UnknownSymbol, "input '" + std::string(text) +
                                           "' contains symbols outside the input alphabet");
    return *ids;
}

Pda validate(const PdaDescription& raw) {
    if (raw.states.empty()) fail(ErrorKind::EmptyAlphabet, "machine declares no states");
    if (raw.input_alphabet.empty()) fail(ErrorKind::EmptyAlphabet, "input alphabet is empty");
    if (raw.stack_alphabet.empty()) fail(ErrorKind::EmptyAlphabet, "pushdown alphabet is empty");

    auto state_index = intern(raw.states, "state");
    auto input_index = intern(raw.input_alphabet, "input symbol");
    auto stack_index = intern(raw.stack_alphabet, "pushdown symbol");

    Pda m;
    m.states_ = raw.states;
    m.inputs_ = raw.input_alphabet;
    m.stack_ = raw.stack_alphabet;

    auto state_of = [&](const std::string& name) -> StateId {
        auto it = state_index.find(name);
        if (it == state_index.end())
            fail(ErrorKind::UnknownSymbol, "state '" + name + "' is not declared");
        return it->second;
    };
    auto stack_of = [&](const std::string& name) -> StackId {
        auto it = stack_index.find(name);
        if (it == stack_index.end())
            fail(ErrorKind::UnknownSymbol, "pushdown symbol '" + name + "' is not declared");
        return it->second;
    };

    if (auto it = state_index.find(raw.initial_state); it != state_index.end())
        m.initial_state_ = it->second;
    else
        fail(ErrorKind::BadInitial, "initial state '" + raw.initial_state + "' is not a state");

    if (raw.initial_stack.empty())
        fail(ErrorKind::BadInitial, "initial pushdown string is empty");
    for (const auto& name : raw.initial_stack) {
        auto it = stack_index.find(name);
        if (it == stack_index.end())
            fail(ErrorKind::BadInitial,
                 "initial pushdown symbol '" + name + "' is not in the pushdown alphabet");
        m.initial_stack_.push_back(it->second);
    }

    std::unordered_set<std::string> seen_final;
    for (const auto& name : raw.final_states) {
        auto it = state_index.find(name);
        if (it == state_index.end())
            fail(ErrorKind::BadFinal, "final state '" + name + "' is not a state");
        if (seen_final.insert(name).second) m.finals_.push_back(it->second);
    }
    std::sort(m.finals_.begin(), m.finals_.end());

    for (const auto& t : raw.transitions) {
        TransitionKey key;
        key.state = state_of(t.state);
        key.top = stack_of(t.top);
        if (t.input) {
            auto it = input_index.find(*t.input);
            if (it == input_index.end())
                fail(ErrorKind::UnknownSymbol,
                     "input symbol '" + *t.input + "' is not declared");
            key.input = it->second;
        }
        TransitionTarget target;
        target.state = state_of(t.target_state);
        for (const auto& name : t.push) target.push.push_back(stack_of(name));
        auto& bucket = m.transitions_[key];
        if (std::find(bucket.begin(), bucket.end(), target) == bucket.end())
            bucket.push_back(target);
    }
    // Target sets in a canonical order, so equality of machines is equality
    // of the maps.
    for (auto& [key, bucket] : m.transitions_) std::sort(bucket.begin(), bucket.end());
    return m;
}

namespace {

std::string key_text(const Pda& m, const TransitionKey& key) {
    std::string input = key.input ? m.input_name(*key.input) : std::string(kEpsilonToken);
    return "delta(" + m.state_name(key.state) + ", " + m.stack_name(key.top) + ", " + input + ")";
}

} // namespace

ClassReport classify(const Pda& m) {
    ClassReport report;
    report.stateless = m.state_count() == 1;
    report.pushdown_alphabet_size = static_cast<int>(m.stack_alphabet_size());
    report.non_input_symbol_count =
        static_cast<int>(m.stack_alphabet_size()) - static_cast<int>(m.input_alphabet_size());

    bool has_epsilon_key = false;
    for (const auto& [key, targets] : m.transitions()) {
        if (!key.input) has_epsilon_key = true;
        if (targets.size() > 1)
            report.violations.push_back(key_text(m, key) + " has " +
                                        std::to_string(targets.size()) + " targets");
    }
    // An epsilon rule on (q, A) excludes every input rule on the same pair.
    for (const auto& [key, targets] : m.transitions()) {
        if (key.input) continue;
        std::string conflicts;
        for (std::size_t a = 0; a < m.input_alphabet_size(); ++a) {
            if (m.targets(key.state, key.top, static_cast<InputId>(a))) {
                if (!conflicts.empty()) conflicts += ", ";
                conflicts += key_text(m, TransitionKey{key.state, key.top, static_cast<InputId>(a)});
            }
        }
        if (!conflicts.empty())
            report.violations.push_back(key_text(m, key) + " conflicts with " + conflicts);
    }

    report.deterministic = report.violations.empty();
    report.realtime = report.deterministic && !has_epsilon_key;
    return report;
}

bool is_n_limited(const Pda& m, int n) {
    if (n < 1) fail(ErrorKind::BadSpec, "pushdown alphabet limit must be at least 1");
    return static_cast<int>(m.stack_alphabet_size()) <= n;
}

} // namespace pda
