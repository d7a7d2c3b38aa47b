#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pda/error.hpp"

namespace pda {

using StateId = std::uint32_t;
using InputId = std::uint32_t;
using StackId = std::uint32_t;

/// Reserved token of the text format. It stands for the empty string in the
/// input position of a transition and as an empty push string, so it can
/// never name a state or a symbol.
inline constexpr std::string_view kEpsilonToken = "eps";

/// Conventional name of the implicit state of machines written in the
/// stateless shorthand of the text format.
inline constexpr std::string_view kStatelessStateName = "s";

/// A word over an input alphabet, one entry per symbol name. Kept as a
/// token sequence (not a flat string) so multi-character symbol names do
/// not break prefix and equality reasoning.
using Word = std::vector<std::string>;

/// Shortlex: by length first, then element-wise by symbol name.
struct ShortlexLess {
    bool operator()(const Word& x, const Word& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    }
};

using WordSet = std::set<Word, ShortlexLess>;

/// Joins a word for display: concatenated when every symbol is a single
/// character, otherwise space-separated. The empty word prints as `eps`.
std::string render_word(const Word& word);

/// An unvalidated machine description, the input of validate(). The text
/// format parser and the witness builders both produce one of these.
struct RawTransition {
    std::string state;
    std::string top;
    std::optional<std::string> input; // nullopt = epsilon move
    std::string target_state;
    std::vector<std::string> push;    // bottom to top
};

struct PdaDescription {
    std::vector<std::string> states;
    std::vector<std::string> input_alphabet;
    std::vector<std::string> stack_alphabet;
    std::string initial_state;
    std::vector<std::string> initial_stack; // bottom to top, top rightmost
    std::vector<std::string> final_states;
    std::vector<RawTransition> transitions;
};

struct TransitionKey {
    StateId state;
    StackId top;
    std::optional<InputId> input; // nullopt = epsilon

    auto operator<=>(const TransitionKey&) const = default;
};

struct TransitionTarget {
    StateId state;
    std::vector<StackId> push; // bottom to top

    auto operator<=>(const TransitionTarget&) const = default;
};

/// A validated pushdown automaton. Immutable once built; every operation in
/// the library is a pure function of one of these, so instances can be
/// shared freely across threads.
///
/// States and symbols are interned: ids index the name tables in declaration
/// order. The input and pushdown alphabets may overlap; a transition's top
/// is always resolved against the pushdown alphabet and its input against
/// the input alphabet.
class Pda {
public:
    using TransitionMap = std::map<TransitionKey, std::vector<TransitionTarget>>;

    const std::vector<std::string>& state_names() const { return states_; }
    const std::vector<std::string>& input_alphabet() const { return inputs_; }
    const std::vector<std::string>& stack_alphabet() const { return stack_; }

    std::size_t state_count() const { return states_.size(); }
    std::size_t input_alphabet_size() const { return inputs_.size(); }
    std::size_t stack_alphabet_size() const { return stack_.size(); }

    StateId initial_state() const { return initial_state_; }
    const std::vector<StackId>& initial_stack() const { return initial_stack_; }
    const std::vector<StateId>& final_states() const { return finals_; }
    bool is_final(StateId q) const;

    const TransitionMap& transitions() const { return transitions_; }

    /// Targets for one key, or nullptr when the key is undefined.
    const std::vector<TransitionTarget>* targets(StateId state, StackId top,
                                                 std::optional<InputId> input) const;

    std::optional<StateId> state_id(std::string_view name) const;
    std::optional<InputId> input_id(std::string_view name) const;
    std::optional<StackId> stack_id(std::string_view name) const;

    const std::string& state_name(StateId id) const { return states_[id]; }
    const std::string& input_name(InputId id) const { return inputs_[id]; }
    const std::string& stack_name(StackId id) const { return stack_[id]; }

    /// Longest push string over all transitions (0 when there are none).
    std::size_t max_push_length() const;

    /// Maps symbol names to ids; nullopt if any name is not in the input
    /// alphabet.
    std::optional<std::vector<InputId>> input_ids(const Word& word) const;
    Word input_word(const std::vector<InputId>& ids) const;

    /// Splits raw CLI text into a word: one symbol per character when every
    /// input symbol is a single character, otherwise whitespace-separated
    /// tokens. Fails with UnknownSymbol on anything outside the alphabet.
    std::vector<InputId> input_ids_from_text(std::string_view text) const;

    bool operator==(const Pda&) const = default;

private:
    friend Pda validate(const PdaDescription& raw);

    std::vector<std::string> states_;
    std::vector<std::string> inputs_;
    std::vector<std::string> stack_;
    StateId initial_state_ = 0;
    std::vector<StackId> initial_stack_;
    std::vector<StateId> finals_; // sorted, unique
    TransitionMap transitions_;
};

/// Classification of a machine against the restricted machine classes.
/// `realtime` implies `deterministic`; `violations` lists every determinism
/// conflict in a human-readable form (the CLI prints them verbatim).
struct ClassReport {
    bool deterministic = false;
    bool realtime = false;
    bool stateless = false;
    int pushdown_alphabet_size = 0;
    int non_input_symbol_count = 0; // |Gamma| - |Sigma|, may be negative
    std::vector<std::string> violations;
};

/// Checks every well-formedness invariant of a description and builds the
/// interned machine. Throws Error with kind UnknownSymbol, EmptyAlphabet,
/// BadInitial, BadFinal, DuplicateName or BadName.
Pda validate(const PdaDescription& raw);

ClassReport classify(const Pda& m);

/// True iff the pushdown alphabet has at most n symbols. Requires n >= 1.
bool is_n_limited(const Pda& m, int n);

} // namespace pda
