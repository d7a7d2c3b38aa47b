#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pda/machine.hpp"

namespace pda {

/// One instantaneous description: current state, pushdown content (top is
/// the rightmost, i.e. back of the vector), and the unread input.
struct Configuration {
    StateId state;
    std::vector<StackId> stack;     // bottom to top
    std::vector<InputId> remaining; // front is consumed next

    bool operator==(const Configuration&) const = default;
};

enum class Verdict { Accepted, Rejected, Diverged };

const char* to_string(Verdict v);

struct RunOutcome {
    Verdict verdict = Verdict::Rejected;
    std::vector<Configuration> trace; // initial configuration first
    std::size_t steps_used = 0;
    std::size_t epsilon_steps_used = 0;
};

/// A bounded language sample. `strings` holds every accepted word of length
/// <= length_bound; `diverged` the words whose deterministic run exceeded
/// the epsilon budget (always disjoint from `strings`, and empty for
/// nondeterministic machines, where over-budget branches are dropped).
struct LanguageSample {
    WordSet strings;
    std::size_t length_bound = 0;
    WordSet diverged;
};

/// Default epsilon budget for a machine: 10 * |Gamma| * max push length
/// (at least 10). Generous for the witness machines; deliberately small
/// enough to terminate quickly on epsilon loops.
std::size_t default_epsilon_budget(const Pda& m);

/// Every configuration reachable in exactly one move. Empty pushdown (or a
/// stuck configuration) yields the empty set; this is not an error.
std::vector<Configuration> step(const Pda& m, const Configuration& c);

/// Runs a deterministic machine on one input word. Acceptance requires a
/// final state, empty pushdown and fully consumed input. More than
/// `epsilon_budget` consecutive epsilon moves halt the run with Diverged.
/// Throws NotDeterministic when the machine is not deterministic and
/// BadBounds when epsilon_budget < 1.
RunOutcome run(const Pda& m, const std::vector<InputId>& input, std::size_t epsilon_budget);
RunOutcome run(const Pda& m, const Word& input, std::size_t epsilon_budget);

/// Exact bounded enumeration: all accepted words of length <= length_bound.
/// Deterministic machines are explored by sharing runs along a prefix tree;
/// nondeterministic ones by breadth-first search over configurations with a
/// per-branch epsilon budget.
LanguageSample enumerate_language(const Pda& m, std::size_t length_bound,
                                  std::size_t epsilon_budget);

/// Same result for deterministic machines, computed the slow way: one
/// independent run() per candidate word. Kept as a second path so the two
/// can be checked against each other; also used to re-verify search hits.
/// Throws NotDeterministic for nondeterministic machines.
LanguageSample enumerate_language_by_runs(const Pda& m, std::size_t length_bound,
                                          std::size_t epsilon_budget);

/// nullopt when no member of the sample is a proper prefix of another;
/// otherwise one offending pair (u, uv).
std::optional<std::pair<Word, Word>> prefix_free(const LanguageSample& sample);

/// nullopt when the bounded enumeration equals `reference` exactly and
/// nothing diverged; otherwise a word from the symmetric difference (or a
/// diverged word). Requires length_bound >= the longest reference word
/// (BadBounds otherwise). epsilon_budget 0 selects the machine default.
std::optional<Word> accepts_exactly(const Pda& m, const WordSet& reference,
                                    std::size_t length_bound, std::size_t epsilon_budget = 0);

} // namespace pda
