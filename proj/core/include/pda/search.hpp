#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pda/machine.hpp"

namespace pda {

/// Finitization of the machine space searched by the certification
/// operations. All limits are inclusive ceilings. The space itself is:
/// realtime deterministic machines over Sigma={a,b} with at most
/// max_pushdown_symbols pushdown symbols, push strings of length at most
/// max_push_length, an initial pushdown string of length 1..max_initial_length,
/// and (for max_states > 1) up to max_states states with every nonempty
/// final-state set.
struct SearchBounds {
    int max_pushdown_symbols = 1;
    int max_push_length = 1;
    int max_initial_length = 1;
    int max_states = 1;
    int length_bound = 1;
    int epsilon_budget = 0; // reserved; the searched space is realtime
    std::uint64_t candidate_ceiling = 100'000'000;
};

/// Result of one exhaustive bounded search. An empty accepting_machines
/// list certifies that no machine in the bounded space accepts the target
/// language exactly. That is a statement about the bounded model only,
/// never about unbounded machines.
struct SearchReport {
    WordSet target_language;
    SearchBounds bounds;
    std::uint64_t candidates_examined = 0;
    std::uint64_t candidates_after_symmetry = 0;
    std::vector<Pda> accepting_machines;
    std::string wall_notes;
};

/// Raw size of the bounded space (no symmetry reduction), from the counting
/// formulas. Saturates at uint64 max. Searches refuse to start when this
/// exceeds bounds.candidate_ceiling.
std::uint64_t raw_space_size(const SearchBounds& bounds);

/// Streams every stateless realtime deterministic machine in the bounded
/// space exactly once up to pushdown-symbol renaming, in a fixed order.
/// Machines are canonical: symbols are numbered by first occurrence,
/// scanning the initial pushdown and then the transition table in key
/// order, and every symbol is reachable through push strings from the
/// initial pushdown. The callback returns false to stop early.
void enumerate_machines(const SearchBounds& bounds,
                        const std::function<bool(const Pda&)>& yield);

/// Exhaustively searches the bounded space for machines whose bounded
/// language at bounds.length_bound equals `target` exactly. Every hit is
/// re-verified with an independent per-word enumeration before it is
/// reported. Requires length_bound >= longest target word (BadBounds) and
/// refuses spaces above the candidate ceiling (SpaceTooLarge).
SearchReport search_for_target(const WordSet& target, const SearchBounds& bounds);

/// Searches for stateless acceptors of the n-symbol witness language
/// { b^k a | 1 <= k <= n-1 }. The canonical certification call sets
/// bounds.max_pushdown_symbols = n-1 and expects an empty result; the
/// positive control at n symbols expects a nonempty one. Requires
/// bounds.length_bound >= n+1 so that the language is distinguished from
/// its successor within the bound.
SearchReport certify_lower_bound(int n, const SearchBounds& bounds);

/// m-state analogue against { b^k a | 1 <= k <= m*n-1 }; the searched space
/// has up to bounds.max_states states and enumerates every nonempty
/// final-state set. Requires bounds.length_bound >= m*n+1.
SearchReport certify_mstate_lower_bound(int m, int n, const SearchBounds& bounds);

/// Smallest k <= bounds.max_pushdown_symbols whose k-symbol bounded space
/// contains an exact acceptor of `target`; nullopt when there is none
/// within bounds. Stateless space, like certify_lower_bound.
std::optional<int> min_pushdown_alphabet(const WordSet& target, const SearchBounds& bounds);

/// The symmetry normal form the enumerator works in: states and pushdown
/// symbols renumbered in first-occurrence order (initial pushdown first,
/// then the transition table in key order) and given the standard names.
/// Renamed copies of one machine map to the same normal form; machines the
/// enumerator streams are already in it. Defined for realtime machines
/// whose states and symbols are all reachable by the scan; throws BadSpec
/// otherwise.
Pda canonical_form(const Pda& m);

} // namespace pda
