#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pda/machine.hpp"

namespace pda {

/// Record of one epsilon-elimination pass.
struct TransformLog {
    /// Substitution steps in the order applied: symbol X together with the
    /// replacement string that was substituted for it (bottom to top).
    std::vector<std::pair<std::string, std::vector<std::string>>> eliminated;
    /// Symbols dropped because their epsilon rule reinstates them (they can
    /// never leave the pushdown) or because they became unreachable.
    std::set<std::string> removed_dead;
    std::size_t alphabet_before = 0;
    std::size_t alphabet_after = 0;
};

struct RealtimeResult {
    Pda machine;
    TransformLog log;
};

/// Eliminates every epsilon transition from a stateless deterministic
/// machine by substituting each epsilon rule's push string for its symbol.
/// The result accepts the same language (with divergent runs of the input
/// machine counting as rejections), is realtime, and never uses more
/// pushdown symbols than the input.
///
/// Throws NotStateless / NotDeterministic on precondition violations and
/// EpsilonLanguage when the machine accepts exactly the empty word, which
/// no realtime machine with a nonempty initial pushdown can do.
RealtimeResult to_realtime(const Pda& m);

} // namespace pda
