#pragma once

#include <string>
#include <string_view>

#include "pda/machine.hpp"
#include "pda/search.hpp"
#include "pda/transform.hpp"

namespace pda {

/// The `.pda` text format. One declaration per line, `#` starts a comment,
/// tokens are whitespace-separated. The pushdown is written bottom to top:
/// the top symbol is the RIGHTMOST token, both in `start-stack:` and in
/// transition push strings. The reserved token `eps` stands for an epsilon
/// input and for the empty push string.
///
///     states: q0 q1          # omitted => stateless shorthand
///     input: a b
///     stack: X0 X1
///     initial: q0            # required with states:, forbidden without
///     start-stack: X0 X0
///     final: q0              # required with states: (may be empty)
///     trans: q0 X0 b -> q1 X0 X1
///     trans: q0 X0 eps -> q0 eps
///
/// The stateless shorthand omits `states:`, `initial:` and `final:`; the
/// machine then has the single state `s`, which is final, and transition
/// lines drop both state fields:
///
///     trans: X0 b -> X1
Pda parse(std::string_view text);

/// Intermediate form, exposed for tests of validate() error paths.
PdaDescription parse_description(std::string_view text);

/// Canonical serialization: fixed header order, transitions sorted by
/// (state, top, input) names with `eps` inputs spelled out, symbols listed
/// in declaration order. Uses the stateless shorthand exactly when the
/// machine has the single final state `s`. parse(serialize(m)) == m and the
/// output bytes are identical across calls.
std::string serialize(const Pda& m);

std::string format_class_report(const ClassReport& report);
std::string format_transform_log(const TransformLog& log);
std::string format_search_report(const SearchReport& report);

} // namespace pda
