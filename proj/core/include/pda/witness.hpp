#pragma once

#include "pda/machine.hpp"

namespace pda {

/// The built-in automaton/language families. `StatelessLn` is the one-state
/// counter machine over {a,b}; `MStateLmn` its m-state realtime relative;
/// `ExampleTwoState` the two-state, two-symbol machine that accepts the same
/// language as MStateLmn using one epsilon rule; `UnaryL1` the single-word
/// unary language {a^c}; `NonInputKn` the alias family K_n = L_{n+2} used
/// for counting pushdown symbols beyond the input alphabet.
enum class WitnessFamily { StatelessLn, MStateLmn, ExampleTwoState, UnaryL1, NonInputKn };

struct WitnessSpec {
    WitnessFamily family = WitnessFamily::StatelessLn;
    int m = 1; // state count, MStateLmn / ExampleTwoState
    int n = 1; // pushdown alphabet parameter
    int c = 0; // word length, UnaryL1
};

/// Throws BadSpec when the parameters are outside the family's domain.
void check_spec(const WitnessSpec& spec);

/// The reference language of a family, as a finite word set:
///   StatelessLn(n)   = { b^k a | 1 <= k <= n-1 },        n >= 2
///   MStateLmn(m,n)   = { b^k a | 1 <= k <= m*n-1 },      m >= 1, n >= 2
///   ExampleTwoState  = same as MStateLmn
///   UnaryL1(c)       = { a^c },                          c >= 0
///   NonInputKn(n)    = StatelessLn(n+2),                 n >= 0
WordSet witness_language(const WitnessSpec& spec);

/// One state, Sigma={a,b}, Gamma={X0..X(n-1)}, initial X0, with
/// delta(Xi,b)=X(i+1) for i<n-1 and delta(Xi,a)=eps for i>=1. Accepts
/// exactly StatelessLn(n). Requires n >= 2 (use build_unary below for the
/// unary languages).
Pda build_stateless(int n);

/// Accepts exactly {a^c}. For c >= 1 this is the machine whose one pushdown
/// symbol equals the input symbol, started on a^c with delta(a,a)=eps. For
/// c = 0 the initial pushdown must still be nonempty, so the machine is
/// Gamma={E}, alpha=E, delta(E,eps)=eps: deterministic but not realtime.
Pda build_unary(int c);

/// The m-state realtime machine accepting MStateLmn(m,n): states q0..q(m-1)
/// with F={q(m-1)}, counting b's through the pushdown symbols within a state
/// and stepping to the next state when the symbols wrap around. At m=1 the
/// wrap-around rules are vacuous and the machine equals build_stateless(n)
/// up to the final-state annotation.
Pda build_mstate(int m, int n);

/// The two-state machine with Gamma={Z,B} that accepts MStateLmn(m,n) for
/// any m,n with m*n >= 2: the first b pushes B^(mn-1), later b's and the
/// final a pop, and an epsilon rule drains whatever is left. Two pushdown
/// symbols regardless of m and n, at the price of an epsilon transition.
Pda build_example(int m, int n);

/// Dispatcher used by the CLI: builds the machine of any family.
/// NonInputKn(n) builds build_stateless(n+2).
Pda build_witness(const WitnessSpec& spec);

} // namespace pda
