#include "pda/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pda/simulate.hpp"
#include "pda/witness.hpp"

namespace pda {

namespace {

constexpr int kUnassigned = -1;
constexpr int kUndefined = 0;

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

std::uint64_t pow_sat(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out = mul_sat(out, base);
    return out;
}

void validate_bounds(const SearchBounds& b) {
    if (b.max_pushdown_symbols < 1 || b.max_push_length < 1 || b.max_initial_length < 1 ||
        b.max_states < 1 || b.length_bound < 1)
        fail(ErrorKind::BadBounds, "all search bounds must be at least 1");
    if (b.epsilon_budget < 0) fail(ErrorKind::BadBounds, "epsilon budget must be nonnegative");
    if (b.max_pushdown_symbols > 8 || b.max_states > 6 || b.max_push_length > 32 ||
        b.max_initial_length > 64 || b.length_bound > 20)
        fail(ErrorKind::BadBounds, "bounds exceed the supported desk-scale limits "
                                   "(gamma<=8, states<=6, push<=32, alpha<=64, length<=20)");
}

// One (state count, symbol count) cell of the search space: realtime
// deterministic machines over {a,b} using exactly these counts.
struct Slice {
    int states = 1;
    int syms = 1;
    std::vector<std::vector<std::uint8_t>> pushes; // length <= max_push, shortest first

    void build_pushes(int max_push) {
        pushes.assign(1, {});
        std::size_t begin = 0;
        for (int len = 1; len <= max_push; ++len) {
            std::size_t end = pushes.size();
            for (std::size_t i = begin; i < end; ++i)
                for (int s = 0; s < syms; ++s) {
                    auto next = pushes[i];
                    next.push_back(static_cast<std::uint8_t>(s));
                    pushes.push_back(std::move(next));
                }
            begin = end;
        }
        // shortlex within each length block by construction
        std::stable_sort(pushes.begin(), pushes.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
    }

    int n_keys() const { return states * syms * 2; }
    int n_choices() const { return 1 + states * static_cast<int>(pushes.size()); }
    int key(int state, int sym, int x) const { return (state * syms + sym) * 2 + x; }
    int target_state(int choice) const {
        return (choice - 1) / static_cast<int>(pushes.size());
    }
    const std::vector<std::uint8_t>& push_of(int choice) const {
        return pushes[(choice - 1) % pushes.size()];
    }
};

// First-occurrence renumbering: the initial pushdown is scanned first, then
// the transition table, always taking the least already-numbered
// (state, symbol, input) key that is defined and unvisited. Returns false
// when some state or symbol is never reached by the scan.
bool scan_numbering(const Slice& sl, const std::vector<int>& assign,
                    const std::vector<std::uint8_t>& alpha, std::vector<int>& state_new_of_old,
                    std::vector<int>& sym_new_of_old) {
    state_new_of_old.assign(sl.states, -1);
    sym_new_of_old.assign(sl.syms, -1);
    std::vector<int> state_old_of_new;
    std::vector<int> sym_old_of_new;

    auto number_state = [&](int old) {
        if (state_new_of_old[old] < 0) {
            state_new_of_old[old] = static_cast<int>(state_old_of_new.size());
            state_old_of_new.push_back(old);
        }
    };
    auto number_sym = [&](int old) {
        if (sym_new_of_old[old] < 0) {
            sym_new_of_old[old] = static_cast<int>(sym_old_of_new.size());
            sym_old_of_new.push_back(old);
        }
    };

    number_state(0);
    for (auto sym : alpha) number_sym(sym);

    std::vector<char> visited(sl.n_keys(), 0);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t si = 0; si < state_old_of_new.size() && !progress; ++si)
            for (std::size_t ti = 0; ti < sym_old_of_new.size() && !progress; ++ti)
                for (int x = 0; x < 2 && !progress; ++x) {
                    int k = sl.key(state_old_of_new[si], sym_old_of_new[ti], x);
                    if (visited[k] || assign[k] <= kUndefined) continue;
                    visited[k] = 1;
                    number_state(sl.target_state(assign[k]));
                    for (auto sym : sl.push_of(assign[k])) number_sym(sym);
                    progress = true;
                }
    }
    return static_cast<int>(state_old_of_new.size()) == sl.states &&
           static_cast<int>(sym_old_of_new.size()) == sl.syms;
}

bool is_identity(const std::vector<int>& perm) {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

std::uint32_t apply_perm_mask(std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (mask >> i & 1) out |= 1u << perm[i];
    return out;
}

// With three or more states the transition skeleton can have automorphisms
// that fix the initial state; a machine is the orbit representative only if
// its final-state mask is minimal under all of them.
bool final_mask_is_orbit_min(const Slice& sl, const std::vector<int>& assign,
                             const std::vector<std::uint8_t>& alpha, std::uint32_t final_mask) {
    if (sl.states < 3) return true;

    std::vector<int> sperm(sl.states), yperm(sl.syms);
    std::vector<int> rest(sl.states - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        sperm[0] = 0;
        for (std::size_t i = 0; i < rest.size(); ++i) sperm[i + 1] = rest[i];
        std::iota(yperm.begin(), yperm.end(), 0);
        do {
            bool fixes_alpha = true;
            for (auto sym : alpha)
                if (yperm[sym] != sym) { fixes_alpha = false; break; }
            if (!fixes_alpha) continue;

            bool automorphism = true;
            for (int q = 0; q < sl.states && automorphism; ++q)
                for (int a = 0; a < sl.syms && automorphism; ++a)
                    for (int x = 0; x < 2 && automorphism; ++x) {
                        int c = assign[sl.key(q, a, x)];
                        int c2 = assign[sl.key(sperm[q], yperm[a], x)];
                        if (c == kUndefined || c2 == kUndefined) {
                            automorphism = (c == kUndefined && c2 == kUndefined);
                            continue;
                        }
                        if (sl.target_state(c2) != sperm[sl.target_state(c)]) {
                            automorphism = false;
                            continue;
                        }
                        const auto& p = sl.push_of(c);
                        const auto& p2 = sl.push_of(c2);
                        if (p.size() != p2.size()) { automorphism = false; continue; }
                        for (std::size_t i = 0; i < p.size(); ++i)
                            if (p2[i] != yperm[p[i]]) { automorphism = false; break; }
                    }
            if (automorphism && apply_perm_mask(final_mask, sperm) < final_mask) return false;
        } while (std::next_permutation(yperm.begin(), yperm.end()));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return true;
}

// Necessary condition for canonicality, checked before the transition table
// exists: new symbols must appear in the initial pushdown in increasing
// order without gaps.
bool alpha_is_canonical_prefix(const std::vector<std::uint8_t>& alpha) {
    int next = 0;
    for (auto sym : alpha) {
        if (sym > next) return false;
        if (sym == next) ++next;
    }
    return true;
}

struct WordInfo {
    std::uint32_t bits = 0; // symbol i = bit i (0 = a, 1 = b)
    std::uint8_t len = 0;
    bool in_target = false;
};

Word word_names(const WordInfo& w) {
    Word out;
    out.reserve(w.len);
    for (int i = 0; i < w.len; ++i) out.emplace_back((w.bits >> i & 1) ? "b" : "a");
    return out;
}

struct Engine {
    SearchBounds bounds;
    const WordSet* target = nullptr;                       // nullptr = stream mode
    const std::function<bool(const Pda&)>* stream = nullptr;
    bool stop_on_first = false;
    int k_lo = 1;
    int k_hi = 1;
    int max_states = 1;

    SearchReport report;
    bool stopped = false;
    std::uint64_t interior_prunes = 0;

    Slice sl;
    std::vector<int> assign;
    std::vector<std::uint8_t> alpha;
    std::uint32_t final_mask = 0;

    std::vector<WordInfo> words;
    std::vector<std::uint8_t> status; // 0 unknown, 1 accepted, 2 rejected
    std::vector<std::vector<std::int32_t>> blocked;
    std::vector<std::pair<std::int32_t, std::int32_t>> trail; // (word, -1 | key appended to)
    std::vector<std::uint8_t> stack_scratch;

    void build_words() {
        for (int len = 0; len <= bounds.length_bound; ++len)
            for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
                WordInfo w{bits, static_cast<std::uint8_t>(len), false};
                w.in_target = target->count(word_names(w)) > 0;
                words.push_back(w);
            }
    }

    // 1 = accepted, 2 = rejected, -(key+1) = blocked on an unassigned key.
    int simulate(const WordInfo& w) {
        int state = 0;
        auto& st = stack_scratch;
        st.assign(alpha.begin(), alpha.end());
        int pos = 0;
        while (true) {
            if (st.empty()) return (pos == w.len && (final_mask >> state & 1)) ? 1 : 2;
            if (pos == w.len) return 2;
            int key = sl.key(state, st.back(), w.bits >> pos & 1);
            int c = assign[key];
            if (c == kUnassigned) return -(key + 1);
            if (c == kUndefined) return 2;
            st.pop_back();
            const auto& p = sl.push_of(c);
            st.insert(st.end(), p.begin(), p.end());
            state = sl.target_state(c);
            ++pos;
        }
    }

    void account_subtree(int assigned_keys) {
        std::uint64_t size = pow_sat(sl.n_choices(), sl.n_keys() - assigned_keys);
        report.candidates_examined =
            report.candidates_examined > UINT64_MAX - size ? UINT64_MAX
                                                           : report.candidates_examined + size;
    }

    Pda to_pda() const {
        PdaDescription d;
        if (sl.states == 1) {
            d.states = {std::string(kStatelessStateName)};
        } else {
            for (int q = 0; q < sl.states; ++q) d.states.push_back("q" + std::to_string(q));
        }
        d.input_alphabet = {"a", "b"};
        for (int s = 0; s < sl.syms; ++s) d.stack_alphabet.push_back("X" + std::to_string(s));
        d.initial_state = d.states.front();
        for (auto sym : alpha) d.initial_stack.push_back(d.stack_alphabet[sym]);
        for (int q = 0; q < sl.states; ++q)
            if (final_mask >> q & 1) d.final_states.push_back(d.states[q]);
        for (int q = 0; q < sl.states; ++q)
            for (int a = 0; a < sl.syms; ++a)
                for (int x = 0; x < 2; ++x) {
                    int c = assign[sl.key(q, a, x)];
                    if (c <= kUndefined) continue;
                    RawTransition t;
                    t.state = d.states[q];
                    t.top = d.stack_alphabet[a];
                    t.input = std::string(x ? "b" : "a");
                    t.target_state = d.states[sl.target_state(c)];
                    for (auto sym : sl.push_of(c)) t.push.push_back(d.stack_alphabet[sym]);
                    d.transitions.push_back(std::move(t));
                }
        return validate(d);
    }

    bool leaf_is_canonical() {
        std::vector<int> sperm, yperm;
        if (!scan_numbering(sl, assign, alpha, sperm, yperm)) return false;
        if (!is_identity(sperm) || !is_identity(yperm)) return false;
        return final_mask_is_orbit_min(sl, assign, alpha, final_mask);
    }

    void leaf() {
        account_subtree(sl.n_keys()); // one machine
        if (!leaf_is_canonical()) return;
        ++report.candidates_after_symmetry;
        if (target) {
            // The pruned search already matched every bounded word; confirm
            // through the independent per-word path before reporting.
            Pda p = to_pda();
            auto sample = enumerate_language_by_runs(p, bounds.length_bound,
                                                     default_epsilon_budget(p));
            if (sample.strings != *target || !sample.diverged.empty())
                throw std::logic_error("search candidate failed independent re-verification");
            report.accepting_machines.push_back(std::move(p));
            if (stop_on_first) stopped = true;
        } else if (stream) {
            if (!(*stream)(to_pda())) stopped = true;
        }
    }

    void dfs(int next_key) {
        if (stopped) return;
        if (next_key == sl.n_keys()) {
            leaf();
            return;
        }
        auto pending = std::move(blocked[next_key]);
        blocked[next_key] = {};
        for (int c = 0; c < sl.n_choices() && !stopped; ++c) {
            assign[next_key] = c;
            if (target) {
                std::size_t mark = trail.size();
                bool contradiction = false;
                for (auto w : pending) {
                    int r = simulate(words[w]);
                    if (r > 0) {
                        status[w] = static_cast<std::uint8_t>(r);
                        trail.emplace_back(w, -1);
                        if ((r == 1) != words[w].in_target) {
                            contradiction = true;
                            break;
                        }
                    } else {
                        int bk = -r - 1;
                        blocked[bk].push_back(w);
                        trail.emplace_back(w, bk);
                    }
                }
                if (contradiction) {
                    ++interior_prunes;
                    account_subtree(next_key + 1);
                } else {
                    dfs(next_key + 1);
                }
                while (trail.size() > mark) {
                    auto [w, where] = trail.back();
                    trail.pop_back();
                    if (where < 0)
                        status[w] = 0;
                    else
                        blocked[where].pop_back();
                }
            } else {
                dfs(next_key + 1);
            }
        }
        assign[next_key] = kUnassigned;
        blocked[next_key] = std::move(pending);
    }

    void run_cell() {
        // Root evaluation: every word either settles or parks on the first
        // key its run needs.
        if (target) {
            std::fill(status.begin(), status.end(), 0);
            for (auto& list : blocked) list.clear();
            for (std::int32_t w = 0; w < static_cast<std::int32_t>(words.size()); ++w) {
                int r = simulate(words[w]);
                if (r > 0) {
                    status[w] = static_cast<std::uint8_t>(r);
                    if ((r == 1) != words[w].in_target) {
                        account_subtree(0);
                        return;
                    }
                } else {
                    blocked[-r - 1].push_back(w);
                }
            }
        }
        dfs(0);
    }

    void run() {
        if (target) build_words();
        for (int k = k_lo; k <= k_hi && !stopped; ++k) {
            for (int s = 1; s <= max_states && !stopped; ++s) {
                sl.states = s;
                sl.syms = k;
                sl.build_pushes(bounds.max_push_length);
                assign.assign(sl.n_keys(), kUnassigned);
                blocked.assign(sl.n_keys(), {});
                status.assign(words.size(), 0);

                for (std::uint32_t fmask = 1; fmask < (1u << s) && !stopped; ++fmask) {
                    final_mask = fmask;
                    // Initial pushdown strings, shortest first.
                    std::vector<std::vector<std::uint8_t>> alphas{{}};
                    std::size_t begin = 0;
                    for (int len = 1; len <= bounds.max_initial_length && !stopped; ++len) {
                        std::size_t end = alphas.size();
                        for (std::size_t i = begin; i < end && !stopped; ++i)
                            for (int sym = 0; sym < k && !stopped; ++sym) {
                                alphas.push_back(alphas[i]);
                                alphas.back().push_back(static_cast<std::uint8_t>(sym));
                                alpha = alphas.back();
                                if (!alpha_is_canonical_prefix(alpha)) {
                                    account_subtree(0); // symmetry skip
                                    continue;
                                }
                                run_cell();
                            }
                        begin = end;
                    }
                }
            }
        }
    }
};

void check_target_words(const WordSet& target, const SearchBounds& bounds) {
    for (const Word& w : target) {
        if (static_cast<int>(w.size()) > bounds.length_bound)
            fail(ErrorKind::BadBounds,
                 "length bound is below the longest target word (" +
                     std::to_string(target.rbegin()->size()) + ")");
        for (const auto& sym : w)
            if (sym != "a" && sym != "b")
                fail(ErrorKind::BadSpec, "the searched space is over {a,b}; target word '" +
                                             render_word(w) + "' is not");
    }
}

void check_ceiling(const SearchBounds& bounds) {
    std::uint64_t size = raw_space_size(bounds);
    if (size > bounds.candidate_ceiling)
        fail(ErrorKind::SpaceTooLarge,
             "bounded space holds " + std::to_string(size) + " raw candidates, above the ceiling " +
                 std::to_string(bounds.candidate_ceiling) + "; tighten the bounds or raise it");
}

std::string wall_notes(const Engine& engine, double elapsed_ms) {
    std::ostringstream out;
    out << (engine.target ? "pruned depth-first search" : "stream enumeration")
        << "; interior refutations: " << engine.interior_prunes;
    if (engine.stopped) out << "; stopped early";
    out << "; elapsed: " << static_cast<long long>(elapsed_ms) << " ms";
    return out.str();
}

SearchReport run_target_search(const WordSet& target, const SearchBounds& bounds, int k_lo,
                               int k_hi, bool stop_on_first) {
    validate_bounds(bounds);
    check_target_words(target, bounds);
    check_ceiling(bounds);

    auto start = std::chrono::steady_clock::now();
    Engine engine;
    engine.bounds = bounds;
    engine.target = &target;
    engine.stop_on_first = stop_on_first;
    engine.k_lo = k_lo;
    engine.k_hi = k_hi;
    engine.max_states = bounds.max_states;
    engine.report.target_language = target;
    engine.report.bounds = bounds;
    engine.run();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    engine.report.wall_notes = wall_notes(engine, ms);
    return std::move(engine.report);
}

} // namespace

std::uint64_t raw_space_size(const SearchBounds& bounds) {
    validate_bounds(bounds);
    std::uint64_t total = 0;
    for (int k = 1; k <= bounds.max_pushdown_symbols; ++k) {
        std::uint64_t push_count = 0; // strings of length <= max_push over k symbols
        std::uint64_t power = 1;
        for (int l = 0; l <= bounds.max_push_length; ++l) {
            push_count += power;
            power = mul_sat(power, k);
        }
        std::uint64_t alpha_count = 0;
        power = k;
        for (int l = 1; l <= bounds.max_initial_length; ++l) {
            alpha_count += power;
            power = mul_sat(power, k);
        }
        for (int s = 1; s <= bounds.max_states; ++s) {
            std::uint64_t choices = 1 + mul_sat(s, push_count);
            std::uint64_t cell = pow_sat(choices, s * k * 2);
            cell = mul_sat(cell, alpha_count);
            cell = mul_sat(cell, (1u << s) - 1);
            total = total > UINT64_MAX - cell ? UINT64_MAX : total + cell;
        }
    }
    return total;
}

void enumerate_machines(const SearchBounds& bounds, const std::function<bool(const Pda&)>& yield) {
    validate_bounds(bounds);
    Engine engine;
    engine.bounds = bounds;
    engine.stream = &yield;
    engine.k_lo = 1;
    engine.k_hi = bounds.max_pushdown_symbols;
    engine.max_states = 1; // the streamed space is stateless
    engine.run();
}

SearchReport search_for_target(const WordSet& target, const SearchBounds& bounds) {
    return run_target_search(target, bounds, 1, bounds.max_pushdown_symbols, false);
}

SearchReport certify_lower_bound(int n, const SearchBounds& bounds) {
    if (n < 2) fail(ErrorKind::BadSpec, "certification needs n >= 2");
    if (bounds.length_bound < n + 1)
        fail(ErrorKind::BadBounds,
             "length bound must be at least n+1 = " + std::to_string(n + 1) +
                 " to tell the witness language from its successor");
    SearchBounds b = bounds;
    b.max_states = 1;
    return search_for_target(witness_language({WitnessFamily::StatelessLn, 1, n, 0}), b);
}

SearchReport certify_mstate_lower_bound(int m, int n, const SearchBounds& bounds) {
    if (m < 1 || n < 2) fail(ErrorKind::BadSpec, "certification needs m >= 1 and n >= 2");
    if (bounds.length_bound < m * n + 1)
        fail(ErrorKind::BadBounds,
             "length bound must be at least m*n+1 = " + std::to_string(m * n + 1) +
                 " to tell the witness language from its successor");
    SearchBounds b = bounds;
    b.max_states = m;
    return search_for_target(witness_language({WitnessFamily::MStateLmn, m, n, 0}), b);
}

std::optional<int> min_pushdown_alphabet(const WordSet& target, const SearchBounds& bounds) {
    validate_bounds(bounds);
    check_target_words(target, bounds);
    check_ceiling(bounds);
    for (int k = 1; k <= bounds.max_pushdown_symbols; ++k) {
        SearchReport report = run_target_search(target, bounds, k, k, true);
        if (!report.accepting_machines.empty()) return k;
    }
    return std::nullopt;
}

Pda canonical_form(const Pda& m) {
    ClassReport cls = classify(m);
    if (!cls.realtime) fail(ErrorKind::BadSpec, "the normal form is defined for realtime machines");

    // Scan at the name level, mirroring the numbering the enumerator uses.
    std::size_t n_states = m.state_count();
    std::size_t n_syms = m.stack_alphabet_size();
    std::vector<int> state_new(n_states, -1), sym_new(n_syms, -1);
    std::vector<StateId> state_old;
    std::vector<StackId> sym_old;
    auto number_state = [&](StateId q) {
        if (state_new[q] < 0) {
            state_new[q] = static_cast<int>(state_old.size());
            state_old.push_back(q);
        }
    };
    auto number_sym = [&](StackId a) {
        if (sym_new[a] < 0) {
            sym_new[a] = static_cast<int>(sym_old.size());
            sym_old.push_back(a);
        }
    };
    number_state(m.initial_state());
    for (StackId a : m.initial_stack()) number_sym(a);

    std::set<TransitionKey> visited;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t si = 0; si < state_old.size() && !progress; ++si)
            for (std::size_t ti = 0; ti < sym_old.size() && !progress; ++ti)
                for (std::size_t x = 0; x < m.input_alphabet_size() && !progress; ++x) {
                    TransitionKey key{state_old[si], sym_old[ti], static_cast<InputId>(x)};
                    if (visited.count(key)) continue;
                    const auto* tgt = m.targets(key.state, key.top, key.input);
                    if (!tgt) continue;
                    visited.insert(key);
                    number_state(tgt->front().state);
                    for (StackId a : tgt->front().push) number_sym(a);
                    progress = true;
                }
    }
    if (state_old.size() != n_states || sym_old.size() != n_syms)
        fail(ErrorKind::BadSpec,
             "machine has states or pushdown symbols the scan never reaches; "
             "no normal form is defined for it");

    PdaDescription d;
    if (n_states == 1) {
        d.states = {std::string(kStatelessStateName)};
    } else {
        for (std::size_t q = 0; q < n_states; ++q) d.states.push_back("q" + std::to_string(q));
    }
    d.input_alphabet = m.input_alphabet();
    for (std::size_t a = 0; a < n_syms; ++a) d.stack_alphabet.push_back("X" + std::to_string(a));
    d.initial_state = d.states[0];
    for (StackId a : m.initial_stack()) d.initial_stack.push_back(d.stack_alphabet[sym_new[a]]);
    for (StateId q : m.final_states()) d.final_states.push_back(d.states[state_new[q]]);
    std::sort(d.final_states.begin(), d.final_states.end());
    for (const auto& [key, targets] : m.transitions())
        for (const auto& t : targets) {
            RawTransition raw;
            raw.state = d.states[state_new[key.state]];
            raw.top = d.stack_alphabet[sym_new[key.top]];
            raw.input = m.input_name(*key.input);
            raw.target_state = d.states[state_new[t.state]];
            for (StackId a : t.push) raw.push.push_back(d.stack_alphabet[sym_new[a]]);
            d.transitions.push_back(std::move(raw));
        }
    return validate(d);
}

} // namespace pda
