#include "pda/format.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace pda {

namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string& message) {
    fail(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

struct Line {
    std::size_t number;
    std::string keyword;
    std::vector<std::string> tokens;
};

std::vector<Line> scan_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string raw(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++number;

        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        if (split_tokens(raw).empty()) continue;

        auto colon = raw.find(':');
        if (colon == std::string::npos)
            syntax_error(number, "expected 'keyword: ...'");
        std::string keyword = raw.substr(0, colon);
        keyword.erase(std::remove_if(keyword.begin(), keyword.end(),
                                     [](unsigned char c) { return std::isspace(c); }),
                      keyword.end());
        lines.push_back(Line{number, keyword, split_tokens(raw.substr(colon + 1))});
    }
    return lines;
}

// Push tokens to symbol list; `eps` alone denotes the empty string.
std::vector<std::string> parse_push(const Line& line, const std::vector<std::string>& tokens) {
    if (tokens.empty()) syntax_error(line.number, "missing push string (use 'eps' for empty)");
    if (tokens.size() == 1 && tokens[0] == kEpsilonToken) return {};
    for (const auto& t : tokens)
        if (t == kEpsilonToken)
            syntax_error(line.number, "'eps' denotes the empty push string and must stand alone");
    return tokens;
}

} // namespace

PdaDescription parse_description(std::string_view text) {
    PdaDescription d;
    bool seen_states = false, seen_input = false, seen_stack = false;
    bool seen_initial = false, seen_start = false, seen_final = false;
    std::vector<Line> trans_lines;

    for (const Line& line : scan_lines(text)) {
        auto once = [&](bool& seen) {
            if (seen) syntax_error(line.number, "'" + line.keyword + ":' declared twice");
            seen = true;
        };
        if (line.keyword == "states") {
            once(seen_states);
            d.states = line.tokens;
        } else if (line.keyword == "input") {
            once(seen_input);
            d.input_alphabet = line.tokens;
        } else if (line.keyword == "stack") {
            once(seen_stack);
            d.stack_alphabet = line.tokens;
        } else if (line.keyword == "initial") {
            once(seen_initial);
            if (line.tokens.size() != 1)
                syntax_error(line.number, "'initial:' takes exactly one state");
            d.initial_state = line.tokens[0];
        } else if (line.keyword == "start-stack") {
            once(seen_start);
            d.initial_stack = line.tokens;
        } else if (line.keyword == "final") {
            once(seen_final);
            d.final_states = line.tokens;
        } else if (line.keyword == "trans") {
            trans_lines.push_back(line);
        } else {
            syntax_error(line.number, "unknown declaration '" + line.keyword + ":'");
        }
    }

    if (!seen_input) fail(ErrorKind::SyntaxError, "missing 'input:' declaration");
    if (!seen_stack) fail(ErrorKind::SyntaxError, "missing 'stack:' declaration");
    if (!seen_start) fail(ErrorKind::SyntaxError, "missing 'start-stack:' declaration");

    if (seen_states) {
        if (!seen_initial) fail(ErrorKind::SyntaxError, "'states:' requires an 'initial:' line");
        if (!seen_final) fail(ErrorKind::SyntaxError, "'states:' requires a 'final:' line");
    } else {
        // Stateless shorthand: one implicit state that is final.
        if (seen_initial || seen_final)
            fail(ErrorKind::SyntaxError,
                 "'initial:'/'final:' appear only together with 'states:'");
        d.states = {std::string(kStatelessStateName)};
        d.initial_state = d.states.front();
        d.final_states = d.states;
    }

    for (const Line& line : trans_lines) {
        auto arrow = std::find(line.tokens.begin(), line.tokens.end(), "->");
        if (arrow == line.tokens.end()) syntax_error(line.number, "transition needs '->'");
        std::vector<std::string> lhs(line.tokens.begin(), arrow);
        std::vector<std::string> rhs(arrow + 1, line.tokens.end());

        RawTransition t;
        if (seen_states) {
            if (lhs.size() != 3)
                syntax_error(line.number, "expected 'trans: state top input -> state push...'");
            if (rhs.empty())
                syntax_error(line.number, "expected a target state after '->'");
            t.state = lhs[0];
            t.top = lhs[1];
            if (lhs[2] != kEpsilonToken) t.input = lhs[2];
            t.target_state = rhs[0];
            t.push = parse_push(line, {rhs.begin() + 1, rhs.end()});
        } else {
            if (lhs.size() != 2)
                syntax_error(line.number,
                             "expected 'trans: top input -> push...' in stateless shorthand");
            t.state = d.states.front();
            t.top = lhs[0];
            if (lhs[1] != kEpsilonToken) t.input = lhs[1];
            t.target_state = d.states.front();
            t.push = parse_push(line, rhs);
        }
        d.transitions.push_back(std::move(t));
    }
    return d;
}

Pda parse(std::string_view text) { return validate(parse_description(text)); }

namespace {

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out += ' ';
        out += tokens[i];
    }
    return out;
}

std::string push_text(const Pda& m, const std::vector<StackId>& push) {
    if (push.empty()) return std::string(kEpsilonToken);
    std::vector<std::string> names;
    for (StackId id : push) names.push_back(m.stack_name(id));
    return join(names);
}

} // namespace

std::string serialize(const Pda& m) {
    bool shorthand = m.state_count() == 1 && m.state_name(0) == kStatelessStateName &&
                     m.final_states().size() == 1;
    std::ostringstream out;
    if (!shorthand) out << "states: " << join(m.state_names()) << '\n';
    out << "input: " << join(m.input_alphabet()) << '\n';
    out << "stack: " << join(m.stack_alphabet()) << '\n';
    if (!shorthand) out << "initial: " << m.state_name(m.initial_state()) << '\n';
    std::vector<std::string> start;
    for (StackId id : m.initial_stack()) start.push_back(m.stack_name(id));
    out << "start-stack: " << join(start) << '\n';
    if (!shorthand) {
        out << "final:";
        for (StateId q : m.final_states()) out << ' ' << m.state_name(q);
        out << '\n';
    }

    using Row = std::tuple<std::string, std::string, std::string, std::string, std::string>;
    std::vector<Row> rows;
    for (const auto& [key, targets] : m.transitions())
        for (const auto& target : targets)
            rows.emplace_back(m.state_name(key.state), m.stack_name(key.top),
                              key.input ? m.input_name(*key.input) : std::string(kEpsilonToken),
                              m.state_name(target.state), push_text(m, target.push));
    std::sort(rows.begin(), rows.end());
    for (const auto& [state, top, input, tstate, push] : rows) {
        if (shorthand)
            out << "trans: " << top << ' ' << input << " -> " << push << '\n';
        else
            out << "trans: " << state << ' ' << top << ' ' << input << " -> " << tstate << ' '
                << push << '\n';
    }
    return out.str();
}

std::string format_class_report(const ClassReport& report) {
    std::ostringstream out;
    auto yesno = [](bool b) { return b ? "yes" : "no"; };
    out << "deterministic: " << yesno(report.deterministic) << '\n'
        << "realtime: " << yesno(report.realtime) << '\n'
        << "stateless: " << yesno(report.stateless) << '\n'
        << "pushdown-alphabet-size: " << report.pushdown_alphabet_size << '\n'
        << "non-input-symbol-count: " << report.non_input_symbol_count << '\n';
    if (!report.violations.empty()) {
        out << "violations:" << '\n';
        for (const auto& v : report.violations) out << "  - " << v << '\n';
    }
    return out.str();
}

std::string format_transform_log(const TransformLog& log) {
    std::ostringstream out;
    out << "alphabet: " << log.alphabet_before << " -> " << log.alphabet_after << '\n';
    for (const auto& [sym, replacement] : log.eliminated)
        out << "eliminated: " << sym << " -> "
            << (replacement.empty() ? std::string(kEpsilonToken) : join(replacement)) << '\n';
    if (!log.removed_dead.empty()) {
        out << "removed-dead:";
        for (const auto& sym : log.removed_dead) out << ' ' << sym;
        out << '\n';
    }
    return out.str();
}

std::string format_search_report(const SearchReport& report) {
    std::ostringstream out;
    out << "target-language:";
    for (const Word& w : report.target_language) out << ' ' << render_word(w);
    out << '\n';
    const SearchBounds& b = report.bounds;
    out << "bounds: gamma<=" << b.max_pushdown_symbols << " push<=" << b.max_push_length
        << " alpha<=" << b.max_initial_length << " states<=" << b.max_states
        << " length-bound=" << b.length_bound << " epsilon-budget=" << b.epsilon_budget
        << " ceiling=" << b.candidate_ceiling << '\n';
    out << "candidates-examined: " << report.candidates_examined << '\n';
    out << "candidates-after-symmetry: " << report.candidates_after_symmetry << '\n';
    out << "accepting-machines: " << report.accepting_machines.size() << '\n';
    out << "wall-notes: " << report.wall_notes << '\n';
    out << "caveat: exhaustive only for the bounded model stated above; says nothing about "
           "machines outside these bounds\n";
    for (std::size_t i = 0; i < report.accepting_machines.size(); ++i)
        out << "machine " << (i + 1) << ":\n" << serialize(report.accepting_machines[i]);
    return out.str();
}

} // namespace pda
