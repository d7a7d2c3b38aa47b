#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pda/format.hpp"
#include "pda/machine.hpp"
#include "pda/search.hpp"
#include "pda/simulate.hpp"
#include "pda/transform.hpp"
#include "pda/witness.hpp"

namespace {

constexpr int kExitUsage = 64;

int exit_code_for(const pda::Error& e) {
    switch (e.kind()) {
        case pda::ErrorKind::SyntaxError:
        case pda::ErrorKind::UnknownSymbol:
        case pda::ErrorKind::EmptyAlphabet:
        case pda::ErrorKind::BadInitial:
        case pda::ErrorKind::BadFinal:
        case pda::ErrorKind::DuplicateName:
        case pda::ErrorKind::BadName:
            return 1; // parse / validation failure
        default:
            return 2; // domain error
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        std::exit(1);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

pda::Pda load(const std::string& path) { return pda::parse(read_file(path)); }

// --budget flag beats PDA_EPSILON_BUDGET beats the machine default.
std::size_t pick_budget(const pda::Pda& m, long long flag_value) {
    if (flag_value > 0) return static_cast<std::size_t>(flag_value);
    if (const char* env = std::getenv("PDA_EPSILON_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return pda::default_epsilon_budget(m);
}

pda::WitnessSpec make_spec(const std::string& family, int m, int n, int c) {
    pda::WitnessSpec spec;
    if (family == "stateless") spec.family = pda::WitnessFamily::StatelessLn;
    else if (family == "mstate") spec.family = pda::WitnessFamily::MStateLmn;
    else if (family == "example") spec.family = pda::WitnessFamily::ExampleTwoState;
    else if (family == "unary") spec.family = pda::WitnessFamily::UnaryL1;
    else if (family == "noninput") spec.family = pda::WitnessFamily::NonInputKn;
    else pda::fail(pda::ErrorKind::BadSpec, "unknown family '" + family + "'");
    spec.m = m;
    spec.n = n;
    spec.c = c;
    return spec;
}

std::string config_line(const pda::Pda& m, const pda::Configuration& c) {
    pda::Word stack_names;
    for (pda::StackId id : c.stack) stack_names.push_back(m.stack_name(id));
    return m.state_name(c.state) + " | " + pda::render_word(stack_names) + " | " +
           pda::render_word(m.input_word(c.remaining));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pushdown automata toolkit: simulate, classify, transform and "
                 "exhaustively search small pushdown automata"};
    app.require_subcommand(1);

    std::string file, input_text, out_path, family = "stateless";
    long long budget_flag = 0;
    bool trace = false, language_only = false, find_min = false;
    int max_len = 8, opt_m = 1, opt_n = 2, opt_c = 0;
    int gamma = 1, max_push = 1, max_alpha = 1, states = 1;
    std::uint64_t ceiling = 100'000'000;

    auto* cmd_validate = app.add_subcommand("validate", "check a machine file and print its classes");
    cmd_validate->add_option("file", file)->required();

    auto* cmd_classify = app.add_subcommand("classify", "print the class report of a machine");
    cmd_classify->add_option("file", file)->required();

    auto* cmd_run = app.add_subcommand("run", "run a deterministic machine on one input word");
    cmd_run->add_option("file", file)->required();
    cmd_run->add_option("--input", input_text, "input word")->required();
    cmd_run->add_option("--budget", budget_flag, "epsilon-step budget");
    cmd_run->add_flag("--trace", trace, "print each configuration as 'state | stack | remaining'");

    auto* cmd_enum = app.add_subcommand("enumerate", "list all accepted words up to a length");
    cmd_enum->add_option("file", file)->required();
    cmd_enum->add_option("--max-len", max_len, "maximum word length")->required();
    cmd_enum->add_option("--budget", budget_flag, "epsilon-step budget");

    auto* cmd_realtime = app.add_subcommand(
        "realtime", "eliminate epsilon transitions from a stateless deterministic machine");
    cmd_realtime->add_option("file", file)->required();
    cmd_realtime->add_option("-o,--output", out_path, "write the transformed machine here");

    auto* cmd_witness = app.add_subcommand("witness", "emit a built-in machine family member");
    cmd_witness->add_option("--family", family, "stateless|mstate|example|unary|noninput")
        ->required();
    cmd_witness->add_option("-m", opt_m, "state parameter");
    cmd_witness->add_option("-n", opt_n, "pushdown alphabet parameter");
    cmd_witness->add_option("-c", opt_c, "unary word length");
    cmd_witness->add_flag("--language", language_only, "print the reference words instead");

    auto* cmd_search = app.add_subcommand(
        "search", "exhaustively search bounded realtime machines for exact acceptors");
    cmd_search->add_option("--target-family", family, "stateless|mstate|example|unary|noninput")
        ->required();
    cmd_search->add_option("-m", opt_m, "state parameter of the target family");
    cmd_search->add_option("-n", opt_n, "alphabet parameter of the target family");
    cmd_search->add_option("-c", opt_c, "unary word length of the target family");
    cmd_search->add_option("--gamma", gamma, "pushdown alphabet ceiling")->required();
    cmd_search->add_option("--max-push", max_push, "push string length ceiling")->required();
    cmd_search->add_option("--max-alpha", max_alpha, "initial pushdown length ceiling")->required();
    cmd_search->add_option("--max-len", max_len, "bounded-language comparison length")->required();
    cmd_search->add_option("--states", states, "state ceiling of the searched space");
    cmd_search->add_option("--ceiling", ceiling, "refuse spaces with more raw candidates");
    cmd_search->add_flag("--find-min", find_min,
                         "report the smallest pushdown alphabet with an acceptor instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*cmd_validate || *cmd_classify) {
            pda::Pda m = load(file);
            std::cout << pda::format_class_report(pda::classify(m));
            return 0;
        }
        if (*cmd_run) {
            pda::Pda m = load(file);
            auto ids = m.input_ids_from_text(input_text);
            pda::RunOutcome outcome = pda::run(m, ids, pick_budget(m, budget_flag));
            if (trace)
                for (const auto& c : outcome.trace) std::cout << config_line(m, c) << '\n';
            std::cout << pda::to_string(outcome.verdict) << '\n';
            switch (outcome.verdict) {
                case pda::Verdict::Accepted: return 0;
                case pda::Verdict::Rejected: return 1;
                case pda::Verdict::Diverged: return 2;
            }
        }
        if (*cmd_enum) {
            pda::Pda m = load(file);
            pda::LanguageSample sample =
                pda::enumerate_language(m, static_cast<std::size_t>(max_len),
                                        pick_budget(m, budget_flag));
            for (const pda::Word& w : sample.strings) std::cout << pda::render_word(w) << '\n';
            if (!sample.diverged.empty()) {
                std::cout << "# diverged:\n";
                for (const pda::Word& w : sample.diverged) std::cout << pda::render_word(w) << '\n';
            }
            return 0;
        }
        if (*cmd_realtime) {
            pda::Pda m = load(file);
            pda::RealtimeResult result = pda::to_realtime(m);
            std::string text = pda::serialize(result.machine);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot write '" << out_path << "'\n";
                    return 1;
                }
                out << text;
            }
            std::cerr << pda::format_transform_log(result.log);
            return 0;
        }
        if (*cmd_witness) {
            pda::WitnessSpec spec = make_spec(family, opt_m, opt_n, opt_c);
            if (language_only) {
                for (const pda::Word& w : pda::witness_language(spec))
                    std::cout << pda::render_word(w) << '\n';
            } else {
                std::cout << pda::serialize(pda::build_witness(spec));
            }
            return 0;
        }
        if (*cmd_search) {
            pda::WitnessSpec spec = make_spec(family, opt_m, opt_n, opt_c);
            pda::WordSet target = pda::witness_language(spec);
            pda::SearchBounds bounds;
            bounds.max_pushdown_symbols = gamma;
            bounds.max_push_length = max_push;
            bounds.max_initial_length = max_alpha;
            bounds.max_states = states;
            bounds.length_bound = max_len;
            bounds.candidate_ceiling = ceiling;
            if (find_min) {
                auto k = pda::min_pushdown_alphabet(target, bounds);
                if (k)
                    std::cout << "min-pushdown-alphabet: " << *k << '\n';
                else
                    std::cout << "not-found-within-bounds\n";
            } else {
                std::cout << pda::format_search_report(pda::search_for_target(target, bounds));
            }
            return 0;
        }
    } catch (const pda::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return kExitUsage;
}
