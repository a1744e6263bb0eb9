// fgt: free-group toolkit command line.
//
// Subcommands: member, primitive, rprim, stallings, eigen, bench.
// Exit codes: 0 positive verdict, 1 negative verdict, 2 parse/usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fg/bench.hpp"
#include "fg/growth.hpp"
#include "fg/primitivity.hpp"
#include "fg/random.hpp"
#include "fg/stallings.hpp"

namespace {

struct WordArgs {
    std::vector<std::string> words;
    std::string words_file;
    int rank = 0;  // 0 = infer
    bool auto_reduce = false;
};

std::vector<std::string> collect_word_texts(const WordArgs& args) {
    std::vector<std::string> texts = args.words;
    if (!args.words_file.empty()) {
        std::ifstream in(args.words_file);
        if (!in) throw std::invalid_argument("cannot open " + args.words_file);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty()) texts.push_back(line);
        }
    }
    return texts;
}

fg::Alphabet infer_alphabet(const std::vector<std::vector<fg::Letter>>& raw, int requested) {
    int max_index = 1;
    for (const auto& ls : raw) {
        for (fg::Letter a : ls) max_index = std::max(max_index, std::abs(a));
    }
    if (requested > 0) {
        if (requested < max_index) {
            throw std::invalid_argument("--rank " + std::to_string(requested) +
                                        " is smaller than a letter used (" +
                                        std::to_string(max_index) + ")");
        }
        return fg::Alphabet(requested);
    }
    return fg::Alphabet(max_index);
}

struct ParsedWords {
    fg::Alphabet alphabet{1};
    std::vector<fg::Word> words;
};

ParsedWords parse_all(const std::vector<std::string>& texts, int requested_rank, bool auto_reduce) {
    std::vector<std::vector<fg::Letter>> raw;
    raw.reserve(texts.size());
    for (const std::string& t : texts) raw.push_back(fg::parse_letters(t));
    ParsedWords out;
    out.alphabet = infer_alphabet(raw, requested_rank);
    for (auto& ls : raw) {
        if (auto_reduce) {
            out.words.push_back(fg::reduce(ls));
        } else {
            out.words.push_back(fg::Word::checked(std::move(ls)));
        }
    }
    return out;
}

void add_word_flags(CLI::App* cmd, WordArgs& args) {
    cmd->add_option("--words-file", args.words_file, "read words from a file, one per line");
    cmd->add_option("--rank", args.rank, "alphabet rank (default: inferred from the words)");
    cmd->add_flag("--reduce", args.auto_reduce, "freely reduce unreduced input words");
}

std::string expr_text(const fg::Word& x) {
    const std::string s = fg::format_xword(x);
    return s.empty() ? std::string() : " " + s;
}

// With --words-file the first line is w0 and the remaining lines are the
// generators; a positional w0 takes precedence.
int cmd_member(const WordArgs& args, bool w0_given, const std::string& w0_text,
               const std::vector<std::string>& gen_texts, const std::string& algorithm,
               const std::string& policy_text) {
    std::vector<std::string> texts;
    if (w0_given) texts.push_back(w0_text);
    for (const auto& g : gen_texts) texts.push_back(g);
    for (const auto& g : collect_word_texts(args)) texts.push_back(g);
    if (texts.empty()) throw std::invalid_argument("no words given");
    ParsedWords p = parse_all(texts, args.rank, args.auto_reduce);
    const fg::Word w0 = p.words.front();
    const std::vector<fg::Word> gens(p.words.begin() + 1, p.words.end());
    if (gens.empty()) throw std::invalid_argument("no generators given");

    if (algorithm == "mp") {
        auto x0 = fg::membership_mp(w0, gens, p.alphabet);
        if (x0) {
            std::cout << "member" << expr_text(*x0) << " (mp)\n";
            return 0;
        }
        std::cout << "non-member (mp)\n";
        return 1;
    }
    const fg::DepthPolicy policy = fg::DepthPolicy::parse(policy_text);
    const fg::MembershipReport rep = fg::membership_mpd(w0, gens, policy, p.alphabet);
    const char* path = rep.path == fg::MembershipReport::Path::fast ? "fast" : "fallback";
    if (rep.member) {
        std::cout << "member" << expr_text(*rep.expression) << " (" << path << ")\n";
        return 0;
    }
    std::cout << "non-member (" << path << ")\n";
    return 1;
}

int cmd_primitive(const WordArgs& args, bool w_given, const std::string& w_text,
                  const std::string& algorithm) {
    std::vector<std::string> texts;
    if (w_given) texts.push_back(w_text);
    for (const auto& g : collect_word_texts(args)) texts.push_back(g);
    if (texts.empty()) throw std::invalid_argument("no word given");
    ParsedWords p = parse_all(texts, args.rank == 0 ? 2 : args.rank, args.auto_reduce);
    const fg::Word w = p.words.front();

    if (algorithm == "whitehead") {
        const bool prim = fg::is_primitive_whitehead(w, p.alphabet);
        std::cout << (prim ? "primitive" : "not primitive") << " (whitehead)\n";
        return prim ? 0 : 1;
    }
    const fg::PrimitivityReport rep = fg::is_primitive_shpilrain(w, p.alphabet);
    std::cout << (rep.primitive ? "primitive" : "not primitive");
    switch (rep.route) {
        case fg::PrimitivityReport::Route::short_core: std::cout << " (short-core)"; break;
        case fg::PrimitivityReport::Route::obstruction:
            std::cout << " (obstruction at step " << rep.obstruction_step << ")";
            break;
        case fg::PrimitivityReport::Route::whitehead_fallback: std::cout << " (fallback)"; break;
    }
    std::cout << "\n";
    return rep.primitive ? 0 : 1;
}

int cmd_rprim(const WordArgs& args, bool w0_given, const std::string& w0_text,
              const std::vector<std::string>& gen_texts, const std::string& policy_text) {
    std::vector<std::string> texts;
    if (w0_given) texts.push_back(w0_text);
    for (const auto& g : gen_texts) texts.push_back(g);
    for (const auto& g : collect_word_texts(args)) texts.push_back(g);
    if (texts.empty()) throw std::invalid_argument("no words given");
    ParsedWords p = parse_all(texts, args.rank, args.auto_reduce);
    const fg::Word w0 = p.words.front();
    const std::vector<fg::Word> gens(p.words.begin() + 1, p.words.end());
    if (gens.empty()) throw std::invalid_argument("no generators given");

    const fg::DepthPolicy policy = fg::DepthPolicy::parse(policy_text);
    const fg::RPrimReport rep = fg::relative_primitivity(w0, gens, policy, p.alphabet);
    const char* path = rep.membership_path == fg::MembershipReport::Path::fast ? "fast" : "fallback";
    if (!rep.member) {
        std::cout << "non-member (" << path << ")\n";
        return 1;
    }
    std::cout << "member" << expr_text(*rep.expression) << " ("
              << (*rep.primitive_in_subgroup ? "primitive" : "not primitive")
              << " in the subgroup, " << path << ")\n";
    return 0;
}

int cmd_stallings(const WordArgs& args, const std::vector<std::string>& gen_texts,
                  const std::string& dot_path) {
    std::vector<std::string> texts = gen_texts;
    for (const auto& g : collect_word_texts(args)) texts.push_back(g);
    ParsedWords p = parse_all(texts, args.rank, args.auto_reduce);
    const fg::StallingsGraph g = fg::StallingsGraph::build(p.words, p.alphabet);
    std::cout << "V=" << g.vertex_count() << " E=" << g.edge_count()
              << " rank=" << g.subgroup_rank() << " index=";
    if (auto idx = g.finite_index()) {
        std::cout << *idx;
    } else {
        std::cout << "inf";
    }
    std::cout << "\n";
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw std::runtime_error("cannot write " + dot_path);
        out << g.to_dot();
    }
    return 0;
}

int cmd_eigen(int rmax) {
    std::cout << "r,gaa_closed,gaa_power,gab_closed,gab_power,bound\n";
    for (int r = 2; r <= rmax; ++r) {
        const fg::Alphabet alpha(r);
        const double gaa_p = fg::dominant_eigenvalue(
            fg::automaton_matrix(fg::complete_letter_graph_minus(r, 1, -1)), 1e-8);
        // the r=2 automaton has a defective dominant eigenvalue; the gap
        // criterion closes like 1/t, so the tolerance stays above 2e-6
        const double gab_p = fg::dominant_eigenvalue(
            fg::automaton_matrix(fg::complete_letter_graph_minus(r, 1, 2)), 2e-5);
        const double bound = (2.0 * r - 1.0) * (1.0 - 0.5 / (static_cast<double>(r) * r));
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d,%.9g,%.9g,%.9g,%.9g,%.9g\n", r, fg::gaa_modulus(r),
                      gaa_p, fg::gab_modulus(r), gab_p, bound);
        std::cout << buf;
    }
    return 0;
}

int cmd_bench(fg::ExperimentConfig config, const std::string& out_path) {
    const auto start = std::chrono::steady_clock::now();
    const fg::Table table = fg::run_experiment(config);
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    // Wall time goes to stderr only: the CSV must be byte-identical across
    // reruns with the same seed.
    std::cerr << "bench " << config.name << ": " << elapsed.count() << " ms\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << table.csv();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << table.csv();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"free-group toolkit: membership, primitivity, growth, benchmarks"};
    app.require_subcommand(1);

    WordArgs member_args, prim_args, rprim_args, stall_args;
    std::string w0_text, gen_policy = "logn", member_algorithm = "mpd";
    std::vector<std::string> gen_texts;

    CLI::App* member = app.add_subcommand("member", "decide membership of w0 in <gens>");
    member->add_option("w0", w0_text, "the word to test");
    member->add_option("--gens", gen_texts, "subgroup generators");
    member->add_option("--algorithm", member_algorithm, "mp | mpd")
        ->check(CLI::IsMember({"mp", "mpd"}));
    member->add_option("--depth-policy", gen_policy, "logn | pow:g | lin:g | log3b:b");
    add_word_flags(member, member_args);

    std::string prim_word, prim_algorithm = "shpilrain";
    CLI::App* primitive = app.add_subcommand("primitive", "decide primitivity of a word");
    primitive->add_option("w", prim_word, "the word to test");
    primitive->add_option("--algorithm", prim_algorithm, "shpilrain | whitehead")
        ->check(CLI::IsMember({"shpilrain", "whitehead"}));
    add_word_flags(primitive, prim_args);

    std::string rprim_w0, rprim_policy = "logn";
    std::vector<std::string> rprim_gens;
    CLI::App* rprim = app.add_subcommand("rprim", "membership plus primitivity in the subgroup");
    rprim->add_option("w0", rprim_w0, "the word to test");
    rprim->add_option("--gens", rprim_gens, "subgroup generators");
    rprim->add_option("--depth-policy", rprim_policy, "logn | pow:g | lin:g | log3b:b");
    add_word_flags(rprim, rprim_args);

    std::vector<std::string> stall_gens;
    std::string dot_path;
    CLI::App* stallings = app.add_subcommand("stallings", "fold the subgroup graph");
    stallings->add_option("--gens", stall_gens, "subgroup generators");
    stallings->add_option("--dot", dot_path, "write the graph in DOT format");
    add_word_flags(stallings, stall_args);

    int rmax = 8;
    CLI::App* eigen = app.add_subcommand("eigen", "growth moduli of the deleted-edge automata");
    eigen->add_option("--rmax", rmax, "largest rank in the table")->check(CLI::Range(2, 24));

    fg::ExperimentConfig config;
    std::string bench_policy = "logn", out_path;
    CLI::App* bench = app.add_subcommand("bench", "Monte Carlo experiments (CSV output)");
    bench->add_option("experiment", config.name, "one of: ctp-failure ppp-cost core-tail mpd-cost shpilrain-flat cutvertex-decay")
        ->required();
    bench->add_option("--rank", config.rank, "alphabet rank");
    bench->add_option("--k", config.k, "tuple size");
    bench->add_option("--lengths", config.lengths, "n sweep");
    bench->add_option("--w0-lengths", config.w0_lengths, "m sweep (mpd-cost)");
    bench->add_option("--ells", config.ells, "ell sweep (core-tail)");
    bench->add_option("--samples", config.samples, "trials per row");
    bench->add_option("--seed", config.seed, "master seed (recorded in the CSV)");
    bench->add_option("--depth-policy", bench_policy, "logn | pow:g | lin:g | log3b:b");
    bench->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (member->parsed()) {
            return cmd_member(member_args, member->count("w0") > 0, w0_text, gen_texts,
                              member_algorithm, gen_policy);
        }
        if (primitive->parsed()) {
            return cmd_primitive(prim_args, primitive->count("w") > 0, prim_word, prim_algorithm);
        }
        if (rprim->parsed()) {
            return cmd_rprim(rprim_args, rprim->count("w0") > 0, rprim_w0, rprim_gens, rprim_policy);
        }
        if (stallings->parsed()) return cmd_stallings(stall_args, stall_gens, dot_path);
        if (eigen->parsed()) return cmd_eigen(rmax);
        if (bench->parsed()) {
            config.policy = fg::DepthPolicy::parse(bench_policy);
            if (config.lengths.empty()) {
                if (config.name == "ppp-cost") config.lengths = {100, 1000, 10000};
                else if (config.name == "core-tail") config.lengths = {100};
                else if (config.name == "mpd-cost") config.lengths = {100};
                else if (config.name == "shpilrain-flat") config.lengths = {1000, 10000, 100000};
                else if (config.name == "cutvertex-decay") config.lengths = {10, 15, 20, 25};
                else config.lengths = {50, 100, 200};
            }
            if (config.name == "core-tail" && config.ells.empty()) config.ells = {1, 2, 3, 4, 5};
            if (config.name == "mpd-cost" && config.w0_lengths.empty())
                config.w0_lengths = {1000, 10000};
            return cmd_bench(config, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
