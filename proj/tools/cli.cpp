// Copyright 2026 The ngramsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ngramsim/corpus.hpp"
#include "ngramsim/errors.hpp"
#include "ngramsim/report.hpp"

namespace ngramsim::cli {

namespace {

using nlohmann::json;

// Raised for problems the user must fix on the command line (exit 2).
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A word from its positional argument or, when given, from a file. A single
// trailing newline of the file is dropped.
std::string word_argument(const std::string& positional, const std::string& file) {
    if (file.empty()) return positional;
    std::string s = read_file(file);
    if (!s.empty() && s.back() == '\n') s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

std::string render(const SimilarityScore& score, const CliConfig& config) {
    const std::string decimal = score.to_decimal(config.precision);
    return config.exact ? score.to_fraction() + " = " + decimal : decimal;
}

json score_json(const SimilarityScore& score) {
    return {{"value", score.as_float()}, {"numerator", score.numerator()}, {"denominator", score.denominator()}};
}

struct SimArgs {
    std::string w1, w2, w1_file, w2_file;
    bool directional = false;
};

int cmd_sim(const SimArgs& args, const CliConfig& config, std::ostream& out) {
    const Text w1 = decode(word_argument(args.w1, args.w1_file), config.symbol_mode, config.lowercase);
    const Text w2 = decode(word_argument(args.w2, args.w2_file), config.symbol_mode, config.lowercase);

    const SimilarityScore score = similarity(w1, w2, config.algo);
    const bool defined = !(w1.empty() && w2.empty());
    ScfCount forward = 0, backward = 0;
    SimilarityScore sim_forward, sim_backward;
    if (args.directional && defined) {
        forward = scf(w1, w2, config.algo);
        backward = scf(w2, w1, config.algo);
        const auto longer = std::max(w1.size(), w2.size());
        sim_forward = SimilarityScore::from_count(forward, longer);
        sim_backward = SimilarityScore::from_count(backward, longer);
    }

    switch (config.format) {
        case OutputFormat::text:
            out << render(score, config) << '\n';
            if (args.directional) {
                if (defined) {
                    out << "sim(w1, w2) " << render(sim_forward, config) << " scf " << forward << '\n';
                    out << "sim(w2, w1) " << render(sim_backward, config) << " scf " << backward << '\n';
                } else {
                    out << "sim(w1, w2) undefined for two empty words\n";
                }
            }
            break;
        case OutputFormat::json: {
            json doc = {{"algo", to_string(config.algo)},
                        {"similarity", score_json(score)},
                        {"formatted", score.to_decimal(config.precision)}};
            if (args.directional && defined) {
                doc["forward"] = {{"scf", forward}, {"sim", score_json(sim_forward)}};
                doc["backward"] = {{"scf", backward}, {"sim", score_json(sim_backward)}};
            }
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "similarity,numerator,denominator";
            if (args.directional && defined) out << ",scf_forward,scf_backward";
            out << '\n' << score.to_decimal(config.precision) << ',' << score.numerator() << ',' << score.denominator();
            if (args.directional && defined) out << ',' << forward << ',' << backward;
            out << '\n';
            break;
    }
    return 0;
}

struct ScfArgs {
    std::string w1, w2, w1_file, w2_file;
    bool exhaustive = false;
};

int cmd_scf(const ScfArgs& args, const CliConfig& config, std::ostream& out) {
    const Text w1 = decode(word_argument(args.w1, args.w1_file), config.symbol_mode, config.lowercase);
    const Text w2 = decode(word_argument(args.w2, args.w2_file), config.symbol_mode, config.lowercase);

    ComparisonCounter counter;
    const ScfCount count = scf(w1, w2, config.algo, counter, args.exhaustive);

    switch (config.format) {
        case OutputFormat::text:
            out << "scf: " << count << '\n' << "comparisons: " << counter.count() << '\n';
            break;
        case OutputFormat::json:
            out << json{{"algo", to_string(config.algo)},
                        {"len1", w1.size()},
                        {"len2", w2.size()},
                        {"scf", count},
                        {"comparisons", counter.count()}}
                       .dump(2)
                << '\n';
            break;
        case OutputFormat::csv:
            out << "algo,len1,len2,scf,comparisons\n"
                << to_string(config.algo) << ',' << w1.size() << ',' << w2.size() << ',' << count << ','
                << counter.count() << '\n';
            break;
    }
    return 0;
}

corpus::Dictionary open_dictionary(const std::string& path, const CliConfig& config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open dictionary " + path);
    return corpus::load_dictionary(in, {config.symbol_mode, config.lowercase});
}

struct TopkArgs {
    std::string query, query_file, dict_path;
    long long k = 10;
};

int cmd_topk(const TopkArgs& args, const CliConfig& config, std::ostream& out) {
    if (args.k < 1) throw UsageError("k must be at least 1");
    const Text query = decode(word_argument(args.query, args.query_file), config.symbol_mode, config.lowercase);
    const corpus::Dictionary dict = open_dictionary(args.dict_path, config);
    const auto results = corpus::top_k(query, dict, static_cast<std::size_t>(args.k), config.algo);

    switch (config.format) {
        case OutputFormat::text:
            for (const auto& r : results) out << r.raw << ' ' << render(r.score, config) << '\n';
            break;
        case OutputFormat::json: {
            auto array = json::array();
            for (const auto& r : results) {
                array.push_back({{"id", r.entry_id},
                                 {"entry", r.raw},
                                 {"score", score_json(r.score)},
                                 {"formatted", r.score.to_decimal(config.precision)}});
            }
            out << array.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "id,entry,score\n";
            for (const auto& r : results) {
                out << r.entry_id << ',' << report::csv_field(r.raw) << ','
                    << (config.exact ? r.score.to_fraction() : r.score.to_decimal(config.precision)) << '\n';
            }
            break;
    }
    return 0;
}

struct MatrixArgs {
    std::string dict_path, out_path;
};

int cmd_matrix(const MatrixArgs& args, const CliConfig& config, std::ostream& out) {
    const corpus::Dictionary dict = open_dictionary(args.dict_path, config);
    const corpus::ScoreMatrix matrix = corpus::similarity_matrix(dict, config.algo);
    const corpus::MatrixFormat format{config.precision, config.exact};
    if (args.out_path == "-") {
        corpus::write_matrix_csv(out, dict, matrix, format);
        return 0;
    }
    std::ofstream file(args.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output " + args.out_path);
    corpus::write_matrix_csv(file, dict, matrix, format);
    file.flush();
    if (!file) throw std::runtime_error("write failed for " + args.out_path);
    return 0;
}

struct VerifyArgs {
    long long max_a = 10;
    long long max_b = 10;
    long long pairs = 100;
    long long max_len = 50;
    std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& args, const CliConfig& config, std::ostream& out,
               const complexity::CountingKernels& kernels) {
    if (args.max_a < 1 || args.max_b < 1) throw UsageError("--max-a and --max-b must be positive");
    if (args.pairs < 0 || args.max_len < 0) throw UsageError("--pairs and --max-len must be non-negative");

    auto naive = complexity::verify_naive_count(static_cast<std::uint64_t>(args.max_a),
                                                static_cast<std::uint64_t>(args.max_b), kernels);
    std::mt19937_64 rng(args.seed);
    const auto pairs =
        complexity::random_pairs(static_cast<std::size_t>(args.pairs), static_cast<std::size_t>(args.max_len), rng);
    auto dynamic = complexity::verify_dynamic_count(pairs, kernels);

    std::vector<complexity::CountRecord> records = std::move(naive);
    const std::size_t naive_count = records.size();
    records.insert(records.end(), dynamic.begin(), dynamic.end());
    const bool ok = complexity::all_match(records);

    switch (config.format) {
        case OutputFormat::text: {
            const auto mismatches = std::ranges::count(records, false, &complexity::CountRecord::match);
            out << "naive worst-case grid: " << naive_count << " records\n";
            out << "dynamic and similarity: " << records.size() - naive_count << " records\n";
            for (const auto& r : records) {
                if (!r.match) {
                    out << "mismatch " << r.algo << ' ' << r.len1 << 'x' << r.len2 << ": " << r.comparisons
                        << " comparisons, predicted " << r.predicted << '\n';
                }
            }
            out << (ok ? "all counts match" : std::to_string(mismatches) + " count mismatches") << '\n';
            break;
        }
        case OutputFormat::json: report::write_json(out, records); break;
        case OutputFormat::csv: report::write_csv(out, records); break;
    }
    return ok ? 0 : 1;
}

struct BenchArgs {
    std::vector<std::size_t> sizes;
    std::vector<std::string> algos;
    long long trials = 3;
    std::size_t naive_cap = 300;
};

int cmd_bench(const BenchArgs& args, const CliConfig& config, std::ostream& out) {
    if (args.trials < 1) throw UsageError("--trials must be at least 1");
    if (args.sizes.empty()) throw UsageError("--sizes must list at least one size");
    if (!std::ranges::is_sorted(args.sizes)) throw UsageError("--sizes must be ascending");

    std::vector<Algorithm> algos;
    if (args.algos.empty()) {
        algos.push_back(config.algo);
    } else {
        for (const auto& name : args.algos) {
            const auto algo = parse_algorithm(name);
            if (!algo) throw UsageError("unknown algorithm '" + name + "'");
            algos.push_back(*algo);
        }
    }
    for (Algorithm algo : algos) {
        if (algo == Algorithm::naive && args.sizes.back() > args.naive_cap) {
            throw UsageError("size " + std::to_string(args.sizes.back()) + " exceeds the naive benchmark cap of " +
                             std::to_string(args.naive_cap) + " (raise it with --naive-cap)");
        }
    }

    std::vector<complexity::ScalingRecord> records;
    for (Algorithm algo : algos) {
        auto part = complexity::scaling_experiment(algo, args.sizes, static_cast<std::size_t>(args.trials));
        records.insert(records.end(), part.begin(), part.end());
    }

    switch (config.format) {
        case OutputFormat::text:
            out << std::left << std::setw(18) << "algo" << std::right << std::setw(10) << "len" << std::setw(16)
                << "wall_time_ms" << std::setw(20) << "comparisons" << '\n';
            for (const auto& r : records) {
                out << std::left << std::setw(18) << r.algo << std::right << std::setw(10) << r.len << std::setw(16)
                    << std::fixed << std::setprecision(3) << static_cast<double>(r.wall_time.count()) / 1e6
                    << std::setw(20) << r.comparisons << '\n';
            }
            break;
        case OutputFormat::json: report::write_json(out, records); break;
        case OutputFormat::csv: report::write_csv(out, records); break;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const complexity::CountingKernels& kernels) {
    CLI::App app{"Generalized n-gram string similarity"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig config;
    std::string algo_name = "dynamic";
    std::string format_name = "text";
    const std::map<std::string, OutputFormat> format_names{
        {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    app.add_option("--algo", algo_name, "scf kernel: dynamic, naive or patsearch")
        ->check(CLI::IsMember({"dynamic", "naive", "patsearch"}))
        ->envname(kAlgoEnv);
    app.add_option("--format", format_name, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    bool bytes = false;
    app.add_flag("--bytes", bytes, "Treat input as raw bytes instead of UTF-8 code points");
    app.add_flag("--lowercase", config.lowercase, "Lowercase inputs before scoring");
    app.add_flag("--exact", config.exact, "Print scores as numerator/denominator too");
    app.add_option("--precision", config.precision, "Decimal digits in printed scores")->check(CLI::Range(0, 18));

    SimArgs sim_args;
    auto* sim_cmd = app.add_subcommand("sim", "Symmetrized similarity of two words");
    sim_cmd->add_option("w1", sim_args.w1, "First word");
    sim_cmd->add_option("w2", sim_args.w2, "Second word");
    sim_cmd->add_option("--w1-file", sim_args.w1_file, "Read the first word from a file");
    sim_cmd->add_option("--w2-file", sim_args.w2_file, "Read the second word from a file");
    sim_cmd->add_flag("--directional", sim_args.directional, "Also print both directional scores and scf counts");

    ScfArgs scf_args;
    auto* scf_cmd = app.add_subcommand("scf", "Count substrings of w1 occurring in w2");
    scf_cmd->add_option("w1", scf_args.w1, "First word");
    scf_cmd->add_option("w2", scf_args.w2, "Second word");
    scf_cmd->add_option("--w1-file", scf_args.w1_file, "Read the first word from a file");
    scf_cmd->add_option("--w2-file", scf_args.w2_file, "Read the second word from a file");
    scf_cmd->add_flag("--exhaustive", scf_args.exhaustive, "Naive kernel: compare every alignment to completion");

    TopkArgs topk_args;
    auto* topk_cmd = app.add_subcommand("topk", "Best dictionary matches for a query");
    topk_cmd->add_option("query", topk_args.query, "Query word");
    topk_cmd->add_option("dictionary", topk_args.dict_path, "Dictionary file, one entry per line")->required();
    topk_cmd->add_option("-k,--k", topk_args.k, "Number of results")->capture_default_str();
    topk_cmd->add_option("--query-file", topk_args.query_file, "Read the query from a file");

    MatrixArgs matrix_args;
    auto* matrix_cmd = app.add_subcommand("matrix", "All-pairs similarity matrix as CSV");
    matrix_cmd->add_option("dictionary", matrix_args.dict_path, "Dictionary file")->required();
    matrix_cmd->add_option("output", matrix_args.out_path, "Output CSV path, - for stdout")->required();

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check exact comparison counts of the kernels");
    verify_cmd->add_option("--max-a", verify_args.max_a, "Naive grid bound for |w1|")->capture_default_str();
    verify_cmd->add_option("--max-b", verify_args.max_b, "Naive grid bound for |w2|")->capture_default_str();
    verify_cmd->add_option("--pairs", verify_args.pairs, "Random pairs for the dynamic check")->capture_default_str();
    verify_cmd->add_option("--max-len", verify_args.max_len, "Maximum random word length")->capture_default_str();
    verify_cmd->add_option("--seed", verify_args.seed, "Random seed")->capture_default_str();

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Time kernels on worst-case inputs");
    bench_cmd->add_option("--sizes", bench_args.sizes, "Ascending input sizes")->delimiter(',')->required();
    bench_cmd->add_option("--algos", bench_args.algos, "Kernels to run (default: --algo)")->delimiter(',');
    bench_cmd->add_option("--trials", bench_args.trials, "Timed runs per size")->capture_default_str();
    bench_cmd->add_option("--naive-cap", bench_args.naive_cap, "Largest size accepted for the naive kernel")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    config.symbol_mode = bytes ? SymbolMode::bytes : SymbolMode::codepoints;
    config.algo = *parse_algorithm(algo_name);
    config.format = format_names.at(format_name);

    try {
        if (sim_cmd->parsed()) return cmd_sim(sim_args, config, out);
        if (scf_cmd->parsed()) return cmd_scf(scf_args, config, out);
        if (topk_cmd->parsed()) return cmd_topk(topk_args, config, out);
        if (matrix_cmd->parsed()) return cmd_matrix(matrix_args, config, out);
        if (verify_cmd->parsed()) return cmd_verify(verify_args, config, out, kernels);
        if (bench_cmd->parsed()) return cmd_bench(bench_args, config, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace ngramsim::cli
