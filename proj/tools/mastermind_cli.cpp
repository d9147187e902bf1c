// mastermind_cli.cpp -- command-line surface: solve, play, sat, reduce, bench
//
// Exit codes: 0 ok/SAT, 1 UNSAT, 2 usage or parse error, 3 inconsistent
// oracle, 4 budget exhausted, 5 check failed.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mastermind/io.hpp"
#include "mastermind/reduction.hpp"
#include "mastermind/rng.hpp"
#include "mastermind/sat.hpp"
#include "mastermind/solver.hpp"

namespace {

using namespace mastermind;

constexpr int kExitOk = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitBudget = 4;
constexpr int kExitCheckFailed = 5;

void print_transcript(std::ostream &out, int n, int k,
                      const SolveTranscript &transcript, long long bound)
{
    out << n << ' ' << k << '\n';
    for (const auto &[query, score] : transcript.queries) {
        for (Color c : query)
            out << c << ' ';
        out << score << '\n';
    }
    out << "# recovered=" << format_colors(transcript.recovered)
        << " queries=" << transcript.query_count() << " bound=" << bound << '\n';
}

std::vector<int> parse_int_list(const std::string &text, const char *what)
{
    std::vector<int> values;
    CodeVector parsed = parse_colors(text); // same comma-list syntax
    for (int v : parsed) {
        if (v < 1)
            throw CLI::ValidationError(std::string(what) + " entries must be >= 1");
        values.push_back(v);
    }
    return values;
}

SplitMix64 trial_rng(std::uint64_t seed, int n, int k, int trial)
{
    SplitMix64 rng(seed);
    rng.absorb(static_cast<std::uint64_t>(n))
        .absorb(static_cast<std::uint64_t>(k))
        .absorb(static_cast<std::uint64_t>(trial));
    return rng;
}

int cmd_solve(int n, int k, const std::string &secret_text,
              std::optional<std::uint64_t> seed, const std::string &algorithm)
{
    CodeVector secret;
    if (!secret_text.empty()) {
        secret = parse_colors(secret_text);
        if (static_cast<int>(secret.size()) != n) {
            std::cerr << "error: --secret must list exactly " << n << " colors\n";
            return kExitUsage;
        }
        for (Color c : secret)
            if (c >= k) {
                std::cerr << "error: secret color " << c << " outside [0, " << k << ")\n";
                return kExitUsage;
            }
    } else if (seed) {
        SplitMix64 rng(*seed);
        secret = random_secret(n, k, rng);
    } else {
        std::cerr << "error: need either --secret or --seed\n";
        return kExitUsage;
    }

    HonestOracle oracle(std::move(secret), k);
    SolveTranscript transcript;
    long long bound;
    if (algorithm == "naive") {
        transcript = naive_solve(oracle);
        bound = naive_bound(n, k);
    } else {
        transcript = solve(oracle);
        bound = guess_bound(n, k);
    }
    print_transcript(std::cout, n, k, transcript, bound);
    return kExitOk;
}

int cmd_play(int n, int k)
{
    StreamOracle oracle(n, k, std::cin, std::cerr);
    try {
        SolveTranscript transcript = solve(oracle);
        print_transcript(std::cout, n, k, transcript, guess_bound(n, k));
        std::cerr << "deduced secret: " << format_colors(transcript.recovered)
                  << '\n';
        return kExitOk;
    } catch (const InconsistentOracle &e) {
        std::cerr << "inconsistent: the scores given admit no secret (" << e.what()
                  << ")\n";
        return kExitInconsistent;
    }
}

int cmd_sat(const std::string &path, const std::string &method,
            std::optional<std::uint64_t> budget)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitUsage;
    }
    SatInstance inst;
    try {
        inst = parse_sat_instance(in);
        inst.validate();
    } catch (const ParseError &e) {
        std::cerr << path << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionError &e) {
        std::cerr << path << ": " << e.what() << '\n';
        return kExitUsage;
    }

    std::optional<CodeVector> witness;
    try {
        if (method == "exhaustive")
            witness = budget ? solve_exhaustive(inst, *budget) : solve_exhaustive(inst);
        else
            witness = budget ? solve_backtracking(inst, *budget)
                             : solve_backtracking(inst);
    } catch (const TooLarge &) {
        std::cout << "UNKNOWN (budget)\n";
        return kExitBudget;
    } catch (const BudgetExhausted &) {
        std::cout << "UNKNOWN (budget)\n";
        return kExitBudget;
    }
    if (witness) {
        std::cout << "SAT " << format_colors(*witness) << '\n';
        return kExitOk;
    }
    std::cout << "UNSAT\n";
    return kExitUnsat;
}

int cmd_reduce(const std::string &tdm_path, const std::string &out_path, bool check)
{
    std::ifstream in(tdm_path);
    if (!in) {
        std::cerr << "error: cannot open '" << tdm_path << "'\n";
        return kExitUsage;
    }
    ThreeDmInstance tdm;
    SatInstance inst;
    try {
        tdm = parse_3dm_instance(in);
        inst = reduce_to_sat(tdm);
    } catch (const ParseError &e) {
        std::cerr << tdm_path << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const MalformedInstance &e) {
        std::cerr << tdm_path << ": " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitUsage;
    }
    write_sat_instance(out, inst,
                       {"reduced from 3DM instance " + tdm_path,
                        "color mapping: null->0, boolean-0->1, triple s->s+1 "
                        "(boolean-1 = triple color 1 = 2)",
                        "positions: X 0.." + std::to_string(tdm.n - 1) + ", Y " +
                            std::to_string(tdm.n) + ".." + std::to_string(2 * tdm.n - 1) +
                            ", Z " + std::to_string(2 * tdm.n) + ".." +
                            std::to_string(3 * tdm.n - 1) + ", T " +
                            std::to_string(3 * tdm.n) + ".." +
                            std::to_string(3 * tdm.n + tdm.num_triples() - 1)});
    if (!check)
        return kExitOk;

    auto matching = solve_3dm_bruteforce(tdm);
    std::optional<CodeVector> witness;
    try {
        witness = solve_exhaustive(inst);
    } catch (const TooLarge &) {
        witness = solve_backtracking(inst);
    }
    if (matching.has_value() != witness.has_value()) {
        std::cerr << "EQUIV FAIL: 3dm=" << matching.has_value()
                  << " sat=" << witness.has_value() << '\n';
        return kExitCheckFailed;
    }
    if (witness) {
        Matching extracted = extract_matching(*witness, tdm);
        if (!verify_matching(tdm, extracted)) {
            std::cerr << "EQUIV FAIL: extracted set is not a perfect matching\n";
            return kExitCheckFailed;
        }
    }
    std::cout << "EQUIV OK (sat=" << (witness ? "true" : "false") << ")\n";
    return kExitOk;
}

int cmd_bench(const std::string &n_list, const std::string &k_list, int trials,
              std::uint64_t seed, bool exhaustive)
{
    std::vector<int> ns = parse_int_list(n_list, "--n-list");
    std::vector<int> ks = parse_int_list(k_list, "--k-list");

    std::cout << "N,K,trials,max_queries,mean_queries,our_bound,chvatal_bound,chen_bound\n";
    for (int n : ns) {
        for (int k : ks) {
            long long max_queries = 0;
            long long total_queries = 0;
            long long games = 0;

            auto run_one = [&](CodeVector secret) {
                HonestOracle oracle(std::move(secret), k);
                SolveTranscript t = solve(oracle);
                if (t.recovered != oracle.secret())
                    throw std::runtime_error("bench: solver missed the secret");
                max_queries = std::max<long long>(max_queries, t.query_count());
                total_queries += t.query_count();
                ++games;
            };

            if (exhaustive) {
                double space = std::pow(static_cast<double>(k), n);
                if (space > 1e6) {
                    std::cerr << "error: --exhaustive needs K^N <= 1e6 (N=" << n
                              << ", K=" << k << ")\n";
                    return kExitUsage;
                }
                CodeVector secret(static_cast<std::size_t>(n), 0);
                for (;;) {
                    run_one(secret);
                    int p = n - 1;
                    while (p >= 0 && secret[static_cast<std::size_t>(p)] == k - 1)
                        secret[static_cast<std::size_t>(p--)] = 0;
                    if (p < 0)
                        break;
                    ++secret[static_cast<std::size_t>(p)];
                }
            } else {
                for (int trial = 0; trial < trials; ++trial) {
                    SplitMix64 rng = trial_rng(seed, n, k, trial);
                    run_one(random_secret(n, k, rng));
                }
            }

            long long our = guess_bound(n, k);
            ReferenceBounds ref = reference_bounds(n, k);
            if (max_queries > our) {
                std::cerr << "error: realized max " << max_queries
                          << " exceeds bound " << our << " at N=" << n
                          << ", K=" << k << '\n';
                return kExitCheckFailed;
            }
            std::ostringstream mean;
            mean << std::fixed << std::setprecision(4)
                 << (games ? static_cast<double>(total_queries) /
                                 static_cast<double>(games)
                           : 0.0);
            std::cout << n << ',' << k << ',' << games << ',' << max_queries
                      << ',' << mean.str() << ',' << our << ',' << ref.chvatal
                      << ',' << ref.chen << '\n';
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"single-count (black-peg) Mastermind toolkit"};
    app.require_subcommand(1);

    int n = 0, k = 0;
    std::string secret_text;
    std::optional<std::uint64_t> seed;
    std::string algorithm = "split";
    auto *solve_cmd = app.add_subcommand("solve", "recover a known or seeded secret");
    solve_cmd->add_option("--n", n, "vector length")->required();
    solve_cmd->add_option("--k", k, "palette size")->required();
    solve_cmd->add_option("--secret", secret_text, "comma-separated colors");
    solve_cmd->add_option("--seed", seed, "seed for a random secret");
    solve_cmd->add_option("--algorithm", algorithm, "split|naive")
        ->check(CLI::IsMember({"split", "naive"}));

    auto *play_cmd = app.add_subcommand("play", "interactive: you score each guess");
    play_cmd->add_option("--n", n, "vector length")->required();
    play_cmd->add_option("--k", k, "palette size")->required();

    std::string instance_path, method = "backtracking";
    std::optional<std::uint64_t> budget;
    auto *sat_cmd = app.add_subcommand("sat", "decide a satisfiability instance");
    sat_cmd->add_option("--instance", instance_path, "instance file")->required();
    sat_cmd->add_option("--method", method, "exhaustive|backtracking")
        ->check(CLI::IsMember({"exhaustive", "backtracking"}));
    sat_cmd->add_option("--budget", budget, "check/node budget");

    std::string tdm_path, out_path;
    bool check = false;
    auto *reduce_cmd = app.add_subcommand("reduce", "reduce 3DM to satisfiability");
    reduce_cmd->add_option("--tdm", tdm_path, "3DM instance file")->required();
    reduce_cmd->add_option("--out", out_path, "output instance file")->required();
    reduce_cmd->add_flag("--check", check, "brute-force both sides and compare");

    std::string n_list, k_list;
    int trials = 100;
    std::uint64_t bench_seed = 0;
    bool exhaustive = false;
    auto *bench_cmd = app.add_subcommand("bench", "query-count statistics as CSV");
    bench_cmd->add_option("--n-list", n_list, "comma-separated lengths")->required();
    bench_cmd->add_option("--k-list", k_list, "comma-separated palette sizes")->required();
    bench_cmd->add_option("--trials", trials, "random secrets per (N,K)");
    bench_cmd->add_option("--seed", bench_seed, "rng seed");
    bench_cmd->add_flag("--exhaustive", exhaustive, "enumerate all K^N secrets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed() || play_cmd->parsed()) {
            if (n < 1 || k < 1) {
                std::cerr << "error: need --n >= 1 and --k >= 1\n";
                return kExitUsage;
            }
            if (solve_cmd->parsed() && algorithm == "naive" && k < 2) {
                std::cerr << "error: the naive algorithm needs --k >= 2\n";
                return kExitUsage;
            }
        }
        if (solve_cmd->parsed())
            return cmd_solve(n, k, secret_text, seed, algorithm);
        if (play_cmd->parsed())
            return cmd_play(n, k);
        if (sat_cmd->parsed())
            return cmd_sat(instance_path, method, budget);
        if (reduce_cmd->parsed())
            return cmd_reduce(tdm_path, out_path, check);
        if (bench_cmd->parsed())
            return cmd_bench(n_list, k_list, trials, bench_seed, exhaustive);
    } catch (const InconsistentOracle &e) {
        std::cerr << "inconsistent oracle: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const BudgetExhausted &e) {
        std::cerr << e.what() << '\n';
        return kExitBudget;
    } catch (const ParseError &e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
