#include "chaingroup/report.hpp"

#include "chaingroup/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace chaingroup;

std::string slurp(const std::string &path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct GlobalOptions {
    std::string format = "text";
    std::uint64_t seed = kDefaultSeed;
    std::size_t cap = kDefaultEnumerationCap;
    int parallelism = 0;
    int samples = 5;
};

int exit_code_for(const std::vector<VerificationResult> &results) {
    for (const auto &result : results)
        if (result.status == VerifyStatus::Fail)
            return 1;
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"chain groups of labeled forests: compute, classify, verify"};
    app.require_subcommand(1);
    GlobalOptions global;
    app.add_option("--format", global.format, "output format: text, json or tsv")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    app.add_option("--seed", global.seed, "seed for sampled checks");
    app.add_option("--cap", global.cap, "brute-force enumeration cap");
    app.add_option("--parallel", global.parallelism, "worker threads (0 = all cores)");
    app.add_option("--samples", global.samples, "samples per instance for sampled checks");

    std::string input_path;
    auto *paths_cmd = app.add_subcommand("paths", "list the maximal paths of a forest file");
    paths_cmd->add_option("file", input_path, "forest file ('-' for stdin)")->required();

    auto *group_cmd = app.add_subcommand("group", "chain group of a forest file: order, generators, class");
    group_cmd->add_option("file", input_path, "forest file ('-' for stdin)")->required();

    std::vector<std::string> family_tokens;
    auto *make_cmd = app.add_subcommand("make", "emit a forest file for a named family");
    make_cmd
        ->add_option("family", family_tokens,
                     "family spec(s): path:N star:N antenna:N spider:l1,l2,... maxabelian:N[,A|B] "
                     "odddist:stem,tips[,...]; several specs form a disjoint union")
        ->required()
        ->expected(-1);

    int census_n = 0;
    auto *census_cmd = app.add_subcommand("census", "classify every labeled forest on [n]");
    census_cmd->add_option("n", census_n, "vertex count")->required();

    std::string theorem_id;
    std::vector<int> verify_ns;
    int verify_p = 0, verify_r = 0;
    auto *verify_cmd = app.add_subcommand("verify", "run a theorem checker ('all' runs every one)");
    verify_cmd->add_option("theorem", theorem_id, "theorem id or 'all'");
    verify_cmd->add_option("--n", verify_ns, "parameter n (repeatable; default: the checker's sweep)");
    verify_cmd->add_option("--p", verify_p, "prime p (T-ELEMENTARY)");
    verify_cmd->add_option("--r", verify_r, "rank r (T-ELEMENTARY)");
    auto *list_flag = verify_cmd->add_flag("--list", "list the registered theorem checkers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0)  // --help
            return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        const OutputFormat format = parse_format(global.format);
        const ReportMeta meta{global.seed, census_limit()};

        if (paths_cmd->parsed()) {
            const Forest forest = parse_forest(slurp(input_path));
            std::cout << render_paths(maximal_paths(forest), format);
            return 0;
        }
        if (group_cmd->parsed()) {
            const Forest forest = parse_forest(slurp(input_path));
            std::cout << render_group_summary(summarize_chain_group(forest, global.cap), format);
            return 0;
        }
        if (make_cmd->parsed()) {
            std::vector<FamilySpec> specs;
            for (const auto &token : family_tokens)
                specs.push_back(parse_family_spec(token));
            const Forest forest = specs.size() == 1
                                      ? make_family(specs[0])
                                      : make_family(FamilySpec{DisjointUnionSpec{std::move(specs)}});
            std::cout << forest.to_file_string();
            return 0;
        }
        if (census_cmd->parsed()) {
            const CensusReport report = run_census(census_n, global.parallelism, global.cap);
            std::cout << render_census(report, format, meta);
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (*list_flag) {
                for (const auto &id : theorem_ids())
                    std::cout << id << ": " << theorem_summary(id) << '\n';
                return 0;
            }
            if (theorem_id.empty()) {
                std::cerr << "error: missing theorem id (try 'verify --list')\n";
                return 2;
            }
            VerifyOptions options;
            options.ns = verify_ns;
            options.p = verify_p;
            options.r = verify_r;
            options.samples = global.samples;
            options.seed = global.seed;
            options.cap = global.cap;
            options.parallelism = global.parallelism;
            const auto results =
                theorem_id == "all" ? verify_all(options) : verify_theorem(theorem_id, options);
            std::cout << render_results(results, format, meta);
            return exit_code_for(results);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
