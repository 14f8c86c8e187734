// Command-line front end for the diatomic library.  Talks to the shared
// library exclusively through the C interface in diatomic.h.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diatomic.h"

namespace {

// Exit codes: 0 success, 1 verification found failing instances,
// 2 usage / domain / io errors.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct CtxDeleter {
    void operator()(dt_ctx* c) const { dt_ctx_free(c); }
};
using CtxPtr = std::unique_ptr<dt_ctx, CtxDeleter>;

struct StringDeleter {
    void operator()(char* s) const { dt_string_free(s); }
};
using StrPtr = std::unique_ptr<char, StringDeleter>;

int report_error(dt_ctx* ctx, dt_status st) {
    std::cerr << "error: " << dt_last_error(ctx) << "\n";
    (void)st;
    return kExitUsage;
}

// Write text to the path, with "-" (or empty) meaning stdout.
bool write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return false;
    }
    os << text;
    if (!os) {
        std::cerr << "error: write to '" << path << "' failed\n";
        return false;
    }
    return true;
}

std::vector<std::string> split_lines(const char* text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        if (!line.empty()) {
            out.push_back(line);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact arithmetic for Stern's diatomic sequence and its "
        "Fibonacci-flavoured analogues"};
    app.require_subcommand(1);

    std::string cache_path;
    app.add_option("--cache", cache_path,
                   "memo-table cache file: loaded if present, saved on exit")
        ->configurable(false);
    // Let global options (--cache) appear after the subcommand name too.
    app.fallthrough();

    // ---- seq -------------------------------------------------------------
    auto* seq = app.add_subcommand("seq", "print a range of a sequence");
    std::string seq_name;
    std::uint64_t seq_from = 0;
    std::uint64_t seq_to = 0;
    std::string seq_format = "csv";
    std::string seq_out = "-";
    seq->add_option("sequence", seq_name, "one of: stern, b, r, sf, c")
        ->required();
    seq->add_option("--from", seq_from, "first index (default 0)");
    seq->add_option("--to", seq_to, "last index, inclusive")->required();
    seq->add_option("--format", seq_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    seq->add_option("--out", seq_out, "output file, - for stdout");

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify", "run verification suites (all of them if none is named)");
    std::string verify_suite;
    std::uint64_t verify_bound = 0;
    unsigned verify_jobs = 1;
    std::uint64_t verify_seed = 1;
    std::string verify_format = "text";
    bool verify_list = false;
    verify->add_option("suite", verify_suite, "suite name (see --list)");
    verify->add_option("--bound", verify_bound,
                       "sweep bound; 0 uses each suite's default");
    verify->add_option("--jobs", verify_jobs, "worker threads (default 1)")
        ->check(CLI::Range(1u, 256u));
    verify->add_option("--seed", verify_seed,
                       "seed for randomized spot checks (default 1)");
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--list", verify_list, "list suite names and exit");

    // ---- plot ------------------------------------------------------------
    auto* plot = app.add_subcommand(
        "plot", "sample a singular function or render the merged-word graph");
    std::string plot_target;
    unsigned plot_depth = 8;
    std::string plot_format;
    std::string plot_out = "-";
    bool plot_labels = false;
    plot->add_option("target", plot_target, "one of: f, qm, g, Q, graph")
        ->required();
    plot->add_option("--depth", plot_depth,
                     "grid depth (dyadic level, Fibonacci index, or rows)");
    plot->add_option("--format", plot_format,
                     "csv or json (graph: svg or json); default csv/svg");
    plot->add_option("--out", plot_out, "output file, - for stdout");
    plot->add_flag("--labels", plot_labels,
                   "annotate graph vertices with value:paths");

    // ---- bijection -------------------------------------------------------
    auto* bij = app.add_subcommand(
        "bijection", "convert between indices and adjacent-value pairs");
    std::string bij_kind;
    std::string bij_dir;
    std::vector<std::string> bij_args;
    bij->add_option("kind", bij_kind, "stern or oplus")->required();
    bij->add_option("direction", bij_dir, "to-index or to-pair")->required();
    bij->add_option("args", bij_args,
                    "to-index: LEFT RIGHT; to-pair: INDEX (decimal, any size)")
        ->expected(1, 2);

    // ---- conjectures -----------------------------------------------------
    auto* conj = app.add_subcommand(
        "conjectures", "sweep the reported conjectures and list violations");
    std::uint64_t conj_bound = 2000;
    unsigned conj_jobs = 1;
    std::string conj_format = "text";
    std::string conj_out = "-";
    conj->add_option("--bound", conj_bound, "sweep bound (default 2000)");
    conj->add_option("--jobs", conj_jobs, "worker threads (default 1)")
        ->check(CLI::Range(1u, 256u));
    conj->add_option("--format", conj_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    conj->add_option("--out", conj_out, "output file, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    CtxPtr ctx(dt_ctx_new());
    if (!ctx) {
        std::cerr << "error: out of memory\n";
        return kExitUsage;
    }

    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        const dt_status st = dt_cache_load(ctx.get(), cache_path.c_str());
        if (st != DT_OK) {
            return report_error(ctx.get(), st);
        }
    }

    int exit_code = kExitOk;

    if (seq->parsed()) {
        char* text = nullptr;
        const dt_status st =
            dt_seq_write(ctx.get(), seq_name.c_str(), seq_from, seq_to,
                         seq_format.c_str(), &text);
        if (st != DT_OK) {
            return report_error(ctx.get(), st);
        }
        StrPtr guard(text);
        if (!write_output(seq_out, text)) {
            return kExitUsage;
        }
    } else if (verify->parsed()) {
        if (verify_list) {
            char* names = nullptr;
            const dt_status st = dt_verify_names(ctx.get(), &names);
            if (st != DT_OK) {
                return report_error(ctx.get(), st);
            }
            StrPtr guard(names);
            std::cout << names;
            return kExitOk;
        }
        std::vector<std::string> suites;
        if (verify_suite.empty()) {
            char* names = nullptr;
            const dt_status st = dt_verify_names(ctx.get(), &names);
            if (st != DT_OK) {
                return report_error(ctx.get(), st);
            }
            StrPtr guard(names);
            suites = split_lines(names);
        } else {
            suites.push_back(verify_suite);
        }
        std::uint64_t total_failures = 0;
        const bool json = verify_format == "json";
        if (json && suites.size() > 1) {
            std::cout << "[\n";
        }
        for (std::size_t i = 0; i < suites.size(); ++i) {
            char* report = nullptr;
            std::uint64_t failures = 0;
            const dt_status st = dt_verify_run(
                ctx.get(), suites[i].c_str(), verify_bound, verify_jobs,
                verify_seed, verify_format.c_str(), &report, &failures);
            if (st != DT_OK) {
                return report_error(ctx.get(), st);
            }
            StrPtr guard(report);
            std::cout << report;
            if (json && suites.size() > 1 && i + 1 < suites.size()) {
                std::cout << ",\n";
            }
            total_failures += failures;
        }
        if (json && suites.size() > 1) {
            std::cout << "]\n";
        }
        if (total_failures > 0) {
            std::cerr << total_failures
                      << " failing instance(s); first counterexamples are "
                         "listed above\n";
            exit_code = kExitVerifyFailed;
        }
    } else if (plot->parsed()) {
        char* text = nullptr;
        const dt_status st = dt_plot_write(
            ctx.get(), plot_target.c_str(), plot_depth,
            plot_format.empty() ? nullptr : plot_format.c_str(),
            plot_labels ? 1 : 0, &text);
        if (st != DT_OK) {
            return report_error(ctx.get(), st);
        }
        StrPtr guard(text);
        if (!write_output(plot_out, text)) {
            return kExitUsage;
        }
    } else if (bij->parsed()) {
        char* text = nullptr;
        dt_status st = DT_OK;
        if (bij_dir == "to-index") {
            if (bij_args.size() != 2) {
                std::cerr << "error: bijection to-index takes LEFT RIGHT\n";
                return kExitUsage;
            }
            st = dt_bijection_to_index(ctx.get(), bij_kind.c_str(),
                                       bij_args[0].c_str(),
                                       bij_args[1].c_str(), &text);
        } else if (bij_dir == "to-pair") {
            if (bij_args.size() != 1) {
                std::cerr << "error: bijection to-pair takes INDEX\n";
                return kExitUsage;
            }
            st = dt_bijection_to_pair(ctx.get(), bij_kind.c_str(),
                                      bij_args[0].c_str(), &text);
        } else {
            std::cerr << "error: unknown direction '" << bij_dir
                      << "' (expected to-index or to-pair)\n";
            return kExitUsage;
        }
        if (st != DT_OK) {
            return report_error(ctx.get(), st);
        }
        StrPtr guard(text);
        std::cout << text << "\n";
    } else if (conj->parsed()) {
        char* text = nullptr;
        std::uint64_t violations = 0;
        const dt_status st =
            dt_conjectures(ctx.get(), conj_bound, conj_jobs,
                           conj_format.c_str(), &text, &violations);
        if (st != DT_OK) {
            return report_error(ctx.get(), st);
        }
        StrPtr guard(text);
        if (!write_output(conj_out, text)) {
            return kExitUsage;
        }
    }

    if (!cache_path.empty()) {
        const dt_status st = dt_cache_save(ctx.get(), cache_path.c_str());
        if (st != DT_OK) {
            return report_error(ctx.get(), st);
        }
    }

    return exit_code;
}
