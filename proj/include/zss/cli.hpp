#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zss/matrix.hpp"
#include "zss/search.hpp"
#include "zss/split.hpp"
#include "zss/symmetry.hpp"
#include "zss/verify.hpp"

namespace zss::cli {

// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parse error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
    int jobs = 1;
    bool jsonl = false;
    int max_n = 9;
};

inline int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

inline std::string matrix_json_line(const BinaryMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["disc"] = discrepancy(m);
    if (const auto d = classify_split(m)) {
        nlohmann::ordered_json split;
        split["variant"] = to_string(d->variant);
        split["t"] = d->t;
        j["split"] = std::move(split);
    } else {
        j["split"] = nullptr;
    }
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int i = 1; i <= m.rows(); ++i) entries.push_back(m.row_string(i));
    j["entries"] = std::move(entries);
    return j.dump();
}

namespace detail {

struct EnumerateArgs {
    int rows = 0;
    int cols = 0;
    std::optional<long long> disc;
    std::optional<long long> max_abs_disc;
    bool count_only = false;
    bool canonical = false;
    int prefix_cells = 8;
    RunConfig run;
};

inline void emit_matrix(std::ostream& out, const BinaryMatrix& m, bool jsonl, bool& first) {
    if (jsonl) {
        out << matrix_json_line(m) << '\n';
    } else {
        if (!first) out << '\n';
        out << render_text(m);
    }
    first = false;
}

inline std::string constraint_str(const DiscConstraint& c) {
    return c.kind == DiscConstraint::Kind::exact ? "disc == " + std::to_string(c.value)
                                                 : "|disc| <= " + std::to_string(c.value);
}

inline void print_report(std::ostream& out, const EnumerationQuery& q,
                         const EnumerationReport& report, bool jsonl,
                         std::optional<long long> canonical_classes) {
    if (jsonl) {
        nlohmann::ordered_json j;
        j["rows"] = q.rows;
        j["cols"] = q.cols;
        j["constraint"]["kind"] =
            q.disc.kind == DiscConstraint::Kind::exact ? "disc" : "max-abs-disc";
        j["constraint"]["value"] = q.disc.value;
        j["total"] = report.total;
        j["split"] = report.split_count;
        j["exceptional"] = report.exceptional_count;
        nlohmann::ordered_json per = nlohmann::ordered_json::object();
        for (const auto& [d, n] : report.per_disc) per[std::to_string(d)] = n;
        j["per_disc"] = std::move(per);
        if (canonical_classes) j["canonical_classes"] = *canonical_classes;
        j["elapsed_seconds"] = report.elapsed_seconds;
        out << j.dump() << '\n';
        return;
    }
    out << "rows " << q.rows << '\n' << "cols " << q.cols << '\n';
    out << "constraint " << constraint_str(q.disc) << '\n';
    out << "total " << report.total << '\n';
    out << "split " << report.split_count << '\n';
    out << "exceptional " << report.exceptional_count << '\n';
    out << "per_disc";
    for (const auto& [d, n] : report.per_disc) out << ' ' << d << ':' << n;
    out << '\n';
    if (canonical_classes) out << "canonical_classes " << *canonical_classes << '\n';
    out << "elapsed_seconds " << report.elapsed_seconds << '\n';
}

inline int run_enumerate(const EnumerateArgs& a, std::ostream& out) {
    EnumerationQuery q;
    q.rows = a.rows;
    q.cols = a.cols;
    q.disc = a.disc ? DiscConstraint::exactly(*a.disc) : DiscConstraint::at_most(*a.max_abs_disc);
    q.prefix_cells = a.prefix_cells;
    // Canonical mode needs the matrices even when only counts are printed.
    q.count_only = a.count_only && !a.canonical;

    bool first = true;
    std::vector<BinaryMatrix> collected;
    MatrixSink sink;
    if (a.canonical)
        sink = [&](const BinaryMatrix& m) { collected.push_back(m); };
    else if (!a.count_only)
        sink = [&](const BinaryMatrix& m) { emit_matrix(out, m, a.run.jsonl, first); };

    const EnumerationReport report = enumerate(q, sink, a.run.jobs);

    std::optional<long long> canonical_classes;
    if (a.canonical) {
        const std::vector<BinaryMatrix> reps = dedup(collected);
        canonical_classes = static_cast<long long>(reps.size());
        if (!a.count_only)
            for (const BinaryMatrix& m : reps) emit_matrix(out, m, a.run.jsonl, first);
    }
    if (a.count_only) print_report(out, q, report, a.run.jsonl, canonical_classes);
    return exit_ok;
}

inline int run_verify(const std::string& check, std::optional<int> single_n, const RunConfig& run,
                      std::ostream& out, std::ostream& err) {
    VerifyOptions opts;
    opts.max_n = run.max_n;
    opts.jobs = run.jobs;

    std::vector<VerificationOutcome> outcomes;
    const auto add_theorem5 = [&] {
        if (single_n) {
            outcomes.push_back(verify_theorem5(*single_n, opts));
        } else {
            auto range = verify_theorem5_range(opts);
            outcomes.insert(outcomes.end(), range.begin(), range.end());
        }
    };

    if (check == "lemma3" || check == "all") outcomes.push_back(verify_lemma3(opts));
    if (check == "theorem5" || check == "all") add_theorem5();
    if (check == "claim8" || check == "all") outcomes.push_back(verify_claim8());
    if (check == "parabola" || check == "all") outcomes.push_back(verify_parabola_bound());
    if (check == "observation1" || check == "all") outcomes.push_back(verify_observation1());
    if (check == "lemma4" || check == "all")
        outcomes.push_back(property_check_lemma4(lemma4_default_samples(run.jobs)));
    if (check == "lemma5" || check == "all")
        outcomes.push_back(property_check_lemma5(lemma5_default_samples(run.jobs)));

    int failed = 0, skipped = 0;
    for (const VerificationOutcome& o : outcomes) {
        if (o.status == CheckStatus::fail) ++failed;
        if (o.status == CheckStatus::skipped) ++skipped;
        if (run.jsonl)
            out << outcome_json_line(o) << '\n';
        else
            print_outcome_text(out, o);
    }
    if (!run.jsonl)
        out << outcomes.size() - failed - skipped << " passed, " << failed << " failed, "
            << skipped << " skipped\n";
    if (failed != 0) {
        err << "verification failed\n";
        return exit_check_failed;
    }
    return exit_ok;
}

inline int run_classify(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << "cannot open " << path << '\n';
        return exit_usage;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();

    try {
        const BinaryMatrix m = parse_text(buffer.str());
        out << "disc " << discrepancy(m);
        if (const auto sq = find_zero_sum_square(m))
            out << ", zero-sum square (i=" << sq->i << ", j=" << sq->j << ", s=" << sq->s << ")";
        else
            out << ", zssf";
        if (const auto d = classify_split(m))
            out << ", split(" << to_string(d->variant) << ", t=" << d->t << ")";
        else
            out << ", non-split";
        out << '\n';
        return exit_ok;
    } catch (const MatrixParseError& e) {
        err << path << ": parse error at line " << e.position().line << ", col "
            << e.position().col << ": " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"zero-sum-square-free binary matrix search"};
    app.require_subcommand(1);

    detail::EnumerateArgs en;
    en.run.jobs = default_jobs();
    long long disc_value = 0, max_abs_value = 0;
    std::string format = "text";

    CLI::App* enumerate_cmd = app.add_subcommand(
        "enumerate", "stream zero-sum-square-free matrices under a discrepancy constraint");
    enumerate_cmd->add_option("--rows", en.rows, "row count")->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--cols", en.cols, "column count")->required()->check(CLI::PositiveNumber);
    CLI::Option_group* disc_spec =
        enumerate_cmd->add_option_group("disc-spec", "discrepancy constraint");
    CLI::Option* disc_opt = disc_spec->add_option("--disc", disc_value, "exact discrepancy");
    CLI::Option* bound_opt = disc_spec->add_option("--max-abs-disc", max_abs_value,
                                                   "bound on |discrepancy|")
                                 ->check(CLI::NonNegativeNumber);
    disc_spec->require_option(1);
    enumerate_cmd->add_flag("--count-only", en.count_only, "print the report instead of matrices");
    enumerate_cmd->add_flag("--canonical", en.canonical,
                            "deduplicate up to rotations, reflections and negation");
    enumerate_cmd->add_option("--prefix-cells", en.prefix_cells,
                              "cells expanded into parallel subtree roots")
        ->check(CLI::NonNegativeNumber);
    enumerate_cmd->add_option("--jobs", en.run.jobs, "worker threads")->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "jsonl"}));

    std::string check_name;
    std::optional<int> theorem5_n;
    RunConfig verify_run;
    verify_run.jobs = default_jobs();
    int n_arg = 0;

    CLI::App* verify_cmd = app.add_subcommand("verify", "run named exhaustive/arithmetic checks");
    verify_cmd->add_option("check", check_name, "check name")
        ->required()
        ->check(CLI::IsMember({"lemma3", "theorem5", "claim8", "parabola", "observation1",
                               "lemma4", "lemma5", "all"}));
    CLI::Option* n_opt = verify_cmd->add_option("--n", n_arg, "run theorem5 for this n only")
                             ->check(CLI::Range(5, 11));
    verify_cmd->add_option("--max-n", verify_run.max_n,
                           "largest n enumerated exhaustively; larger shapes are skipped")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--jobs", verify_run.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "jsonl"}));

    std::string classify_path;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify a matrix file (text format)");
    classify_cmd->add_option("path", classify_path, "matrix file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    en.run.jsonl = verify_run.jsonl = (format == "jsonl");

    if (app.got_subcommand(enumerate_cmd)) {
        if (disc_opt->count() > 0) en.disc = disc_value;
        if (bound_opt->count() > 0) en.max_abs_disc = max_abs_value;
        return detail::run_enumerate(en, out);
    }
    if (app.got_subcommand(verify_cmd)) {
        if (n_opt->count() > 0) {
            if (check_name != "theorem5") {
                err << "--n only applies to the theorem5 check\n";
                return exit_usage;
            }
            theorem5_n = n_arg;
        }
        return detail::run_verify(check_name, theorem5_n, verify_run, out, err);
    }
    return detail::run_classify(classify_path, out, err);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace zss::cli
