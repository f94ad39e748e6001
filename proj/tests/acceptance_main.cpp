// Acceptance suite: runs every stated criterion at its exact tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "zss/cli.hpp"
#include "zss/zss.hpp"

using namespace zss;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> check;
};

struct CliCapture {
    int code = 0;
    std::string out;
};

CliCapture cli_run(std::vector<std::string> args) {
    args.insert(args.begin(), "zss");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

long long report_count(const std::string& report, const std::string& key) {
    std::istringstream in(report);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + " ", 0) == 0) return std::stoll(line.substr(key.size() + 1));
    return -1;
}

bool expect(std::string& detail, bool ok, const std::string& what) {
    if (!ok) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
    return ok;
}

// ---- criterion bodies ----

bool lemma3_counts(std::string& detail) {
    const auto started = std::chrono::steady_clock::now();
    const CliCapture r45 = cli_run(
        {"enumerate", "--rows", "4", "--cols", "5", "--max-abs-disc", "8", "--count-only"});
    const CliCapture r55 = cli_run(
        {"enumerate", "--rows", "5", "--cols", "5", "--max-abs-disc", "10", "--count-only"});
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    bool ok = expect(detail, r45.code == 0 && r55.code == 0, "CLI run failed");
    ok &= expect(detail, report_count(r45.out, "exceptional") == 28,
                 "4x5 exceptional != 28 (got " +
                     std::to_string(report_count(r45.out, "exceptional")) + ")");
    ok &= expect(detail, report_count(r55.out, "exceptional") == 32,
                 "5x5 exceptional != 32 (got " +
                     std::to_string(report_count(r55.out, "exceptional")) + ")");
    ok &= expect(detail, elapsed < 10.0, "exceeded 10s budget");
    return ok;
}

std::vector<BinaryMatrix> exceptional_set(int rows, int cols, long long bound) {
    EnumerationQuery q;
    q.rows = rows;
    q.cols = cols;
    q.disc = DiscConstraint::at_most(bound);
    std::vector<BinaryMatrix> exceptional;
    enumerate(q, [&](const BinaryMatrix& m) {
        if (!is_split(m)) exceptional.push_back(m);
    });
    return exceptional;
}

bool symmetry_classes(std::string& detail) {
    const auto e45 = exceptional_set(4, 5, 8);
    const auto e55 = exceptional_set(5, 5, 10);
    bool ok = expect(detail, e45.size() + e55.size() == 60, "exceptional union is not 60 matrices");
    const long long classes = static_cast<long long>(dedup(e45).size() + dedup(e55).size());
    ok &= expect(detail, classes == 11,
                 "canonical classes != 11 (got " + std::to_string(classes) + ")");
    return ok;
}

bool theorem5_desk_scale(std::string& detail) {
    bool ok = true;
    for (int n = 5; n <= 9; ++n) {
        const VerificationOutcome o = verify_theorem5(n);
        ok &= expect(detail, o.status == CheckStatus::pass,
                     "n=" + std::to_string(n) + ": " + o.note);
    }
    return ok;
}

bool observation1_sweep(std::string& detail) {
    const VerificationOutcome o = verify_observation1();
    bool ok = expect(detail, o.status == CheckStatus::pass, o.note);
    ok &= expect(detail, o.seconds < 1.0, "exceeded 1s budget");
    return ok;
}

bool corollary2_range(std::string& detail) {
    bool ok = true;
    for (int n = 4; n <= 12; ++n)
        ok &= expect(detail, corollary2_check(n), "fails at n=" + std::to_string(n));
    return ok;
}

bool claim8_grid(std::string& detail) {
    const VerificationOutcome o = verify_claim8();
    bool ok = expect(detail, o.status == CheckStatus::pass, o.note);
    ok &= expect(detail, o.seconds < 1.0, "exceeded 1s budget");
    return ok;
}

bool parabola_sweep(std::string& detail) {
    const VerificationOutcome o = verify_parabola_bound(1'000'000);
    return expect(detail, o.status == CheckStatus::pass, o.note);
}

bool oracle_equivalence(std::string& detail) {
    const auto started = std::chrono::steady_clock::now();
    bool ok = true;
    for (int rows = 1; rows <= 4 && ok; ++rows) {
        for (int cols = rows; rows * cols <= 16 && ok; ++cols) {
            const int cells = rows * cols;

            // one brute-force pass: all zssf matrices in lexicographic order
            std::vector<std::pair<BinaryMatrix, long long>> zssf;
            count_all_unpruned(rows, cols, [&](const BinaryMatrix& m) {
                if (!is_zero_sum_square_free(m)) return false;
                zssf.emplace_back(m, discrepancy(m));
                return true;
            });

            const auto expected_for = [&](const DiscConstraint& c) {
                std::vector<BinaryMatrix> out;
                for (const auto& [m, d] : zssf)
                    if (c.satisfied(d)) out.push_back(m);
                return out;
            };
            const auto enumerate_for = [&](const DiscConstraint& c) {
                EnumerationQuery q;
                q.rows = rows;
                q.cols = cols;
                q.disc = c;
                std::vector<BinaryMatrix> out;
                enumerate(q, [&](const BinaryMatrix& m) { out.push_back(m); });
                return out;
            };

            for (int d = -cells; d <= cells && ok; ++d) {
                const auto c = DiscConstraint::exactly(d);
                ok &= expect(detail, enumerate_for(c) == expected_for(c),
                             std::to_string(rows) + "x" + std::to_string(cols) +
                                 " disc=" + std::to_string(d) + " set mismatch");
            }
            for (int b = 0; b <= cells && ok; ++b) {
                const auto c = DiscConstraint::at_most(b);
                ok &= expect(detail, enumerate_for(c) == expected_for(c),
                             std::to_string(rows) + "x" + std::to_string(cols) +
                                 " |disc|<=" + std::to_string(b) + " set mismatch");
            }
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    ok &= expect(detail, elapsed < 60.0, "exceeded 60s budget");
    return ok;
}

bool lemma_property_suites(std::string& detail) {
    const VerificationOutcome l4 = property_check_lemma4(lemma4_default_samples());
    const VerificationOutcome l5 = property_check_lemma5(lemma5_default_samples());
    const auto count_of = [](const VerificationOutcome& o, const std::string& key) {
        for (const auto& [k, v] : o.counts)
            if (k == key) return v;
        return -1LL;
    };
    bool ok = expect(detail, l4.status == CheckStatus::pass, "lemma4: " + l4.note);
    ok &= expect(detail, count_of(l4, "hypothesis hits") > 0, "lemma4 hypothesis never held");
    ok &= expect(detail, l5.status == CheckStatus::pass, "lemma5: " + l5.note);
    ok &= expect(detail, count_of(l5, "clause checks") > 0, "lemma5 hypothesis never held");
    return ok;
}

bool stream_determinism(std::string& detail) {
    bool ok = true;
    for (const char* format : {"text", "jsonl"}) {
        const std::vector<std::string> base = {"enumerate", "--rows",        "5",
                                               "--cols",    "5",             "--max-abs-disc",
                                               "10",        "--format",      format};
        std::vector<std::string> one = base;
        one.insert(one.end(), {"--jobs", "1"});
        std::vector<std::string> many = base;
        many.insert(many.end(), {"--jobs", "6"});
        const CliCapture a = cli_run(one);
        const CliCapture b = cli_run(many);
        const CliCapture again = cli_run(many);
        ok &= expect(detail, a.code == 0 && b.code == 0, "CLI run failed");
        ok &= expect(detail, a.out == b.out,
                     std::string(format) + ": 1-worker and 6-worker streams differ");
        ok &= expect(detail, b.out == again.out, std::string(format) + ": reruns differ");
    }
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1. lemma3 counts: 28 exceptional at 4x5, 32 at 5x5", lemma3_counts},
        {"2. the 60 exceptional matrices form exactly 11 classes", symmetry_classes},
        {"3. theorem5 exhaustive at n = 5..9 (incl. empty |disc|<=n-1 sets)", theorem5_desk_scale},
        {"4. observation1 formula sweep, 1 <= n <= m <= 12", observation1_sweep},
        {"5. corollary2 t-set characterization, 4 <= n <= 12", corollary2_range},
        {"6. claim8 strict inequality, n in [12,15]", claim8_grid},
        {"7. parabola bound for 16 <= n <= 10^6, failing at n = 15", parabola_sweep},
        {"8. enumerate equals the 2^(nm) oracle on every shape with nm <= 16", oracle_equivalence},
        {"9. lemma4/lemma5 property suites: hits > 0, zero violations", lemma_property_suites},
        {"10. enumeration streams byte-identical across workers and reruns", stream_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto started = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        std::printf("%s  %s  [%.2fs]%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), elapsed,
                    detail.empty() ? "" : "  -- ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
