#pragma once

#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zss/matrix.hpp"
#include "zss/search.hpp"
#include "zss/split.hpp"
#include "zss/symmetry.hpp"

namespace zss {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

// Result of one named check: named counters witnessing what was examined,
// offending matrices when an existential check failed.
struct VerificationOutcome {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::vector<std::pair<std::string, long long>> counts;
    std::vector<BinaryMatrix> witnesses;
    std::string note;
    double seconds = 0.0;
};

struct VerifyOptions {
    int max_n = 9;  // largest n whose shapes are enumerated; larger ones report skipped
    int jobs = 1;
};

namespace detail {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

inline std::string shape_str(int rows, int cols) {
    return std::to_string(rows) + "x" + std::to_string(cols);
}

struct ZssfSet {
    std::vector<BinaryMatrix> matrices;
    EnumerationReport report;
};

inline ZssfSet collect_zssf(int rows, int cols, long long bound, int jobs) {
    EnumerationQuery q;
    q.rows = rows;
    q.cols = cols;
    q.disc = DiscConstraint::at_most(bound);
    ZssfSet set;
    set.report = enumerate(q, [&](const BinaryMatrix& m) { set.matrices.push_back(m); }, jobs);
    return set;
}

inline void fail_with(VerificationOutcome& out, const std::string& why) {
    out.status = CheckStatus::fail;
    if (!out.note.empty()) out.note += "; ";
    out.note += why;
}

}  // namespace detail

// The sub-matrix on rows r1..r2, cols c1..c2, read as a standalone matrix:
// is it t-split?
inline bool block_is_t_split(const BinaryMatrix& m, int r1, int r2, int c1, int c2, int t) {
    if (t < 0 || t >= (r2 - r1 + 1) + (c2 - c1 + 1)) return false;
    for (int i = r1; i <= r2; ++i)
        for (int j = c1; j <= c2; ++j)
            if (m.bit(m.cell_index(i, j)) != ((i - r1 + 1) + (j - c1 + 1) > t + 1)) return false;
    return true;
}

// ---- exhaustive shape checks ----

// Every zero-sum-square-free n x (n+1) (4 <= n <= 11) or n x n (5 <= n <= 11)
// matrix with |disc| <= 2n must be split, except 28 exceptional 4x5 matrices
// and 32 exceptional 5x5 matrices. Shapes above the budget report as skipped.
inline VerificationOutcome verify_lemma3(const VerifyOptions& opts = {}) {
    detail::Stopwatch clock;
    VerificationOutcome out{"lemma3"};

    std::string skipped;
    for (int n = 4; n <= 11; ++n) {
        struct ShapeRun {
            int rows, cols;
            long long expected;
        };
        std::vector<ShapeRun> shapes;
        if (n >= 5) shapes.push_back({n, n, n == 5 ? 32 : 0});
        shapes.push_back({n, n + 1, n == 4 ? 28 : 0});

        for (const ShapeRun& shape : shapes) {
            const std::string name = detail::shape_str(shape.rows, shape.cols);
            if (n > opts.max_n) {
                skipped += skipped.empty() ? name : " " + name;
                continue;
            }
            const auto set = detail::collect_zssf(shape.rows, shape.cols, 2LL * n, opts.jobs);
            out.counts.emplace_back(name + " zssf", set.report.total);
            out.counts.emplace_back(name + " exceptional", set.report.exceptional_count);
            if (set.report.exceptional_count != shape.expected) {
                detail::fail_with(out, name + ": expected " + std::to_string(shape.expected) +
                                           " exceptional, found " +
                                           std::to_string(set.report.exceptional_count));
                for (const BinaryMatrix& m : set.matrices)
                    if (!is_split(m)) out.witnesses.push_back(m);
            }
        }
    }
    if (!skipped.empty()) {
        out.counts.emplace_back("skipped shapes", static_cast<long long>(
                                                      std::count(skipped.begin(), skipped.end(), ' ') + 1));
        out.note += (out.note.empty() ? "" : "; ") + ("skipped: " + skipped);
    }
    out.seconds = clock.seconds();
    return out;
}

// Every zero-sum-square-free n x n and n x (n+1) matrix with |disc| <= n must
// be split, and at |disc| <= n-1 the n x n result set must be empty.
inline VerificationOutcome verify_theorem5(int n, const VerifyOptions& opts = {}) {
    if (n < 5) throw std::invalid_argument("verify_theorem5: requires n >= 5");
    detail::Stopwatch clock;
    VerificationOutcome out{"theorem5(n=" + std::to_string(n) + ")"};

    for (int cols : {n, n + 1}) {
        const std::string name = detail::shape_str(n, cols);
        const auto set = detail::collect_zssf(n, cols, n, opts.jobs);
        out.counts.emplace_back(name + " zssf", set.report.total);
        out.counts.emplace_back(name + " non-split", set.report.exceptional_count);
        if (set.report.exceptional_count != 0) {
            detail::fail_with(out, name + ": non-split zero-sum-square-free matrix found");
            for (const BinaryMatrix& m : set.matrices)
                if (!is_split(m)) out.witnesses.push_back(m);
        }
        // Survivors are split, so their discrepancies are pinned down: +-n on
        // the square shape, 0 on the almost-square.
        for (const auto& [d, cnt] : set.report.per_disc) {
            const bool ok = cols == n ? (d == n || d == -n) : d == 0;
            if (!ok)
                detail::fail_with(out, name + ": unexpected survivor discrepancy " +
                                           std::to_string(d));
        }
    }

    EnumerationQuery q;
    q.rows = n;
    q.cols = n;
    q.disc = DiscConstraint::at_most(n - 1);
    q.count_only = true;
    const auto tighter = enumerate(q, {}, opts.jobs);
    out.counts.emplace_back(detail::shape_str(n, n) + " zssf with |disc|<=n-1", tighter.total);
    if (tighter.total != 0)
        detail::fail_with(out, "zero-sum-square-free matrix with |disc| <= n-1 exists");

    out.seconds = clock.seconds();
    return out;
}

inline std::vector<VerificationOutcome> verify_theorem5_range(const VerifyOptions& opts = {}) {
    std::vector<VerificationOutcome> outs;
    for (int n = 5; n <= 11; ++n) {
        if (n <= opts.max_n) {
            outs.push_back(verify_theorem5(n, opts));
        } else {
            VerificationOutcome skip{"theorem5(n=" + std::to_string(n) + ")"};
            skip.status = CheckStatus::skipped;
            skip.note = "above budget (max_n = " + std::to_string(opts.max_n) + ")";
            outs.push_back(std::move(skip));
        }
    }
    return outs;
}

// ---- closed-form positive-entry bounds ----

struct ClaimParams {
    int n = 0;
    int t = 0;
};

// Interval floor(n/2) <= t <= floor((2n+1)/3); within it T = floor(3t/2) <= n.
inline bool claim_params_valid(const ClaimParams& p) {
    return p.n >= 1 && p.t >= p.n / 2 && p.t <= (2 * p.n + 1) / 3;
}

struct ClaimTerms {
    long long a0 = 0, a1 = 0, a2 = 0, a3 = 0;
    long long total() const noexcept { return a0 + a1 + a2 + a3; }
};

// Exact integer evaluation of the four positive-entry counts for side n and
// split parameter t, with T = floor(3t/2) and R = n - T:
//   a0 = t(t-1)/2 + floor(t/2)^2 + 2t*floor(t/2)
//   a1 = 2 * sum_{k=1..R} floor((t+1-k)/2)
//   a2 = 2 * sum_{k=1..R} (t-k)
//   a3 = R
inline ClaimTerms claim7_terms(const ClaimParams& p) {
    if (!claim_params_valid(p)) throw std::invalid_argument("claim7_terms: t outside interval");
    const long long t = p.t;
    const long long half_t = t / 2;
    const long long big_t = 3 * t / 2;
    const long long r = p.n - big_t;  // >= 0 for valid params

    // F(x) = sum_{j=1..x} floor(j/2) = (x^2 - (x odd)) / 4
    const auto prefix = [](long long x) { return (x * x - (x & 1)) / 4; };

    ClaimTerms terms;
    terms.a0 = t * (t - 1) / 2 + half_t * half_t + 2 * t * half_t;
    terms.a1 = 2 * (prefix(t) - prefix(t - r));
    terms.a2 = 2 * (t * r - r * (r + 1) / 2);
    terms.a3 = r;
    return terms;
}

// Strict inequality 2*(a0+a1+a2+a3) > n^2 + 2n over 12 <= n <= 15 and the
// whole t interval; integer arithmetic only.
inline VerificationOutcome verify_claim8() {
    detail::Stopwatch clock;
    VerificationOutcome out{"claim8"};
    long long cases = 0;
    for (int n = 12; n <= 15; ++n) {
        for (int t = n / 2; t <= (2 * n + 1) / 3; ++t) {
            ++cases;
            const long long total = claim7_terms({n, t}).total();
            if (2 * total <= static_cast<long long>(n) * n + 2 * n)
                detail::fail_with(out, "inequality fails at n=" + std::to_string(n) +
                                           ", t=" + std::to_string(t));
        }
    }
    out.counts.emplace_back("cases", cases);
    out.seconds = clock.seconds();
    return out;
}

// 23n^2 - 70n - 77 > 16(n^2 + 2n) for every integer 16 <= n <= n_max, failing
// at n = 15; equivalently 7n^2 - 102n - 77 changes sign inside (-1, 0) and
// (15, 16).
inline VerificationOutcome verify_parabola_bound(long long n_max = 1'000'000) {
    if (n_max < 16) throw std::invalid_argument("verify_parabola_bound: n_max must be >= 16");
    detail::Stopwatch clock;
    VerificationOutcome out{"parabola"};

    const auto lhs = [](long long n) { return 23 * n * n - 70 * n - 77; };
    const auto rhs = [](long long n) { return 16 * (n * n + 2 * n); };
    const auto gap = [](long long n) { return 7 * n * n - 102 * n - 77; };

    long long checked = 0;
    for (long long n = 16; n <= n_max; ++n) {
        ++checked;
        if (lhs(n) <= rhs(n)) {
            detail::fail_with(out, "bound fails at n=" + std::to_string(n));
            break;
        }
    }
    out.counts.emplace_back("n checked", checked);

    if (lhs(15) > rhs(15)) detail::fail_with(out, "bound unexpectedly holds at n=15");
    if (!(gap(-1) > 0 && gap(0) < 0)) detail::fail_with(out, "no sign change across (-1, 0)");
    if (!(gap(15) < 0 && gap(16) > 0)) detail::fail_with(out, "no sign change across (15, 16)");

    out.seconds = clock.seconds();
    return out;
}

// ---- block-extension properties over sample sets ----

// For every square block M' = M[h,k;j,l] with k-h = l-j = b >= 2 inside a
// zero-sum-square-free matrix with at least 5 rows:
//   (a) M[h+1,k;j,l] b-split  =>  M' (b+1)-split
//   (b) M[h,k;j+1,l] b-split  =>  M' (b+1)-split
//   (c) M[h,k-1;j,l] b-split  =>  M' b-split
//   (d) M[h,k;j,l-1] b-split  =>  M' b-split
inline VerificationOutcome property_check_lemma4(const std::vector<BinaryMatrix>& samples) {
    detail::Stopwatch clock;
    VerificationOutcome out{"lemma4"};
    long long eligible = 0, skipped = 0, hits = 0, vacuous = 0;

    for (const BinaryMatrix& m : samples) {
        if (m.rows() < 5 || !is_zero_sum_square_free(m)) {
            ++skipped;
            continue;
        }
        ++eligible;
        const int n = m.rows(), cols = m.cols();
        for (int h = 1; h < n; ++h) {
            for (int j = 1; j < cols; ++j) {
                const int bmax = std::min(n - h, cols - j);
                for (int b = 2; b <= bmax; ++b) {
                    const int k = h + b, l = j + b;
                    const bool hyp[4] = {
                        block_is_t_split(m, h + 1, k, j, l, b),
                        block_is_t_split(m, h, k, j + 1, l, b),
                        block_is_t_split(m, h, k - 1, j, l, b),
                        block_is_t_split(m, h, k, j, l - 1, b),
                    };
                    const int conclusion_t[4] = {b + 1, b + 1, b, b};
                    for (int part = 0; part < 4; ++part) {
                        if (!hyp[part]) {
                            ++vacuous;
                            continue;
                        }
                        ++hits;
                        if (!block_is_t_split(m, h, k, j, l, conclusion_t[part])) {
                            detail::fail_with(out, "part " + std::string(1, char('a' + part)) +
                                                       " fails at block [" + std::to_string(h) +
                                                       "," + std::to_string(k) + ";" +
                                                       std::to_string(j) + "," + std::to_string(l) +
                                                       "]");
                            out.witnesses.push_back(m);
                        }
                    }
                }
            }
        }
    }
    out.counts.emplace_back("samples", static_cast<long long>(samples.size()));
    out.counts.emplace_back("eligible", eligible);
    out.counts.emplace_back("skipped", skipped);
    out.counts.emplace_back("hypothesis hits", hits);
    out.counts.emplace_back("vacuous", vacuous);
    out.seconds = clock.seconds();
    return out;
}

// When the prefix block M[1,k;1,l] is t-split with t < k < rows, t < l < cols:
// for l < r <= min(t+l-1, rows) the entries a(r, i) agree over
// i in [1, floor((t+l-r+1)/2)] u [r-t+1, l], and symmetrically for columns.
inline VerificationOutcome property_check_lemma5(const std::vector<BinaryMatrix>& samples) {
    detail::Stopwatch clock;
    VerificationOutcome out{"lemma5"};
    long long eligible = 0, skipped = 0, prefix_hits = 0, clause_checks = 0, no_prefix = 0;

    for (const BinaryMatrix& m : samples) {
        if (!is_zero_sum_square_free(m)) {
            ++skipped;
            continue;
        }
        ++eligible;
        const int n = m.rows(), cols = m.cols();
        bool any_prefix = false;

        const auto all_equal = [&](const std::vector<int>& entries) {
            for (int v : entries)
                if (v != entries.front()) return false;
            return true;
        };

        for (int k = 2; k < n; ++k) {
            for (int l = 2; l < cols; ++l) {
                for (int t = 0; t < std::min(k, l); ++t) {
                    if (!block_is_t_split(m, 1, k, 1, l, t)) continue;
                    any_prefix = true;
                    ++prefix_hits;

                    for (int r = l + 1; r <= std::min(t + l - 1, n); ++r) {
                        std::vector<int> entries;
                        for (int i = 1; i <= (t + l - r + 1) / 2; ++i) entries.push_back(m.at(r, i));
                        for (int i = std::max(1, r - t + 1); i <= l; ++i) entries.push_back(m.at(r, i));
                        if (entries.size() < 2) continue;
                        ++clause_checks;
                        if (!all_equal(entries)) {
                            detail::fail_with(out, "row clause fails at r=" + std::to_string(r) +
                                                       " (k=" + std::to_string(k) +
                                                       ", l=" + std::to_string(l) +
                                                       ", t=" + std::to_string(t) + ")");
                            out.witnesses.push_back(m);
                        }
                    }
                    for (int c = k + 1; c <= std::min(t + k - 1, cols); ++c) {
                        std::vector<int> entries;
                        for (int i = 1; i <= (t + k - c + 1) / 2; ++i) entries.push_back(m.at(i, c));
                        for (int i = std::max(1, c - t + 1); i <= k; ++i) entries.push_back(m.at(i, c));
                        if (entries.size() < 2) continue;
                        ++clause_checks;
                        if (!all_equal(entries)) {
                            detail::fail_with(out, "column clause fails at c=" + std::to_string(c) +
                                                       " (k=" + std::to_string(k) +
                                                       ", l=" + std::to_string(l) +
                                                       ", t=" + std::to_string(t) + ")");
                            out.witnesses.push_back(m);
                        }
                    }
                }
            }
        }
        if (!any_prefix) ++no_prefix;
    }
    out.counts.emplace_back("samples", static_cast<long long>(samples.size()));
    out.counts.emplace_back("eligible", eligible);
    out.counts.emplace_back("skipped", skipped);
    out.counts.emplace_back("prefix hits", prefix_hits);
    out.counts.emplace_back("clause checks", clause_checks);
    out.counts.emplace_back("no qualifying prefix", no_prefix);
    out.seconds = clock.seconds();
    return out;
}

// Split matrices plus the exhaustive small-shape zero-sum-square-free sets;
// random sampling would almost never hit the split-sub-block hypotheses.
inline std::vector<BinaryMatrix> lemma4_default_samples(int jobs = 1) {
    std::vector<BinaryMatrix> samples;
    for (int t = 0; t < 10; ++t) {
        const BinaryMatrix s = make_t_split(5, 5, t);
        samples.push_back(s);
        samples.push_back(negated(s));
        samples.push_back(reflected_horizontal(s));
        samples.push_back(reflected_vertical(s));
    }
    for (const auto& [rows, cols, bound] : {std::tuple{5, 5, 10LL}, {5, 6, 10LL}, {6, 6, 12LL}}) {
        auto set = detail::collect_zssf(rows, cols, bound, jobs);
        samples.insert(samples.end(), set.matrices.begin(), set.matrices.end());
    }
    return samples;
}

inline std::vector<BinaryMatrix> lemma5_default_samples(int jobs = 1) {
    std::vector<BinaryMatrix> samples;
    for (int n = 6; n <= 8; ++n)
        for (int t = 0; t < 2 * n; ++t) samples.push_back(make_t_split(n, n, t));
    for (const auto& [rows, cols, bound] : {std::tuple{6, 6, 12LL}, {6, 7, 12LL}}) {
        auto set = detail::collect_zssf(rows, cols, bound, jobs);
        samples.insert(samples.end(), set.matrices.begin(), set.matrices.end());
    }
    return samples;
}

// Closed-form split discrepancy equals the brute-force sum for every
// 1 <= n <= m <= 12 and every 0 <= t < n + m.
inline VerificationOutcome verify_observation1() {
    detail::Stopwatch clock;
    VerificationOutcome out{"observation1"};
    long long cases = 0;
    for (int n = 1; n <= 12; ++n) {
        for (int m = n; m <= 12; ++m) {
            for (int t = 0; t < n + m; ++t) {
                ++cases;
                const BinaryMatrix split = make_t_split(n, m, t);
                if (split_disc_formula(n, m, t) != discrepancy(split)) {
                    detail::fail_with(out, "formula mismatch at n=" + std::to_string(n) + ", m=" +
                                               std::to_string(m) + ", t=" + std::to_string(t));
                    out.witnesses.push_back(split);
                }
            }
        }
    }
    out.counts.emplace_back("cases", cases);
    out.seconds = clock.seconds();
    return out;
}

// ---- report rendering ----

inline nlohmann::ordered_json outcome_json(const VerificationOutcome& o) {
    nlohmann::ordered_json j;
    j["name"] = o.name;
    j["status"] = to_string(o.status);
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [key, value] : o.counts) counts[key] = value;
    j["counts"] = std::move(counts);
    if (!o.note.empty()) j["note"] = o.note;
    if (!o.witnesses.empty()) {
        nlohmann::ordered_json ws = nlohmann::ordered_json::array();
        for (const BinaryMatrix& m : o.witnesses) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int i = 1; i <= m.rows(); ++i) rows.push_back(m.row_string(i));
            ws.push_back(std::move(rows));
        }
        j["witnesses"] = std::move(ws);
    }
    j["seconds"] = o.seconds;
    return j;
}

inline std::string outcome_json_line(const VerificationOutcome& o) { return outcome_json(o).dump(); }

inline void print_outcome_text(std::ostream& os, const VerificationOutcome& o) {
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", o.seconds);
    os << o.name << ": " << to_string(o.status) << " (" << timing << ")\n";
    for (const auto& [key, value] : o.counts) os << "  " << key << " = " << value << '\n';
    if (!o.note.empty()) os << "  note: " << o.note << '\n';
    for (const BinaryMatrix& m : o.witnesses) {
        os << "  witness:\n";
        for (int i = 1; i <= m.rows(); ++i) os << "    " << m.row_string(i) << '\n';
    }
}

}  // namespace zss
