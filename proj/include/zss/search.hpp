#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "zss/matrix.hpp"
#include "zss/split.hpp"

namespace zss {

// Either disc == value exactly, or |disc| <= value.
struct DiscConstraint {
    enum class Kind { exact, at_most_abs };

    Kind kind = Kind::at_most_abs;
    long long value = 0;

    static DiscConstraint exactly(long long d) { return {Kind::exact, d}; }
    static DiscConstraint at_most(long long bound) { return {Kind::at_most_abs, bound}; }

    bool satisfied(long long disc) const noexcept {
        return kind == Kind::exact ? disc == value : (disc <= value && disc >= -value);
    }

    // Can any completion of a prefix with sum `partial` and `remaining` cells
    // still satisfy the constraint? Exact: |d - p| <= R and d - p == R (mod 2).
    // Bound: [p - R, p + R] must meet [-B, B] on the reachable parity.
    bool reachable(long long partial, long long remaining) const noexcept {
        if (kind == Kind::exact) {
            const long long gap = value - partial;
            const long long mag = gap < 0 ? -gap : gap;
            return mag <= remaining && (((gap + remaining) & 1) == 0);
        }
        const long long lo = std::max(partial - remaining, -value);
        const long long hi = std::min(partial + remaining, value);
        if (lo > hi) return false;
        if (lo < hi) return true;  // two parities available
        return ((lo - partial + remaining) & 1) == 0;
    }
};

struct EnumerationQuery {
    int rows = 0;
    int cols = 0;
    DiscConstraint disc;
    bool require_zssf = true;
    bool count_only = false;
    // Cells expanded breadth-first into parallel subtree roots; capped at one
    // full row so every root still sees whole-square completions below it.
    int prefix_cells = 8;
};

struct EnumerationReport {
    long long total = 0;
    std::map<long long, long long> per_disc;
    long long split_count = 0;
    long long exceptional_count = 0;
    double elapsed_seconds = 0.0;
};

using MatrixSink = std::function<void(const BinaryMatrix&)>;

namespace detail {

struct SubtreeResult {
    std::vector<BinaryMatrix> matrices;
    std::map<long long, long long> per_disc;
    long long total = 0;
    long long split_count = 0;
    long long exceptional_count = 0;
};

inline void record_match(const EnumerationQuery& q, const PartialFill& p, SubtreeResult& out) {
    BinaryMatrix m = p.to_matrix();
    ++out.total;
    ++out.per_disc[p.partial_disc()];
    if (is_split(m))
        ++out.split_count;
    else
        ++out.exceptional_count;
    if (!q.count_only) out.matrices.push_back(std::move(m));
}

// Depth-first over the remaining cells; -1 before +1 keeps emission
// lexicographic. Both pruning rules are exact, so every leaf is a match.
inline void search_subtree(const EnumerationQuery& q, PartialFill& p, SubtreeResult& out) {
    if (p.complete()) {
        record_match(q, p, out);
        return;
    }
    const long long rem = p.cell_count() - p.filled() - 1;
    const long long disc = p.partial_disc();

    if (!(q.require_zssf && p.next_completes(-1)) && q.disc.reachable(disc - 1, rem)) {
        p.push(-1);
        search_subtree(q, p, out);
        p.pop();
    }
    if (!(q.require_zssf && p.next_completes(+1)) && q.disc.reachable(disc + 1, rem)) {
        p.push(+1);
        search_subtree(q, p, out);
        p.pop();
    }
}

// All surviving prefixes of `depth` cells, in lexicographic order.
inline void expand_roots(const EnumerationQuery& q, PartialFill& p, long long depth,
                         std::vector<PartialFill>& roots) {
    if (p.filled() == depth) {
        roots.push_back(p);
        return;
    }
    const long long rem = p.cell_count() - p.filled() - 1;
    const long long disc = p.partial_disc();
    for (int v : {-1, +1}) {
        if (q.require_zssf && p.next_completes(v)) continue;
        if (!q.disc.reachable(disc + v, rem)) continue;
        p.push(v);
        expand_roots(q, p, depth, roots);
        p.pop();
    }
}

inline void merge_into(EnumerationReport& report, const SubtreeResult& part) {
    report.total += part.total;
    report.split_count += part.split_count;
    report.exceptional_count += part.exceptional_count;
    for (const auto& [d, n] : part.per_disc) report.per_disc[d] += n;
}

}  // namespace detail

// Streams every matrix of the requested shape that meets the constraints, in
// lexicographic order over row-major entries with -1 < +1, invoking `sink`
// once per matrix (unless count_only). The emitted stream is identical for
// any number of jobs.
inline EnumerationReport enumerate(const EnumerationQuery& query, const MatrixSink& sink = {},
                                   int jobs = 1) {
    if (query.rows < 1 || query.cols < 1)
        throw std::invalid_argument("enumerate: shape must be >= 1x1");
    if (query.prefix_cells < 0) throw std::invalid_argument("enumerate: prefix_cells must be >= 0");
    const auto started = std::chrono::steady_clock::now();

    EnumerationReport report;

    // Clamp the constraint to the attainable discrepancy range; |disc| <= nm
    // always, so nothing is lost and later +-1 arithmetic cannot overflow.
    EnumerationQuery q = query;
    const long long cells = static_cast<long long>(q.rows) * q.cols;
    if (q.disc.kind == DiscConstraint::Kind::exact &&
        (q.disc.value > cells || q.disc.value < -cells)) {
        report.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return report;
    }
    if (q.disc.kind == DiscConstraint::Kind::at_most_abs && q.disc.value > cells)
        q.disc.value = cells;
    const auto drain = [&](const detail::SubtreeResult& part) {
        detail::merge_into(report, part);
        if (sink && !q.count_only)
            for (const BinaryMatrix& m : part.matrices) sink(m);
    };

    PartialFill seed(q.rows, q.cols);
    const long long split_depth =
        std::min<long long>(std::min(q.prefix_cells, q.cols), seed.cell_count());

    if (jobs <= 1 || split_depth == 0) {
        detail::SubtreeResult all;
        detail::search_subtree(q, seed, all);
        drain(all);
    } else {
        std::vector<PartialFill> roots;
        detail::expand_roots(q, seed, split_depth, roots);

        const int workers = static_cast<int>(std::min<std::size_t>(jobs, roots.size()));
        std::vector<std::optional<detail::SubtreeResult>> slots(roots.size());
        std::atomic<std::size_t> next_root{0};
        std::mutex mu;
        std::condition_variable slot_ready;

        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next_root.fetch_add(1);
                    if (i >= roots.size()) return;
                    detail::SubtreeResult part;
                    PartialFill p = roots[i];
                    detail::search_subtree(q, p, part);
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        slots[i] = std::move(part);
                    }
                    slot_ready.notify_all();
                }
            });
        }

        // Drain in root order so emission stays deterministic.
        for (std::size_t i = 0; i < slots.size(); ++i) {
            std::unique_lock<std::mutex> lock(mu);
            slot_ready.wait(lock, [&] { return slots[i].has_value(); });
            detail::SubtreeResult part = std::move(*slots[i]);
            slots[i].reset();
            lock.unlock();
            drain(part);
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

// Brute-force pass over all 2^(rows*cols) matrices in lexicographic order,
// counting those accepted by `pred`. Validation oracle for enumerate,
// independent of the incremental search path.
inline long long count_all_unpruned(int rows, int cols,
                                    const std::function<bool(const BinaryMatrix&)>& pred) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("count_all_unpruned: shape must be >= 1x1");
    const long long cells = static_cast<long long>(rows) * cols;
    if (cells > 20) throw std::invalid_argument("count_all_unpruned: refuses shapes above 20 cells");

    long long count = 0;
    const std::uint64_t end = std::uint64_t{1} << cells;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        // Cell k maps to bit (cells-1-k), so ascending mask = lexicographic order.
        BinaryMatrix m = BinaryMatrix::build(rows, cols, [&](int i, int j) {
            const long long cell = static_cast<long long>(i - 1) * cols + (j - 1);
            return (mask >> (cells - 1 - cell)) & 1 ? 1 : -1;
        });
        if (pred(m)) ++count;
    }
    return count;
}

}  // namespace zss
