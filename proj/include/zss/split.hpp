#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "zss/matrix.hpp"

namespace zss {

// A t-split matrix has entry (i, j) = -1 iff i + j <= t + 1. A matrix is
// "split" when it, its negation, or one of its two reflections is t-split
// for some t.

inline BinaryMatrix make_t_split(int rows, int cols, int t) {
    if (t < 0 || t >= rows + cols) throw std::out_of_range("make_t_split: t out of range");
    return BinaryMatrix::build(rows, cols,
                               [t](int i, int j) { return i + j <= t + 1 ? -1 : 1; });
}

inline bool is_t_split(const BinaryMatrix& m, int t) {
    if (t < 0 || t >= m.rows() + m.cols()) return false;
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j)
            if (m.bit(m.cell_index(i, j)) != (i + j > t + 1)) return false;
    return true;
}

// Closed-form discrepancy of the n x m t-split matrix, n <= m.
inline long long split_disc_formula(long long n, long long m, long long t) {
    if (n < 1 || m < 1) throw std::invalid_argument("split_disc_formula: shape must be >= 1x1");
    if (n > m) throw std::invalid_argument("split_disc_formula: requires n <= m (swap arguments)");
    if (t < 0 || t >= n + m) throw std::out_of_range("split_disc_formula: t out of range");
    if (t <= n) return n * m - t * (t + 1);
    if (t <= m) return n * m + n * (n - 1) - 2 * n * t;
    return (n + m - t - 1) * (n + m - t) - n * m;
}

enum class SplitVariant { identity, negation, horizontal_reflection, vertical_reflection };

inline const char* to_string(SplitVariant v) {
    switch (v) {
        case SplitVariant::identity: return "identity";
        case SplitVariant::negation: return "negation";
        case SplitVariant::horizontal_reflection: return "horizontal-reflection";
        case SplitVariant::vertical_reflection: return "vertical-reflection";
    }
    return "?";
}

// Which transform of the matrix is t-split, and for which t.
struct SplitDescriptor {
    SplitVariant variant = SplitVariant::identity;
    int t = 0;

    friend bool operator==(const SplitDescriptor&, const SplitDescriptor&) = default;
};

// Scans all t for each of the four variants, in the fixed order
// identity < negation < horizontal < vertical, smallest t first, and returns
// the first match. Empty when the matrix is not split.
inline std::optional<SplitDescriptor> classify_split(const BinaryMatrix& m) {
    const SplitVariant order[] = {SplitVariant::identity, SplitVariant::negation,
                                  SplitVariant::horizontal_reflection,
                                  SplitVariant::vertical_reflection};
    for (SplitVariant variant : order) {
        BinaryMatrix v = m;
        switch (variant) {
            case SplitVariant::identity: break;
            case SplitVariant::negation: v = negated(m); break;
            case SplitVariant::horizontal_reflection: v = reflected_horizontal(m); break;
            case SplitVariant::vertical_reflection: v = reflected_vertical(m); break;
        }
        for (int t = 0; t < m.rows() + m.cols(); ++t)
            if (is_t_split(v, t)) return SplitDescriptor{variant, t};
    }
    return std::nullopt;
}

inline bool is_split(const BinaryMatrix& m) { return classify_split(m).has_value(); }

// For n x n, the t values whose split discrepancy lies within |disc| <= n must
// be exactly {n-1, n}, both with |disc| = n; for n x (n+1) exactly {n} with
// disc = 0.
inline bool corollary2_check(int n) {
    if (n < 1) throw std::invalid_argument("corollary2_check: n must be >= 1");
    // square shape
    for (int t = 0; t < 2 * n; ++t) {
        const long long d = split_disc_formula(n, n, t);
        const bool within = d <= n && d >= -n;
        const bool expected = t == n - 1 || t == n;
        if (within != expected) return false;
        if (within && d != n && d != -n) return false;
    }
    // almost-square shape
    for (int t = 0; t < 2 * n + 1; ++t) {
        const long long d = split_disc_formula(n, n + 1, t);
        const bool within = d <= n && d >= -n;
        if (within != (t == n)) return false;
        if (within && d != 0) return false;
    }
    return true;
}

}  // namespace zss
