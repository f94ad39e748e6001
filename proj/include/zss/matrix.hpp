#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zss {

// A fixed-shape matrix with entries in {-1,+1}, packed one bit per cell in
// row-major order (+1 <-> 1, -1 <-> 0). Indexing is 1-based: at(i, j) with
// 1 <= i <= rows, 1 <= j <= cols. Values are immutable after construction;
// transforms build new matrices.
class BinaryMatrix {
public:
    BinaryMatrix(int rows, int cols, int fill)
        : rows_(checked_dim(rows, "rows")),
          cols_(checked_dim(cols, "cols")),
          bits_(word_count(rows, cols), fill > 0 ? ~std::uint64_t{0} : 0) {
        checked_entry(fill);
        mask_tail();
    }

    // entry(i, j) must return -1 or +1 for every 1-based cell.
    template <typename EntryFn>
    static BinaryMatrix build(int rows, int cols, EntryFn&& entry) {
        BinaryMatrix m(rows, cols, -1);
        long long cell = 0;
        for (int i = 1; i <= rows; ++i) {
            for (int j = 1; j <= cols; ++j, ++cell) {
                const int v = entry(i, j);
                checked_entry(v);
                if (v > 0) m.bits_[cell >> 6] |= std::uint64_t{1} << (cell & 63);
            }
        }
        return m;
    }

    // Rows as strings of '+' and '-', one per matrix row.
    static BinaryMatrix from_rows(const std::vector<std::string>& rows) {
        if (rows.empty()) throw std::invalid_argument("from_rows: no rows");
        const int r = static_cast<int>(rows.size());
        const int c = static_cast<int>(rows.front().size());
        for (const auto& line : rows) {
            if (static_cast<int>(line.size()) != c)
                throw std::invalid_argument("from_rows: ragged rows");
            for (char ch : line)
                if (ch != '+' && ch != '-')
                    throw std::invalid_argument("from_rows: entry must be '+' or '-'");
        }
        return build(r, c, [&](int i, int j) { return rows[i - 1][j - 1] == '+' ? 1 : -1; });
    }

    // Packed row-major bits, +1 = 1. Trailing bits beyond the last cell are ignored.
    static BinaryMatrix from_packed(int rows, int cols, std::vector<std::uint64_t> bits) {
        BinaryMatrix m(rows, cols, -1);
        if (bits.size() != m.bits_.size())
            throw std::invalid_argument("from_packed: wrong word count");
        m.bits_ = std::move(bits);
        m.mask_tail();
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    long long cell_count() const noexcept { return static_cast<long long>(rows_) * cols_; }

    // 1-based access; returns -1 or +1.
    int at(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw std::out_of_range("BinaryMatrix::at: index out of range");
        return bit(cell_index(i, j)) ? 1 : -1;
    }

    // Row-major cell index of (i, j), 0-based; no range check.
    long long cell_index(int i, int j) const noexcept {
        return static_cast<long long>(i - 1) * cols_ + (j - 1);
    }

    bool bit(long long cell) const noexcept {
        return (bits_[static_cast<std::size_t>(cell >> 6)] >> (cell & 63)) & 1;
    }

    long long positive_count() const noexcept {
        long long n = 0;
        for (std::uint64_t w : bits_) n += std::popcount(w);
        return n;
    }
    long long negative_count() const noexcept { return cell_count() - positive_count(); }

    std::string row_string(int i) const {
        if (i < 1 || i > rows_) throw std::out_of_range("row_string: bad row");
        std::string s(static_cast<std::size_t>(cols_), '-');
        for (int j = 1; j <= cols_; ++j)
            if (bit(cell_index(i, j))) s[static_cast<std::size_t>(j - 1)] = '+';
        return s;
    }

    const std::vector<std::uint64_t>& packed() const noexcept { return bits_; }

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) noexcept = default;

    // Row-major lexicographic order with -1 < +1. Shape is the primary key so
    // mixed-shape containers still get a total order.
    friend bool operator<(const BinaryMatrix& a, const BinaryMatrix& b) noexcept {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        for (std::size_t w = 0; w < a.bits_.size(); ++w) {
            const std::uint64_t diff = a.bits_[w] ^ b.bits_[w];
            if (diff != 0) {
                const int first = std::countr_zero(diff);
                return ((a.bits_[w] >> first) & 1) == 0;
            }
        }
        return false;
    }

private:
    static int checked_dim(int v, const char* what) {
        if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
        return v;
    }
    static void checked_entry(int v) {
        if (v != 1 && v != -1) throw std::invalid_argument("entry must be -1 or +1");
    }
    static std::size_t word_count(int rows, int cols) {
        const long long cells = static_cast<long long>(checked_dim(rows, "rows")) *
                                checked_dim(cols, "cols");
        return static_cast<std::size_t>((cells + 63) / 64);
    }
    void mask_tail() noexcept {
        const int used = static_cast<int>(cell_count() & 63);
        if (used != 0) bits_.back() &= (std::uint64_t{1} << used) - 1;
    }

    int rows_;
    int cols_;
    std::vector<std::uint64_t> bits_;
};

// ---- entrywise transforms (shape-changing ones allowed at this layer) ----

inline BinaryMatrix negated(const BinaryMatrix& m) {
    std::vector<std::uint64_t> bits = m.packed();
    for (auto& w : bits) w = ~w;
    return BinaryMatrix::from_packed(m.rows(), m.cols(), std::move(bits));
}

// Mirror across the vertical axis: columns reversed.
inline BinaryMatrix reflected_horizontal(const BinaryMatrix& m) {
    return BinaryMatrix::build(m.rows(), m.cols(),
                               [&](int i, int j) { return m.at(i, m.cols() + 1 - j); });
}

// Mirror across the horizontal axis: rows reversed.
inline BinaryMatrix reflected_vertical(const BinaryMatrix& m) {
    return BinaryMatrix::build(m.rows(), m.cols(),
                               [&](int i, int j) { return m.at(m.rows() + 1 - i, j); });
}

inline BinaryMatrix rotated180(const BinaryMatrix& m) {
    return BinaryMatrix::build(m.rows(), m.cols(), [&](int i, int j) {
        return m.at(m.rows() + 1 - i, m.cols() + 1 - j);
    });
}

inline BinaryMatrix transposed(const BinaryMatrix& m) {
    return BinaryMatrix::build(m.cols(), m.rows(), [&](int i, int j) { return m.at(j, i); });
}

inline BinaryMatrix rotated90cw(const BinaryMatrix& m) {
    return BinaryMatrix::build(m.cols(), m.rows(),
                               [&](int i, int j) { return m.at(m.rows() + 1 - j, i); });
}

inline BinaryMatrix rotated90ccw(const BinaryMatrix& m) {
    return BinaryMatrix::build(m.cols(), m.rows(),
                               [&](int i, int j) { return m.at(j, m.cols() + 1 - i); });
}

inline BinaryMatrix anti_transposed(const BinaryMatrix& m) {
    return BinaryMatrix::build(m.cols(), m.rows(), [&](int i, int j) {
        return m.at(m.rows() + 1 - j, m.cols() + 1 - i);
    });
}

// ---- discrepancy and squares ----

// Sum of all entries; equals 2*a+ - n*m.
inline long long discrepancy(const BinaryMatrix& m) noexcept {
    return 2 * m.positive_count() - m.cell_count();
}

// Axis-aligned 2x2 sub-matrix on rows i, i+s and columns j, j+s.
struct Square {
    int i = 0;
    int j = 0;
    int s = 0;
};

inline int square_disc(const BinaryMatrix& m, const Square& q) {
    if (q.s < 1 || q.i < 1 || q.j < 1 || q.i + q.s > m.rows() || q.j + q.s > m.cols())
        throw std::out_of_range("square_disc: square out of range");
    const int pos = (m.bit(m.cell_index(q.i, q.j)) ? 1 : 0) +
                    (m.bit(m.cell_index(q.i, q.j + q.s)) ? 1 : 0) +
                    (m.bit(m.cell_index(q.i + q.s, q.j)) ? 1 : 0) +
                    (m.bit(m.cell_index(q.i + q.s, q.j + q.s)) ? 1 : 0);
    return 2 * pos - 4;
}

// First zero-sum square in scan order (i, then j, then s), if any.
inline std::optional<Square> find_zero_sum_square(const BinaryMatrix& m) noexcept {
    const int n = m.rows();
    const int c = m.cols();
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < c; ++j) {
            const long long base = m.cell_index(i, j);
            const int smax = std::min(n - i, c - j);
            for (int s = 1; s <= smax; ++s) {
                const long long step = static_cast<long long>(s) * c;
                const int pos = (m.bit(base) ? 1 : 0) + (m.bit(base + s) ? 1 : 0) +
                                (m.bit(base + step) ? 1 : 0) + (m.bit(base + step + s) ? 1 : 0);
                if (pos == 2) return Square{i, j, s};
            }
        }
    }
    return std::nullopt;
}

inline bool is_zero_sum_square_free(const BinaryMatrix& m) noexcept {
    return !find_zero_sum_square(m).has_value();
}

// ---- text format ----
//
// "<rows> <cols>\n" then `rows` lines of exactly `cols` characters, '+' for +1
// and '-' for -1, each '\n'-terminated. Nothing else is accepted.

struct TextPosition {
    int line = 1;
    int col = 1;
};

class MatrixParseError : public std::runtime_error {
public:
    MatrixParseError(TextPosition pos, const std::string& message)
        : std::runtime_error(message), pos_(pos) {}
    TextPosition position() const noexcept { return pos_; }

private:
    TextPosition pos_;
};

inline std::string render_text(const BinaryMatrix& m) {
    std::string out = std::to_string(m.rows()) + ' ' + std::to_string(m.cols()) + '\n';
    out.reserve(out.size() + static_cast<std::size_t>(m.cell_count()) + m.rows());
    for (int i = 1; i <= m.rows(); ++i) {
        out += m.row_string(i);
        out += '\n';
    }
    return out;
}

namespace detail {

class TextScanner {
public:
    explicit TextScanner(std::string_view text) : text_(text) {}

    bool done() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return text_[pos_]; }
    TextPosition where() const noexcept { return where_; }

    char take() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++where_.line;
            where_.col = 1;
        } else {
            ++where_.col;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& message) const { throw MatrixParseError(where_, message); }

    int read_dimension(const char* what) {
        if (done() || peek() < '0' || peek() > '9') fail(std::string("expected ") + what);
        long long v = 0;
        while (!done() && peek() >= '0' && peek() <= '9') {
            v = v * 10 + (take() - '0');
            if (v > 1'000'000) fail(std::string(what) + " too large");
        }
        if (v < 1) fail(std::string(what) + " must be >= 1");
        return static_cast<int>(v);
    }

    void expect(char c, const std::string& message) {
        if (done() || peek() != c) fail(message);
        take();
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    TextPosition where_{};
};

}  // namespace detail

inline BinaryMatrix parse_text(std::string_view text) {
    detail::TextScanner in(text);
    const int rows = in.read_dimension("row count");
    in.expect(' ', "expected single space between dimensions");
    const int cols = in.read_dimension("column count");
    if (static_cast<long long>(rows) * cols > 100'000'000) in.fail("matrix too large");
    in.expect('\n', "expected newline after header");

    BinaryMatrix m(rows, cols, -1);
    std::vector<std::uint64_t> bits(m.packed().size(), 0);
    long long cell = 0;
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j, ++cell) {
            if (in.done()) in.fail("unexpected end of input inside matrix row");
            const char c = in.peek();
            if (c != '+' && c != '-') in.fail("expected '+' or '-'");
            in.take();
            if (c == '+') bits[static_cast<std::size_t>(cell >> 6)] |= std::uint64_t{1} << (cell & 63);
        }
        in.expect('\n', "expected newline at end of row");
    }
    if (!in.done()) in.fail("trailing data after matrix");
    return BinaryMatrix::from_packed(rows, cols, std::move(bits));
}

// ---- incremental fill state for row-major search ----

// A prefix of a BinaryMatrix filled in row-major order. Entries go in through
// push/pop only, so "squares completed by the last placement" are exactly the
// ones with their bottom-right corner at the cursor.
class PartialFill {
public:
    PartialFill(int rows, int cols)
        : rows_(rows), cols_(cols), bits_((static_cast<long long>(rows) * cols + 63) / 64, 0) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("PartialFill: shape must be >= 1x1");
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    long long cell_count() const noexcept { return static_cast<long long>(rows_) * cols_; }
    long long filled() const noexcept { return filled_; }
    bool complete() const noexcept { return filled_ == cell_count(); }
    long long partial_disc() const noexcept { return disc_; }

    int next_row() const {
        require_incomplete();
        return static_cast<int>(filled_ / cols_) + 1;
    }
    int next_col() const {
        require_incomplete();
        return static_cast<int>(filled_ % cols_) + 1;
    }

    // Entry at (i, j), which must lie in the filled prefix.
    int at(int i, int j) const {
        const long long cell = static_cast<long long>(i - 1) * cols_ + (j - 1);
        if (i < 1 || j < 1 || i > rows_ || j > cols_ || cell >= filled_)
            throw std::out_of_range("PartialFill::at: cell not filled");
        return bit(cell) ? 1 : -1;
    }

    // Would placing v at the next cell (r, c) close a zero-sum square whose
    // bottom-right corner is (r, c)?
    bool completes_zero_sum_square(int r, int c, int v) const {
        if (v != 1 && v != -1) throw std::invalid_argument("entry must be -1 or +1");
        if (complete() || r != next_row() || c != next_col())
            throw std::invalid_argument("completes_zero_sum_square: (r, c) is not the next fill position");
        return next_completes(v);
    }

    // Same check against the implicit cursor; hot path for the search.
    bool next_completes(int v) const noexcept {
        const long long r0 = filled_ / cols_;  // 0-based row of the next cell
        const long long c0 = filled_ % cols_;
        const long long smax = r0 < c0 ? r0 : c0;
        const int placed = v > 0 ? 1 : 0;
        for (long long s = 1; s <= smax; ++s) {
            const long long up = filled_ - s * cols_;
            const int pos = placed + (bit(up - s) ? 1 : 0) + (bit(up) ? 1 : 0) +
                            (bit(filled_ - s) ? 1 : 0);
            if (pos == 2) return true;
        }
        return false;
    }

    void push(int v) {
        if (v != 1 && v != -1) throw std::invalid_argument("entry must be -1 or +1");
        require_incomplete();
        if (v > 0) bits_[static_cast<std::size_t>(filled_ >> 6)] |= std::uint64_t{1} << (filled_ & 63);
        disc_ += v;
        ++filled_;
    }

    void pop() {
        if (filled_ == 0) throw std::logic_error("PartialFill::pop: empty");
        --filled_;
        const std::uint64_t mask = std::uint64_t{1} << (filled_ & 63);
        if (bits_[static_cast<std::size_t>(filled_ >> 6)] & mask) {
            bits_[static_cast<std::size_t>(filled_ >> 6)] &= ~mask;
            disc_ -= 1;
        } else {
            disc_ += 1;
        }
    }

    BinaryMatrix to_matrix() const {
        if (!complete()) throw std::logic_error("PartialFill::to_matrix: fill incomplete");
        return BinaryMatrix::from_packed(rows_, cols_, bits_);
    }

private:
    void require_incomplete() const {
        if (complete()) throw std::logic_error("PartialFill: already complete");
    }
    bool bit(long long cell) const noexcept {
        return (bits_[static_cast<std::size_t>(cell >> 6)] >> (cell & 63)) & 1;
    }

    int rows_;
    int cols_;
    long long filled_ = 0;
    long long disc_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace zss
