#pragma once

// Young diagrams, skew diagrams and the derived shapes used for sl2 rank
// counting: the reduced shape (l^{2k}, p, p), the rim-hook shape nu[s] and
// its quotient by l*omega_1, low-rows, transposes and column removal.
//
// Rows and columns are 1-indexed everywhere in the public interface.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "qkostka/errors.hpp"

namespace qkostka {

/// A box B_(row,col). The defaulted ordering is lexicographic: row first,
/// then column, which is the box order used by the fill algorithms.
struct BoxRef {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const BoxRef&, const BoxRef&) = default;
};

/// Weakly decreasing sequence of row lengths. Trailing zero rows are trimmed,
/// so the empty partition is the empty sequence and equality is structural.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] < 0)
                throw ValidationError("partition rows must be nonnegative");
            if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
                throw ValidationError("partition rows must be weakly decreasing");
        }
        while (!rows_.empty() && rows_.back() == 0)
            rows_.pop_back();
    }

    Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

    /// `height` rows of length `width`.
    static Partition rectangle(int width, int height) {
        if (width < 0 || height < 0)
            throw ValidationError("rectangle dimensions must be nonnegative");
        return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
    }

    const std::vector<int>& rows() const noexcept { return rows_; }
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    bool empty() const noexcept { return rows_.empty(); }
    int width() const noexcept { return rows_.empty() ? 0 : rows_.front(); }

    int area() const noexcept {
        int total = 0;
        for (int r : rows_)
            total += r;
        return total;
    }

    /// Length of row `a` (1-indexed); zero past the last row.
    int row(int a) const noexcept {
        return (a >= 1 && a <= num_rows()) ? rows_[static_cast<std::size_t>(a - 1)] : 0;
    }

    /// Number of boxes in column `b` (1-indexed).
    int column_height(int b) const noexcept {
        int h = 0;
        while (h < num_rows() && rows_[static_cast<std::size_t>(h)] >= b)
            ++h;
        return h;
    }

    bool contains(BoxRef box) const noexcept {
        return box.row >= 1 && box.col >= 1 && box.col <= row(box.row);
    }

    bool contains(const Partition& other) const noexcept {
        if (other.num_rows() > num_rows())
            return false;
        for (int a = 1; a <= other.num_rows(); ++a)
            if (other.row(a) > row(a))
                return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < rows_.size(); ++i)
            os << (i ? "," : "") << rows_[i];
        os << ')';
        return os.str();
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> rows_;
};

/// outer / inner with inner contained in outer row by row.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner = {}) : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_))
            throw ValidationError("inner partition " + inner_.to_string() + " is not contained in outer " +
                                  outer_.to_string());
    }

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int num_rows() const noexcept { return outer_.num_rows(); }
    int area() const noexcept { return outer_.area() - inner_.area(); }
    bool is_straight() const noexcept { return inner_.empty(); }

    /// First and last column of row `a` that belong to the skew diagram
    /// (first > last when the row is empty).
    int first_col(int a) const noexcept { return inner_.row(a) + 1; }
    int last_col(int a) const noexcept { return outer_.row(a); }

    bool contains(BoxRef box) const noexcept { return outer_.contains(box) && !inner_.contains(box); }

    /// Boxes in lexicographic (row-major) order.
    std::vector<BoxRef> boxes() const {
        std::vector<BoxRef> out;
        out.reserve(static_cast<std::size_t>(area()));
        for (int a = 1; a <= num_rows(); ++a)
            for (int b = first_col(a); b <= last_col(a); ++b)
                out.push_back({a, b});
        return out;
    }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

/// Segment sizes of the low-row, top to bottom, starting at the first
/// nonzero segment. Interior zeros are kept: (4,4,3,3) has low-row (1,0,3).
struct LowRow {
    std::vector<int> sizes;

    int total() const noexcept {
        int t = 0;
        for (int s : sizes)
            t += s;
        return t;
    }

    friend bool operator==(const LowRow&, const LowRow&) = default;
};

/// Boxes B_(a,b) with no box B_(a+1,b) below them, grouped by row.
inline LowRow low_row(const Partition& shape) {
    LowRow out;
    bool started = false;
    for (int a = 1; a <= shape.num_rows(); ++a) {
        int size = shape.row(a) - shape.row(a + 1);
        if (size != 0)
            started = true;
        if (started)
            out.sizes.push_back(size);
    }
    return out;
}

/// value = k*level + p with 1 <= p <= level and k >= 0 (value >= 1).
struct LevelSplit {
    int k = 0;
    int p = 0;
    friend bool operator==(const LevelSplit&, const LevelSplit&) = default;
};

inline LevelSplit split_by_level(int value, int level) {
    if (level < 1)
        throw ValidationError("level must be positive");
    if (value < 1)
        throw ValidationError("split_by_level needs a positive value");
    int k = (value + level - 1) / level - 1;
    return {k, value - k * level};
}

/// (level^{2k}, p, p): the shape whose proper tableaux count sl2 ranks.
inline Partition reduced_shape(int level, int k, int p) {
    if (level < 1)
        throw ValidationError("level must be positive");
    if (k < 0)
        throw ValidationError("k must be nonnegative");
    if (p < 1 || p > level)
        throw ValidationError("p must lie in [1, level]");
    std::vector<int> rows(static_cast<std::size_t>(2 * k), level);
    rows.push_back(p);
    rows.push_back(p);
    return Partition(std::move(rows));
}

/// nu[s]/lambda for nu = level*omega_2, lambda = level*omega_1, returned as the
/// straight shape (level^{s+2k-1}, p, p) where s = (k-1)*level + p.
inline Partition quantum_shape(int level, int s) {
    if (s <= 0)
        throw ValidationError("quantum_shape needs s > 0; use reduced_shape for the classical case");
    LevelSplit split = split_by_level(s, level); // s = split.k*level + p, so k = split.k + 1
    int k = split.k + 1;
    int p = split.p;
    std::vector<int> rows(static_cast<std::size_t>(s + 2 * k - 1), level);
    rows.push_back(p);
    rows.push_back(p);
    return Partition(std::move(rows));
}

/// Adds one rim hook (border strip) of `size` boxes whose top row ends in
/// column `start_column`. Throws if no such hook exists.
inline Partition add_rim_hook(const Partition& shape, int size, int start_column) {
    if (size < 1 || start_column < 1)
        throw ValidationError("rim hook size and start column must be positive");
    std::vector<int> rows = shape.rows();
    int top = 1;
    while (shape.row(top) >= start_column)
        ++top;
    // Each later row of a border strip ends one column past the old end of the row above.
    int placed = 0;
    int a = top;
    int new_len = start_column;
    while (true) {
        placed += new_len - shape.row(a);
        if (static_cast<int>(rows.size()) < a)
            rows.resize(static_cast<std::size_t>(a), 0);
        rows[static_cast<std::size_t>(a - 1)] = new_len;
        if (placed == size)
            break;
        if (placed > size)
            throw ValidationError("no rim hook of size " + std::to_string(size) + " starts in column " +
                                  std::to_string(start_column));
        new_len = shape.row(a) + 1;
        ++a;
    }
    return Partition(std::move(rows));
}

/// nu[s]: nu = (level, level) with s rim hooks of size level + 2 added, each
/// starting in column `level`.
inline Partition rim_hook_shape(int level, int s) {
    Partition shape = Partition::rectangle(level, 2);
    for (int i = 0; i < s; ++i)
        shape = add_rim_hook(shape, level + 2, level);
    return shape;
}

inline Partition transpose(const Partition& shape) {
    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(shape.width()));
    for (int b = 1; b <= shape.width(); ++b)
        cols.push_back(shape.column_height(b));
    return Partition(std::move(cols));
}

/// Removes the rightmost column.
inline Partition drop_last_column(const Partition& shape) {
    if (shape.empty())
        throw ValidationError("cannot drop a column from the empty partition");
    std::vector<int> rows = shape.rows();
    int w = shape.width();
    for (int& r : rows)
        if (r == w)
            --r;
    return Partition(std::move(rows));
}

} // namespace qkostka
