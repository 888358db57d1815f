#pragma once

// Tableaux, the semistandard and proper predicates, and the constructive
// fills used to exhibit tableaux on the reduced shape (level^{2k}, p, p):
// forward fill, reverse fill, their combination, and the swap move that
// produces a second tableau when the rank exceeds one.

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qkostka/errors.hpp"
#include "qkostka/shapes.hpp"

namespace qkostka {

/// Amounts c_1..c_n; flavor i has amount c_i.
class Content {
public:
    Content() = default;
    explicit Content(std::vector<int> amounts) : amounts_(std::move(amounts)) {
        for (int c : amounts_)
            if (c < 0)
                throw ValidationError("content amounts must be nonnegative");
    }
    Content(std::initializer_list<int> amounts) : Content(std::vector<int>(amounts)) {}

    const std::vector<int>& amounts() const noexcept { return amounts_; }
    int num_flavors() const noexcept { return static_cast<int>(amounts_.size()); }

    /// Amount of `flavor` (1-indexed); zero outside 1..n.
    int amount(int flavor) const noexcept {
        return (flavor >= 1 && flavor <= num_flavors()) ? amounts_[static_cast<std::size_t>(flavor - 1)] : 0;
    }

    int total() const noexcept { return std::accumulate(amounts_.begin(), amounts_.end(), 0); }

    bool is_descending() const noexcept { return std::is_sorted(amounts_.begin(), amounts_.end(), std::greater<>()); }

    Content sorted_descending() const {
        std::vector<int> v = amounts_;
        std::sort(v.begin(), v.end(), std::greater<>());
        return Content(std::move(v));
    }

    /// Sum of amounts of flavors from..n.
    int tail_sum(int from) const noexcept {
        int s = 0;
        for (int f = std::max(from, 1); f <= num_flavors(); ++f)
            s += amount(f);
        return s;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < amounts_.size(); ++i)
            os << (i ? "," : "") << amounts_[i];
        os << ')';
        return os.str();
    }

    friend bool operator==(const Content&, const Content&) = default;

private:
    std::vector<int> amounts_;
};

/// A filling of a (skew) shape. Entries are stored row-major in one flat
/// vector with per-row offsets.
class Tableau {
public:
    Tableau() = default;

    Tableau(SkewShape shape, std::vector<int> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
        if (static_cast<int>(entries_.size()) != shape_.area())
            throw ValidationError("tableau has " + std::to_string(entries_.size()) + " entries for a shape of area " +
                                  std::to_string(shape_.area()));
        offsets_.reserve(static_cast<std::size_t>(shape_.num_rows()) + 1);
        int off = 0;
        for (int a = 1; a <= shape_.num_rows(); ++a) {
            offsets_.push_back(off);
            off += shape_.last_col(a) - shape_.first_col(a) + 1;
        }
        offsets_.push_back(off);
    }

    /// Straight-shape tableau from explicit rows; the shape is read off the row lengths.
    static Tableau from_rows(const std::vector<std::vector<int>>& rows) {
        std::vector<int> lengths;
        std::vector<int> flat;
        for (const auto& r : rows) {
            lengths.push_back(static_cast<int>(r.size()));
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return Tableau(SkewShape(Partition(std::move(lengths))), std::move(flat));
    }

    const SkewShape& shape() const noexcept { return shape_; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    int num_rows() const noexcept { return shape_.num_rows(); }
    int width() const noexcept { return shape_.outer().width(); }

    /// Entry in B_(row,col), or 0 if the box is not part of the skew diagram.
    int at(int row, int col) const noexcept {
        if (!shape_.contains({row, col}))
            return 0;
        return entries_[index(row, col)];
    }
    int at(BoxRef box) const noexcept { return at(box.row, box.col); }

    std::vector<int> row_entries(int a) const {
        std::vector<int> out;
        for (int b = shape_.first_col(a); b <= shape_.last_col(a); ++b)
            out.push_back(at(a, b));
        return out;
    }

    /// Entries of column b, top to bottom, skipping boxes outside the diagram.
    std::vector<int> column_entries(int b) const {
        std::vector<int> out;
        for (int a = 1; a <= num_rows(); ++a)
            if (shape_.contains({a, b}))
                out.push_back(at(a, b));
        return out;
    }

    int max_flavor() const noexcept {
        return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
    }

    /// Multiplicity of each flavor, padded to at least `num_flavors` entries.
    Content content(int num_flavors = 0) const {
        std::vector<int> amounts(static_cast<std::size_t>(std::max(num_flavors, max_flavor())), 0);
        for (int e : entries_)
            if (e >= 1)
                ++amounts[static_cast<std::size_t>(e - 1)];
        return Content(std::move(amounts));
    }

    Tableau with_entry(BoxRef box, int value) const {
        if (!shape_.contains(box))
            throw ValidationError("box is not in the tableau");
        Tableau copy = *this;
        copy.entries_[index(box.row, box.col)] = value;
        return copy;
    }

    std::vector<std::vector<int>> grid() const {
        std::vector<std::vector<int>> out;
        for (int a = 1; a <= num_rows(); ++a)
            out.push_back(row_entries(a));
        return out;
    }

    friend bool operator==(const Tableau& x, const Tableau& y) {
        return x.shape_ == y.shape_ && x.entries_ == y.entries_;
    }

private:
    std::size_t index(int row, int col) const noexcept {
        return static_cast<std::size_t>(offsets_[static_cast<std::size_t>(row - 1)] + col - shape_.first_col(row));
    }

    SkewShape shape_;
    std::vector<int> entries_;
    std::vector<int> offsets_;
};

/// Rows weakly increase left to right, columns strictly increase downward,
/// all entries positive.
inline bool is_semistandard(const Tableau& t) {
    const SkewShape& s = t.shape();
    for (int a = 1; a <= s.num_rows(); ++a) {
        for (int b = s.first_col(a); b <= s.last_col(a); ++b) {
            int v = t.at(a, b);
            if (v < 1)
                return false;
            if (b > s.first_col(a) && t.at(a, b - 1) > v)
                return false;
            if (a > 1 && s.contains({a - 1, b}) && t.at(a - 1, b) >= v)
                return false;
        }
    }
    return true;
}

/// Wrap-around condition: for every q >= 1 with a box at (r+1+q, 1), its entry
/// is at least the entry at (q, level) whenever that box exists.
inline bool is_proper(const Tableau& t, int level, int rank_plus_one = 2) {
    for (int q = 1; rank_plus_one + q <= t.num_rows(); ++q) {
        BoxRef low{rank_plus_one + q, 1};
        BoxRef high{q, level};
        if (!t.shape().contains(low) || !t.shape().contains(high))
            continue;
        if (t.at(low) < t.at(high))
            return false;
    }
    return true;
}

inline std::string render_text(const Tableau& t) {
    std::ostringstream os;
    for (int a = 1; a <= t.num_rows(); ++a) {
        for (int b = 1; b <= t.shape().last_col(a); ++b) {
            if (b > 1)
                os << ' ';
            if (t.shape().contains({a, b}))
                os << t.at(a, b);
            else
                os << '.';
        }
        os << '\n';
    }
    return os.str();
}

namespace detail {

/// Straight shape being filled in place; 0 marks an empty box.
class Filling {
public:
    explicit Filling(const Partition& shape) : shape_(shape) {
        for (int r : shape.rows())
            cells_.emplace_back(static_cast<std::size_t>(r), 0);
    }

    const Partition& shape() const noexcept { return shape_; }

    int& cell(BoxRef box) { return cells_[static_cast<std::size_t>(box.row - 1)][static_cast<std::size_t>(box.col - 1)]; }
    int cell(BoxRef box) const {
        return cells_[static_cast<std::size_t>(box.row - 1)][static_cast<std::size_t>(box.col - 1)];
    }

    /// The still-empty boxes; reverse fill always leaves them as a partition.
    Partition unfilled() const {
        std::vector<int> rows;
        for (const auto& row : cells_) {
            int len = 0;
            while (len < static_cast<int>(row.size()) && row[static_cast<std::size_t>(len)] == 0)
                ++len;
            for (std::size_t j = static_cast<std::size_t>(len); j < row.size(); ++j)
                if (row[j] == 0)
                    throw InvariantViolation("empty boxes of a partial fill do not form a diagram");
            rows.push_back(len);
        }
        return Partition(std::move(rows));
    }

    /// Puts `amount` copies of `flavor` into the largest boxes of the
    /// low-row of the unfilled diagram. False if the low-row is too small.
    bool place_reverse(int flavor, int amount) {
        Partition open = unfilled();
        std::vector<BoxRef> low;
        for (int a = 1; a <= open.num_rows(); ++a)
            for (int b = open.row(a + 1) + 1; b <= open.row(a); ++b)
                low.push_back({a, b});
        if (amount > static_cast<int>(low.size()))
            return false;
        std::sort(low.begin(), low.end(), std::greater<>());
        for (int i = 0; i < amount; ++i)
            cell(low[static_cast<std::size_t>(i)]) = flavor;
        return true;
    }

    /// Puts `amount` copies of `flavor` into the smallest empty boxes.
    void place_forward(int flavor, int amount) {
        for (int a = 1; a <= shape_.num_rows() && amount > 0; ++a)
            for (int b = 1; b <= shape_.row(a) && amount > 0; ++b)
                if (cell({a, b}) == 0) {
                    cell({a, b}) = flavor;
                    --amount;
                }
        if (amount > 0)
            throw InvariantViolation("forward fill ran out of boxes");
    }

    Tableau to_tableau() const {
        std::vector<int> flat;
        for (const auto& row : cells_)
            flat.insert(flat.end(), row.begin(), row.end());
        return Tableau(SkewShape(shape_), std::move(flat));
    }

private:
    Partition shape_;
    std::vector<std::vector<int>> cells_;
};

inline void require_area(const Partition& shape, const Content& mu) {
    if (shape.area() != mu.total())
        throw ValidationError("content total " + std::to_string(mu.total()) + " does not match shape area " +
                              std::to_string(shape.area()));
}

} // namespace detail

/// Flavors 1..n in increasing order, each into the smallest empty boxes.
/// The result is not validated.
inline Tableau forward_fill(const Partition& shape, const Content& mu) {
    detail::require_area(shape, mu);
    detail::Filling fill(shape);
    for (int f = 1; f <= mu.num_flavors(); ++f)
        fill.place_forward(f, mu.amount(f));
    return fill.to_tableau();
}

/// Flavors n..1 in decreasing order, each into the largest boxes of the
/// low-row of what is still empty. Empty if some amount exceeds that low-row.
inline std::optional<Tableau> reverse_fill(const Partition& shape, const Content& mu) {
    detail::require_area(shape, mu);
    detail::Filling fill(shape);
    for (int f = mu.num_flavors(); f >= 1; --f)
        if (!fill.place_reverse(f, mu.amount(f)))
            return std::nullopt;
    return fill.to_tableau();
}

/// Low-row (l1, l2, l3) after reverse-filling `amount` boxes, for a diagram
/// whose last three rows have lengths (level, l2+l3, l3).
///
/// The middle segment in the second case is l2 + 2*l3 - amount; it is the
/// value obtained by carrying out the placement.
inline LowRow low_row_step(const LowRow& lr, int amount, int level) {
    if (lr.sizes.size() != 3)
        throw ValidationError("low_row_step expects exactly three segments");
    if (lr.total() != level)
        throw ValidationError("low-row segments must sum to the level");
    if (amount < 0 || amount > level)
        throw ValidationError("amount must lie in [0, level]");
    const int l1 = lr.sizes[0], l2 = lr.sizes[1], l3 = lr.sizes[2];
    if (amount <= l3)
        return {{l1, l2 + amount, l3 - amount}};
    if (amount <= l2 + l3)
        return {{l1 + amount - l3, l2 + 2 * l3 - amount, 0}};
    int over = amount - l2 - l3;
    return {{over, level - over - l3, l3}};
}

struct CombinedFill {
    Tableau tableau;
    /// Flavors split..n were reverse-filled, 1..split-1 forward-filled.
    int split = 0;
};

namespace detail {

// Along a reverse fill of (level^{2k}, p, p) the still-empty diagram has the
// form (level^j, l2+l3, l3) read with its last row as the l3 row, or with an
// empty row below it; at least one reading has 0 <= l1 <= level-p and
// 0 <= l3 <= p, where l1 = level - (l2+l3).
inline void check_low_row_bounds(const Partition& open, int level, int p) {
    const int rows = open.num_rows();
    for (int bottom : {rows, rows + 1}) {
        bool full_above = true;
        for (int a = 1; a <= bottom - 2; ++a)
            full_above = full_above && open.row(a) == level;
        if (!full_above)
            continue;
        int middle = bottom >= 2 ? open.row(bottom - 1) : level;
        int l1 = level - middle;
        int l3 = open.row(bottom);
        if (l1 <= level - p && l3 <= p)
            return;
    }
    throw InvariantViolation("low-row bound violated on " + open.to_string() + " with p=" + std::to_string(p));
}

inline void require_reduced_content(int level, int k, int p, const Content& mu) {
    if (!mu.is_descending())
        throw ValidationError("content must be sorted in descending order");
    for (int c : mu.amounts())
        if (c > level)
            throw ValidationError("content amounts must not exceed the level");
    if (mu.total() != 2 * (k * level + p))
        throw ValidationError("content total must equal 2(k*level + p)");
    if (mu.tail_sum(2 * k + 2) < p)
        throw ValidationError("tail sum is below p; no tableau exists");
}

} // namespace detail

/// Reverse fill of flavors 2k+2..n into (level^{2k}, p, p) followed by a
/// forward fill of 1..2k+1. When that filling is not a proper semistandard
/// tableau, the split moves down (reverse-filling 2k+1, then 2k, ...) as in
/// the inductive step of the construction. Throws InvariantViolation if no
/// split yields a valid tableau.
inline CombinedFill combined_fill_detailed(int level, int k, int p, const Content& mu) {
    Partition shape = reduced_shape(level, k, p);
    detail::require_reduced_content(level, k, p, mu);
    const int n = mu.num_flavors();
    for (int split = std::min(2 * k + 2, n + 1); split >= 1; --split) {
        detail::Filling fill(shape);
        bool placed = true;
        for (int f = n; f >= split; --f) {
            if (!fill.place_reverse(f, mu.amount(f))) {
                placed = false;
                break;
            }
            detail::check_low_row_bounds(fill.unfilled(), level, p);
        }
        if (!placed)
            continue;
        for (int f = 1; f < split; ++f)
            fill.place_forward(f, mu.amount(f));
        Tableau t = fill.to_tableau();
        if (is_semistandard(t) && is_proper(t, level))
            return {std::move(t), split};
    }
    throw InvariantViolation("combined fill produced no proper tableau for content " + mu.to_string());
}

inline Tableau combined_fill(int level, int k, int p, const Content& mu) {
    return combined_fill_detailed(level, k, p, mu).tableau;
}

struct Modification {
    Tableau tableau;
    BoxRef upper;  ///< box in row r that received z
    BoxRef lower;  ///< box in row r+1 that received y
    bool literal_row = true; ///< row r was the lowest row free of tail flavors
};

namespace detail {

inline std::optional<Modification> try_swap(const Tableau& t, int r, int l, int level) {
    int a = t.at(r, l);
    int b = t.at(r + 1, l);
    if (b - a <= 1)
        return std::nullopt;
    int y = 0;
    for (int v : t.row_entries(r))
        if (v < b)
            y = std::max(y, v);
    int upper_col = 0;
    for (int c = t.shape().first_col(r); c <= t.shape().last_col(r); ++c)
        if (t.at(r, c) == y)
            upper_col = c;
    int z = y + 1;
    int lower_col = 0;
    for (int c = t.shape().first_col(r + 1); c <= t.shape().last_col(r + 1); ++c)
        if (t.at(r + 1, c) == z) {
            lower_col = c;
            break;
        }
    if (lower_col == 0)
        return std::nullopt;
    BoxRef upper{r, upper_col}, lower{r + 1, lower_col};
    Tableau u = t.with_entry(upper, z).with_entry(lower, y);
    if (u == t || !is_semistandard(u) || !is_proper(u, level))
        return std::nullopt;
    return Modification{std::move(u), upper, lower, true};
}

} // namespace detail

/// Swap move producing a second proper tableau with the same content.
///
/// Applies only when the tail sum over flavors 2k+2..n exceeds p and the
/// content is not maximal; returns empty otherwise or when no swap is valid.
/// Row r is first taken as the lowest row without tail flavors; every column
/// with a jump greater than one between rows r and r+1 is tried. Failing
/// that, the same swap is searched over all consecutive row pairs.
inline std::optional<Modification> modify_tableau_detailed(const Tableau& t, int k, int p) {
    const int level = t.width();
    Content mu = t.content();
    int nonzero = 0, full = 0;
    for (int c : mu.amounts()) {
        nonzero += c > 0;
        full += c == level;
    }
    bool maximal = full >= nonzero - 3;
    if (mu.tail_sum(2 * k + 2) <= p || maximal)
        return std::nullopt;

    const int rows = t.num_rows();
    int literal = 0;
    for (int a = 1; a <= rows; ++a) {
        auto entries = t.row_entries(a);
        if (std::all_of(entries.begin(), entries.end(), [&](int v) { return v <= 2 * k + 1; }))
            literal = a;
    }
    if (literal >= 1 && literal < rows)
        for (int l = t.shape().first_col(literal + 1); l <= t.shape().last_col(literal + 1); ++l)
            if (t.shape().contains({literal, l}))
                if (auto m = detail::try_swap(t, literal, l, level))
                    return m;
    for (int r = 1; r < rows; ++r) {
        if (r == literal)
            continue;
        for (int l = t.shape().first_col(r + 1); l <= t.shape().last_col(r + 1); ++l)
            if (t.shape().contains({r, l}))
                if (auto m = detail::try_swap(t, r, l, level)) {
                    m->literal_row = false;
                    return m;
                }
    }
    return std::nullopt;
}

inline std::optional<Tableau> modify_tableau(const Tableau& t, int k, int p) {
    if (auto m = modify_tableau_detailed(t, k, p))
        return std::move(m->tableau);
    return std::nullopt;
}

} // namespace qkostka
