#pragma once

// Exact counts of semistandard and proper tableaux (classical and quantum
// Kostka numbers in the sl2 case) and deterministic enumeration.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qkostka/errors.hpp"
#include "qkostka/fills.hpp"
#include "qkostka/shapes.hpp"

namespace qkostka {

using Natural = boost::multiprecision::cpp_int;

namespace detail {

class CountMemo {
public:
    std::optional<Natural> find(const std::string& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }
    void store(const std::string& key, const Natural& value) {
        std::unique_lock lock(mutex_);
        table_.insert_or_assign(key, value);
    }
    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, Natural> table_;
};

inline CountMemo& count_memo() {
    static CountMemo memo;
    return memo;
}

// A tableau is a chain inner = P_0 <= P_1 <= ... <= P_n = outer where P_f / P_{f-1}
// is a horizontal strip of size c_f. Counting walks these chains depth-first;
// with a cap, counts saturate at the cap so memoized values stay valid.
class StripCounter {
public:
    StripCounter(const SkewShape& shape, const Content& mu, int proper_level, std::optional<Natural> cap)
        : outer_(shape.outer().rows()), mu_(mu), proper_level_(proper_level), cap_(std::move(cap)) {
        rows_ = static_cast<int>(outer_.size());
        std::vector<int> start(outer_.size(), 0);
        for (int a = 1; a <= shape.inner().num_rows(); ++a)
            start[static_cast<std::size_t>(a - 1)] = shape.inner().row(a);
        start_ = std::move(start);
        if (proper_level_ > 0)
            for (int q = 1; q + 2 <= rows_; ++q)
                if (outer_[static_cast<std::size_t>(q - 1)] >= proper_level_)
                    proper_pairs_.push_back(q);
    }

    Natural run() {
        if (!admissible(start_))
            return 0;
        return count(1, start_);
    }

private:
    Natural saturate(Natural v) const {
        if (cap_ && v > *cap_)
            return *cap_;
        return v;
    }

    // (2+q, 1) may be filled only once (q, level) is.
    bool admissible(const std::vector<int>& state) const {
        for (int q : proper_pairs_)
            if (state[static_cast<std::size_t>(q + 1)] >= 1 && state[static_cast<std::size_t>(q - 1)] < proper_level_)
                return false;
        return true;
    }

    Natural count(int flavor, std::vector<int>& state) {
        if (flavor > mu_.num_flavors())
            return state == outer_ ? Natural(1) : Natural(0);
        std::string key = std::to_string(flavor) + ':';
        for (int r : state)
            key += std::to_string(r) + ',';
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Natural total = 0;
        std::vector<int> next = state;
        extend(flavor, state, next, 0, mu_.amount(flavor), total);
        total = saturate(std::move(total));
        memo_.emplace(std::move(key), total);
        return total;
    }

    // Chooses how many boxes of the strip go into row `a` (0-indexed), rows top to bottom.
    void extend(int flavor, const std::vector<int>& state, std::vector<int>& next, int a, int remaining,
                Natural& total) {
        if (cap_ && total >= *cap_)
            return;
        if (remaining == 0) {
            if (admissible(next))
                total += count(flavor + 1, next);
            return;
        }
        if (a >= rows_)
            return;
        const std::size_t i = static_cast<std::size_t>(a);
        int limit = outer_[i];
        if (a > 0)
            limit = std::min(limit, state[i - 1]);
        int room = std::max(0, limit - state[i]);
        int capacity_below = 0;
        for (int b = a + 1; b < rows_; ++b)
            capacity_below += std::max(0, std::min(outer_[static_cast<std::size_t>(b)],
                                                   state[static_cast<std::size_t>(b - 1)]) -
                                              state[static_cast<std::size_t>(b)]);
        for (int x = std::min(room, remaining); x >= 0; --x) {
            if (remaining - x > capacity_below)
                break;
            next[i] = state[i] + x;
            extend(flavor, state, next, a + 1, remaining - x, total);
            next[i] = state[i];
        }
    }

    std::vector<int> outer_;
    std::vector<int> start_;
    int rows_ = 0;
    Content mu_;
    int proper_level_ = 0;
    std::vector<int> proper_pairs_;
    std::optional<Natural> cap_;
    std::unordered_map<std::string, Natural> memo_;
};

inline std::string memo_key(const SkewShape& shape, const Content& mu, int proper_level,
                            const std::optional<Natural>& cap) {
    std::string key = shape.outer().to_string() + '/' + shape.inner().to_string() + mu.to_string() + 'L' +
                      std::to_string(proper_level) + 'C' + (cap ? cap->str() : std::string("-"));
    return key;
}

inline Natural counted(const SkewShape& shape, const Content& mu, int proper_level,
                       const std::optional<Natural>& cap) {
    if (shape.area() != mu.total())
        throw ValidationError("content total " + std::to_string(mu.total()) + " does not match shape area " +
                              std::to_string(shape.area()));
    std::string key = memo_key(shape, mu, proper_level, cap);
    if (auto hit = count_memo().find(key))
        return *hit;
    Natural value = StripCounter(shape, mu, proper_level, cap).run();
    count_memo().store(key, value);
    return value;
}

} // namespace detail

/// Number of semistandard tableaux of `shape` with content `mu`. With a cap
/// the result is min(count, cap).
inline Natural count_tableaux(const SkewShape& shape, const Content& mu, std::optional<Natural> cap = std::nullopt) {
    return detail::counted(shape, mu, 0, cap);
}

/// Semistandard tableaux that are also proper for sl2 at the given level.
inline Natural count_proper_tableaux(const Partition& shape, const Content& mu, int level,
                                     std::optional<Natural> cap = std::nullopt) {
    if (level < 1)
        throw ValidationError("level must be positive");
    if (shape.width() > level)
        throw ValidationError("shape is wider than the level");
    return detail::counted(SkewShape(shape), mu, level, cap);
}

struct QuantumKostka {
    Natural direct;   ///< proper tableaux on nu[s]/lambda with content (level^{s-1}, mu)
    Natural reduced;  ///< proper tableaux on (level^{2k}, p, p) with content mu
};

/// Quantum Kostka number for nu = level*omega_2, lambda = level*omega_1 and
/// s = (k-1)*level + p, computed on both shapes. Throws InvariantViolation
/// if the two counts disagree.
inline QuantumKostka quantum_kostka(int level, int s, const Content& mu) {
    Partition big = quantum_shape(level, s);
    LevelSplit split = split_by_level(s, level);
    Partition small = reduced_shape(level, split.k + 1, split.p);
    if (mu.total() != small.area())
        throw ValidationError("content total must equal 2(k*level + p)");
    std::vector<int> prefixed(static_cast<std::size_t>(s - 1), level);
    prefixed.insert(prefixed.end(), mu.amounts().begin(), mu.amounts().end());
    QuantumKostka out{count_proper_tableaux(big, Content(std::move(prefixed)), level),
                      count_proper_tableaux(small, mu, level)};
    if (out.direct != out.reduced)
        throw InvariantViolation("quantum Kostka counts disagree: " + out.direct.str() + " vs " + out.reduced.str());
    return out;
}

namespace detail {

// Row-major box search; values tried in increasing order, so tableaux come
// out in lexicographic order of their entry sequences.
class BoxEnumerator {
public:
    BoxEnumerator(const SkewShape& shape, const Content& mu, int proper_level, std::size_t limit)
        : shape_(shape), boxes_(shape.boxes()), mu_(mu), proper_level_(proper_level), limit_(limit) {
        remaining_ = mu.amounts();
        entries_.assign(boxes_.size(), 0);
        for (std::size_t i = 0; i < boxes_.size(); ++i)
            index_[boxes_[i]] = i;
        // Boxes strictly below in the same column bound the value from above.
        for (const BoxRef& b : boxes_) {
            int below = 0;
            while (shape_.contains({b.row + below + 1, b.col}))
                ++below;
            depth_.push_back(below);
        }
    }

    std::vector<Tableau> run() {
        if (limit_ > 0)
            dfs(0);
        return std::move(found_);
    }

private:
    int value_at(BoxRef b) const {
        auto it = index_.find(b);
        return it == index_.end() ? 0 : entries_[it->second];
    }

    bool fits(std::size_t i, int v) const {
        const BoxRef& b = boxes_[i];
        if (shape_.contains({b.row, b.col - 1}) && value_at({b.row, b.col - 1}) > v)
            return false;
        if (shape_.contains({b.row - 1, b.col}) && value_at({b.row - 1, b.col}) >= v)
            return false;
        if (v + depth_[i] > mu_.num_flavors())
            return false;
        if (proper_level_ > 0 && b.col == 1 && b.row >= 3) {
            BoxRef partner{b.row - 2, proper_level_};
            if (shape_.contains(partner) && value_at(partner) > v)
                return false;
        }
        return true;
    }

    // Remaining copies of flavors <= v must fit into boxes whose lower bound is
    // <= v, and copies of flavors >= v into boxes whose upper bound is >= v.
    bool completable(std::size_t next) const {
        const int n = mu_.num_flavors();
        std::vector<int> lower_hist(static_cast<std::size_t>(n) + 2, 0);
        std::vector<int> upper_hist(static_cast<std::size_t>(n) + 2, 0);
        std::vector<int> lower(boxes_.size(), 1);
        for (std::size_t j = next; j < boxes_.size(); ++j) {
            const BoxRef& b = boxes_[j];
            int lo = 1;
            if (shape_.contains({b.row, b.col - 1}))
                lo = std::max(lo, lower_of(j - 1, lower, next));
            if (shape_.contains({b.row - 1, b.col}))
                lo = std::max(lo, lower_of(index_.at({b.row - 1, b.col}), lower, next) + 1);
            lower[j] = lo;
            if (lo > n)
                return false;
            ++lower_hist[static_cast<std::size_t>(lo)];
            ++upper_hist[static_cast<std::size_t>(n - depth_[j])];
        }
        int boxes_ok = 0, copies = 0;
        for (int v = 1; v <= n; ++v) {
            boxes_ok += lower_hist[static_cast<std::size_t>(v)];
            copies += remaining_[static_cast<std::size_t>(v - 1)];
            if (copies > boxes_ok)
                return false;
        }
        boxes_ok = copies = 0;
        for (int v = n; v >= 1; --v) {
            boxes_ok += upper_hist[static_cast<std::size_t>(v)];
            copies += remaining_[static_cast<std::size_t>(v - 1)];
            if (copies > boxes_ok)
                return false;
        }
        return true;
    }

    int lower_of(std::size_t j, const std::vector<int>& lower, std::size_t next) const {
        return j < next ? entries_[j] : lower[j];
    }

    void dfs(std::size_t i) {
        if (found_.size() >= limit_)
            return;
        if (i == boxes_.size()) {
            found_.emplace_back(shape_, entries_);
            return;
        }
        for (int v = 1; v <= mu_.num_flavors(); ++v) {
            std::size_t vi = static_cast<std::size_t>(v - 1);
            if (remaining_[vi] == 0 || !fits(i, v))
                continue;
            entries_[i] = v;
            --remaining_[vi];
            if (completable(i + 1))
                dfs(i + 1);
            ++remaining_[vi];
            entries_[i] = 0;
            if (found_.size() >= limit_)
                return;
        }
    }

    SkewShape shape_;
    std::vector<BoxRef> boxes_;
    std::map<BoxRef, std::size_t> index_;
    std::vector<int> depth_;
    Content mu_;
    int proper_level_;
    std::size_t limit_;
    std::vector<int> remaining_;
    std::vector<int> entries_;
    std::vector<Tableau> found_;
};

} // namespace detail

/// Up to `limit` tableaux of `shape` with content `mu`, in lexicographic
/// order of their row-major entries. With `proper`, only proper tableaux for
/// sl2 at `level` are listed.
inline std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, const Content& mu, int level, bool proper,
                                               std::size_t limit) {
    if (shape.area() != mu.total())
        throw ValidationError("content total " + std::to_string(mu.total()) + " does not match shape area " +
                              std::to_string(shape.area()));
    if (proper && shape.outer().width() > level)
        throw ValidationError("shape is wider than the level");
    return detail::BoxEnumerator(shape, mu, proper ? level : 0, limit).run();
}

} // namespace qkostka
