#pragma once

// Casimir numbers, the 4-point degree of sl2 bundles, F-curve degrees,
// level-one weight vectors V_{A,B} and the decomposition of rank-one first
// Chern classes into level-one classes, with a curve-by-curve check.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qkostka/bundles.hpp"
#include "qkostka/errors.hpp"
#include "qkostka/fills.hpp"
#include "qkostka/kostka.hpp"
#include "qkostka/parallel.hpp"

namespace qkostka {

using Rational = boost::multiprecision::cpp_rational;

struct CasimirInput {
    int rank_plus_one = 2;
    std::vector<int> coeffs; ///< c_1..c_r
};

inline Rational casimir(const CasimirInput& in) {
    const int n = in.rank_plus_one;
    if (n < 2 || static_cast<int>(in.coeffs.size()) != n - 1)
        throw ValidationError("casimir needs r = rank_plus_one - 1 coefficients");
    for (int c : in.coeffs)
        if (c < 0)
            throw ValidationError("casimir coefficients must be nonnegative");
    Rational squares = 0, cross = 0, linear = 0;
    for (int i = 1; i < n; ++i) {
        Rational ci = in.coeffs[static_cast<std::size_t>(i - 1)];
        squares += Rational((n - i) * i) * ci * ci;
        linear += Rational((n - i) * i) * ci;
        for (int j = i + 1; j < n; ++j)
            cross += Rational((n - j) * i) * ci * in.coeffs[static_cast<std::size_t>(j - 1)];
    }
    return squares / n + Rational(2) * cross / n + linear;
}

/// c(m*c*omega_m for sl_{2m}) == m^3 * c(c*omega_1 for sl2).
inline bool casimir_scaling_check(int m, int c) {
    if (m < 1 || c < 0)
        throw ValidationError("casimir_scaling_check needs m >= 1 and c >= 0");
    std::vector<int> coeffs(static_cast<std::size_t>(2 * m - 1), 0);
    coeffs[static_cast<std::size_t>(m - 1)] = m * c;
    Rational big = casimir({2 * m, coeffs});
    Rational small = casimir({2, {c}});
    return big == Rational(m) * m * m * small;
}

inline Rational casimir_sl2(int c) { return casimir({2, {c}}); }

/// sl2 weights are self-dual.
inline int dual_weight(int c) { return c; }

namespace detail {

inline int sl2_rank(int level, std::vector<int> weights) {
    Natural r = rank_exact(BundleSpec{1, level, std::move(weights)});
    return r.convert_to<int>();
}

class Degree4Cache {
public:
    std::optional<Natural> find(int level, const std::array<int, 4>& w) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find({level, w});
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }
    void store(int level, const std::array<int, 4>& w, const Natural& v) {
        std::unique_lock lock(mutex_);
        table_.insert_or_assign({level, w}, v);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<std::pair<int, std::array<int, 4>>, Natural> table_;
};

inline Degree4Cache& degree4_cache() {
    static Degree4Cache cache;
    return cache;
}

} // namespace detail

/// Degree of c_1 of the 4-point sl2 bundle on M_{0,4}, including the rank
/// factor on the Casimir sum of the four weights.
inline Natural degree4(int level, std::array<int, 4> w) {
    for (int c : w)
        if (c < 0 || c > level)
            throw ValidationError("degree4 weights must lie in [0, level]");
    std::array<int, 4> key = w;
    std::sort(key.begin(), key.end());
    if (auto hit = detail::degree4_cache().find(level, key))
        return *hit;
    const int rank4 = detail::sl2_rank(level, {w[0], w[1], w[2], w[3]});
    Natural result = 0;
    if (rank4 != 0) {
        Rational sum = 0;
        for (int c : w)
            sum += casimir_sl2(c);
        sum *= rank4;
        static constexpr std::array<std::array<int, 4>, 3> pairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
        Rational boundary = 0;
        for (int lambda = 0; lambda <= level; ++lambda) {
            int through = 0;
            for (const auto& pr : pairings)
                through += detail::sl2_rank(level, {w[static_cast<std::size_t>(pr[0])],
                                                    w[static_cast<std::size_t>(pr[1])], lambda}) *
                           detail::sl2_rank(level, {w[static_cast<std::size_t>(pr[2])],
                                                    w[static_cast<std::size_t>(pr[3])], dual_weight(lambda)});
            boundary += casimir_sl2(lambda) * through;
        }
        Rational value = (sum - boundary) / (2 * (level + 2));
        if (denominator(value) != 1 || value < 0)
            throw InvariantViolation("4-point degree is not a nonnegative integer for level " +
                                     std::to_string(level));
        result = numerator(value);
    }
    detail::degree4_cache().store(level, key, result);
    return result;
}

/// A partition of {1..n} into four nonempty blocks; points are 1-indexed.
struct FCurve {
    std::vector<std::vector<int>> blocks;

    int num_points() const {
        int n = 0;
        for (const auto& b : blocks)
            n += static_cast<int>(b.size());
        return n;
    }

    void validate(int n) const {
        if (blocks.size() != 4)
            throw ValidationError("an F-curve has exactly four blocks");
        std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& b : blocks) {
            if (b.empty())
                throw ValidationError("F-curve blocks must be nonempty");
            for (int i : b) {
                if (i < 1 || i > n)
                    throw ValidationError("F-curve point " + std::to_string(i) + " is outside 1.." +
                                          std::to_string(n));
                if (seen[static_cast<std::size_t>(i)]++)
                    throw ValidationError("F-curve point " + std::to_string(i) + " appears twice");
            }
        }
        if (num_points() != n)
            throw ValidationError("F-curve blocks must cover all points");
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (b)
                s += '|';
            for (std::size_t i = 0; i < blocks[b].size(); ++i)
                s += (i ? "," : "") + std::to_string(blocks[b][i]);
        }
        return s;
    }

    friend bool operator==(const FCurve&, const FCurve&) = default;
};

/// Parses "1,2|3|4|5,6,7".
inline FCurve parse_fcurve(const std::string& text) {
    FCurve curve;
    std::vector<int> block;
    std::string number;
    auto flush_number = [&] {
        if (number.empty() || number.size() > 6)
            throw ValidationError("malformed F-curve: " + text);
        block.push_back(std::stoi(number));
        number.clear();
    };
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            number += ch;
        } else if (ch == ',') {
            flush_number();
        } else if (ch == '|') {
            flush_number();
            curve.blocks.push_back(std::move(block));
            block.clear();
        } else if (ch != ' ') {
            throw ValidationError("malformed F-curve: " + text);
        }
    }
    flush_number();
    curve.blocks.push_back(std::move(block));
    return curve;
}

/// All partitions of {1..n} into four blocks, blocks ordered by their least
/// element, in lexicographic order of restricted growth strings.
inline std::vector<FCurve> enumerate_fcurves(int n) {
    std::vector<FCurve> out;
    if (n < 4)
        return out;
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (n - i < 4 - used)
            return;
        if (i == n) {
            FCurve c;
            c.blocks.resize(4);
            for (int j = 0; j < n; ++j)
                c.blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(j)])].push_back(j + 1);
            out.push_back(std::move(c));
            return;
        }
        for (int b = 0; b <= std::min(used, 3); ++b) {
            label[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, std::max(used, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Degree of c_1 of the sl2 bundle on an F-curve: the sum over attaching
/// weights (mu_1..mu_4) of the 4-point degree times the ranks of the legs.
/// For m > 1 the rank-one scaling c_1(V_m) = m c_1(V_1) applies.
inline Natural fcurve_degree(const BundleSpec& spec, const FCurve& curve) {
    spec.validate();
    curve.validate(spec.num_points());
    if (spec.m > 1 && classify(spec).rank_class == RankClass::MoreThanOne)
        throw Unsupported("F-curve degrees for m>1 are available only in rank zero or one");
    const int level = spec.level;
    std::array<std::vector<int>, 4> leg;
    for (std::size_t b = 0; b < 4; ++b) {
        std::vector<int> weights;
        for (int i : curve.blocks[b])
            weights.push_back(spec.weights[static_cast<std::size_t>(i - 1)]);
        weights.push_back(0);
        for (int mu = 0; mu <= level; ++mu) {
            weights.back() = dual_weight(mu);
            leg[b].push_back(detail::sl2_rank(level, weights));
        }
    }
    Natural total = 0;
    for (int a = 0; a <= level; ++a) {
        if (!leg[0][static_cast<std::size_t>(a)])
            continue;
        for (int b = 0; b <= level; ++b) {
            if (!leg[1][static_cast<std::size_t>(b)])
                continue;
            for (int c = 0; c <= level; ++c) {
                if (!leg[2][static_cast<std::size_t>(c)])
                    continue;
                for (int d = 0; d <= level; ++d) {
                    int legs = leg[0][static_cast<std::size_t>(a)] * leg[1][static_cast<std::size_t>(b)] *
                               leg[2][static_cast<std::size_t>(c)] * leg[3][static_cast<std::size_t>(d)];
                    if (legs)
                        total += degree4(level, {a, b, c, d}) * legs;
                }
            }
        }
    }
    return total * spec.m;
}

/// Level-one weight vector with v_i = 1 iff i in ({1..2k+1} \ A) u B.
struct LevelOneVector {
    int n = 0;
    int k = 0;
    int m = 1;
    std::vector<int> a;        ///< A, in the labels of the sorted weights
    std::vector<int> b;        ///< B, in the labels of the sorted weights
    std::vector<int> support;  ///< 0/1 per point, in the caller's point order

    int support_size() const { return static_cast<int>(std::count(support.begin(), support.end(), 1)); }

    BundleSpec bundle() const { return BundleSpec{m, 1, support}; }

    std::string label() const {
        auto set = [](const std::vector<int>& s) {
            if (s.empty())
                return std::string("0");
            if (s.size() == 1)
                return std::to_string(s[0]);
            std::string out = "{";
            for (std::size_t i = 0; i < s.size(); ++i)
                out += (i ? "," : "") + std::to_string(s[i]);
            return out + "}";
        };
        return "V_{" + set(a) + "," + set(b) + "}";
    }

    friend bool operator==(const LevelOneVector&, const LevelOneVector&) = default;
};

/// A must lie in {1..2k+1}; B in {1..n}.
inline LevelOneVector make_vab(int n, int k, int m, std::vector<int> a, std::vector<int> b) {
    if (n < 1 || k < 0 || m < 1)
        throw ValidationError("make_vab needs n >= 1, k >= 0, m >= 1");
    if (2 * k + 1 > n)
        throw ValidationError("2k+1 exceeds the number of points");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int i : a)
        if (i < 1 || i > 2 * k + 1)
            throw ValidationError("index " + std::to_string(i) + " of A is outside 1.." + std::to_string(2 * k + 1));
    for (int i : b)
        if (i < 1 || i > n)
            throw ValidationError("index " + std::to_string(i) + " of B is outside 1.." + std::to_string(n));
    std::vector<int> support(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= 2 * k + 1; ++i)
        support[static_cast<std::size_t>(i - 1)] = 1;
    for (int i : a)
        support[static_cast<std::size_t>(i - 1)] = 0;
    for (int i : b)
        support[static_cast<std::size_t>(i - 1)] = 1;
    return {n, k, m, std::move(a), std::move(b), std::move(support)};
}

struct DivisorTerm {
    int coefficient = 0;
    LevelOneVector vector;
    friend bool operator==(const DivisorTerm&, const DivisorTerm&) = default;
};

struct DivisorCombo {
    std::vector<DivisorTerm> terms;
    int scale = 1;               ///< m
    std::vector<int> order;      ///< order[j-1] is the input position of sorted label j
    std::string branch;          ///< case-1, case-2a, case-2b or columns

    /// Terms sorted by (A, B) so that combos built differently compare equal.
    std::vector<DivisorTerm> canonical_terms() const {
        std::vector<DivisorTerm> t = terms;
        std::sort(t.begin(), t.end(), [](const DivisorTerm& x, const DivisorTerm& y) {
            return std::tie(x.vector.a, x.vector.b, x.coefficient) < std::tie(y.vector.a, y.vector.b, y.coefficient);
        });
        return t;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& t : terms) {
            if (!s.empty())
                s += " + ";
            if (t.coefficient != 1)
                s += std::to_string(t.coefficient) + "*";
            s += t.vector.label();
        }
        return s.empty() ? "0" : s;
    }
};

inline bool same_divisor(const DivisorCombo& x, const DivisorCombo& y) {
    return x.scale == y.scale && x.canonical_terms() == y.canonical_terms();
}

namespace detail {

struct SortedWeights {
    std::vector<int> weights;   ///< nonzero weights, descending
    std::vector<int> order;     ///< input positions (1-indexed) of all points, nonzero sorted first
};

inline SortedWeights sort_weights(const BundleSpec& spec) {
    std::vector<int> idx(spec.weights.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = static_cast<int>(i) + 1;
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
        return spec.weights[static_cast<std::size_t>(x - 1)] > spec.weights[static_cast<std::size_t>(y - 1)];
    });
    SortedWeights out{{}, idx};
    for (int i : idx)
        if (spec.weights[static_cast<std::size_t>(i - 1)] != 0)
            out.weights.push_back(spec.weights[static_cast<std::size_t>(i - 1)]);
    return out;
}

// Builds V_{A,B} on sorted labels, then moves its support to input positions.
inline LevelOneVector placed_vab(const SortedWeights& sw, int k, int m, std::vector<int> a, std::vector<int> b) {
    const int n = static_cast<int>(sw.order.size());
    LevelOneVector v = make_vab(n, k, m, std::move(a), std::move(b));
    std::vector<int> support(static_cast<std::size_t>(n), 0);
    for (int j = 1; j <= n; ++j)
        support[static_cast<std::size_t>(sw.order[static_cast<std::size_t>(j - 1)] - 1)] =
            v.support[static_cast<std::size_t>(j - 1)];
    v.support = std::move(support);
    return v;
}

inline void add_term(DivisorCombo& combo, int coefficient, LevelOneVector v) {
    if (coefficient < 0)
        throw InvariantViolation("negative coefficient on " + v.label());
    if (coefficient == 0)
        return;
    if (v.support_size() % 2 != 0 || classify(BundleSpec{1, 1, v.support}).rank_class == RankClass::Zero)
        throw InvariantViolation(v.label() + " is a zero level-one bundle");
    combo.terms.push_back({coefficient, std::move(v)});
}

inline const Classification& require_rank_one(const Classification& c) {
    if (c.rank_class != RankClass::One)
        throw ValidationError("decomposition needs rank one; class is " + to_string(c.rank_class));
    return c;
}

} // namespace detail

/// c_1 of a rank-one bundle as a nonnegative combination of level-one classes.
inline DivisorCombo decompose(const BundleSpec& spec) {
    spec.validate();
    Classification cls = classify(spec);
    detail::require_rank_one(cls);
    detail::SortedWeights sw = detail::sort_weights(spec);
    const int level = spec.level;
    const int k = cls.certificate.k;
    const int p = cls.certificate.p;
    DivisorCombo combo;
    combo.scale = spec.m;
    combo.order = sw.order;
    if (cls.reason == Reason::AllZero) {
        combo.branch = "trivial";
        return combo;
    }
    const int n = static_cast<int>(sw.weights.size());
    auto c = [&](int i) { return sw.weights[static_cast<std::size_t>(i - 1)]; };
    auto vab = [&](std::vector<int> a, std::vector<int> b) { return detail::placed_vab(sw, k, spec.m, a, b); };
    if (cls.reason == Reason::TailEqualsP) {
        combo.branch = "case-1";
        for (int i = 1; i <= 2 * k + 1 && i <= n; ++i)
            detail::add_term(combo, level - c(i), vab({i}, {}));
        for (int j = 2 * k + 2; j <= n; ++j)
            detail::add_term(combo, c(j), vab({}, {j}));
    } else if (n - 3 == 2 * k) {
        combo.branch = "case-2a";
        detail::add_term(combo, level - p, vab({n - 2}, {}));
        detail::add_term(combo, p - c(n), vab({}, {n - 1}));
        detail::add_term(combo, p - c(n - 1), vab({}, {n}));
        detail::add_term(combo, p - c(n - 2), vab({n - 2}, {n - 1, n}));
    } else if (n - 3 == 2 * k - 1) {
        combo.branch = "case-2b";
        detail::add_term(combo, p, vab({}, {n - 1, n}));
        detail::add_term(combo, c(n - 2) - p, vab({n - 1}, {}));
        detail::add_term(combo, c(n - 1) - p, vab({n - 2}, {}));
        detail::add_term(combo, c(n) - p, vab({n - 2, n - 1}, {n}));
    } else {
        throw InvariantViolation("maximal content with n-3 = " + std::to_string(n - 3) + " and k = " +
                                 std::to_string(k));
    }
    return combo;
}

/// The same combination read off the columns of the unique tableau: a column
/// missing flavor i <= 2k+1 gives V_{i,0}, a column ending in flavor j >= 2k+2
/// gives V_{0,j}.
inline DivisorCombo decompose_by_columns(const BundleSpec& spec) {
    spec.validate();
    Classification cls = classify(spec);
    detail::require_rank_one(cls);
    if (cls.reason != Reason::TailEqualsP)
        throw Unsupported("column decomposition needs tail sum equal to p");
    detail::SortedWeights sw = detail::sort_weights(spec);
    const int k = cls.certificate.k;
    const int p = cls.certificate.p;
    Tableau t = combined_fill(spec.level, k, p, Content(sw.weights));
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> counts;
    int area = 0;
    for (int col = spec.level; col >= 1; --col) {
        std::vector<int> entries = t.column_entries(col);
        area += static_cast<int>(entries.size());
        std::set<int> flavors(entries.begin(), entries.end());
        std::vector<int> a, b;
        for (int i = 1; i <= 2 * k + 1; ++i)
            if (!flavors.count(i))
                a.push_back(i);
        for (int f : flavors)
            if (f > 2 * k + 1)
                b.push_back(f);
        bool wide = col > p;
        if (wide ? (a.size() != 1 || !b.empty()) : (!a.empty() || b.size() != 1))
            throw InvariantViolation("column " + std::to_string(col) + " does not have the expected flavors");
        ++counts[{a, b}];
    }
    if (area != spec.total())
        throw InvariantViolation("column areas do not add up to the weight total");
    DivisorCombo combo;
    combo.scale = spec.m;
    combo.order = sw.order;
    combo.branch = "columns";
    // V_{i,0} terms first, then V_{0,j}, each by index.
    for (bool missing : {true, false})
        for (auto& [ab, coefficient] : counts)
            if (ab.second.empty() == missing)
                detail::add_term(combo, coefficient, detail::placed_vab(sw, k, spec.m, ab.first, ab.second));
    return combo;
}

struct CurveCheck {
    FCurve curve;
    Natural lhs;
    Natural rhs;
    bool ok = true;
};

struct VerificationReport {
    std::optional<std::string> precondition_error;
    DivisorCombo combo;
    std::vector<CurveCheck> checks;

    std::size_t violations() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CurveCheck& c) {
            return !c.ok;
        }));
    }
    bool ok() const { return !precondition_error && violations() == 0; }
};

/// Compares the degree of c_1(V) with the degree of its decomposition on
/// every F-curve, at m = 1.
inline VerificationReport verify_decomposition(const BundleSpec& spec, int jobs = 1) {
    VerificationReport report;
    try {
        report.combo = decompose(spec);
    } catch (const ValidationError& e) {
        report.precondition_error = e.what();
        return report;
    }
    BundleSpec base = spec;
    base.m = 1;
    std::vector<FCurve> curves = enumerate_fcurves(spec.num_points());
    report.checks = parallel_map(
        curves.size(),
        [&](std::size_t i) {
            CurveCheck check{curves[i], fcurve_degree(base, curves[i]), 0, true};
            for (const auto& term : report.combo.terms) {
                BundleSpec level_one{1, 1, term.vector.support};
                check.rhs += fcurve_degree(level_one, curves[i]) * term.coefficient;
            }
            check.ok = check.lhs == check.rhs;
            return check;
        },
        jobs);
    return report;
}

} // namespace qkostka
