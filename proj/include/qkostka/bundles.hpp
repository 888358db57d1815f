#pragma once

// Bundles for sl_{2m} with weights c_i * omega_m, the (k, p,
// tail sum, maximality) certificate, the closed-form rank classifier, exact
// sl2 ranks by tableau counting, and the sp_{2l} relabeling.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qkostka/errors.hpp"
#include "qkostka/fills.hpp"
#include "qkostka/kostka.hpp"
#include "qkostka/shapes.hpp"

namespace qkostka {

struct BundleSpec {
    int m = 1;
    int level = 1;
    std::vector<int> weights;

    void validate() const {
        if (m < 1)
            throw ValidationError("m must be positive");
        if (level < 1)
            throw ValidationError("level must be positive");
        if (weights.empty())
            throw ValidationError("at least one weight is required");
        for (int c : weights)
            if (c < 0 || c > level)
                throw ValidationError("weight " + std::to_string(c) + " is outside [0, " + std::to_string(level) +
                                      "]");
    }

    int total() const { return std::accumulate(weights.begin(), weights.end(), 0); }
    int num_points() const { return static_cast<int>(weights.size()); }
};

enum class RankClass { Zero, One, MoreThanOne };

enum class Reason { OddTotal, TailBelowP, TailEqualsP, Maximal, NonMaximalSurplus, AllZero };

inline std::string to_string(RankClass c) {
    switch (c) {
    case RankClass::Zero: return "Zero";
    case RankClass::One: return "One";
    case RankClass::MoreThanOne: return "MoreThanOne";
    }
    return "?";
}

inline std::string to_string(Reason r) {
    switch (r) {
    case Reason::OddTotal: return "odd-total";
    case Reason::TailBelowP: return "tail-below-p";
    case Reason::TailEqualsP: return "tail-equals-p";
    case Reason::Maximal: return "maximal";
    case Reason::NonMaximalSurplus: return "non-maximal-surplus";
    case Reason::AllZero: return "all-zero";
    }
    return "?";
}

/// Class of an exact rank.
inline RankClass class_of(const Natural& rank) {
    if (rank == 0)
        return RankClass::Zero;
    return rank == 1 ? RankClass::One : RankClass::MoreThanOne;
}

struct Certificate {
    int k = 0;
    int p = 0;
    int tail_sum = 0;   ///< sum of c_i for i >= 2k+2 on the sorted nonzero weights
    bool maximal = false;
};

struct Classification {
    RankClass rank_class = RankClass::Zero;
    Reason reason = Reason::OddTotal;
    Certificate certificate;
};

/// Nonzero weights, sorted descending.
inline std::vector<int> normalized_weights(const BundleSpec& spec) {
    std::vector<int> w;
    for (int c : spec.weights)
        if (c != 0)
            w.push_back(c);
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
}

/// sum c_i = 2(k*level + p) with 1 <= p <= level; empty for an odd total.
inline std::optional<LevelSplit> kp_decompose(const BundleSpec& spec) {
    spec.validate();
    int total = spec.total();
    if (total == 0)
        throw ValidationError("all weights are zero; there is no (k, p)");
    if (total % 2 != 0)
        return std::nullopt;
    return split_by_level(total / 2, spec.level);
}

/// At least n-3 of the nonzero weights equal the level.
inline bool is_maximal(const BundleSpec& spec) {
    spec.validate();
    std::vector<int> w = normalized_weights(spec);
    int full = static_cast<int>(std::count(w.begin(), w.end(), spec.level));
    return full >= static_cast<int>(w.size()) - 3;
}

inline Classification classify(const BundleSpec& spec) {
    spec.validate();
    std::vector<int> w = normalized_weights(spec);
    Classification out;
    if (w.empty()) {
        out.rank_class = RankClass::One;
        out.reason = Reason::AllZero;
        return out;
    }
    out.certificate.maximal = is_maximal(spec);
    auto kp = kp_decompose(spec);
    if (!kp) {
        out.rank_class = RankClass::Zero;
        out.reason = Reason::OddTotal;
        return out;
    }
    out.certificate.k = kp->k;
    out.certificate.p = kp->p;
    int tail = 0;
    for (std::size_t i = static_cast<std::size_t>(2 * kp->k + 1); i < w.size(); ++i)
        tail += w[i];
    out.certificate.tail_sum = tail;
    if (tail < kp->p) {
        out.rank_class = RankClass::Zero;
        out.reason = Reason::TailBelowP;
    } else if (tail == kp->p) {
        out.rank_class = RankClass::One;
        out.reason = Reason::TailEqualsP;
    } else if (out.certificate.maximal) {
        out.rank_class = RankClass::One;
        out.reason = Reason::Maximal;
    } else {
        out.rank_class = RankClass::MoreThanOne;
        out.reason = Reason::NonMaximalSurplus;
    }
    return out;
}

/// Exact rank for sl2 (m = 1) as the number of proper tableaux on
/// (level^{2k}, p, p) with the sorted nonzero weights as content.
inline Natural rank_exact(const BundleSpec& spec, std::optional<Natural> cap = std::nullopt) {
    spec.validate();
    if (spec.m != 1)
        throw Unsupported("exact rank unsupported for m>1");
    std::vector<int> w = normalized_weights(spec);
    if (w.empty())
        return 1;
    auto kp = kp_decompose(spec);
    if (!kp)
        return 0;
    return count_proper_tableaux(reduced_shape(spec.level, kp->k, kp->p), Content(std::move(w)), spec.level, cap);
}

struct WittenIndex {
    int s = 0;
    bool quantum = false; ///< s > 0: the product lands in quantum cohomology
};

/// s = |lambda| / (2m) - level, where c_i * omega_m has m * c_i boxes.
inline WittenIndex witten_index(const BundleSpec& spec) {
    spec.validate();
    long long area = static_cast<long long>(spec.m) * spec.total();
    if (area % (2LL * spec.m) != 0)
        throw ValidationError("total area " + std::to_string(area) + " is not divisible by " +
                              std::to_string(2 * spec.m));
    int s = static_cast<int>(area / (2LL * spec.m)) - spec.level;
    return {s, s > 0};
}

inline int witten_s(const BundleSpec& spec) { return witten_index(spec).s; }

struct SymplecticRelabel {
    int rank = 0;                        ///< sp_{rank}, rank = 2 * level
    std::vector<int> fundamental_index;  ///< point i carries omega_{c_i}; 0 is the trivial weight
    int level = 1;
    Classification classification;
};

/// The sp_{2l} level-one bundle with transposed weights, carrying the same class.
inline SymplecticRelabel sp_relabel(const BundleSpec& spec) {
    spec.validate();
    if (spec.m != 1)
        throw ValidationError("sp relabeling is defined for m = 1");
    return {2 * spec.level, spec.weights, 1, classify(spec)};
}

} // namespace qkostka
