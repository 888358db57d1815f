#pragma once

// Exhaustive (or sampled) comparison of the classifier against tableau
// counts, with optional decomposition and scaling checks per instance.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qkostka/bundles.hpp"
#include "qkostka/chern.hpp"
#include "qkostka/parallel.hpp"

namespace qkostka {

struct SweepOptions {
    int n_min = 3;
    int n_max = 7;
    int level_min = 1;
    int level_max = 5;
    int jobs = 1;
    bool check_decomposition = false;
    bool check_scaling = false;
    std::optional<std::size_t> sample;  ///< random instances instead of the full range
    std::uint64_t seed = 0;
};

struct SweepRow {
    int level = 0;
    std::vector<int> weights;
    Classification classification;
    Natural oracle_count;
    bool agree = false;
    std::string decomposition;           ///< branch, or empty when not checked
    std::size_t decomposition_violations = 0;
    bool columns_agree = true;
    std::optional<bool> scaling_ok;

    bool ok() const { return agree && decomposition_violations == 0 && columns_agree && scaling_ok.value_or(true); }
};

/// Non-increasing vectors of length n with entries in [0, level] and even total.
inline std::vector<std::vector<int>> weight_vectors(int n, int level) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int i, int bound, int total) -> void {
        if (i == n) {
            if (total % 2 == 0)
                out.push_back(w);
            return;
        }
        for (int c = bound; c >= 0; --c) {
            w[static_cast<std::size_t>(i)] = c;
            self(self, i + 1, c, total + c);
        }
    };
    rec(rec, 0, level, 0);
    return out;
}

inline std::vector<BundleSpec> sweep_instances(const SweepOptions& opt) {
    std::vector<BundleSpec> specs;
    if (!opt.sample) {
        for (int level = opt.level_min; level <= opt.level_max; ++level)
            for (int n = opt.n_min; n <= opt.n_max; ++n)
                for (auto& w : weight_vectors(n, level))
                    specs.push_back({1, level, std::move(w)});
        return specs;
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> pick_level(opt.level_min, opt.level_max);
    std::uniform_int_distribution<int> pick_n(opt.n_min, opt.n_max);
    while (specs.size() < *opt.sample) {
        int level = pick_level(rng);
        int n = pick_n(rng);
        std::uniform_int_distribution<int> pick_c(0, level);
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int& c : w)
            c = pick_c(rng);
        std::sort(w.begin(), w.end(), std::greater<>());
        int total = 0;
        for (int c : w)
            total += c;
        if (total % 2 == 0)
            specs.push_back({1, level, std::move(w)});
    }
    return specs;
}

inline SweepRow sweep_one(const BundleSpec& spec, const SweepOptions& opt) {
    SweepRow row;
    row.level = spec.level;
    row.weights = spec.weights;
    row.classification = classify(spec);
    row.oracle_count = rank_exact(spec);
    row.agree = class_of(row.oracle_count) == row.classification.rank_class;
    if (opt.check_decomposition && row.classification.rank_class == RankClass::One &&
        row.classification.reason != Reason::AllZero) {
        VerificationReport report = verify_decomposition(spec);
        row.decomposition = report.combo.branch;
        row.decomposition_violations = report.violations();
        if (row.classification.reason == Reason::TailEqualsP)
            row.columns_agree = same_divisor(decompose_by_columns(spec), report.combo);
    }
    if (opt.check_scaling) {
        bool ok = true;
        for (int m = 2; m <= 4; ++m) {
            BundleSpec scaled = spec;
            scaled.m = m;
            ok = ok && classify(scaled).rank_class == row.classification.rank_class;
            for (int c : spec.weights)
                ok = ok && casimir_scaling_check(m, c);
        }
        row.scaling_ok = ok;
    }
    return row;
}

inline std::vector<SweepRow> run_sweep(const SweepOptions& opt) {
    std::vector<BundleSpec> specs = sweep_instances(opt);
    return parallel_map(specs.size(), [&](std::size_t i) { return sweep_one(specs[i], opt); }, opt.jobs);
}

inline std::string join_weights(const std::vector<int>& w, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(w[i]);
    }
    return s;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, const SweepOptions& opt) {
    os << "level,weights,k,p,lambda,maximal,class,oracle_count,agree";
    if (opt.check_decomposition)
        os << ",decomposition,violations,columns_agree";
    if (opt.check_scaling)
        os << ",scaling";
    os << '\n';
    for (const auto& r : rows) {
        const Certificate& c = r.classification.certificate;
        os << r.level << ",\"" << join_weights(r.weights) << "\"," << c.k << ',' << c.p << ',' << c.tail_sum << ','
           << (c.maximal ? "true" : "false") << ',' << to_string(r.classification.rank_class) << ','
           << r.oracle_count << ',' << (r.agree ? "true" : "false");
        if (opt.check_decomposition)
            os << ',' << r.decomposition << ',' << r.decomposition_violations << ','
               << (r.columns_agree ? "true" : "false");
        if (opt.check_scaling)
            os << ',' << (r.scaling_ok.value_or(true) ? "true" : "false");
        os << '\n';
    }
}

} // namespace qkostka
