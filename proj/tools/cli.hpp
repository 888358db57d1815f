#pragma once

// qkostka command line. run_cli takes its streams as arguments so tests can
// drive it in-process.
//
// Exit codes: 0 success, 1 invalid input or unmet precondition,
// 2 verification disagreement or internal invariant violation.

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qkostka/qkostka.hpp"
#include "qkostka/serialize.hpp"

namespace qkostka::cli {

struct Common {
    int level = 0;
    int m = 1;
    std::vector<int> weights;
    std::string format = "json";
};

inline void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--level", c.level, "Level")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--weights", c.weights, "Comma-separated weights")->required()->delimiter(',');
    cmd->add_option("--m", c.m, "Algebra sl_{2m}")->check(CLI::PositiveNumber);
    cmd->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

inline void print_text(std::ostream& out, const Json& j) {
    std::size_t width = 0;
    for (auto it = j.begin(); it != j.end(); ++it)
        width = std::max(width, it.key().size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        out << std::left << std::setw(static_cast<int>(width)) << it.key() << "  ";
        if (it.value().is_string())
            out << it.value().get<std::string>();
        else
            out << it.value().dump();
        out << '\n';
    }
}

inline void emit(std::ostream& out, const Json& j, const std::string& format) {
    if (format == "text")
        print_text(out, j);
    else
        out << j.dump(2) << '\n';
}

inline int cmd_classify(const Common& c, std::ostream& out) {
    BundleSpec spec{c.m, c.level, c.weights};
    emit(out, bundle_record(spec, classify(spec)), c.format);
    return 0;
}

inline int cmd_rank(const Common& c, bool exact, int show, std::ostream& out, std::ostream& err) {
    BundleSpec spec{c.m, c.level, c.weights};
    Classification cls = classify(spec);
    if (!exact) {
        emit(out, bundle_record(spec, cls), c.format);
        return 0;
    }
    if (spec.m != 1) {
        err << "exact rank unsupported for m>1\n";
        return 1;
    }
    Natural rank = rank_exact(spec);
    Json j = bundle_record(spec, cls, rank);
    std::vector<Tableau> tableaux;
    if (show > 0 && rank > 0 && cls.reason != Reason::AllZero) {
        Partition shape = reduced_shape(spec.level, cls.certificate.k, cls.certificate.p);
        tableaux = enumerate_tableaux(SkewShape(shape), Content(normalized_weights(spec)), spec.level, true,
                                      static_cast<std::size_t>(show));
    }
    if (c.format == "text") {
        print_text(out, j);
        for (const auto& t : tableaux)
            out << '\n' << render_text(t);
        return 0;
    }
    if (show > 0) {
        Json list = Json::array();
        for (const auto& t : tableaux)
            list.push_back(tableau_json(t));
        j["tableaux"] = std::move(list);
    }
    emit(out, j, c.format);
    return 0;
}

inline int cmd_decompose(const Common& c, bool verify, int jobs, std::ostream& out, std::ostream& err) {
    BundleSpec spec{c.m, c.level, c.weights};
    Classification cls = classify(spec);
    if (cls.rank_class != RankClass::One) {
        err << "decomposition needs rank one; class is " << to_string(cls.rank_class) << '\n';
        return 1;
    }
    DivisorCombo combo = decompose(spec);
    Json j = bundle_record(spec, cls);
    j["divisor"] = combo.to_string();
    j["combo"] = combo_json(combo);
    int code = 0;
    VerificationReport report;
    if (verify) {
        report = verify_decomposition(spec, jobs);
        Json summary;
        summary["curves"] = report.checks.size();
        summary["violations"] = report.violations();
        Json bad = Json::array();
        for (const auto& chk : report.checks)
            if (!chk.ok)
                bad.push_back({{"curve", chk.curve.blocks}, {"lhs", natural_json(chk.lhs)},
                               {"rhs", natural_json(chk.rhs)}, {"ok", false}});
        summary["failures"] = std::move(bad);
        j["verification"] = std::move(summary);
        code = report.ok() ? 0 : 2;
    }
    if (c.format == "text") {
        out << "divisor  " << combo.to_string() << '\n';
        out << "branch   " << combo.branch << '\n';
        if (verify)
            out << "verified " << report.checks.size() << " curves, " << report.violations() << " violations\n";
    } else {
        emit(out, j, c.format);
    }
    return code;
}

struct SweepArgs {
    int n_min = 3;
    int n_max = 7;
    int level_max = 5;
    int jobs = default_jobs();
    std::string check = "classifier";
    std::string out_file;
    std::size_t sample = 0;
    std::uint64_t seed = 0;
};

inline int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
    SweepOptions opt;
    opt.n_min = a.n_min;
    opt.n_max = a.n_max;
    opt.level_max = a.level_max;
    opt.jobs = a.jobs;
    opt.check_decomposition = a.check == "decomposition" || a.check == "all";
    opt.check_scaling = a.check == "scaling" || a.check == "all";
    if (a.sample > 0) {
        opt.sample = a.sample;
        opt.seed = a.seed;
    }
    std::vector<SweepRow> rows = run_sweep(opt);
    std::size_t bad = 0;
    for (const auto& r : rows)
        bad += !r.ok();
    if (a.out_file.empty()) {
        write_sweep_csv(out, rows, opt);
    } else {
        std::ofstream file(a.out_file);
        if (!file) {
            err << "cannot open " << a.out_file << '\n';
            return 1;
        }
        write_sweep_csv(file, rows, opt);
    }
    err << rows.size() << " instances, " << bad << " disagreements\n";
    return bad == 0 ? 0 : 2;
}

inline int cmd_degree(const Common& c, const std::string& fcurve, bool show_casimir, std::ostream& out) {
    Json j;
    j["level"] = c.level;
    j["weights"] = c.weights;
    if (fcurve.empty()) {
        if (c.weights.size() != 4)
            throw ValidationError("degree needs exactly four weights without --fcurve");
        j["degree"] = natural_json(degree4(c.level, {c.weights[0], c.weights[1], c.weights[2], c.weights[3]}));
    } else {
        FCurve curve = parse_fcurve(fcurve);
        BundleSpec spec{c.m, c.level, c.weights};
        j["fcurve"] = curve.to_string();
        j["degree"] = natural_json(fcurve_degree(spec, curve));
    }
    if (show_casimir) {
        Json cas = Json::array();
        for (int w : c.weights)
            cas.push_back(rational_json(casimir_sl2(w)));
        j["casimir"] = std::move(cas);
    }
    emit(out, j, c.format);
    return 0;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ranks and first Chern classes of rectangular sl_{2m} conformal blocks bundles"};
    app.require_subcommand(1);

    Common classify_args, rank_args, decompose_args, degree_args;
    bool exact = false, verify = false, show_casimir = false;
    int show = 0;
    int decompose_jobs = default_jobs();
    std::string fcurve;
    SweepArgs sweep_args;

    auto* classify_cmd = app.add_subcommand("classify", "Rank class from the closed-form criterion");
    add_common(classify_cmd, classify_args);

    auto* rank_cmd = app.add_subcommand("rank", "Exact rank by counting proper tableaux");
    add_common(rank_cmd, rank_args);
    rank_cmd->add_flag("--exact", exact, "Count tableaux");
    rank_cmd->add_option("--show-tableaux", show, "List up to N tableaux")->check(CLI::NonNegativeNumber);

    auto* decompose_cmd = app.add_subcommand("decompose", "Level-one decomposition of c_1");
    add_common(decompose_cmd, decompose_args);
    decompose_cmd->add_flag("--verify", verify, "Check degrees on every F-curve");
    decompose_cmd->add_option("--jobs", decompose_jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* sweep_cmd = app.add_subcommand("sweep", "Classifier against tableau counts over a range");
    sweep_cmd->add_option("--n-min", sweep_args.n_min, "Fewest points")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--n-max", sweep_args.n_max, "Most points")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--level-max", sweep_args.level_max, "Largest level")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--jobs", sweep_args.jobs, "Worker threads (default QKOSTKA_JOBS)")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--check", sweep_args.check, "classifier, decomposition, scaling or all")
        ->check(CLI::IsMember({"classifier", "decomposition", "scaling", "all"}));
    sweep_cmd->add_option("--out", sweep_args.out_file, "Write CSV here instead of stdout");
    sweep_cmd->add_option("--sample", sweep_args.sample, "Random instances instead of the full range");
    sweep_cmd->add_option("--seed", sweep_args.seed, "Seed for --sample");

    auto* degree_cmd = app.add_subcommand("degree", "4-point degree or F-curve degree");
    add_common(degree_cmd, degree_args);
    degree_cmd->add_option("--fcurve", fcurve, "Blocks such as 1,2|3|4|5,6,7");
    degree_cmd->add_flag("--casimir", show_casimir, "Print Casimir numbers of the weights");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*classify_cmd)
            return cmd_classify(classify_args, out);
        if (*rank_cmd)
            return cmd_rank(rank_args, exact, show, out, err);
        if (*decompose_cmd)
            return cmd_decompose(decompose_args, verify, decompose_jobs, out, err);
        if (*sweep_cmd)
            return cmd_sweep(sweep_args, out, err);
        if (*degree_cmd)
            return cmd_degree(degree_args, fcurve, show_casimir, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const Unsupported& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"qkostka"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace qkostka::cli
