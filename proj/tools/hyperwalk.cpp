// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

// hyperwalk: exact many-particle interference on hypercube graphs.
//
// Exit codes: 0 success / PASS, 1 usage or invalid input, 2 verification
// failure, 3 resource bound exceeded.

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hyperwalk/error.hpp"
#include "hyperwalk/figure4.hpp"
#include "hyperwalk/fock.hpp"
#include "hyperwalk/interference.hpp"
#include "hyperwalk/io.hpp"
#include "hyperwalk/parallel.hpp"
#include "hyperwalk/supplaw.hpp"
#include "hyperwalk/symmetry.hpp"
#include "hyperwalk/unitary.hpp"

namespace hw = hyperwalk;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitBound = 3;

struct RunConfig {
    int d = 0;
    int m = 1;
    std::string sub_path;
    std::optional<std::uint64_t> seed;
    std::string initial;
    std::string stats = "boson";
    double tol = hw::kSuppressionThreshold;
    std::string out;
    std::string format = "csv";
    unsigned workers = 1;
};

void add_geometry(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--d", cfg.d, "hypercube dimension (>= 1)")->required();
    cmd->add_option("--m", cfg.m, "subgraph size per vertex (default 1)");
    cmd->add_option("--sub", cfg.sub_path, "subunitary JSON file for m > 1");
    cmd->add_option("--seed", cfg.seed, "draw a Haar-random subunitary from this seed when --sub is absent");
}

void add_state(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--initial", cfg.initial, "initial occupation, e.g. \"3,0,1,0,0,3,0,1\"")->required();
    cmd->add_option("--stats", cfg.stats, "boson | fermion | dist");
    cmd->add_option("--workers", cfg.workers, "worker threads (output order is unaffected)");
}

void add_output(CLI::App* cmd, RunConfig& cfg, bool with_format) {
    cmd->add_option("--out", cfg.out, "output file (default stdout)");
    if (with_format) cmd->add_option("--format", cfg.format, "csv | json");
}

hw::HypercubeSpec make_spec(const RunConfig& cfg) {
    if (cfg.d < 1) throw hw::InvalidArgument("--d must be >= 1");
    if (cfg.m < 1) throw hw::InvalidArgument("--m must be >= 1");
    hw::HypercubeSpec spec{cfg.d, cfg.m, std::nullopt};
    if (!cfg.sub_path.empty()) {
        spec.subunitary = hw::load_subunitary(cfg.sub_path);
    } else if (cfg.m > 1) {
        if (!cfg.seed) throw hw::InvalidArgument("--m > 1 needs --sub <path> or --seed <n>");
        spec.subunitary = hw::random_unitary(cfg.m, *cfg.seed);
    }
    spec.validate();
    return spec;
}

hw::ModeOccupation make_initial(const RunConfig& cfg, const hw::HypercubeSpec& spec) {
    auto r = hw::parse_occupation(cfg.initial);
    if (r.modes() != spec.modes()) {
        throw hw::InvalidArgument("--initial has " + std::to_string(r.modes()) + " entries, expected 2^d*m = " +
                                  std::to_string(spec.modes()));
    }
    return r;
}

void check_tolerance(double tol) {
    if (!(tol > 0.0 && tol <= 1e-4)) throw hw::InvalidArgument("--tol must lie in (0, 1e-4]");
}

/// Writes to --out if given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw hw::InvalidArgument("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
};

void warn_if_large(hw::Statistics stats, const hw::ModeOccupation& r) {
    const auto total = hw::final_states_for(stats, r.modes(), r.particles()).size();
    if (total > hw::kEnumerationWarnThreshold) {
        std::cerr << "warning: enumerating " << total << " final states\n";
    }
}

int cmd_unitary(const RunConfig& cfg, const std::string& builder) {
    const auto spec = make_spec(cfg);
    hw::ComplexMatrix u;
    if (builder == "closed") {
        u = hw::build_generalized(spec);
    } else if (builder == "oracle") {
        if (spec.m != 1) throw hw::InvalidArgument("the Hamiltonian oracle builds bare hypercubes only (m = 1)");
        u = hw::build_hamiltonian_oracle(spec.d, 1.0, std::numbers::pi / 4.0);
    } else if (builder == "tensor") {
        u = spec.m == 1 ? hw::build_hc_tensor(spec.d) : hw::build_generalized(spec);
    } else {
        throw hw::InvalidArgument("unknown builder \"" + builder + "\" (expected tensor, closed or oracle)");
    }
    const double residual = hw::unitarity_residual(u);
    Output out(cfg.out);
    out.stream() << hw::matrix_to_json(u, spec.m, spec.d).dump() << '\n';
    (out.to_file() ? std::cout : std::cerr) << "unitarity_residual=" << hw::format_probability(residual) << '\n';
    return 0;
}

int cmd_subunitary(int m, std::uint64_t seed, const std::string& path) {
    const auto a = hw::random_unitary(m, seed);
    Output out(path);
    out.stream() << hw::matrix_to_json(a, m).dump() << '\n';
    return 0;
}

int cmd_distribution(const RunConfig& cfg) {
    const auto spec = make_spec(cfg);
    const auto r = make_initial(cfg, spec);
    const auto stats = hw::parse_statistics(cfg.stats);
    const auto format = hw::parse_format(cfg.format);
    warn_if_large(stats, r);
    const auto u = hw::build_generalized(spec);

    Output out(cfg.out);
    hw::Json header;
    header["initial"] = hw::format_occupation(r);
    header["statistics"] = hw::to_string(stats);
    header["d"] = spec.d;
    header["m"] = spec.m;
    hw::RecordWriter writer(out.stream(), format, false, header);
    double sum = 0.0;
    hw::full_distribution(
        u, r, stats,
        [&](const hw::ModeOccupation& s, double p) {
            sum += p;
            writer.write(s, p);
        },
        cfg.workers);
    writer.finish();
    std::cerr << "probability_sum=" << hw::format_probability(sum) << '\n';
    return 0;
}

int cmd_predict(const RunConfig& cfg, bool predict_only) {
    const auto stats = hw::parse_statistics(cfg.stats);
    const auto format = hw::parse_format(cfg.format);
    hw::HypercubeSpec spec;
    if (predict_only) {
        if (cfg.d < 1 || cfg.m < 1) throw hw::InvalidArgument("--d and --m must be >= 1");
        spec = hw::HypercubeSpec{cfg.d, cfg.m, std::nullopt};
    } else {
        spec = make_spec(cfg);
    }
    const auto r = make_initial(cfg, spec);
    warn_if_large(stats, r);
    const hw::Classifier classifier(r, spec.d, spec.m, stats);

    hw::Json group = hw::Json::array();
    std::string group_text;
    for (const auto& p : classifier.group()) {
        group.push_back(hw::to_json(p));
        group_text += (group_text.empty() ? "[" : " [") + hw::format_symmetry_set(p) + "]";
    }
    hw::Json header;
    header["initial"] = hw::format_occupation(r);
    header["statistics"] = hw::to_string(stats);
    header["d"] = spec.d;
    header["m"] = spec.m;
    header["eta"] = classifier.eta();
    header["law_applicable"] = classifier.applicable();
    if (format == hw::Format::Json) {
        header["invariance_group"] = group;
    } else {
        header["invariance_group"] = classifier.applicable() ? group_text : std::string("none (law inapplicable)");
    }

    Output out(cfg.out);
    hw::RecordWriter writer(out.stream(), format, true, header);
    const auto finals = hw::final_states_for(stats, r.modes(), r.particles());
    if (predict_only) {
        for (const auto& s : finals) {
            const auto rec = classifier.classify(s);
            writer.write(s, std::nullopt, &rec);
        }
    } else {
        const auto u = hw::build_generalized(spec);
        hw::ordered_parallel_map(
            finals, cfg.workers,
            [&](const hw::ModeOccupation& s) { return hw::probability(hw::TransitionProblem{u, r, s, stats}); },
            [&](const hw::ModeOccupation& s, double p) {
                const auto rec = classifier.classify(s);
                writer.write(s, p, &rec);
            });
    }
    writer.finish();
    if (!classifier.applicable()) std::cerr << "law inapplicable: the initial state has no invariances\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    check_tolerance(cfg.tol);
    const auto spec = make_spec(cfg);
    const auto r = make_initial(cfg, spec);
    const auto stats = hw::parse_statistics(cfg.stats);
    warn_if_large(stats, r);
    const auto report = hw::verify(r, spec, stats, cfg.tol, cfg.workers);
    Output out(cfg.out);
    out.stream() << hw::to_json(report).dump(2) << '\n';
    std::cerr << (report.pass ? "PASS" : "FAIL") << ": " << report.predicted_suppressed_count << " of "
              << report.total_finals << " final states predicted suppressed, max probability "
              << hw::format_probability(report.max_predicted_probability) << '\n';
    return report.pass ? 0 : kExitViolation;
}

int cmd_figure4(const std::string& dir, unsigned workers) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const auto result = hw::figure4::run(workers);
    const std::array<std::string, 3> names{"ra", "rb", "rc"};

    for (std::size_t i = 0; i < 3; ++i) {
        std::ofstream f(fs::path(dir) / ("figure4_" + names[i] + ".csv"), std::ios::binary);
        f << "final_state,set,probability\n";
        for (const auto& row : result.rows) {
            f << hw::csv_field(hw::format_occupation(row.final_state)) << ',' << hw::figure4::set_label(row.set) << ','
              << hw::format_probability(row.probability[i]) << '\n';
        }
    }
    {
        std::ofstream f(fs::path(dir) / "figure4_sets.csv", std::ios::binary);
        f << "final_state,set\n";
        for (const auto& row : result.rows) {
            f << hw::csv_field(hw::format_occupation(row.final_state)) << ',' << hw::figure4::set_label(row.set) << '\n';
        }
    }
    std::ofstream f(fs::path(dir) / "figure4_summary.csv", std::ios::binary);
    f << "set,size,max_probability_ra,max_probability_rb,max_probability_rc\n";
    std::cout << "set  size  max P(r_a)  max P(r_b)  max P(r_c)\n";
    for (const auto& s : result.summary) {
        f << hw::figure4::set_label(s.set) << ',' << s.size;
        std::cout << ' ' << hw::figure4::set_label(s.set) << "   " << s.size;
        for (double p : s.max_probability) {
            f << ',' << hw::format_probability(p);
            std::cout << "  " << p;
        }
        f << '\n';
        std::cout << '\n';
    }
    std::cout << "files written to " << dir << '\n';
    return 0;
}

struct RatioRow {
    std::string statistics;
    std::optional<int> eta;
    std::optional<int> particles;
    std::optional<int> modes;
    std::optional<double> approx;
    std::optional<double> limit;
    std::optional<hw::RatioReport> exact;
    std::string error;
};

RatioRow approx_row(hw::Statistics stats, int eta, std::optional<int> N, std::optional<int> n) {
    RatioRow row{hw::to_string(stats), eta, N, n, {}, {}, {}, {}};
    try {
        if (stats == hw::Statistics::Fermion && !N) throw hw::InvalidArgument("fermionic ratios need --N");
        const auto a = hw::ratio_approx(eta, stats, N.value_or(0), n);
        row.approx = a.value;
        row.limit = a.large_n_limit;
    } catch (const hw::InvalidArgument& e) {
        row.error = e.what();
    }
    return row;
}

int cmd_ratio(const RunConfig& cfg, const std::vector<int>& etas, std::optional<int> N, std::optional<int> n,
              const std::string& preset) {
    std::vector<RatioRow> rows;
    const auto format = hw::parse_format(cfg.format);
    if (!preset.empty()) {
        if (preset != "fig3") throw hw::InvalidArgument("unknown preset \"" + preset + "\" (expected fig3)");
        for (int eta = 1; eta <= 6; ++eta) rows.push_back(approx_row(hw::Statistics::Boson, eta, std::nullopt, std::nullopt));
        for (int particles : {4, 16, 64}) {
            for (int eta = 1; (1 << eta) <= particles; ++eta) {
                rows.push_back(approx_row(hw::Statistics::Fermion, eta, particles, std::nullopt));
            }
        }
    }
    const auto stats = hw::parse_statistics(cfg.stats);
    for (int eta : etas) rows.push_back(approx_row(stats, eta, N, n));
    if (!cfg.initial.empty()) {
        const auto spec = make_spec(cfg);
        const auto r = make_initial(cfg, spec);
        warn_if_large(stats, r);
        const auto report = hw::ratio_exact(r, spec, stats);
        RatioRow row{hw::to_string(stats), report.eta, r.particles(), r.modes(), {}, {}, report, {}};
        if (report.approx) {
            row.approx = report.approx->value;
            row.limit = report.approx->large_n_limit;
        }
        rows.push_back(row);
    }
    if (rows.empty()) throw hw::InvalidArgument("nothing to compute: give --eta, --initial or --preset fig3");

    Output out(cfg.out);
    auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    auto opt_num = [](const std::optional<double>& v) { return v ? hw::format_probability(*v) : std::string(); };
    if (format == hw::Format::Csv) {
        out.stream() << "statistics,eta,N,n,approx_ratio,large_n_limit,exact_suppressed,exact_total,exact_ratio,error\n";
        for (const auto& row : rows) {
            out.stream() << row.statistics << ',' << opt_int(row.eta) << ',' << opt_int(row.particles) << ','
                         << opt_int(row.modes) << ',' << opt_num(row.approx) << ',' << opt_num(row.limit) << ',';
            if (row.exact) {
                out.stream() << row.exact->exact_suppressed << ',' << row.exact->exact_total << ','
                             << hw::format_probability(row.exact->exact_ratio);
            } else {
                out.stream() << ",,";
            }
            out.stream() << ',' << hw::csv_field(row.error) << '\n';
        }
    } else {
        hw::Json arr = hw::Json::array();
        for (const auto& row : rows) {
            hw::Json j;
            j["statistics"] = row.statistics;
            j["eta"] = row.eta ? hw::Json(*row.eta) : hw::Json(nullptr);
            j["N"] = row.particles ? hw::Json(*row.particles) : hw::Json(nullptr);
            j["n"] = row.modes ? hw::Json(*row.modes) : hw::Json(nullptr);
            j["approx_ratio"] = row.approx ? hw::Json(*row.approx) : hw::Json(nullptr);
            j["large_n_limit"] = row.limit ? hw::Json(*row.limit) : hw::Json(nullptr);
            j["exact"] = row.exact ? hw::to_json(*row.exact) : hw::Json(nullptr);
            j["error"] = row.error.empty() ? hw::Json(nullptr) : hw::Json(row.error);
            arr.push_back(std::move(j));
        }
        out.stream() << arr.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact many-particle interference and suppression laws on hypercube graphs"};
    app.require_subcommand(1);

    RunConfig cfg;

    std::string builder = "tensor";
    auto* unitary = app.add_subcommand("unitary", "build the single-particle unitary and write it as JSON");
    add_geometry(unitary, cfg);
    add_output(unitary, cfg, false);
    unitary->add_option("--builder", builder, "tensor | closed | oracle");

    int sub_m = 0;
    std::uint64_t sub_seed = 0;
    auto* subunitary = app.add_subcommand("subunitary", "write a Haar-random m x m subunitary");
    subunitary->add_option("--m", sub_m, "matrix size")->required()->check(CLI::PositiveNumber);
    subunitary->add_option("--seed", sub_seed, "random seed")->required();
    subunitary->add_option("--out", cfg.out, "output file (default stdout)");

    auto* distribution = app.add_subcommand("distribution", "transition probabilities to every final state");
    add_geometry(distribution, cfg);
    add_state(distribution, cfg);
    add_output(distribution, cfg, true);

    bool predict_only = false;
    auto* predict = app.add_subcommand("predict", "suppression-law classification of every final state");
    add_geometry(predict, cfg);
    add_state(predict, cfg);
    add_output(predict, cfg, true);
    predict->add_flag("--predict-only", predict_only, "skip probability computation");

    auto* verify = app.add_subcommand("verify", "check every predicted-suppressed state against exact probabilities");
    add_geometry(verify, cfg);
    add_state(verify, cfg);
    add_output(verify, cfg, false);
    verify->add_option("--tol", cfg.tol, "suppression threshold in (0, 1e-4]");

    std::string fig_dir = "figure4";
    auto* fig4 = app.add_subcommand("figure4", "reproduce the N=8 boson scenario on the d=3 cube");
    fig4->add_option("--out-dir", fig_dir, "directory for the CSV files");
    fig4->add_option("--workers", cfg.workers, "worker threads");

    std::vector<int> etas;
    std::optional<int> ratio_N;
    std::optional<int> ratio_n;
    std::string preset;
    auto* ratio = app.add_subcommand("ratio", "suppression ratios, closed form and exact enumeration");
    ratio->add_option("--eta", etas, "number(s) of independent symmetries")->delimiter(',');
    ratio->add_option("--N", ratio_N, "particle number");
    ratio->add_option("--n", ratio_n, "mode number (fermions: exact binomial form)");
    ratio->add_option("--preset", preset, "fig3: bosons eta=1..6, fermions N in {4,16,64}");
    ratio->add_option("--stats", cfg.stats, "boson | fermion");
    ratio->add_option("--initial", cfg.initial, "initial occupation for exact counting");
    ratio->add_option("--d", cfg.d, "hypercube dimension for exact counting");
    ratio->add_option("--m", cfg.m, "subgraph size for exact counting");
    ratio->add_option("--format", cfg.format, "csv | json");
    ratio->add_option("--out", cfg.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*unitary) return cmd_unitary(cfg, builder);
        if (*subunitary) return cmd_subunitary(sub_m, sub_seed, cfg.out);
        if (*distribution) return cmd_distribution(cfg);
        if (*predict) return cmd_predict(cfg, predict_only);
        if (*verify) return cmd_verify(cfg);
        if (*fig4) return cmd_figure4(fig_dir, cfg.workers);
        if (*ratio) return cmd_ratio(cfg, etas, ratio_N, ratio_n, preset);
    } catch (const hw::ResourceBound& e) {
        std::cerr << "resource bound: " << e.what() << '\n';
        return kExitBound;
    } catch (const hw::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
