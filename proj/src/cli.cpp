#include "plutus/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <optional>

#include "plutus/compliance.hpp"
#include "plutus/config.hpp"
#include "plutus/error.hpp"
#include "plutus/manifest.hpp"
#include "plutus/market_data.hpp"
#include "plutus/market_maker.hpp"
#include "plutus/metrics.hpp"
#include "plutus/optimizer.hpp"
#include "plutus/report.hpp"
#include "plutus/smart_beta.hpp"
#include "plutus/text.hpp"

namespace plutus::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string config;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<unsigned> threads;
    std::string repo = ".";
    std::string rules;
    std::string report;
};

/// Collects emitted files and writes them atomically into the output directory.
class OutputSink {
public:
    explicit OutputSink(fs::path dir) : dir_(std::move(dir)) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) throw Error(ErrorKind::IoError, "cannot create " + dir_.string() + ": " + ec.message());
    }

    void write(const std::string& name, std::string_view content) {
        write_file_atomic(dir_ / name, content);
        names_.push_back(name);
    }

    const std::vector<std::string>& names() const { return names_; }
    const fs::path& dir() const { return dir_; }

private:
    fs::path dir_;
    std::vector<std::string> names_;
};

std::string utc_now() {
    const auto now = std::chrono::time_point_cast<std::chrono::microseconds>(std::chrono::system_clock::now());
    return format_timestamp(Timestamp{now.time_since_epoch()});
}

fs::path require_path(const fs::path& p, std::string_view key) {
    if (p.empty()) throw Error(ErrorKind::InvalidValue, std::string(key) + ": required by this command");
    return p;
}

class Run {
public:
    Run(std::string command, const Options& opts, std::ostream& out)
        : command_(std::move(command)), out_(out), started_at_(utc_now()) {
        config_ = load_config(opts.config);
        if (opts.seed) config_.optimizer.seed = *opts.seed;
        if (opts.trials) {
            if (*opts.trials == 0) throw Error(ErrorKind::InvalidValue, "--trials must be >= 1");
            config_.optimizer.n_trials = *opts.trials;
        }
        if (opts.threads) config_.optimizer.threads = std::max(1u, *opts.threads);
        sink_.emplace(opts.out_dir);
    }

    void backtest_smart_beta() {
        const auto table = load_fundamentals_input();
        const auto cfg = resolve_smart_beta(table);
        emit_smart_beta(cfg, table);
        finish();
    }

    void optimize_smart_beta() {
        const auto table = load_fundamentals_input();
        const auto base = resolve_smart_beta(table);
        const auto& o = config_.optimizer;
        const optimizer::ParamSpace space{{{"pe_min", o.pe_min_lower, o.pe_min_upper},
                                           {"pe_max", o.pe_max_lower, o.pe_max_upper},
                                           {"dy_min", o.dy_min_lower, o.dy_min_upper},
                                           {"dy_max", o.dy_max_lower, o.dy_cap}}};
        const auto min_qualified = o.min_qualified;
        const int ppy = config_.smart_beta_periods_per_year;
        auto with_params = [base](const optimizer::ParamMap& p) {
            auto cfg = base;
            cfg.bounds = {p.at("pe_min"), p.at("pe_max"), p.at("dy_min"), p.at("dy_max")};
            return cfg;
        };
        const auto objective = [&](const optimizer::ParamMap& p) {
            const auto cfg = with_params(p);
            const auto result = smart_beta::run_smart_beta_detailed(cfg, table);
            if (result.min_qualified < min_qualified) {
                throw Error(ErrorKind::ConstraintViolated, "a rebalance qualified fewer than " +
                                                               std::to_string(min_qualified) + " stocks");
            }
            return sharpe_ratio(to_returns(result.nav), cfg.rf_annual, ppy);
        };
        const auto result = optimizer::optimize(space, objective, o.seed, o.n_trials, o.threads);
        emit_trials(space, result);
        emit_smart_beta(with_params(result.best_trial.params), table);
        finish();
    }

    void backtest_market_maker() {
        const auto ticks = load_ticks_input();
        emit_market_maker(config_.market_maker, ticks);
        finish();
    }

    void optimize_market_maker() {
        const auto ticks = load_ticks_input();
        const auto& o = config_.optimizer;
        const optimizer::ParamSpace space{{{"step", o.step_lower, o.step_upper}}};
        const auto base = config_.market_maker;
        const int ppy = config_.market_maker_periods_per_year;
        const double rf = config_.metrics.rf_annual;
        const auto objective = [&](const optimizer::ParamMap& p) {
            auto cfg = base;
            cfg.step = p.at("step");
            const auto result = market_maker::run_market_maker(cfg, ticks);
            return sharpe_ratio(to_returns(result.nav), rf, ppy);
        };
        const auto result = optimizer::optimize(space, objective, o.seed, o.n_trials, o.threads);
        emit_trials(space, result);
        auto best = base;
        best.step = result.best_trial.params.at("step");
        emit_market_maker(best, ticks);
        finish();
    }

    void metrics() {
        const auto path = require_path(config_.data.nav, "data.nav");
        const auto nav = load_nav_series(path);
        data_hashes_.emplace_back("nav", sha256_file(path));
        const auto benchmark = load_benchmark_input();
        ReportOptions ro{config_.metrics.rf_annual, config_.metrics.periods_per_year,
                         config_.metrics.annualize_information_ratio};
        emit_metrics(nav, benchmark ? &*benchmark : nullptr, ro);
        finish();
    }

private:
    FundamentalTable load_fundamentals_input() {
        const auto path = require_path(config_.data.fundamentals, "data.fundamentals");
        auto table = load_fundamentals(path);
        data_hashes_.emplace_back("fundamentals", sha256_file(path));
        return table;
    }

    TickSeries load_ticks_input() {
        const auto path = require_path(config_.data.ticks, "data.ticks");
        auto ticks = load_tick_series(path, config_.data.instrument);
        data_hashes_.emplace_back("ticks", sha256_file(path));
        return ticks;
    }

    std::optional<BenchmarkSeries> load_benchmark_input() {
        if (config_.data.benchmark.empty()) return std::nullopt;
        auto series = load_benchmark(config_.data.benchmark);
        data_hashes_.emplace_back("benchmark", sha256_file(config_.data.benchmark));
        return series;
    }

    smart_beta::SmartBetaConfig resolve_smart_beta(const FundamentalTable& table) const {
        if (table.months().empty()) throw Error(ErrorKind::EmptySeries, "fundamentals table has no rows");
        auto cfg = config_.smart_beta;
        cfg.start_date = config_.smart_beta_start.value_or(table.months().front());
        cfg.end_date = config_.smart_beta_end.value_or(table.months().back());
        return cfg;
    }

    void emit_smart_beta(const smart_beta::SmartBetaConfig& cfg, const FundamentalTable& table) {
        const auto result = smart_beta::run_smart_beta_detailed(cfg, table);
        sink_->write("rebalances.csv", rebalances_csv(result.rebalances));
        const auto benchmark = load_benchmark_input();
        ReportOptions ro{cfg.rf_annual, config_.smart_beta_periods_per_year,
                         config_.metrics.annualize_information_ratio};
        emit_metrics(result.nav, benchmark ? &*benchmark : nullptr, ro);
    }

    void emit_market_maker(const market_maker::MarketMakerConfig& cfg, const TickSeries& ticks) {
        const auto result = market_maker::run_market_maker(cfg, ticks);
        sink_->write("inventory.csv", inventory_csv(result.inventory));
        sink_->write("fills.csv", fills_csv(result.fills));
        ReportOptions ro{config_.metrics.rf_annual, config_.market_maker_periods_per_year,
                         config_.metrics.annualize_information_ratio};
        emit_metrics(result.nav, nullptr, ro);
    }

    void emit_metrics(const NavSeries& nav, const BenchmarkSeries* benchmark, const ReportOptions& ro) {
        const auto report = compute_report(nav, benchmark, ro);
        if (command_ != "metrics") sink_->write("nav.csv", nav_csv(nav));
        sink_->write("drawdown.csv", drawdown_csv(drawdown_series(nav)));
        const auto kv = to_key_value(report);
        sink_->write("metrics.txt", kv);
        sink_->write("metrics.csv", metrics_csv_header() + to_csv_row(report));
        out_ << kv;
    }

    void emit_trials(const optimizer::ParamSpace& space, const optimizer::OptimizationResult& result) {
        sink_->write("trials.csv", trial_log_csv(space, result));
        std::string best = "seed = " + std::to_string(result.seed) + "\n";
        best += "n_trials = " + std::to_string(result.n_trials) + "\n";
        best += "best_trial = " + std::to_string(result.best_trial.index) + "\n";
        best += "objective = " + format_double(*result.best_trial.objective) + "\n";
        for (const auto& d : space.dimensions) best += d.name + " = " + format_double(result.best_trial.params.at(d.name)) + "\n";
        sink_->write("best_params.txt", best);
        out_ << best;
    }

    void finish() {
        RunManifest manifest;
        manifest.command = command_;
        manifest.config_hash = sha256_hex(config_.canonical_text());
        manifest.data_hashes = data_hashes_;
        manifest.seed = config_.optimizer.seed;
        manifest.started_at = started_at_;
        manifest.outputs = sink_->names();
        manifest.outputs.push_back("manifest.txt");
        sink_->write("manifest.txt", to_text(manifest));
        // Kept apart so manifest.txt stays byte-identical across reruns.
        write_file_atomic(sink_->dir() / "manifest_time.txt", "started_at = " + manifest.started_at + "\n");
        out_ << "wrote " << sink_->names().size() << " files to " << sink_->dir().string() << "\n";
    }

    std::string command_;
    std::ostream& out_;
    std::string started_at_;
    RunConfig config_;
    std::optional<OutputSink> sink_;
    std::vector<std::pair<std::string, std::string>> data_hashes_;
};

int run_check(const Options& opts, std::ostream& out) {
    const auto rules = opts.rules.empty() ? compliance::default_ruleset() : compliance::load_ruleset(opts.rules);
    const auto report = compliance::check_repo(opts.repo, rules);
    out << compliance::to_text(report);
    if (!opts.report.empty()) write_file_atomic(opts.report, compliance::to_key_value(report));
    return report.passed() ? 0 : 5;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deterministic strategy backtests, metrics, seeded optimization and README compliance checks",
                 "plutus"};
    app.require_subcommand(1);
    Options opts;

    auto add_run_options = [&opts](CLI::App* sub) {
        sub->add_option("--config", opts.config, "Run configuration file")->required();
        sub->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
        sub->add_option("--seed", opts.seed, "Override optimizer.seed");
        sub->add_option("--trials", opts.trials, "Override optimizer.n_trials");
        sub->add_option("--threads", opts.threads, "Optimizer worker threads");
    };
    const std::vector<std::pair<std::string, std::string>> run_commands = {
        {"backtest-smart-beta", "Month-end value screen backtest"},
        {"backtest-market-maker", "Inventory-aware quoting replay over ticks"},
        {"optimize-smart-beta", "Random search over screen bounds, then backtest the best"},
        {"optimize-market-maker", "Random search over quote step, then backtest the best"},
        {"metrics", "Performance metrics for a stored NAV series"},
    };
    for (const auto& [name, help] : run_commands) add_run_options(app.add_subcommand(name, help));

    auto* check = app.add_subcommand("check", "Check a repository README against the section ruleset");
    check->add_option("--repo", opts.repo, "Repository directory")->capture_default_str();
    check->add_option("--rules", opts.rules, "Ruleset CSV (name,required,aliases,step_tag)");
    check->add_option("--report", opts.report, "Also write a key-value report to this file");

    std::vector<std::string> argv_store{"plutus"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: UsageError: " << e.what() << "\n";
        return 2;
    }

    const auto* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    try {
        if (command == "check") return run_check(opts, out);
        Run run(command, opts, out);
        if (command == "backtest-smart-beta") run.backtest_smart_beta();
        else if (command == "backtest-market-maker") run.backtest_market_maker();
        else if (command == "optimize-smart-beta") run.optimize_smart_beta();
        else if (command == "optimize-market-maker") run.optimize_market_maker();
        else run.metrics();
        return 0;
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.detail() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: RuntimeError: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace plutus::cli
