#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "rfso/config.hpp"
#include "rfso/montecarlo.hpp"
#include "rfso/sweep.hpp"
#include "rfso/validation.hpp"

namespace {

using namespace rfso;

std::vector<secrecy::Scheme> scheme_list(const std::string& arg,
                                         const cli::ScenarioConfig& cfg) {
    if (arg.empty()) return cfg.schemes;
    if (arg == "all")
        return {secrecy::Scheme::OTAS, secrecy::Scheme::TASR, secrecy::Scheme::TASE,
                secrecy::Scheme::ATAS};
    if (arg == "otas") return {secrecy::Scheme::OTAS};
    if (arg == "tasr") return {secrecy::Scheme::TASR};
    if (arg == "tase") return {secrecy::Scheme::TASE};
    if (arg == "atas") return {secrecy::Scheme::ATAS};
    throw cli::ConfigError("unknown scheme: " + arg);
}

struct OutStream {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw cli::ConfigError("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& get() { return *os; }
};

int run_analyze(const cli::ScenarioConfig& cfg, const std::string& scheme_arg,
                const std::string& out_path) {
    OutStream out(out_path);
    secrecy::SystemModel model = cli::make_model(cfg);
    secrecy::Tables tables = secrecy::build_tables(model, cfg.k_truncation);
    out.get() << std::setprecision(12);
    for (secrecy::Scheme s : scheme_list(scheme_arg, cfg)) {
        std::string name = secrecy::to_string(s);
        if (s == secrecy::Scheme::OTAS) {
            out.get() << name << ".sop_bound = nan  # no closed form\n";
            continue;
        }
        secrecy::SopValue b = secrecy::sop_bound(model, tables, s);
        double exact = secrecy::sop_exact_numeric(model, tables, s);
        out.get() << name << ".sop_bound = " << b.value << "\n"
                  << name << ".sop_exact = " << exact << "\n"
                  << name << ".sop_asymptotic = "
                  << secrecy::sop_asymptotic(model, tables, s) << "\n"
                  << name << ".est = " << secrecy::est(model, b.value) << "\n";
        if (b.clamped) out.get() << name << ".flag = clamped\n";
        if (b.truncation_warning) out.get() << name << ".flag = truncation\n";
    }
    return 0;
}

int run_simulate(const cli::ScenarioConfig& cfg, const std::string& scheme_arg,
                 const std::string& out_path) {
    OutStream out(out_path);
    secrecy::SystemModel model = cli::make_model(cfg);
    out.get() << std::setprecision(12);
    for (secrecy::Scheme s : scheme_list(scheme_arg, cfg)) {
        mc::SimulationPlan plan{model, s, cfg.n_samples, cfg.seed, cfg.stream_count,
                                cfg.otas_tx_time};
        mc::SopEstimates est = mc::estimate_sop(plan);
        std::string name = secrecy::to_string(s);
        out.get() << name << ".sop_mc = " << est.exact.value << "\n"
                  << name << ".sop_mc_stderr = " << est.exact.stderr_ << "\n"
                  << name << ".sop_bound_mc = " << est.bound.value << "\n"
                  << name << ".sop_bound_mc_stderr = " << est.bound.stderr_ << "\n"
                  << name << ".est_mc = " << est.est.value << "\n"
                  << name << ".n = " << est.exact.n << "\n";
    }
    return 0;
}

int run_sweep_cmd(const cli::ScenarioConfig& cfg, const std::string& scheme_arg,
                  const std::string& out_path) {
    cli::ScenarioConfig c = cfg;
    c.schemes = scheme_list(scheme_arg, cfg);
    std::vector<cli::SweepRow> rows = cli::run_sweep(c);
    OutStream out(out_path);
    cli::write_csv(rows, out.get());
    return 0;
}

int run_validate(const cli::ScenarioConfig& cfg, const std::string& out_path,
                 const std::string& fixtures) {
    OutStream out(out_path);
    cli::ValidationOptions opts;
    opts.seed = cfg.seed;
    opts.n_samples = cfg.n_samples;
    if (!fixtures.empty()) opts.fixture_path = fixtures;
    cli::ValidationReport rep = cli::run_validation(opts);
    cli::print_report(rep, out.get());
    return rep.all_pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy-outage analysis of a mixed RF-FSO relay system"};
    app.require_subcommand(1);

    std::string config_path, out_path, scheme_arg, fixtures_path;
    std::optional<std::uint64_t> seed;
    std::optional<long long> samples;

    app.add_option("--config", config_path, "scenario config file (key = value)");
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--seed", seed, "RNG seed override");
    app.add_option("--samples", samples, "Monte-Carlo sample-count override");
    app.add_option("--scheme", scheme_arg, "otas|tasr|tase|atas|all");

    CLI::App* analyze = app.add_subcommand("analyze", "closed forms only");
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo only");
    CLI::App* sweep = app.add_subcommand("sweep", "closed forms + MC over a sweep, CSV");
    CLI::App* validate = app.add_subcommand("validate", "run the acceptance suite");
    validate->add_option("--fixtures", fixtures_path, "Meijer-G fixture file path");
    for (CLI::App* sub : {analyze, simulate, sweep, validate}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        cli::ScenarioConfig cfg =
            config_path.empty() ? cli::ScenarioConfig{} : cli::load_config(config_path);
        if (seed) cfg.seed = *seed;
        if (samples) cfg.n_samples = *samples;
        cli::validate_config(cfg);

        if (analyze->parsed()) return run_analyze(cfg, scheme_arg, out_path);
        if (simulate->parsed()) return run_simulate(cfg, scheme_arg, out_path);
        if (sweep->parsed()) return run_sweep_cmd(cfg, scheme_arg, out_path);
        if (validate->parsed()) return run_validate(cfg, out_path, fixtures_path);
    } catch (const cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const rfso::DomainError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
