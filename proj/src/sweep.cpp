#include "rfso/sweep.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace rfso::cli {

const char* kSweepCsvHeader =
    "sweep_value_dB,scheme,sop_bound,sop_exact,sop_asymptotic,sop_mc,"
    "sop_mc_stderr,est_closed,est_mc,flags";

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string join_flags(const std::vector<std::string>& flags) {
    std::string out;
    for (const auto& f : flags) {
        if (!out.empty()) out += ';';
        out += f;
    }
    return out;
}

void format_value(std::ostream& os, double v) {
    if (std::isnan(v)) {
        os << "nan";
    } else {
        os << std::setprecision(12) << v;
    }
}

}  // namespace

std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg) {
    std::vector<SweepRow> rows;
    const int n_points =
        (int)std::floor((cfg.stop_dB - cfg.start_dB) / cfg.step_dB + 1e-9) + 1;

    // The FSO Meijer-G table does not depend on the mean SNR; reuse it when
    // only gbar_rd is swept.
    bool reuse_fso = cfg.sweep_variable == "gbar_rd_dB";
    fso::FsoSeriesTable base_fso;
    bool have_base = false;

    for (int p = 0; p < n_points; ++p) {
        double v_dB = cfg.start_dB + p * cfg.step_dB;
        ScenarioConfig pt = cfg;
        if (cfg.sweep_variable == "gbar_rd_dB") pt.gbar_rd_dB = v_dB;
        else if (cfg.sweep_variable == "gbar_se_dB") pt.gbar_se_dB = v_dB;
        else pt.gbar_sr_dB = v_dB;

        secrecy::SystemModel model = make_model(pt);
        secrecy::Tables tables{fso::FsoSeriesTable{},
                               rf::enumerate_selection_table(model.rf_sr, model.N_S,
                                                             rf::SelectionMode::Max),
                               rf::enumerate_selection_table(model.rf_se, model.N_S,
                                                             rf::SelectionMode::Min)};
        if (reuse_fso && have_base) {
            tables.fso_table = fso::retune_mean_snr(base_fso, model.fso);
        } else {
            tables.fso_table = fso::build_series_table(model.fso, cfg.k_truncation);
            base_fso = tables.fso_table;
            have_base = true;
        }

        for (secrecy::Scheme scheme : cfg.schemes) {
            SweepRow row;
            row.sweep_value_dB = v_dB;
            row.scheme = secrecy::to_string(scheme);
            std::vector<std::string> flags;

            if (scheme == secrecy::Scheme::OTAS) {
                row.sop_bound = kNaN;
                row.sop_exact = kNaN;
                row.sop_asymptotic = kNaN;
                row.est_closed = kNaN;
                flags.push_back("no_closed_form");
            } else {
                secrecy::SopValue b = secrecy::sop_bound(model, tables, scheme);
                row.sop_bound = b.value;
                row.sop_exact = secrecy::sop_exact_numeric(model, tables, scheme);
                row.sop_asymptotic = secrecy::sop_asymptotic(model, tables, scheme);
                row.est_closed = secrecy::est(model, b.value);
                if (b.clamped) flags.push_back("clamped");
                if (b.truncation_warning) flags.push_back("truncation");
            }

            mc::SimulationPlan plan{model, scheme, pt.n_samples, pt.seed,
                                    pt.stream_count, pt.otas_tx_time};
            mc::SopEstimates est = mc::estimate_sop(plan);
            row.sop_mc = est.exact.value;
            row.sop_mc_stderr = est.exact.stderr_;
            row.est_mc = est.est.value;

            row.flags = join_flags(flags);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        std::ostringstream line;
        line << std::setprecision(12) << r.sweep_value_dB << ',' << r.scheme << ',';
        format_value(line, r.sop_bound);
        line << ',';
        format_value(line, r.sop_exact);
        line << ',';
        format_value(line, r.sop_asymptotic);
        line << ',';
        format_value(line, r.sop_mc);
        line << ',';
        format_value(line, r.sop_mc_stderr);
        line << ',';
        format_value(line, r.est_closed);
        line << ',';
        format_value(line, r.est_mc);
        line << ',' << r.flags;
        out << line.str() << '\n';
    }
}

}  // namespace rfso::cli
