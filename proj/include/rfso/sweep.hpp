#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rfso/config.hpp"
#include "rfso/montecarlo.hpp"

namespace rfso::cli {

struct SweepRow {
    double sweep_value_dB = 0.0;
    std::string scheme;
    double sop_bound = 0.0;
    double sop_exact = 0.0;       // NaN when no closed form (OTAS)
    double sop_asymptotic = 0.0;  // NaN when no closed form
    double sop_mc = 0.0;
    double sop_mc_stderr = 0.0;
    double est_closed = 0.0;      // NaN when no closed form
    double est_mc = 0.0;
    std::string flags;            // semicolon-separated diagnostics
};

// Fixed, documented CSV header matching the SweepRow field order.
extern const char* kSweepCsvHeader;

std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg);
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace rfso::cli
