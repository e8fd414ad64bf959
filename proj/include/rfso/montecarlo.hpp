#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rfso/secrecy.hpp"

namespace rfso::mc {

struct McEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
    long long n = 0;
};

struct SimulationPlan {
    secrecy::SystemModel model;
    secrecy::Scheme scheme = secrecy::Scheme::TASR;
    long long n_samples = 1000000;
    std::uint64_t seed = 1;
    int stream_count = 1;
    // OTAS sensitivity switch: select on transmission-time RF SNRs instead
    // of selection-time ones.
    bool otas_select_with_transmission_time = false;
};

// Deterministic per-stream engine: splitmix64 of (seed, stream index).
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream_index);

// One trial's shared randomness: joint selection/transmission draws on both
// RF links plus one imprecise FSO SNR, in a fixed draw order.
struct TrialDraw {
    rf::SelectionDraw sr;
    rf::SelectionDraw se;
    double fso_snr = 0.0;
};

TrialDraw draw_trial(const secrecy::SystemModel& model, std::mt19937_64& rng);

struct TrialResult {
    bool exact_outage = false;  // Cs <= Rs, i.e. 1 + gam_D <= Theta (1 + gam_E)
    bool bound_outage = false;  // gam_D <= Theta gam_E
    int selected = 0;
};

// Scheme selection + realized indicators on an already-drawn trial
// (common random numbers across schemes).
TrialResult evaluate_trial(const secrecy::SystemModel& model, secrecy::Scheme scheme,
                           const TrialDraw& draw,
                           bool otas_select_with_transmission_time = false);

TrialResult simulate_trial(const secrecy::SystemModel& model, secrecy::Scheme scheme,
                           std::mt19937_64& rng,
                           bool otas_select_with_transmission_time = false);

struct SopEstimates {
    McEstimate exact;
    McEstimate bound;
    McEstimate est;  // Rs (1 - exact.value); stderr scaled accordingly
};

SopEstimates estimate_sop(const SimulationPlan& plan);

// One-sample KS statistic; exact sup for n <= 20000, else evaluated at
// ~4096 sample quantiles (error << the 0.01 acceptance threshold).
double kolmogorov_smirnov(std::vector<double> samples,
                          const std::function<double(double)>& cdf);

}  // namespace rfso::mc
