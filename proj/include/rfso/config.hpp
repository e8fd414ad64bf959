#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rfso/secrecy.hpp"

namespace rfso::cli {

// Line-oriented `key = value` scenario file with `[section]` headers.
// All dB fields are converted to linear only when the SystemModel is built.
struct ScenarioConfig {
    // [model]
    int N_S = 5;
    int m_sr = 2, n_r = 2;
    double gbar_sr_dB = -1.0;
    double rho_sr = 0.7;
    int m_se = 2, n_e = 2;
    double gbar_se_dB = -5.0;
    double rho_se = 0.7;
    double Rs = 0.01;

    // [fso]
    double alpha = 2.296;
    int beta = 2;
    double Omega = 1.3265, b0 = 0.1079, rho0 = 0.596;
    double phase_diff = 1.5707963267948966;  // pi/2
    double xi = 6.7, A0 = 1.0;
    double path_loss = 0.9;
    double rho_fso = 0.5;
    int detection_r = 2;
    double gbar_rd_dB = 0.0;
    // Accepted and echoed for provenance; not used in any computation.
    double length_km = 1.0;
    double wavelength_nm = 785.0;
    double cn2 = 1.2e-13;

    // [numerics]
    int k_truncation = 80;
    double quad_rel_tol = 1e-7;
    double quad_abs_tol = 1e-9;

    // [mc]
    long long n_samples = 1000000;
    std::uint64_t seed = 1;
    int stream_count = 1;
    bool otas_tx_time = false;

    // [sweep]
    std::string sweep_variable = "gbar_rd_dB";  // or gbar_se_dB / gbar_sr_dB
    double start_dB = -10.0, stop_dB = 20.0, step_dB = 5.0;
    std::vector<secrecy::Scheme> schemes = {secrecy::Scheme::TASR,
                                            secrecy::Scheme::TASE};
};

struct ConfigError : DomainError {
    using DomainError::DomainError;
};

double db_to_linear(double dB);

ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config(const std::string& text);  // same, from a string

// Re-validate every invariant; throws ConfigError naming the field.
void validate_config(const ScenarioConfig& cfg);

secrecy::SystemModel make_model(const ScenarioConfig& cfg);

}  // namespace rfso::cli
