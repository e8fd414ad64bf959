#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rfso/errors.hpp"

namespace rfso::fso {

// g = 2 b0 (1 - rho0),  Omega1 = Omega + 2 b0 rho0 + 2 sqrt(2 b0 rho0 Omega) cos(dphi).
std::pair<double, double> derive_malaga(double Omega, double b0, double rho0,
                                        double phase_diff);

struct MalagaParams {
    double alpha;       // large-scale fading parameter
    int beta;           // amount-of-fading parameter (finite mixture index)
    double Omega, b0, rho0, phase_diff;
    double g, Omega1;   // derived

    MalagaParams(double alpha, int beta, double Omega, double b0, double rho0,
                 double phase_diff);
};

struct PointingParams {
    double xi;  // pointing-error severity
    double A0;  // collected power at zero displacement
    PointingParams(double xi, double A0);
};

struct FsoLink {
    MalagaParams malaga;
    PointingParams pointing;
    double path_loss;           // I_l
    double rho_fso;             // estimation correlation, strictly in (0,1)
    int detection_r;            // 1 = heterodyne, 2 = IM/DD
    double mean_electrical_snr; // linear

    FsoLink(MalagaParams m, PointingParams p, double path_loss, double rho_fso,
            int detection_r, double mean_electrical_snr);
};

// Precomputed Lemma-style coefficient table at truncation K. H1 and
// phi1_lemma are indexed [h-1][k]; phi1_lemma includes the b_h factor, so
// the SNR density is B_D * sum phi1_lemma * gamma^{(k+1)/r-1} exp(-psi1 gamma^{2/r}).
struct FsoSeriesTable {
    int K = 0;
    double B_D = 0, A_D = 0, delta = 0, zG = 0, psi1 = 0, Z0 = 0;
    std::vector<double> b_h;
    std::vector<std::vector<double>> G_k;
    std::vector<std::vector<double>> H1;
    std::vector<std::vector<double>> phi1_lemma;
    std::vector<double> gamma_coef;     // sum_h H1(h,k) * Gamma((k+1)/2), per k
    double z0_drift = 0;                // |Z0(K+40) - Z0(K)| / Z0 certificate
    bool truncation_warning = false;

    std::string dump() const;  // plain-text key-value form for fixture diffing
};

FsoSeriesTable build_series_table(const FsoLink& link, int K);

// Rebuild for a different mean SNR without re-evaluating any Meijer G:
// only psi1 and phi1_lemma depend on it.
FsoSeriesTable retune_mean_snr(const FsoSeriesTable& table, const FsoLink& link);

double fso_snr_pdf(const FsoSeriesTable& t, const FsoLink& link, double gamma);
double fso_snr_cdf(const FsoSeriesTable& t, const FsoLink& link, double gamma);

// True channel gain h_RD (estimation error disabled): I_l * X * Y * I_p.
double sample_fso_gain_true(const FsoLink& link, std::mt19937_64& rng);
// Imprecise gain max(rho h + sqrt(1-rho^2) eps, 0).
double sample_fso_gain(const FsoLink& link, std::mt19937_64& rng);
// Electrical SNR gamma = gbar * h_tilde^r.
double sample_fso_snr(const FsoLink& link, std::mt19937_64& rng);

}  // namespace rfso::fso
