#pragma once

#include <string>
#include <vector>

#include "rfso/fso_channel.hpp"
#include "rfso/rf_channel.hpp"

namespace rfso::secrecy {

enum class Scheme { OTAS, TASR, TASE, ATAS };

std::string to_string(Scheme s);

struct SystemModel {
    int N_S;
    rf::RfLink rf_sr;
    rf::RfLink rf_se;
    fso::FsoLink fso;
    double Rs;

    SystemModel(int N_S, rf::RfLink sr, rf::RfLink se, fso::FsoLink fso, double Rs);

    double theta() const { return std::exp2(Rs); }
};

// Immutable precomputed tables shared by the analytic operations.
struct Tables {
    fso::FsoSeriesTable fso_table;
    rf::SelectionTable sr_max;  // Lemma-2 (TASR) selected-SNR table
    rf::SelectionTable se_min;  // Lemma-3 (TASE) selected-SNR table
};

Tables build_tables(const SystemModel& model, int K = 80);

// One addend of the SOP-bound triple sum, with its Meijer kernel block.
struct SopKernelTerm {
    double Xi;                          // Xi_1 or Xi_2 coefficient
    double phi_shift;                   // ups_R Theta + lam_E  (or Theta lam_R + ups_E)
    double phi_G;                       // prefactor of the G-sum
    double upsilon_arg;                 // Meijer argument ups_1 / ups_2
    int T;                              // t + tau_E (or i + q + tau_E)
    std::vector<double> K_upper, K_lower;
    double Phi = 0.0;                   // residue-expansion value of the kernel
    bool regularized = false;
};

std::vector<SopKernelTerm> sop_kernel_terms(const SystemModel& model,
                                            const Tables& tables, Scheme scheme);

struct SopValue {
    double value = 0.0;
    bool clamped = false;       // raw value left [-1e-6, 1+1e-6]
    bool regularized = false;
    bool truncation_warning = false;
};

// CDF of min(RF-hop SNR, FSO SNR) for the scheme's destination chain.
double equivalent_snr_cdf(const SystemModel& model, const Tables& tables,
                          Scheme scheme, double gamma);

SopValue sop_bound(const SystemModel& model, const Tables& tables, Scheme scheme);
double sop_asymptotic(const SystemModel& model, const Tables& tables, Scheme scheme);
double sop_exact_numeric(const SystemModel& model, const Tables& tables, Scheme scheme);
double est(const SystemModel& model, double sop);

// Table-I policy: TASR iff gbar_SE < gbar_SR < gbar_RD, both strict.
Scheme atas_select(const SystemModel& model);
SopValue sop_bound_atas(const SystemModel& model, const Tables& tables);

}  // namespace rfso::secrecy
