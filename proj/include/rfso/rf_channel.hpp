#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "rfso/errors.hpp"

namespace rfso::rf {

struct RfLink {
    int m;            // Nakagami parameter (integer for the exact sampler)
    int n_rx;         // receive antennas in the MRC sum
    double mean_snr;  // per-branch average SNR, linear
    double rho;       // outdating correlation, strictly in (0,1)

    RfLink(int m, int n_rx, double mean_snr, double rho);

    int tau() const { return m * n_rx; }
    double rate() const { return m / mean_snr; }  // Gamma rate lambda
};

// Gamma(shape tau, rate lambda) MRC statistics.
double mrc_pdf(const RfLink& link, double x);
double mrc_cdf(const RfLink& link, double x);

enum class SelectionMode { Max, Min };

struct MultinomialTerm {
    std::vector<int> n_tuple;
    double log_abs_A = 0.0;
    int sign_A = 1;
    int B = 0, C = 0;
    double alpha_coef = 0.0;  // lam (rho^2/s2 + C + 1)
    double upsilon = 0.0;     // lam/s2 - (lam beta)^2/alpha
};

struct SelectionTable {
    RfLink link;
    int N_S;
    SelectionMode mode;
    std::vector<MultinomialTerm> terms;
    double phi;  // N_S lam^{tau+1} rho^{1-tau} / (s2 Gamma(tau))

    // Flattened per-(term,q) coefficients of the Lemma pdf
    // phi * sum sign exp(log_abs_Lam) gamma^{q+tau-1} e^{-upsilon gamma}.
    struct QTerm {
        int q;
        double log_abs_Lam;
        int sign;
        double upsilon;
    };
    std::vector<QTerm> qterms;
};

SelectionTable enumerate_selection_table(const RfLink& link, int N_S,
                                         SelectionMode mode,
                                         std::size_t cap = 1000000);

struct Eval {
    double value = 0.0;
    bool precision_warning = false;  // catastrophic cancellation detected
};

Eval selected_snr_pdf_ex(const SelectionTable& table, double gamma);
Eval selected_snr_cdf_ex(const SelectionTable& table, double gamma);
inline double selected_snr_pdf(const SelectionTable& t, double g) {
    return selected_snr_pdf_ex(t, g).value;
}
inline double selected_snr_cdf(const SelectionTable& t, double g) {
    return selected_snr_cdf_ex(t, g).value;
}

struct SelectionDraw {
    int selected = 0;
    double selected_snr_tx = 0.0;
    std::vector<double> snr_sel;  // selection-time MRC SNR per antenna
    std::vector<double> snr_tx;   // transmission-time MRC SNR per antenna
};

SelectionDraw sample_selection_pair(const RfLink& link, int N_S,
                                    SelectionMode mode, std::mt19937_64& rng);

}  // namespace rfso::rf
