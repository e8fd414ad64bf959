#include "rfso/rf_channel.hpp"

#include <algorithm>
#include <cmath>

#include "rfso/specfun.hpp"

namespace rfso::rf {

namespace sf = rfso::specfun;

RfLink::RfLink(int m_, int n_rx_, double mean_snr_, double rho_)
    : m(m_), n_rx(n_rx_), mean_snr(mean_snr_), rho(rho_) {
    if (m < 1) throw DomainError("RfLink: Nakagami m must be a positive integer");
    if (n_rx < 1) throw DomainError("RfLink: n_rx must be >= 1");
    if (!(mean_snr > 0.0)) throw DomainError("RfLink: mean_snr must be positive");
    if (!(rho > 0.0 && rho < 1.0))
        throw DomainError("RfLink: rho must be strictly inside (0,1)");
}

double mrc_pdf(const RfLink& link, double x) {
    if (x < 0.0) throw DomainError("mrc_pdf: x must be non-negative");
    const int tau = link.tau();
    const double lam = link.rate();
    if (x == 0.0) return tau == 1 ? lam : 0.0;
    return std::exp(tau * std::log(lam) + (tau - 1) * std::log(x) - lam * x -
                    sf::ln_gamma(tau));
}

double mrc_cdf(const RfLink& link, double x) {
    if (x < 0.0) throw DomainError("mrc_cdf: x must be non-negative");
    return sf::regularized_gamma_p(link.tau(), link.rate() * x);
}

namespace {

void enumerate_tuples(int length, int total, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out, std::size_t cap) {
    if (length == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        if (out.size() > cap)
            throw CapacityError("enumerate_selection_table: term cap exceeded");
        return;
    }
    for (int i = 0; i <= total; ++i) {
        cur.push_back(i);
        enumerate_tuples(length - 1, total - i, cur, out, cap);
        cur.pop_back();
    }
}

// Signed sum accumulated largest-magnitude-first with Kahan compensation.
Eval compensated_sum(std::vector<double>& addends) {
    double peak = 0.0;
    for (double a : addends) peak = std::max(peak, std::abs(a));
    std::sort(addends.begin(), addends.end(),
              [](double x, double y) { return std::abs(x) > std::abs(y); });
    double sum = 0.0, comp = 0.0;
    for (double a : addends) {
        double y = a - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Eval e;
    e.value = sum;
    e.precision_warning = peak > 0.0 && std::abs(sum) < 1e-10 * peak;
    return e;
}

}  // namespace

SelectionTable enumerate_selection_table(const RfLink& link, int N_S,
                                         SelectionMode mode, std::size_t cap) {
    if (N_S < 1) throw DomainError("enumerate_selection_table: N_S must be >= 1");
    const int tau = link.tau();
    const double lam = link.rate();
    const double rho = link.rho;
    const double s2 = 1.0 - rho * rho;
    const double beta_c = rho / s2;
    const double ln_lam = std::log(lam);

    SelectionTable table{link, N_S, mode, {}, 0.0};
    table.phi = N_S * std::pow(lam, tau + 1) * std::pow(rho, 1 - tau) /
                (s2 * std::exp(sf::ln_gamma(tau)));

    const int length = (mode == SelectionMode::Max) ? tau + 1 : tau;
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    enumerate_tuples(length, N_S - 1, cur, tuples, cap);

    const double ln_lam_beta = std::log(lam * beta_c);
    for (auto& tup : tuples) {
        MultinomialTerm t;
        t.n_tuple = tup;
        t.log_abs_A = sf::ln_gamma(N_S);
        for (int n : tup) t.log_abs_A -= sf::ln_gamma(n + 1.0);
        if (mode == SelectionMode::Max) {
            // Factors (-lam^{p-2}/(p-2)!)^{n_p} for p = 2..tau+1.
            for (int p = 2; p <= tau + 1; ++p) {
                int n = tup[p - 1];
                if (n == 0) continue;
                t.log_abs_A += n * ((p - 2) * ln_lam - sf::ln_gamma(p - 1.0));
                if (n % 2 == 1) t.sign_A = -t.sign_A;
                t.B += n * (p - 2);
                t.C += n;
            }
        } else {
            // Factors (lam^{p-1}/(p-1)!)^{n_p} for p = 1..tau.
            for (int p = 1; p <= tau; ++p) {
                int n = tup[p - 1];
                if (n == 0) continue;
                t.log_abs_A += n * ((p - 1) * ln_lam - sf::ln_gamma((double)p));
                t.B += n * (p - 1);
                t.C += n;
            }
        }
        t.alpha_coef = lam * (rho * rho / s2 + t.C + 1);
        t.upsilon = lam / s2 - (lam * beta_c) * (lam * beta_c) / t.alpha_coef;
        if (!(t.upsilon > 0.0))
            throw NumericalError("enumerate_selection_table: non-positive upsilon",
                                 t.upsilon);

        const double ln_alpha = std::log(t.alpha_coef);
        for (int q = 0; q <= t.B; ++q) {
            SelectionTable::QTerm qt;
            qt.q = q;
            qt.sign = t.sign_A;
            qt.upsilon = t.upsilon;
            qt.log_abs_Lam = t.log_abs_A + sf::ln_gamma(t.B + 1.0) +
                             (2 * q + tau - 1) * ln_lam_beta +
                             sf::ln_gamma(t.B + tau + 0.0) - sf::ln_gamma(q + 1.0) -
                             (t.B + tau + q) * ln_alpha -
                             sf::ln_gamma(t.B - q + 1.0) - sf::ln_gamma(tau + q + 0.0);
            table.qterms.push_back(qt);
        }
        table.terms.push_back(std::move(t));
    }
    return table;
}

Eval selected_snr_pdf_ex(const SelectionTable& table, double gamma) {
    if (gamma < 0.0) throw DomainError("selected_snr_pdf: gamma must be non-negative");
    const int tau = table.link.tau();
    std::vector<double> addends;
    addends.reserve(table.qterms.size());
    const double lg = gamma > 0.0 ? std::log(gamma) : 0.0;
    for (const auto& qt : table.qterms) {
        int power = qt.q + tau - 1;
        if (gamma == 0.0) {
            if (power != 0) continue;
            addends.push_back(qt.sign * std::exp(qt.log_abs_Lam));
            continue;
        }
        addends.push_back(qt.sign * std::exp(qt.log_abs_Lam + power * lg -
                                             qt.upsilon * gamma));
    }
    Eval e = compensated_sum(addends);
    e.value *= table.phi;
    return e;
}

Eval selected_snr_cdf_ex(const SelectionTable& table, double gamma) {
    if (gamma < 0.0) throw DomainError("selected_snr_cdf: gamma must be non-negative");
    if (gamma == 0.0) return {0.0, false};
    const int tau = table.link.tau();
    const double lg = std::log(gamma);
    std::vector<double> addends;
    for (const auto& qt : table.qterms) {
        const int T = qt.q + tau;
        const double ln_ups = std::log(qt.upsilon);
        const double base = qt.log_abs_Lam + sf::ln_gamma((double)T) -
                            qt.upsilon * gamma;
        for (int t = 0; t < T; ++t)
            addends.push_back(qt.sign * std::exp(base - sf::ln_gamma(t + 1.0) +
                                                 (t - T) * ln_ups + t * lg));
    }
    Eval e = compensated_sum(addends);
    e.value = 1.0 - table.phi * e.value;
    e.value = std::min(std::max(e.value, 0.0), 1.0);
    return e;
}

SelectionDraw sample_selection_pair(const RfLink& link, int N_S,
                                    SelectionMode mode, std::mt19937_64& rng) {
    if (N_S < 1) throw DomainError("sample_selection_pair: N_S must be >= 1");
    std::normal_distribution<double> n01(0.0, 1.0);
    const int tau = link.tau();
    const double rho = link.rho, c = std::sqrt(1.0 - rho * rho);
    // Each complex component has E|g|^2 = 2 here; Gamma(tau, rate m/gbar)
    // needs per-component mean gbar/m.
    const double scale = link.mean_snr / (2.0 * link.m);

    SelectionDraw d;
    d.snr_sel.resize(N_S);
    d.snr_tx.resize(N_S);
    for (int i = 0; i < N_S; ++i) {
        double ps = 0.0, pt = 0.0;
        for (int k = 0; k < tau; ++k) {
            double gre = n01(rng), gim = n01(rng);
            double ere = n01(rng), eim = n01(rng);
            double hre = rho * gre + c * ere, him = rho * gim + c * eim;
            ps += gre * gre + gim * gim;
            pt += hre * hre + him * him;
        }
        d.snr_sel[i] = ps * scale;
        d.snr_tx[i] = pt * scale;
    }
    d.selected = 0;
    for (int i = 1; i < N_S; ++i) {
        bool better = (mode == SelectionMode::Max) ? d.snr_sel[i] > d.snr_sel[d.selected]
                                                   : d.snr_sel[i] < d.snr_sel[d.selected];
        if (better) d.selected = i;
    }
    d.selected_snr_tx = d.snr_tx[d.selected];
    return d;
}

}  // namespace rfso::rf
