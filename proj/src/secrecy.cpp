#include "rfso/secrecy.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "rfso/quadrature.hpp"
#include "rfso/specfun.hpp"

namespace rfso::secrecy {

namespace sf = rfso::specfun;

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::OTAS: return "otas";
        case Scheme::TASR: return "tasr";
        case Scheme::TASE: return "tase";
        case Scheme::ATAS: return "atas";
    }
    return "?";
}

SystemModel::SystemModel(int N_S_, rf::RfLink sr, rf::RfLink se, fso::FsoLink f,
                         double Rs_)
    : N_S(N_S_), rf_sr(sr), rf_se(se), fso(std::move(f)), Rs(Rs_) {
    if (N_S < 1) throw DomainError("SystemModel: N_S must be >= 1");
    if (!(Rs > 0.0)) throw DomainError("SystemModel: Rs must be positive");
}

Tables build_tables(const SystemModel& model, int K) {
    return Tables{fso::build_series_table(model.fso, K),
                  rf::enumerate_selection_table(model.rf_sr, model.N_S,
                                                rf::SelectionMode::Max),
                  rf::enumerate_selection_table(model.rf_se, model.N_S,
                                                rf::SelectionMode::Min)};
}

namespace {

std::vector<double> delta_block(int k, double a) {
    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) out[j] = (a + j) / k;
    return out;
}

struct RawTerm {
    double Xi;         // signed coefficient of (Z0 (T-1)! - B_D gsum)
    int T;
    double upsilon_arg;
    double phi_shift;
};

// Per-scheme expansion of the SOP-bound triple sum (common core of
// sop_bound, sop_asymptotic and sop_kernel_terms).
struct Expansion {
    double phi;                  // global prefactor
    std::vector<RawTerm> terms;
};

Expansion expand(const SystemModel& model, const Tables& tb, Scheme scheme) {
    const double Theta = model.theta();
    const double psi1 = tb.fso_table.psi1;
    const int r = model.fso.detection_r;
    const double ups_front =
        4.0 * std::pow(psi1, r) * Theta * Theta / std::pow((double)r, r);

    Expansion ex;
    if (scheme == Scheme::TASR) {
        const int tauE = model.rf_se.tau();
        const double lamE = model.rf_se.rate();
        const double ln_lamE = std::log(lamE);
        ex.phi = tb.sr_max.phi;
        const int tauR = model.rf_sr.tau();
        for (const auto& qt : tb.sr_max.qterms) {
            const int Tr = qt.q + tauR;
            const double phi1 = qt.upsilon * Theta + lamE;
            const double ln_phi1 = std::log(phi1);
            const double ups = ups_front / (phi1 * phi1);
            for (int t = 0; t < Tr; ++t) {
                double ln_varphi = qt.log_abs_Lam + sf::ln_gamma((double)Tr) +
                                   (t - Tr) * std::log(qt.upsilon) -
                                   sf::ln_gamma(t + 1.0);
                double ln_Xi = ln_varphi + t * std::log(Theta) + tauE * ln_lamE -
                               sf::ln_gamma((double)tauE) - (t + tauE) * ln_phi1;
                ex.terms.push_back({qt.sign * std::exp(ln_Xi), t + tauE, ups, phi1});
            }
        }
    } else if (scheme == Scheme::TASE) {
        const int tauR = model.rf_sr.tau();
        const int tauE = model.rf_se.tau();
        const double lamR = model.rf_sr.rate();
        ex.phi = tb.se_min.phi;
        const double ln_ThlamR = std::log(Theta * lamR);
        for (const auto& qt : tb.se_min.qterms) {
            const double phi3 = Theta * lamR + qt.upsilon;
            const double ln_phi3 = std::log(phi3);
            const double ups = ups_front / (phi3 * phi3);
            for (int i = 0; i < tauR; ++i) {
                double ln_Xi = qt.log_abs_Lam + i * ln_ThlamR -
                               (i + qt.q + tauE) * ln_phi3 - sf::ln_gamma(i + 1.0);
                ex.terms.push_back(
                    {qt.sign * std::exp(ln_Xi), i + qt.q + tauE, ups, phi3});
            }
        }
    } else {
        throw DomainError("sop closed forms exist only for TASR/TASE");
    }
    return ex;
}

sf::MeijerGSpec sop_kernel_spec(int r, int k, int T) {
    std::vector<double> a = delta_block(r, 1.0);
    for (double v : delta_block(2, 1.0 - T)) a.push_back(v);
    std::vector<double> b = delta_block(r, 0.5 * (1.0 + k));
    for (double v : delta_block(r, 0.0)) b.push_back(v);
    return sf::MeijerGSpec(r, r + 2, r + 2, 2 * r, std::move(a), std::move(b));
}

// G-sum over (h,k) for one (T, upsilon) pair, with early exit once the
// k-tail is negligible.
class GsumEvaluator {
  public:
    GsumEvaluator(const fso::FsoSeriesTable& t, int r) : r_(r), K_(t.K) {
        coeff_.assign(K_ + 1, 0.0);
        const double lnr = std::log((double)r);
        for (int k = 0; k <= K_; ++k) {
            double c = 0.0;
            for (const auto& row : t.H1) c += row[k];
            coeff_[k] = c * std::exp(0.5 * k * lnr);
        }
        pref_base_ = 1.0 / std::pow(2.0 * M_PI, 0.5 * r);
    }

    double operator()(int T, double ups) {
        auto key = std::make_pair(T, ups);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        double sum = 0.0;
        int quiet = 0;
        for (int k = 0; k <= K_; ++k) {
            double kern = sf::meijer_g(sop_kernel_spec(r_, k, T), ups);
            double term = coeff_[k] * kern;
            sum += term;
            if (k >= 8 && std::abs(term) < 1e-16 * std::abs(sum)) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
        }
        double v = sum * std::exp2(T - 0.5) * pref_base_;
        cache_.emplace(key, v);
        return v;
    }

  private:
    int r_, K_;
    double pref_base_;
    std::vector<double> coeff_;
    std::map<std::pair<int, double>, double> cache_;
};

}  // namespace

std::vector<SopKernelTerm> sop_kernel_terms(const SystemModel& model,
                                            const Tables& tables, Scheme scheme) {
    Expansion ex = expand(model, tables, scheme);
    const int r = model.fso.detection_r;
    std::vector<SopKernelTerm> out;
    out.reserve(ex.terms.size());
    for (const auto& rt : ex.terms) {
        SopKernelTerm t;
        t.Xi = rt.Xi;
        t.phi_shift = rt.phi_shift;
        t.upsilon_arg = rt.upsilon_arg;
        t.T = rt.T;
        t.phi_G = std::exp2(rt.T - 0.5) / std::pow(2.0 * M_PI, 0.5 * r);
        sf::MeijerGSpec spec = sop_kernel_spec(r, 0, rt.T);
        t.K_upper = spec.a;
        t.K_lower = spec.b;
        auto tail = sf::meijer_g_residue_tail(spec, rt.upsilon_arg);
        t.Phi = tail.value;
        t.regularized = tail.regularized;
        out.push_back(std::move(t));
    }
    return out;
}

double equivalent_snr_cdf(const SystemModel& model, const Tables& tables,
                          Scheme scheme, double gamma) {
    if (gamma < 0.0) throw DomainError("equivalent_snr_cdf: gamma must be non-negative");
    if (scheme == Scheme::ATAS) scheme = atas_select(model);
    double F_rf;
    if (scheme == Scheme::TASR)
        F_rf = rf::selected_snr_cdf(tables.sr_max, gamma);
    else if (scheme == Scheme::TASE)
        F_rf = rf::mrc_cdf(model.rf_sr, gamma);
    else
        throw DomainError("equivalent_snr_cdf: OTAS has no closed form");
    double F_fso = fso::fso_snr_cdf(tables.fso_table, model.fso, gamma);
    return 1.0 - (1.0 - F_rf) * (1.0 - F_fso);
}

SopValue sop_bound(const SystemModel& model, const Tables& tables, Scheme scheme) {
    if (scheme == Scheme::ATAS) return sop_bound_atas(model, tables);
    Expansion ex = expand(model, tables, scheme);
    const auto& ft = tables.fso_table;
    GsumEvaluator gsum(ft, model.fso.detection_r);
    double total = 0.0;
    for (const auto& rt : ex.terms) {
        double g = gsum(rt.T, rt.upsilon_arg);
        total += rt.Xi * (ft.Z0 * std::exp(sf::ln_gamma((double)rt.T)) - ft.B_D * g);
    }
    double raw = 1.0 - ex.phi * total;
    SopValue v;
    v.clamped = raw < -1e-6 || raw > 1.0 + 1e-6;
    v.truncation_warning = ft.truncation_warning;
    v.value = std::min(std::max(raw, 0.0), 1.0);
    return v;
}

double sop_asymptotic(const SystemModel& model, const Tables& tables, Scheme scheme) {
    if (scheme == Scheme::ATAS) scheme = atas_select(model);
    // gbar_RD-independent floor: the Meijer terms carry positive powers of
    // upsilon ~ psi1^r and vanish in the large-gbar_RD limit.
    Expansion ex = expand(model, tables, scheme);
    double total = 0.0;
    for (const auto& rt : ex.terms)
        total += rt.Xi * tables.fso_table.Z0 * std::exp(sf::ln_gamma((double)rt.T));
    double raw = 1.0 - ex.phi * total;
    return std::min(std::max(raw, 0.0), 1.0);
}

double sop_exact_numeric(const SystemModel& model, const Tables& tables,
                         Scheme scheme) {
    if (scheme == Scheme::ATAS) scheme = atas_select(model);
    const double Theta = model.theta();
    auto f_e = [&](double g) -> double {
        if (scheme == Scheme::TASR) return rf::mrc_pdf(model.rf_se, g);
        return rf::selected_snr_pdf(tables.se_min, g);
    };
    auto integrand = [&](double g) {
        return equivalent_snr_cdf(model, tables, scheme,
                                  Theta * g + Theta - 1.0) * f_e(g);
    };
    quad::Result r = quad::integrate_semi_infinite(integrand, 0.0, 1e-7, 1e-9);
    if (!r.converged)
        throw NumericalError("sop_exact_numeric: quadrature did not converge",
                             r.abs_error);
    return std::min(std::max(r.value, 0.0), 1.0);
}

double est(const SystemModel& model, double sop) {
    if (sop < 0.0 || sop > 1.0) throw DomainError("est: sop outside [0,1]");
    return model.Rs * (1.0 - sop);
}

Scheme atas_select(const SystemModel& model) {
    const double sr = model.rf_sr.mean_snr, se = model.rf_se.mean_snr;
    const double rd = model.fso.mean_electrical_snr;
    return (se < sr && sr < rd) ? Scheme::TASR : Scheme::TASE;
}

SopValue sop_bound_atas(const SystemModel& model, const Tables& tables) {
    return sop_bound(model, tables, atas_select(model));
}

}  // namespace rfso::secrecy
