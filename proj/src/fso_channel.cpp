#include "rfso/fso_channel.hpp"

#include <cmath>
#include <sstream>

#include "rfso/specfun.hpp"

namespace rfso::fso {

namespace sf = rfso::specfun;

std::pair<double, double> derive_malaga(double Omega, double b0, double rho0,
                                        double phase_diff) {
    if (!(b0 > 0.0)) throw DomainError("derive_malaga: b0 must be positive");
    if (rho0 < 0.0 || rho0 > 1.0) throw DomainError("derive_malaga: rho0 outside [0,1]");
    if (rho0 == 1.0)
        throw DegenerateParameterError("derive_malaga: rho0 = 1 leaves no independent scatter (g = 0)");
    double g = 2.0 * b0 * (1.0 - rho0);
    double Omega1 = Omega + 2.0 * b0 * rho0 +
                    2.0 * std::sqrt(2.0 * b0 * rho0 * Omega) * std::cos(phase_diff);
    return {g, Omega1};
}

MalagaParams::MalagaParams(double alpha_, int beta_, double Omega_, double b0_,
                           double rho0_, double phase_diff_)
    : alpha(alpha_), beta(beta_), Omega(Omega_), b0(b0_), rho0(rho0_),
      phase_diff(phase_diff_) {
    if (!(alpha > 0.0)) throw DomainError("MalagaParams: alpha must be positive");
    if (beta < 1) throw DomainError("MalagaParams: beta must be a positive integer");
    auto [g_, O1] = derive_malaga(Omega, b0, rho0, phase_diff);
    g = g_;
    Omega1 = O1;
    if (Omega1 < 0.0) throw DomainError("MalagaParams: Omega1 must be non-negative");
}

PointingParams::PointingParams(double xi_, double A0_) : xi(xi_), A0(A0_) {
    if (!(xi > 0.0)) throw DomainError("PointingParams: xi must be positive");
    if (!(A0 > 0.0 && A0 <= 1.0)) throw DomainError("PointingParams: A0 outside (0,1]");
}

FsoLink::FsoLink(MalagaParams m, PointingParams p, double path_loss_,
                 double rho_fso_, int detection_r_, double mean_snr)
    : malaga(m), pointing(p), path_loss(path_loss_), rho_fso(rho_fso_),
      detection_r(detection_r_), mean_electrical_snr(mean_snr) {
    if (!(path_loss > 0.0)) throw DomainError("FsoLink: path_loss must be positive");
    if (!(rho_fso > 0.0 && rho_fso < 1.0))
        throw DomainError("FsoLink: rho_fso must be strictly inside (0,1)");
    if (detection_r != 1 && detection_r != 2)
        throw DomainError("FsoLink: detection_r must be 1 or 2");
    if (!(mean_electrical_snr > 0.0))
        throw DomainError("FsoLink: mean_electrical_snr must be positive");
}

namespace {

const double kLn2 = std::log(2.0);

double compute_b_h(const MalagaParams& mp, int h) {
    double gbO = mp.g * mp.beta + mp.Omega1;
    double lg = sf::ln_gamma(mp.beta) + (1.0 - 0.5 * h) * std::log(gbO) +
                0.5 * h * std::log(mp.alpha) - 2.0 * sf::ln_gamma(h) -
                sf::ln_gamma(mp.beta - h + 1.0) - 0.5 * h * std::log((double)mp.beta) -
                0.5 * (mp.alpha + h) * std::log(mp.alpha * mp.beta / gbO);
    double v = std::exp(lg);
    if (h > 1) v *= std::pow(mp.Omega1 / mp.g, h - 1.0);
    return v;
}

double eval_G_k(const FsoLink& link, double zG, int k, int h) {
    const double xi2 = link.pointing.xi * link.pointing.xi;
    const double al = link.malaga.alpha;
    std::vector<double> a = {(1.0 - xi2) / 2.0, (2.0 - xi2) / 2.0,
                             (1.0 - al) / 2.0,  (2.0 - al) / 2.0,
                             (1.0 - h) / 2.0,   (2.0 - h) / 2.0};
    std::vector<double> b = {k / 2.0, -xi2 / 2.0, (1.0 - xi2) / 2.0};
    sf::MeijerGSpec spec(1, 6, 6, 3, std::move(a), std::move(b));
    return sf::meijer_g(spec, zG);
}

}  // namespace

FsoSeriesTable build_series_table(const FsoLink& link, int K) {
    if (K < 1) throw DomainError("build_series_table: K must be >= 1");
    const MalagaParams& mp = link.malaga;
    const double xi = link.pointing.xi, rho = link.rho_fso;
    const double gbO = mp.g * mp.beta + mp.Omega1;
    const double s2 = 1.0 - rho * rho;
    const int r = link.detection_r;
    const int Kext = K + 40;  // extra terms feed the convergence certificate

    FsoSeriesTable t;
    t.K = K;
    t.A_D = 2.0 * std::pow(mp.alpha, 0.5 * mp.alpha) /
            (std::pow(mp.g, 1.0 + 0.5 * mp.alpha) * std::exp(sf::ln_gamma(mp.alpha))) *
            std::pow(mp.g * mp.beta / gbO, mp.beta + 0.5 * mp.alpha);
    t.B_D = xi * xi * t.A_D * std::pow(2.0, mp.alpha - 4.5) / std::pow(M_PI, 1.5);
    t.delta = mp.alpha * mp.beta /
              (gbO * link.path_loss * link.pointing.A0 * rho);
    t.zG = 8.0 / (t.delta * t.delta * s2);
    t.psi1 = 1.0 / (2.0 * std::pow(link.mean_electrical_snr, 2.0 / r) * s2);

    t.b_h.resize(mp.beta);
    t.G_k.assign(mp.beta, std::vector<double>(K + 1));
    t.H1.assign(mp.beta, std::vector<double>(K + 1));
    t.phi1_lemma.assign(mp.beta, std::vector<double>(K + 1));
    t.gamma_coef.assign(K + 1, 0.0);

    const double ln_gbar = std::log(link.mean_electrical_snr);
    double Z0 = 0.0, Z0_ext = 0.0, last_term = 0.0;
    for (int h = 1; h <= mp.beta; ++h) {
        t.b_h[h - 1] = compute_b_h(mp, h);
        const double ln_bh = std::log(t.b_h[h - 1]);
        for (int k = 0; k <= Kext; ++k) {
            double Gk;
            if (k > K) {
                // Certificate extension: G_k overflows double near k ~ 350;
                // stop extending instead of failing the build.
                try {
                    Gk = eval_G_k(link, t.zG, k, h);
                } catch (const std::exception&) {
                    break;
                }
                if (!std::isfinite(Gk)) break;
            } else {
                Gk = eval_G_k(link, t.zG, k, h);
                if (!std::isfinite(Gk))
                    throw NumericalError("build_series_table: non-finite G_k", 0.0);
            }
            double ln_Gk = std::log(std::abs(Gk));
            double sgn = Gk < 0.0 ? -1.0 : 1.0;
            double H1 = sgn * std::exp(ln_bh + (k + h - 0.5) * kLn2 + ln_Gk -
                                       sf::ln_gamma(k + 1.0));
            double zterm = t.B_D * H1 * std::exp(sf::ln_gamma(0.5 * (k + 1)));
            Z0_ext += zterm;
            if (k <= K) {
                Z0 += zterm;
                t.G_k[h - 1][k] = Gk;
                t.H1[h - 1][k] = H1;
                t.gamma_coef[k] += H1 * std::exp(sf::ln_gamma(0.5 * (k + 1)));
                t.phi1_lemma[h - 1][k] = sgn * std::exp(
                    ln_bh + (0.5 * k + h) * kLn2 + ln_Gk - sf::ln_gamma(k + 1.0) -
                    std::log((double)r) - (1.0 + k) / r * ln_gbar -
                    0.5 * (k + 1) * std::log(s2));
                if (k == K) last_term = std::abs(zterm);
            }
        }
    }
    t.Z0 = Z0;
    if (!(t.Z0 > 0.0 && t.Z0 <= 1.0))
        throw NumericalError("build_series_table: Z0 outside (0,1]", t.Z0);
    t.z0_drift = std::abs(Z0_ext - Z0) / Z0;
    t.truncation_warning = last_term / Z0 > 1e-9;
    return t;
}

FsoSeriesTable retune_mean_snr(const FsoSeriesTable& table, const FsoLink& link) {
    FsoSeriesTable t = table;
    const int r = link.detection_r;
    const double s2 = 1.0 - link.rho_fso * link.rho_fso;
    t.psi1 = 1.0 / (2.0 * std::pow(link.mean_electrical_snr, 2.0 / r) * s2);
    const double ln_gbar = std::log(link.mean_electrical_snr);
    for (size_t h = 0; h < t.phi1_lemma.size(); ++h)
        for (int k = 0; k <= t.K; ++k) {
            double Gk = t.G_k[h][k];
            double sgn = Gk < 0.0 ? -1.0 : 1.0;
            t.phi1_lemma[h][k] = sgn * std::exp(
                std::log(t.b_h[h]) + (0.5 * k + (h + 1)) * kLn2 +
                std::log(std::abs(Gk)) - sf::ln_gamma(k + 1.0) -
                std::log((double)r) - (1.0 + k) / r * ln_gbar -
                0.5 * (k + 1) * std::log(s2));
        }
    return t;
}

double fso_snr_pdf(const FsoSeriesTable& t, const FsoLink& link, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("fso_snr_pdf: gamma must be positive");
    const int r = link.detection_r;
    const double lg = std::log(gamma);
    const double damp = t.psi1 * std::pow(gamma, 2.0 / r);
    double sum = 0.0;
    for (const auto& row : t.phi1_lemma)
        for (int k = 0; k <= t.K; ++k) {
            double c = row[k];
            if (c == 0.0) continue;
            sum += c * std::exp(((k + 1.0) / r - 1.0) * lg - damp);
        }
    return t.B_D * sum;
}

double fso_snr_cdf(const FsoSeriesTable& t, const FsoLink& link, double gamma) {
    if (gamma < 0.0) throw DomainError("fso_snr_cdf: gamma must be non-negative");
    if (gamma == 0.0) return 1.0 - t.Z0;
    const int r = link.detection_r;
    const double x = t.psi1 * std::pow(gamma, 2.0 / r);
    double sum = 0.0;
    for (int k = 0; k <= t.K; ++k)
        sum += t.gamma_coef[k] * sf::regularized_gamma_p(0.5 * (k + 1), x);
    double v = 1.0 - t.Z0 + t.B_D * sum;
    return std::min(std::max(v, 0.0), 1.0);
}

double sample_fso_gain_true(const FsoLink& link, std::mt19937_64& rng) {
    const MalagaParams& mp = link.malaga;
    std::gamma_distribution<double> gx(mp.alpha, 1.0 / mp.alpha);
    std::gamma_distribution<double> gz(mp.beta, 1.0 / (double)mp.beta);
    std::normal_distribution<double> nw(0.0, std::sqrt(0.5 * mp.g));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double X = gx(rng);
    double zeta = gz(rng);
    double c = std::sqrt(zeta * mp.Omega1) + nw(rng);
    double s = nw(rng);
    double Y = c * c + s * s;
    double Ip = link.pointing.A0 *
                std::pow(uni(rng), 1.0 / (link.pointing.xi * link.pointing.xi));
    return link.path_loss * X * Y * Ip;
}

double sample_fso_gain(const FsoLink& link, std::mt19937_64& rng) {
    double h = sample_fso_gain_true(link, rng);
    std::normal_distribution<double> n01(0.0, 1.0);
    double ht = link.rho_fso * h +
                std::sqrt(1.0 - link.rho_fso * link.rho_fso) * n01(rng);
    return ht > 0.0 ? ht : 0.0;
}

double sample_fso_snr(const FsoLink& link, std::mt19937_64& rng) {
    double ht = sample_fso_gain(link, rng);
    return link.mean_electrical_snr * std::pow(ht, (double)link.detection_r);
}

std::string FsoSeriesTable::dump() const {
    std::ostringstream os;
    os.precision(17);
    os << "K = " << K << "\n"
       << "B_D = " << B_D << "\nA_D = " << A_D << "\ndelta = " << delta
       << "\nzG = " << zG << "\npsi1 = " << psi1 << "\nZ0 = " << Z0
       << "\nz0_drift = " << z0_drift
       << "\ntruncation_warning = " << (truncation_warning ? 1 : 0) << "\n";
    for (size_t h = 0; h < b_h.size(); ++h) os << "b_" << h + 1 << " = " << b_h[h] << "\n";
    for (size_t h = 0; h < G_k.size(); ++h)
        for (int k = 0; k <= K; ++k)
            os << "G_" << h + 1 << "_" << k << " = " << G_k[h][k] << "\n";
    return os.str();
}

}  // namespace rfso::fso
