#include "rfso/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace rfso::mc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream_index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ stream_index));
}

TrialDraw draw_trial(const secrecy::SystemModel& model, std::mt19937_64& rng) {
    TrialDraw d;
    d.sr = rf::sample_selection_pair(model.rf_sr, model.N_S, rf::SelectionMode::Max, rng);
    d.se = rf::sample_selection_pair(model.rf_se, model.N_S, rf::SelectionMode::Min, rng);
    d.fso_snr = fso::sample_fso_snr(model.fso, rng);
    return d;
}

TrialResult evaluate_trial(const secrecy::SystemModel& model, secrecy::Scheme scheme,
                           const TrialDraw& draw, bool otas_tx_time) {
    using secrecy::Scheme;
    if (scheme == Scheme::ATAS) scheme = secrecy::atas_select(model);

    int idx = 0;
    const int N = model.N_S;
    if (scheme == Scheme::TASR) {
        for (int i = 1; i < N; ++i)
            if (draw.sr.snr_sel[i] > draw.sr.snr_sel[idx]) idx = i;
    } else if (scheme == Scheme::TASE) {
        for (int i = 1; i < N; ++i)
            if (draw.se.snr_sel[i] < draw.se.snr_sel[idx]) idx = i;
    } else {  // OTAS: argmax of the instantaneous secrecy-capacity metric
        const auto& sr = otas_tx_time ? draw.sr.snr_tx : draw.sr.snr_sel;
        const auto& se = otas_tx_time ? draw.se.snr_tx : draw.se.snr_sel;
        double best = -1.0;
        for (int i = 0; i < N; ++i) {
            double metric = (1.0 + std::min(sr[i], draw.fso_snr)) / (1.0 + se[i]);
            if (metric > best) {
                best = metric;
                idx = i;
            }
        }
    }

    // Realized capacity always uses transmission-time RF gains of the
    // selected antenna plus the imprecise FSO SNR.
    const double gam_D = std::min(draw.sr.snr_tx[idx], draw.fso_snr);
    const double gam_E = draw.se.snr_tx[idx];
    const double Theta = model.theta();

    TrialResult r;
    r.selected = idx;
    r.exact_outage = (1.0 + gam_D) <= Theta * (1.0 + gam_E);
    r.bound_outage = gam_D <= Theta * gam_E;
    return r;
}

TrialResult simulate_trial(const secrecy::SystemModel& model, secrecy::Scheme scheme,
                           std::mt19937_64& rng, bool otas_tx_time) {
    return evaluate_trial(model, scheme, draw_trial(model, rng), otas_tx_time);
}

SopEstimates estimate_sop(const SimulationPlan& plan) {
    if (plan.n_samples < 1000)
        throw DomainError("estimate_sop: n_samples must be >= 1000");
    if (plan.stream_count < 1)
        throw DomainError("estimate_sop: stream_count must be >= 1");

    const int S = plan.stream_count;
    std::vector<long long> counts_exact(S, 0), counts_bound(S, 0), counts_n(S, 0);

    auto run_stream = [&](int s) {
        long long n = plan.n_samples / S + (s < plan.n_samples % S ? 1 : 0);
        std::mt19937_64 rng = make_stream(plan.seed, (std::uint64_t)s);
        long long ce = 0, cb = 0;
        for (long long i = 0; i < n; ++i) {
            TrialResult r = simulate_trial(plan.model, plan.scheme, rng,
                                           plan.otas_select_with_transmission_time);
            ce += r.exact_outage;
            cb += r.bound_outage;
        }
        counts_exact[s] = ce;
        counts_bound[s] = cb;
        counts_n[s] = n;
    };

    if (S == 1) {
        run_stream(0);
    } else {
        unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        int workers = (int)std::min<unsigned>(hw, (unsigned)S);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int s = w; s < S; s += workers) run_stream(s);
            });
        for (auto& t : pool) t.join();
    }

    long long n = 0, ne = 0, nb = 0;
    for (int s = 0; s < S; ++s) {
        n += counts_n[s];
        ne += counts_exact[s];
        nb += counts_bound[s];
    }

    auto binom = [n](long long k) {
        McEstimate e;
        e.n = n;
        e.value = (double)k / (double)n;
        e.stderr_ = std::sqrt(e.value * (1.0 - e.value) / (double)n);
        return e;
    };
    SopEstimates out;
    out.exact = binom(ne);
    out.bound = binom(nb);
    out.est.n = n;
    out.est.value = plan.model.Rs * (1.0 - out.exact.value);
    out.est.stderr_ = plan.model.Rs * out.exact.stderr_;
    return out;
}

double kolmogorov_smirnov(std::vector<double> samples,
                          const std::function<double(double)>& cdf) {
    if (samples.size() < 10000)
        throw DomainError("kolmogorov_smirnov: need >= 1e4 samples");
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    double sup = 0.0;
    if (n <= 20000) {
        for (std::size_t i = 0; i < n; ++i) {
            double F = cdf(samples[i]);
            sup = std::max(sup, std::abs(F - (double)i / n));
            sup = std::max(sup, std::abs((double)(i + 1) / n - F));
        }
    } else {
        const std::size_t points = 4096;
        for (std::size_t j = 0; j <= points; ++j) {
            std::size_t i = std::min(n - 1, (j * (n - 1)) / points);
            double F = cdf(samples[i]);
            sup = std::max(sup, std::abs(F - (double)i / n));
            sup = std::max(sup, std::abs((double)(i + 1) / n - F));
        }
    }
    return sup;
}

}  // namespace rfso::mc
