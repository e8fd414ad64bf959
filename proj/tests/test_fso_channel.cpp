#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "rfso/fso_channel.hpp"
#include "rfso/montecarlo.hpp"
#include "rfso/quadrature.hpp"

using namespace rfso;

namespace {

fso::MalagaParams default_malaga() {
    return fso::MalagaParams(2.296, 2, 1.3265, 0.1079, 0.596, M_PI / 2);
}

fso::FsoLink default_link(double rho = 0.5, int r = 2, double gbar = 1.0) {
    return fso::FsoLink(default_malaga(), fso::PointingParams(6.7, 1.0), 0.9, rho,
                        r, gbar);
}

}  // namespace

TEST_CASE("derive_malaga closed forms") {
    auto [g, O1] = fso::derive_malaga(1.3265, 0.1079, 0.596, M_PI / 2);
    CHECK(g == doctest::Approx(0.08718320).epsilon(1e-6));
    CHECK(O1 == doctest::Approx(1.4551168).epsilon(1e-6));

    auto [g2, O2] = fso::derive_malaga(1.0, 0.5, 0.0, 0.7);
    CHECK(g2 == doctest::Approx(1.0));
    CHECK(O2 == doctest::Approx(1.0));

    auto [g3, O3] = fso::derive_malaga(0.0, 0.5, 0.5, 0.0);
    CHECK(g3 == doctest::Approx(0.5));
    CHECK(O3 == doctest::Approx(0.5));

    CHECK_THROWS_AS(fso::derive_malaga(1.0, 0.5, 1.0, 0.0),
                    DegenerateParameterError);
    CHECK_THROWS_AS(fso::derive_malaga(1.0, -0.5, 0.0, 0.0), DomainError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(fso::MalagaParams(0.0, 2, 1, 0.1, 0.5, 0), DomainError);
    CHECK_THROWS_AS(fso::MalagaParams(2.0, 0, 1, 0.1, 0.5, 0), DomainError);
    CHECK_THROWS_AS(fso::PointingParams(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(fso::PointingParams(6.7, 1.5), DomainError);
    CHECK_THROWS_AS(fso::FsoLink(default_malaga(), fso::PointingParams(6.7, 1.0),
                                 0.9, 1.0, 2, 1.0),
                    DomainError);  // rho_fso = 1
    CHECK_THROWS_AS(fso::FsoLink(default_malaga(), fso::PointingParams(6.7, 1.0),
                                 0.9, 0.5, 3, 1.0),
                    DomainError);  // detection_r = 3
}

TEST_CASE("series table: frozen values at the default parameter set") {
    fso::FsoSeriesTable t = fso::build_series_table(default_link(), 80);
    CHECK(t.Z0 == doctest::Approx(0.7222246144556).epsilon(1e-6));
    CHECK(t.Z0 > 0.0);
    CHECK(t.Z0 <= 1.0);
    // The k-series tail decays as a power law; the drift certificate exposes
    // a genuine truncation error at K=80 (~3.2e-4), and the last-term check
    // flags the slow tail.
    CHECK(t.z0_drift > 1e-6);
    CHECK(t.z0_drift < 1e-3);
    CHECK(t.truncation_warning);

    CHECK(fso::fso_snr_pdf(t, default_link(), 1.0) ==
          doctest::Approx(0.17030623950856).epsilon(1e-6));
    CHECK(fso::fso_snr_cdf(t, default_link(), 0.5) ==
          doctest::Approx(0.54385849403442).epsilon(1e-6));
    CHECK(fso::fso_snr_cdf(t, default_link(), 1.0) ==
          doctest::Approx(0.64985302416852).epsilon(1e-6));
    CHECK(fso::fso_snr_cdf(t, default_link(), 2.0) ==
          doctest::Approx(0.77431008603756).epsilon(1e-6));
}

TEST_CASE("cdf boundary behavior and monotonicity") {
    fso::FsoLink link = default_link();
    fso::FsoSeriesTable t = fso::build_series_table(link, 80);
    CHECK(fso::fso_snr_cdf(t, link, 0.0) == 1.0 - t.Z0);
    CHECK(fso::fso_snr_cdf(t, link, 1e9) >= 1.0 - 1e-4);
    double prev = 0.0;
    for (double g = 0.0; g <= 20.0; g += 0.25) {
        double F = fso::fso_snr_cdf(t, link, g);
        CHECK(F >= prev - 1e-12);
        prev = F;
    }
}

TEST_CASE("Z0 is independent of the mean SNR; retune matches rebuild") {
    fso::FsoSeriesTable t1 = fso::build_series_table(default_link(0.5, 2, 1.0), 40);
    fso::FsoSeriesTable t2 = fso::build_series_table(default_link(0.5, 2, 100.0), 40);
    CHECK(std::abs(t1.Z0 - t2.Z0) <= 1e-12 * t1.Z0);

    fso::FsoSeriesTable rt = fso::retune_mean_snr(t1, default_link(0.5, 2, 100.0));
    CHECK(rt.psi1 == doctest::Approx(t2.psi1).epsilon(1e-14));
    for (size_t h = 0; h < rt.phi1_lemma.size(); ++h)
        for (int k = 0; k <= rt.K; ++k)
            CHECK(rt.phi1_lemma[h][k] ==
                  doctest::Approx(t2.phi1_lemma[h][k]).epsilon(1e-12));
}

TEST_CASE("pdf normalization integrates to Z0") {
    fso::FsoLink link = default_link();
    fso::FsoSeriesTable t = fso::build_series_table(link, 80);
    // substitute gamma = u^2 to remove the integrable divergence at 0 (r=2)
    auto f = [&](double u) { return fso::fso_snr_pdf(t, link, u * u) * 2.0 * u; };
    quad::Result r = quad::integrate_semi_infinite(f, 1e-12, 1e-8, 1e-12);
    CHECK(r.value == doctest::Approx(t.Z0).epsilon(1e-4));
}

TEST_CASE("heterodyne dominance of the SNR CDF") {
    fso::FsoLink l1 = default_link(0.5, 1, 10.0);
    fso::FsoLink l2 = default_link(0.5, 2, 10.0);
    fso::FsoSeriesTable t1 = fso::build_series_table(l1, 80);
    fso::FsoSeriesTable t2 = fso::build_series_table(l2, 80);
    for (double g = 0.25; g <= 10.0; g += 0.25)
        CHECK(fso::fso_snr_cdf(t1, l1, g) <= fso::fso_snr_cdf(t2, l2, g) + 1e-9);
}

TEST_CASE("sampler agrees with the series law (light)") {
    fso::FsoLink link = default_link();
    fso::FsoSeriesTable t = fso::build_series_table(link, 80);
    std::mt19937_64 rng = mc::make_stream(7, 1);
    const long long n = 200000;
    std::vector<double> pos;
    long long zeros = 0;
    for (long long i = 0; i < n; ++i) {
        double g = fso::sample_fso_snr(link, rng);
        if (g == 0.0)
            ++zeros;
        else
            pos.push_back(g);
    }
    double p0 = (double)zeros / n;
    double target = 1.0 - t.Z0;
    double se = std::sqrt(p0 * (1.0 - p0) / n);
    CHECK(std::abs(p0 - target) <= 4.0 * se);

    double ks = mc::kolmogorov_smirnov(pos, [&](double g) {
        return (fso::fso_snr_cdf(t, link, g) - (1.0 - t.Z0)) / t.Z0;
    });
    CHECK(ks <= 0.02);
}

TEST_CASE("near-perfect estimation leaves almost no negative mass") {
    // The k-series is impractical at rho_fso = 0.999; the underlying fact
    // (Z0 within 0.01 of 1) is verified through the sampler.
    fso::FsoLink link = default_link(0.999, 2, 1.0);
    std::mt19937_64 rng = mc::make_stream(7, 2);
    const long long n = 200000;
    long long zeros = 0;
    for (long long i = 0; i < n; ++i)
        if (fso::sample_fso_gain(link, rng) == 0.0) ++zeros;
    double p0 = (double)zeros / n;
    CHECK(p0 <= 0.01);
    CHECK(p0 == doctest::Approx(0.008).epsilon(0.25));  // exact mass ~ 1-0.992
}

TEST_CASE("pointing gain concentrates at A0 for large xi") {
    fso::FsoLink link(default_malaga(), fso::PointingParams(1000.0, 0.8), 1.0, 0.5,
                      1, 1.0);
    std::mt19937_64 rng = mc::make_stream(7, 3);
    // isolate I_p through the gain pipeline: with xi=1e3 the uniform factor
    // U^(1/xi^2) has mean >= 0.999; check it through repeated draws of the
    // pointing factor alone.
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double acc = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i)
        acc += 0.8 * std::pow(uni(rng), 1.0 / (1000.0 * 1000.0));
    CHECK(acc / n >= 0.999 * 0.8);
}

TEST_CASE("sample_fso_snr maps gain through the detection exponent") {
    fso::FsoLink l1 = default_link(0.5, 1, 3.0);
    std::mt19937_64 a = mc::make_stream(9, 4), b = mc::make_stream(9, 4);
    for (int i = 0; i < 100; ++i) {
        double gain = fso::sample_fso_gain(l1, a);
        double snr = fso::sample_fso_snr(l1, b);
        CHECK(snr == doctest::Approx(3.0 * gain).epsilon(1e-14));
    }
}
