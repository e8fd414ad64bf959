#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "rfso/montecarlo.hpp"
#include "rfso/quadrature.hpp"
#include "rfso/rf_channel.hpp"

using namespace rfso;

TEST_CASE("link validation") {
    CHECK_THROWS_AS(rf::RfLink(0, 1, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS(rf::RfLink(1, 0, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS(rf::RfLink(1, 1, 0.0, 0.5), DomainError);
    CHECK_THROWS_AS(rf::RfLink(1, 1, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(rf::RfLink(1, 1, 1.0, 0.0), DomainError);
}

TEST_CASE("MRC gamma law") {
    rf::RfLink expo(1, 1, 1.0, 0.5);
    CHECK(rf::mrc_cdf(expo, 0.0) == 0.0);
    CHECK(rf::mrc_cdf(expo, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
    CHECK(rf::mrc_pdf(expo, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

    rf::RfLink l(2, 2, 2.0, 0.5);  // shape 4, rate 1
    CHECK(rf::mrc_cdf(l, 3.0) == doctest::Approx(0.3527681112177687).epsilon(1e-12));
}

TEST_CASE("selection-table enumeration counts") {
    rf::RfLink l(2, 2, 1.0, 0.7);  // tau = 4
    rf::SelectionTable tmax = rf::enumerate_selection_table(l, 5, rf::SelectionMode::Max);
    CHECK(tmax.terms.size() == 70);  // C(8,4)
    rf::SelectionTable tmin = rf::enumerate_selection_table(l, 5, rf::SelectionMode::Min);
    CHECK(tmin.terms.size() == 35);  // C(7,3)

    rf::SelectionTable t1 = rf::enumerate_selection_table(l, 1, rf::SelectionMode::Max);
    CHECK(t1.terms.size() == 1);
    CHECK(t1.terms[0].log_abs_A == doctest::Approx(0.0));
    CHECK(t1.terms[0].B == 0);
    CHECK(t1.terms[0].C == 0);

    CHECK_THROWS_AS(rf::enumerate_selection_table(l, 5, rf::SelectionMode::Max, 10),
                    CapacityError);
}

TEST_CASE("N_S = 1 reduces to the MRC law") {
    rf::RfLink l(2, 2, 1.3, 0.6);
    for (rf::SelectionMode mode : {rf::SelectionMode::Max, rf::SelectionMode::Min}) {
        rf::SelectionTable t = rf::enumerate_selection_table(l, 1, mode);
        for (double g = 0.0; g <= 8.0; g += 0.5)
            CHECK(std::abs(rf::selected_snr_cdf(t, g) - rf::mrc_cdf(l, g)) <= 1e-9);
    }
}

TEST_CASE("frozen selected-SNR CDF values") {
    rf::RfLink l(2, 2, 1.0, 0.85);
    rf::SelectionTable t = rf::enumerate_selection_table(l, 5, rf::SelectionMode::Max);
    CHECK(rf::selected_snr_cdf(t, 1.0) ==
          doctest::Approx(0.01311285315978868).epsilon(1e-8));
    CHECK(rf::selected_snr_cdf(t, 2.0) ==
          doctest::Approx(0.208224598144685).epsilon(1e-8));
    CHECK(rf::selected_snr_cdf(t, 4.0) ==
          doctest::Approx(0.8454672025490964).epsilon(1e-8));
    CHECK(rf::selected_snr_cdf(t, 0.0) == 0.0);
    CHECK(rf::selected_snr_cdf(t, 200.0) == doctest::Approx(1.0).epsilon(1e-9));

    double prev = 0.0;
    for (double g = 0.0; g <= 12.0; g += 0.25) {
        double F = rf::selected_snr_cdf(t, g);
        CHECK(F >= prev - 1e-10);
        prev = F;
    }
}

TEST_CASE("selected-SNR pdf normalization") {
    rf::RfLink l(2, 2, 1.0, 0.85);
    rf::SelectionTable t = rf::enumerate_selection_table(l, 5, rf::SelectionMode::Max);
    quad::Result r = quad::integrate_semi_infinite(
        [&](double g) { return rf::selected_snr_pdf(t, g); }, 0.0, 1e-9, 1e-12);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-4));

    rf::SelectionTable tm = rf::enumerate_selection_table(l, 4, rf::SelectionMode::Min);
    quad::Result rm = quad::integrate_semi_infinite(
        [&](double g) { return rf::selected_snr_pdf(tm, g); }, 0.0, 1e-9, 1e-12);
    CHECK(rm.value == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("joint sampler moments and ordering (light)") {
    rf::RfLink l(2, 2, 1.0, 0.85);
    std::mt19937_64 rng = mc::make_stream(11, 1);
    const int n = 200000;
    double sxy = 0, sx = 0, sy = 0, sxx = 0, syy = 0;
    int dominated = 0;
    for (int i = 0; i < n; ++i) {
        rf::SelectionDraw d = rf::sample_selection_pair(l, 2, rf::SelectionMode::Max, rng);
        double x = d.snr_sel[0], y = d.snr_tx[0];
        sx += x; sy += y; sxy += x * y; sxx += x * x; syy += y * y;
        // selected selection-time SNR is the max by construction
        if (d.snr_sel[d.selected] >= d.snr_sel[1 - d.selected]) ++dominated;
    }
    double corr = (sxy / n - sx / n * sy / n) /
                  std::sqrt((sxx / n - sx / n * sx / n) * (syy / n - sy / n * sy / n));
    CHECK(corr == doctest::Approx(0.85 * 0.85).epsilon(0.015));
    CHECK(dominated == n);
}

TEST_CASE("selection is scale equivariant") {
    rf::RfLink a(2, 2, 1.0, 0.7), b(2, 2, 25.0, 0.7);
    std::mt19937_64 r1 = mc::make_stream(13, 1), r2 = mc::make_stream(13, 1);
    for (int i = 0; i < 500; ++i) {
        rf::SelectionDraw da = rf::sample_selection_pair(a, 4, rf::SelectionMode::Max, r1);
        rf::SelectionDraw db = rf::sample_selection_pair(b, 4, rf::SelectionMode::Max, r2);
        CHECK(da.selected == db.selected);
        CHECK(db.selected_snr_tx == doctest::Approx(25.0 * da.selected_snr_tx).epsilon(1e-12));
    }
}

TEST_CASE("rho -> 1 approaches the max of i.i.d. MRC variables") {
    rf::RfLink l(1, 1, 1.0, 0.999);
    const int NS = 2;
    rf::SelectionTable t = rf::enumerate_selection_table(l, NS, rf::SelectionMode::Max);
    for (double g = 0.25; g <= 6.0; g += 0.25) {
        double iid = std::pow(rf::mrc_cdf(l, g), NS);
        CHECK(std::abs(rf::selected_snr_cdf(t, g) - iid) <= 0.02);
    }
}

TEST_CASE("fixed-antenna transmission-time marginal matches MRC (light)") {
    rf::RfLink l(2, 2, 1.0, 0.7);
    std::mt19937_64 rng = mc::make_stream(11, 2);
    std::vector<double> fixed;
    fixed.reserve(100000);
    for (int i = 0; i < 100000; ++i) {
        rf::SelectionDraw d = rf::sample_selection_pair(l, 4, rf::SelectionMode::Max, rng);
        fixed.push_back(d.snr_tx[2]);  // fixed antenna, not selection-biased
    }
    double ks = mc::kolmogorov_smirnov(fixed,
                                       [&](double g) { return rf::mrc_cdf(l, g); });
    CHECK(ks <= 0.02);
}
