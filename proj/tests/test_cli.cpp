#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "rfso/config.hpp"
#include "rfso/sweep.hpp"

using namespace rfso;

TEST_CASE("empty config yields the documented defaults") {
    cli::ScenarioConfig cfg = cli::parse_config("");
    CHECK(cfg.N_S == 5);
    CHECK(cfg.gbar_sr_dB == -1.0);
    CHECK(cfg.gbar_se_dB == -5.0);
    CHECK(cfg.rho_fso == 0.5);
    CHECK(cfg.xi == 6.7);
    CHECK(cfg.k_truncation == 80);
    CHECK(cfg.n_samples == 1000000);
    CHECK(cfg.schemes.size() == 2);
    CHECK(cfg.schemes[0] == secrecy::Scheme::TASR);
    CHECK(cfg.schemes[1] == secrecy::Scheme::TASE);
    CHECK_NOTHROW(cli::validate_config(cfg));
}

TEST_CASE("sections and overrides parse") {
    cli::ScenarioConfig cfg = cli::parse_config(
        "# comment\n"
        "[model]\n"
        "N_S = 3\n"
        "gbar_se_dB = -8.5   # trailing comment\n"
        "Rs = 0.02\n"
        "\n"
        "[fso]\n"
        "rho_fso = 0.85\n"
        "detection_r = 1\n"
        "[numerics]\n"
        "k_truncation = 40\n"
        "[mc]\n"
        "n_samples = 50000\n"
        "seed = 9\n"
        "[sweep]\n"
        "variable = gbar_se_dB\n"
        "start_dB = -20\n"
        "stop_dB = 0\n"
        "step_dB = 10\n"
        "schemes = tasr,tase,atas\n");
    CHECK(cfg.N_S == 3);
    CHECK(cfg.gbar_se_dB == -8.5);
    CHECK(cfg.Rs == 0.02);
    CHECK(cfg.rho_fso == 0.85);
    CHECK(cfg.detection_r == 1);
    CHECK(cfg.k_truncation == 40);
    CHECK(cfg.n_samples == 50000);
    CHECK(cfg.seed == 9);
    CHECK(cfg.sweep_variable == "gbar_se_dB");
    CHECK(cfg.start_dB == -20.0);
    CHECK(cfg.schemes.size() == 3);
    CHECK(cfg.schemes[2] == secrecy::Scheme::ATAS);
}

TEST_CASE("parse errors carry the offending line") {
    try {
        cli::parse_config("[model]\nN_S = 5\nbogus_key = 1\n");
        CHECK(false);
    } catch (const cli::ConfigError& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(msg.find("bogus_key") != std::string::npos);
    }
    CHECK_THROWS_AS(cli::parse_config("[nosuchsection]\n"), cli::ConfigError);
    CHECK_THROWS_AS(cli::parse_config("[model]\nN_S = five\n"), cli::ConfigError);
    CHECK_THROWS_AS(cli::parse_config("[sweep]\nschemes = tasr,warp\n"),
                    cli::ConfigError);
    CHECK_THROWS_AS(cli::parse_config("[model]\nN_S 5\n"), cli::ConfigError);
}

TEST_CASE("validate_config names the bad field") {
    cli::ScenarioConfig cfg;
    cfg.rho_fso = 1.5;
    try {
        cli::validate_config(cfg);
        CHECK(false);
    } catch (const cli::ConfigError& e) {
        CHECK(std::string(e.what()).find("rho_fso") != std::string::npos);
    }
    cli::ScenarioConfig cfg2;
    cfg2.N_S = 0;
    CHECK_THROWS_AS(cli::validate_config(cfg2), cli::ConfigError);
    cli::ScenarioConfig cfg3;
    cfg3.Rs = -1.0;
    CHECK_THROWS_AS(cli::validate_config(cfg3), cli::ConfigError);
}

TEST_CASE("db conversion happens only at the model boundary") {
    CHECK(cli::db_to_linear(0.0) == doctest::Approx(1.0));
    CHECK(cli::db_to_linear(10.0) == doctest::Approx(10.0));
    cli::ScenarioConfig cfg;
    cfg.gbar_rd_dB = 10.0;
    secrecy::SystemModel m = cli::make_model(cfg);
    CHECK(m.fso.mean_electrical_snr == doctest::Approx(10.0));
    CHECK(m.rf_sr.mean_snr == doctest::Approx(std::pow(10.0, -0.1)));
}

TEST_CASE("sweep produces ordered, sane rows and stable CSV") {
    cli::ScenarioConfig cfg;
    cfg.k_truncation = 40;
    cfg.n_samples = 1000;
    cfg.start_dB = 0.0;
    cfg.stop_dB = 10.0;
    cfg.step_dB = 5.0;
    std::vector<cli::SweepRow> rows = cli::run_sweep(cfg);
    REQUIRE(rows.size() == 6);  // 3 points x 2 schemes

    double prev_tasr = 1.0, prev_tase = 1.0;
    for (const cli::SweepRow& r : rows) {
        CHECK(r.sop_bound >= 0.0);
        CHECK(r.sop_bound <= 1.0);
        CHECK(r.sop_exact >= r.sop_bound - 1e-6);
        CHECK(r.sop_mc >= 0.0);
        CHECK(r.sop_mc <= 1.0);
        CHECK(r.est_closed <= cfg.Rs + 1e-12);
        CHECK(r.est_mc <= cfg.Rs + 1e-12);
        double& prev = (r.scheme == "tasr") ? prev_tasr : prev_tase;
        CHECK(r.sop_bound <= prev + 1e-9);  // non-increasing in gbar_RD
        prev = r.sop_bound;
    }

    std::ostringstream a, b;
    cli::write_csv(rows, a);
    cli::write_csv(rows, b);
    CHECK(a.str() == b.str());
    std::string header = a.str().substr(0, a.str().find('\n'));
    CHECK(header == std::string(cli::kSweepCsvHeader));
    CHECK(header.rfind("sweep_value_dB,scheme,sop_bound,", 0) == 0);
}

TEST_CASE("sweep over the eavesdropper link and OTAS placeholder rows") {
    cli::ScenarioConfig cfg;
    cfg.k_truncation = 40;
    cfg.n_samples = 1000;
    cfg.sweep_variable = "gbar_se_dB";
    cfg.start_dB = -10.0;
    cfg.stop_dB = -5.0;
    cfg.step_dB = 5.0;
    cfg.schemes = {secrecy::Scheme::OTAS, secrecy::Scheme::TASR};
    std::vector<cli::SweepRow> rows = cli::run_sweep(cfg);
    REQUIRE(rows.size() == 4);
    for (const cli::SweepRow& r : rows) {
        if (r.scheme == "otas") {
            CHECK(std::isnan(r.sop_bound));
            CHECK(std::isnan(r.est_closed));
            CHECK(r.flags.find("no_closed_form") != std::string::npos);
            CHECK(r.sop_mc >= 0.0);
        } else {
            CHECK(std::isfinite(r.sop_bound));
        }
    }
}
