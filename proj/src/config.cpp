#include "rfso/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace rfso::cli {

double db_to_linear(double dB) { return std::pow(10.0, dB / 10.0); }

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    std::ostringstream os;
    os << "config line " << line << ": " << msg;
    throw ConfigError(os.str());
}

double parse_real(const std::string& v, int line, const std::string& key) {
    std::size_t pos = 0;
    double x;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        fail(line, "invalid number for " + key + ": '" + v + "'");
    }
    if (pos != v.size()) fail(line, "trailing characters in value for " + key);
    return x;
}

long long parse_int(const std::string& v, int line, const std::string& key) {
    double x = parse_real(v, line, key);
    long long i = (long long)std::llround(x);
    if ((double)i != x) fail(line, key + " must be an integer");
    return i;
}

bool parse_bool(const std::string& v, int line, const std::string& key) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    fail(line, key + " must be true/false");
}

std::vector<secrecy::Scheme> parse_schemes(const std::string& v, int line) {
    std::vector<secrecy::Scheme> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item == "otas") out.push_back(secrecy::Scheme::OTAS);
        else if (item == "tasr") out.push_back(secrecy::Scheme::TASR);
        else if (item == "tase") out.push_back(secrecy::Scheme::TASE);
        else if (item == "atas") out.push_back(secrecy::Scheme::ATAS);
        else if (item == "all")
            out.insert(out.end(), {secrecy::Scheme::OTAS, secrecy::Scheme::TASR,
                                   secrecy::Scheme::TASE, secrecy::Scheme::ATAS});
        else fail(line, "unknown scheme '" + item + "'");
    }
    if (out.empty()) fail(line, "schemes list is empty");
    return out;
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string raw, section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        std::size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            if (section != "model" && section != "fso" && section != "numerics" &&
                section != "mc" && section != "sweep")
                fail(line, "unknown section [" + section + "]");
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected key = value");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty()) fail(line, "empty key");
        if (val.empty()) fail(line, "empty value for " + key);

        auto is = [&](const char* sec, const char* k) {
            return section == sec && key == k;
        };
        if (is("model", "N_S")) cfg.N_S = (int)parse_int(val, line, key);
        else if (is("model", "m_sr")) cfg.m_sr = (int)parse_int(val, line, key);
        else if (is("model", "n_r")) cfg.n_r = (int)parse_int(val, line, key);
        else if (is("model", "gbar_sr_dB")) cfg.gbar_sr_dB = parse_real(val, line, key);
        else if (is("model", "rho_sr")) cfg.rho_sr = parse_real(val, line, key);
        else if (is("model", "m_se")) cfg.m_se = (int)parse_int(val, line, key);
        else if (is("model", "n_e")) cfg.n_e = (int)parse_int(val, line, key);
        else if (is("model", "gbar_se_dB")) cfg.gbar_se_dB = parse_real(val, line, key);
        else if (is("model", "rho_se")) cfg.rho_se = parse_real(val, line, key);
        else if (is("model", "Rs")) cfg.Rs = parse_real(val, line, key);
        else if (is("fso", "alpha")) cfg.alpha = parse_real(val, line, key);
        else if (is("fso", "beta")) cfg.beta = (int)parse_int(val, line, key);
        else if (is("fso", "Omega")) cfg.Omega = parse_real(val, line, key);
        else if (is("fso", "b0")) cfg.b0 = parse_real(val, line, key);
        else if (is("fso", "rho0")) cfg.rho0 = parse_real(val, line, key);
        else if (is("fso", "phase_diff")) cfg.phase_diff = parse_real(val, line, key);
        else if (is("fso", "xi")) cfg.xi = parse_real(val, line, key);
        else if (is("fso", "A0")) cfg.A0 = parse_real(val, line, key);
        else if (is("fso", "path_loss")) cfg.path_loss = parse_real(val, line, key);
        else if (is("fso", "rho_fso")) cfg.rho_fso = parse_real(val, line, key);
        else if (is("fso", "detection_r")) cfg.detection_r = (int)parse_int(val, line, key);
        else if (is("fso", "gbar_rd_dB")) cfg.gbar_rd_dB = parse_real(val, line, key);
        else if (is("fso", "length_km")) cfg.length_km = parse_real(val, line, key);
        else if (is("fso", "wavelength_nm")) cfg.wavelength_nm = parse_real(val, line, key);
        else if (is("fso", "cn2")) cfg.cn2 = parse_real(val, line, key);
        else if (is("numerics", "k_truncation")) cfg.k_truncation = (int)parse_int(val, line, key);
        else if (is("numerics", "quad_rel_tol")) cfg.quad_rel_tol = parse_real(val, line, key);
        else if (is("numerics", "quad_abs_tol")) cfg.quad_abs_tol = parse_real(val, line, key);
        else if (is("mc", "n_samples")) cfg.n_samples = parse_int(val, line, key);
        else if (is("mc", "seed")) cfg.seed = (std::uint64_t)parse_int(val, line, key);
        else if (is("mc", "stream_count")) cfg.stream_count = (int)parse_int(val, line, key);
        else if (is("mc", "otas_tx_time")) cfg.otas_tx_time = parse_bool(val, line, key);
        else if (is("sweep", "variable")) {
            if (val != "gbar_rd_dB" && val != "gbar_se_dB" && val != "gbar_sr_dB")
                fail(line, "sweep variable must be gbar_rd_dB/gbar_se_dB/gbar_sr_dB");
            cfg.sweep_variable = val;
        } else if (is("sweep", "start_dB")) cfg.start_dB = parse_real(val, line, key);
        else if (is("sweep", "stop_dB")) cfg.stop_dB = parse_real(val, line, key);
        else if (is("sweep", "step_dB")) cfg.step_dB = parse_real(val, line, key);
        else if (is("sweep", "schemes")) cfg.schemes = parse_schemes(val, line);
        else fail(line, "unknown key '" + key + "' in section [" + section + "]");
    }
    validate_config(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

void validate_config(const ScenarioConfig& cfg) {
    auto check = [](bool ok, const char* field, const char* what) {
        if (!ok) throw ConfigError(std::string(field) + ": " + what);
    };
    check(cfg.N_S >= 1, "N_S", "must be >= 1");
    check(cfg.m_sr >= 1, "m_sr", "must be a positive integer");
    check(cfg.n_r >= 1, "n_r", "must be >= 1");
    check(cfg.m_se >= 1, "m_se", "must be a positive integer");
    check(cfg.n_e >= 1, "n_e", "must be >= 1");
    check(cfg.rho_sr > 0 && cfg.rho_sr < 1, "rho_sr", "must be strictly in (0,1)");
    check(cfg.rho_se > 0 && cfg.rho_se < 1, "rho_se", "must be strictly in (0,1)");
    check(cfg.Rs > 0, "Rs", "must be positive");
    check(cfg.alpha > 0, "alpha", "must be positive");
    check(cfg.beta >= 1, "beta", "must be a positive integer");
    check(cfg.b0 > 0, "b0", "must be positive");
    check(cfg.rho0 >= 0 && cfg.rho0 < 1, "rho0", "must be in [0,1)");
    check(cfg.xi > 0, "xi", "must be positive");
    check(cfg.A0 > 0 && cfg.A0 <= 1, "A0", "must be in (0,1]");
    check(cfg.path_loss > 0, "path_loss", "must be positive");
    check(cfg.rho_fso > 0 && cfg.rho_fso < 1, "rho_fso", "must be strictly in (0,1)");
    check(cfg.detection_r == 1 || cfg.detection_r == 2, "detection_r", "must be 1 or 2");
    check(cfg.k_truncation >= 1, "k_truncation", "must be >= 1");
    check(cfg.quad_rel_tol > 0, "quad_rel_tol", "must be positive");
    check(cfg.quad_abs_tol >= 0, "quad_abs_tol", "must be non-negative");
    check(cfg.n_samples >= 1000, "n_samples", "must be >= 1000");
    check(cfg.stream_count >= 1, "stream_count", "must be >= 1");
    check(cfg.step_dB > 0, "step_dB", "must be positive");
    check(cfg.stop_dB >= cfg.start_dB, "stop_dB", "must be >= start_dB");
    check(!cfg.schemes.empty(), "schemes", "must be non-empty");
    // Full model invariants (Omega1 >= 0 etc.) via construction.
    make_model(cfg);
}

secrecy::SystemModel make_model(const ScenarioConfig& cfg) {
    fso::MalagaParams mal(cfg.alpha, cfg.beta, cfg.Omega, cfg.b0, cfg.rho0,
                          cfg.phase_diff);
    fso::PointingParams pt(cfg.xi, cfg.A0);
    fso::FsoLink fso(mal, pt, cfg.path_loss, cfg.rho_fso, cfg.detection_r,
                     db_to_linear(cfg.gbar_rd_dB));
    rf::RfLink sr(cfg.m_sr, cfg.n_r, db_to_linear(cfg.gbar_sr_dB), cfg.rho_sr);
    rf::RfLink se(cfg.m_se, cfg.n_e, db_to_linear(cfg.gbar_se_dB), cfg.rho_se);
    return secrecy::SystemModel(cfg.N_S, sr, se, fso, cfg.Rs);
}

}  // namespace rfso::cli
