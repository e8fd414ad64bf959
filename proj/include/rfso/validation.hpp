#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace rfso::cli {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct ValidationReport {
    std::vector<CriterionResult> criteria;
    bool all_pass() const {
        for (const auto& c : criteria)
            if (!c.pass) return false;
        return true;
    }
};

struct ValidationOptions {
    std::string fixture_path = "tests/data/meijer_fixtures.txt";
    std::uint64_t seed = 1;
    long long n_samples = 1000000;
    std::vector<int> criteria;  // empty = all of 1..10
};

ValidationReport run_validation(const ValidationOptions& opts);

// One line per criterion: "[PASS|FAIL] criterion N (name): detail (Xs)".
void print_report(const ValidationReport& report, std::ostream& out);

}  // namespace rfso::cli
