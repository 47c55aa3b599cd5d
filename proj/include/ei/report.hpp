// Structured result of one verification run, serializable to JSON.

#pragma once

#include <string>
#include <vector>

namespace ei {

struct Failure {
    long index = 0;
    std::string expected;
    std::string got;
};

struct VerificationReport {
    std::string check_name;
    long range_lo = 0;
    long range_hi = 0;
    bool passed = true;  // true iff failures is empty
    std::vector<Failure> failures;
    long elapsed_ms = 0;
    std::string config;  // JSON text echoing the parameters of the run

    void add_failure(long index, std::string expected, std::string got) {
        failures.push_back({index, std::move(expected), std::move(got)});
        passed = false;
    }
};

// Schema: {check_name, range:{lo,hi}, passed, failures:[{index,expected,got}],
//          elapsed_ms, config}
std::string report_to_json_text(const VerificationReport& r, int indent = 2);
std::string reports_to_json_text(const std::vector<VerificationReport>& rs, int indent = 2);

}  // namespace ei
