#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ktmax/report.hpp"

namespace ktmax {

/// Knobs shared by the verification suites; each suite reads the subset it
/// needs. Defaults reproduce the full desk-scale checks.
struct SuiteParams {
    std::uint64_t seed = 20250809;
    std::int64_t count = 10000;   // generated-instance suites
    int r_max = 8;
    std::int64_t m_max = 300;     // arithmetic sweeps
    std::int64_t search_m_max = 9;       // exhaustive-search grids
    std::int64_t search_m_max_small_r = 10;  // deeper grid for r <= 4
    std::vector<int> t_values = {3};
    int s_max = 8;                // exhaustive red-graph suites
    int jobs = 1;
};

std::vector<std::string> suite_names();

/// Runs one named suite: s-2 | compincr | QR | half | D2 | b1b2 | seqopt |
/// r8-table | main-desk. Throws std::domain_error for unknown names.
VerificationReport run_suite(const std::string& name, const SuiteParams& params);

VerificationReport run_blue_weight_suite(const SuiteParams& params);      // s-2
VerificationReport run_compression_suite(const SuiteParams& params);      // compincr
VerificationReport run_folding_gain_suite(const SuiteParams& params);     // QR
VerificationReport run_half_suite(const SuiteParams& params);             // half
VerificationReport run_delta2_suite(const SuiteParams& params);           // D2
VerificationReport run_b1b2_suite(const SuiteParams& params);             // b1b2
VerificationReport run_seqopt_suite(const SuiteParams& params);           // seqopt
VerificationReport run_r8_table_suite(const SuiteParams& params);         // r8-table
VerificationReport run_main_desk_suite(const SuiteParams& params);        // main-desk

}  // namespace ktmax
