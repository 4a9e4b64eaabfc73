#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace ktmax {

inline constexpr const char* kReportSchema = "ktmax.report.v1";

/// One checked case. Failures always carry a reproducible payload
/// (graph6 and/or the offending values).
struct CaseOutcome {
    std::string id;
    bool pass = true;
    nlohmann::json values;                  // object; may be empty
    std::string graph6;                     // empty when not graph-shaped
    std::vector<std::string> citations;    // rule identifiers, e.g. "lem:QR"
};

/// Machine-readable outcome of a verification suite or search run.
/// Serialization is line-delimited JSON with a versioned schema field and is
/// byte-identical across reruns with the same seed (wall-clock time is kept
/// out of the structured form).
struct VerificationReport {
    std::string suite;
    nlohmann::json params;  // object
    std::uint64_t seed = 0;
    std::uint64_t total_cases = 0;
    std::uint64_t failures = 0;
    std::vector<CaseOutcome> cases;  // all failures; pass rows kept for small suites

    bool pass() const { return failures == 0; }
    void add_case(CaseOutcome outcome, bool keep_if_passing = false);
};

std::string to_jsonl(const VerificationReport& report);
void write_jsonl(std::ostream& out, const VerificationReport& report);

/// Parses records produced by to_jsonl; multiple reports may be concatenated
/// in one stream.
std::vector<VerificationReport> parse_jsonl(std::istream& in);

}  // namespace ktmax
