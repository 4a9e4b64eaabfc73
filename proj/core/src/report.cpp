#include "ktmax/report.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ktmax {

using nlohmann::json;

void VerificationReport::add_case(CaseOutcome outcome, bool keep_if_passing) {
    ++total_cases;
    if (!outcome.pass) ++failures;
    if (!outcome.pass || keep_if_passing) cases.push_back(std::move(outcome));
}

namespace {

json case_to_json(const std::string& suite, const CaseOutcome& c) {
    json rec{{"schema", kReportSchema}, {"kind", "case"}, {"suite", suite},
             {"id", c.id},              {"pass", c.pass}};
    if (!c.values.is_null() && !c.values.empty()) rec["values"] = c.values;
    if (!c.graph6.empty()) rec["graph6"] = c.graph6;
    if (!c.citations.empty()) rec["citations"] = c.citations;
    return rec;
}

}  // namespace

void write_jsonl(std::ostream& out, const VerificationReport& report) {
    json header{{"schema", kReportSchema},
                {"kind", "header"},
                {"suite", report.suite},
                {"seed", report.seed}};
    if (!report.params.is_null() && !report.params.empty()) header["params"] = report.params;
    out << header.dump() << "\n";
    for (const CaseOutcome& c : report.cases) out << case_to_json(report.suite, c).dump() << "\n";
    json summary{{"schema", kReportSchema}, {"kind", "summary"},
                 {"suite", report.suite},   {"cases", report.total_cases},
                 {"failures", report.failures}, {"pass", report.pass()}};
    out << summary.dump() << "\n";
}

std::string to_jsonl(const VerificationReport& report) {
    std::ostringstream out;
    write_jsonl(out, report);
    return out.str();
}

std::vector<VerificationReport> parse_jsonl(std::istream& in) {
    std::vector<VerificationReport> reports;
    VerificationReport current;
    bool open = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded())
            throw std::runtime_error("report: bad JSON on line " + std::to_string(lineno));
        if (rec.value("schema", "") != kReportSchema)
            throw std::runtime_error("report: unknown schema on line " + std::to_string(lineno));
        std::string kind = rec.value("kind", "");
        if (kind == "header") {
            if (open) throw std::runtime_error("report: header before previous summary");
            current = VerificationReport{};
            current.suite = rec.value("suite", "");
            current.seed = rec.value("seed", std::uint64_t{0});
            if (rec.contains("params")) current.params = rec["params"];
            open = true;
        } else if (kind == "case") {
            if (!open) throw std::runtime_error("report: case outside a report");
            CaseOutcome c;
            c.id = rec.value("id", "");
            c.pass = rec.value("pass", false);
            if (rec.contains("values")) c.values = rec["values"];
            c.graph6 = rec.value("graph6", "");
            if (rec.contains("citations"))
                c.citations = rec["citations"].get<std::vector<std::string>>();
            current.cases.push_back(std::move(c));
        } else if (kind == "summary") {
            if (!open) throw std::runtime_error("report: summary outside a report");
            current.total_cases = rec.value("cases", std::uint64_t{0});
            current.failures = rec.value("failures", std::uint64_t{0});
            reports.push_back(std::move(current));
            open = false;
        } else {
            throw std::runtime_error("report: unknown record kind on line " + std::to_string(lineno));
        }
    }
    if (open) throw std::runtime_error("report: missing summary record");
    return reports;
}

}  // namespace ktmax
