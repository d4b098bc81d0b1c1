#include "padic/report.hpp"

#include <ostream>

#include <json.hpp>

namespace padic {

namespace {

using nlohmann::json;

json record_json(const ReportRecord& r) {
    json j;
    j["theorem"] = r.theorem;
    j["p"] = r.p;
    j["params"] = r.params;
    if (r.z)
        j["z"] = *r.z;
    else
        j["z"] = nullptr;
    j["verdict"] = r.verdict;
    j["detail"] = r.detail;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["modulus"] = r.modulus;
    j["duration_ms"] = r.duration_ms;
    return j;
}

ReportRecord record_from(const json& j) {
    ReportRecord r;
    r.theorem = j.at("theorem").get<std::string>();
    r.p = j.at("p").get<uint64_t>();
    r.params = j.at("params").get<std::vector<std::string>>();
    if (!j.at("z").is_null()) r.z = j.at("z").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    r.detail = j.at("detail").get<std::string>();
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.modulus = j.at("modulus").get<uint64_t>();
    r.duration_ms = j.at("duration_ms").get<uint64_t>();
    return r;
}

json report_json(const SweepReport& r) {
    json j;
    j["theorem"] = r.theorem;
    j["prime_range"] = {r.prime_lo, r.prime_hi};
    j["pool"] = r.pool_desc;
    j["cases"] = r.cases;
    j["holds"] = r.holds;
    j["condition_not_met"] = r.condition_not_met;
    j["fails"] = json::array();
    for (const auto& f : r.fails) j["fails"].push_back(record_json(f));
    j["errors"] = json::array();
    for (const auto& e : r.errors) j["errors"].push_back(record_json(e));
    j["duration_ms"] = r.duration_ms;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void csv_line(std::ostream& os, const ReportRecord& r) {
    std::string params;
    for (size_t i = 0; i < r.params.size(); ++i) {
        if (i) params += ';';
        params += r.params[i];
    }
    os << r.theorem << ',' << r.p << ',' << csv_escape(params) << ',' << (r.z ? *r.z : "") << ','
       << r.verdict << ',' << csv_escape(r.detail) << ',' << r.lhs << ',' << r.rhs << ','
       << r.modulus << ',' << r.duration_ms << '\n';
}

} // namespace

std::string record_to_json(const ReportRecord& r) { return record_json(r).dump(); }

ReportRecord record_from_json(const std::string& s) { return record_from(json::parse(s)); }

std::string report_to_json(const SweepReport& r) { return report_json(r).dump(2) + "\n"; }

std::string reports_to_json(const std::vector<SweepReport>& rs) {
    json j;
    j["reports"] = json::array();
    uint64_t fails = 0, errors = 0;
    for (const auto& r : rs) {
        j["reports"].push_back(report_json(r));
        fails += r.fails.size();
        errors += r.errors.size();
    }
    j["fails_total"] = fails;
    j["errors_total"] = errors;
    return j.dump(2) + "\n";
}

void write_report_text(std::ostream& os, const SweepReport& r) {
    os << r.theorem << ": primes [" << r.prime_lo << "," << r.prime_hi << "] cases=" << r.cases
       << " holds=" << r.holds << " condition-not-met=" << r.condition_not_met
       << " fails=" << r.fails.size() << " errors=" << r.errors.size();
    if (r.duration_ms) os << " (" << r.duration_ms << " ms)";
    os << '\n';
    for (const auto& f : r.fails) {
        os << "  FAIL p=" << f.p << " params=";
        for (size_t i = 0; i < f.params.size(); ++i) os << (i ? "," : "") << f.params[i];
        if (f.z) os << " z=" << *f.z;
        os << " lhs=" << f.lhs << " rhs=" << f.rhs << " mod " << f.modulus;
        if (!f.detail.empty()) os << " [" << f.detail << "]";
        os << '\n';
    }
    for (const auto& e : r.errors) {
        os << "  ERROR p=" << e.p << " params=";
        for (size_t i = 0; i < e.params.size(); ++i) os << (i ? "," : "") << e.params[i];
        if (e.z) os << " z=" << *e.z;
        os << " " << e.detail << '\n';
    }
}

void write_report_csv_header(std::ostream& os) {
    os << "theorem,p,params,z,verdict,detail,lhs,rhs,modulus,duration_ms\n";
}

void write_report_csv(std::ostream& os, const SweepReport& r) {
    for (const auto& f : r.fails) csv_line(os, f);
    for (const auto& e : r.errors) csv_line(os, e);
    // holds and condition-not-met are aggregated, one summary row
    ReportRecord sum;
    sum.theorem = r.theorem;
    sum.p = 0;
    sum.verdict = "summary";
    sum.detail = "cases=" + std::to_string(r.cases) + " holds=" + std::to_string(r.holds) +
                 " condition_not_met=" + std::to_string(r.condition_not_met);
    sum.modulus = 0;
    sum.duration_ms = r.duration_ms;
    csv_line(os, sum);
}

} // namespace padic
