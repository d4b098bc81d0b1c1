#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "padic/registry.hpp"

namespace padic {

// JSON shapes follow schema/report.schema.json; CSV column order is fixed:
// theorem,p,params,z,verdict,detail,lhs,rhs,modulus,duration_ms
std::string record_to_json(const ReportRecord& r);
ReportRecord record_from_json(const std::string& json);

std::string report_to_json(const SweepReport& r);
std::string reports_to_json(const std::vector<SweepReport>& rs);

void write_report_text(std::ostream& os, const SweepReport& r);
void write_report_csv_header(std::ostream& os);
void write_report_csv(std::ostream& os, const SweepReport& r);

} // namespace padic
