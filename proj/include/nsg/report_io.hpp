#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/wilf.hpp"

namespace nsg {

/// One serialized semigroup: its gap encoding plus the full report.
struct ReportRecord {
  std::vector<int> gaps;
  WilfReport report;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

enum class ReportFormat { Jsonl, Csv };

ReportFormat report_format_from_name(std::string_view name);

/// One JSON object per line with keys, in order:
/// gaps, m, c, q, rho, g, e, L, PL, Dq, W, W0, Csize, profile, flags.
std::string to_jsonl(const ReportRecord& r);
ReportRecord record_from_jsonl(std::string_view line);

/// CSV uses the same column order; gaps, profile and flags are
/// semicolon-joined inside their cells.
std::string csv_header();
std::string to_csv_row(const ReportRecord& r);
ReportRecord record_from_csv_row(std::string_view line);

void write_reports(std::ostream& out, const std::vector<ReportRecord>& records,
                   ReportFormat format);
std::vector<ReportRecord> read_reports(std::istream& in, ReportFormat format);

ReportRecord make_record(const NumericalSemigroup& s);

}  // namespace nsg
