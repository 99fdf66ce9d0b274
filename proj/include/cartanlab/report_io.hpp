#pragma once

#include <string>

#include "cartanlab/properness.hpp"

namespace cartanlab {

/// RFC-4180 field quoting: wraps when the value contains comma, quote, CR or
/// LF; embedded quotes are doubled.
std::string csv_quote(const std::string& field);

/// CSV of report rows: word,length,mu,norm,margin,label.
std::string margin_report_csv(const MarginReport& rep);

/// JSON summary: census, thresholds table, verdict, witnesses, notes.
std::string margin_report_summary_json(const MarginReport& rep);

/// Scatter of mu-images.  Rank-one pair scenarios plot (left scalar, right
/// scalar) with the diagonal drawn; the SL_3 scenario projects V+ to the
/// plane with its three walls drawn.  Axis annotation records the x1 - x2
/// scalar convention.
std::string margin_report_svg(const MarginReport& rep);

std::string graph_check_csv(const GraphCheckResult& res);
std::string graph_check_summary_json(const GraphCheckResult& res, const SingleComponentResult* t12);

std::string torsion_demo_summary_json(const TorsionDemoResult& demo);

/// Ball export: word,length,mu,norm,margin,label (same row schema).
std::string ball_csv(const std::vector<ReportRow>& rows);

void write_file(const std::string& path, const std::string& content);

} // namespace cartanlab
