#pragma once

#include <string>

#include "rainbow.hpp"

namespace rtri {

enum class ReportFormat { text, json };

ReportFormat parse_report_format(const std::string& name); // "text" | "json"

// Flat key=value block / one JSON object per report. Key names are part of
// the format: total_triangles, rainbow_count, mono_pairs, t, k, u, witness.
std::string render_rainbow_report(const RainbowReport& r, ReportFormat fmt);
std::string render_pipeline_report(const PipelineReport& r, ReportFormat fmt);
std::string render_bound_check(const BoundCheckReport& r, ReportFormat fmt);
std::string render_fairify_trace(const FairifyResult& r, ReportFormat fmt);
std::string render_coarsen_trace(const CoarsenTrace& t, ReportFormat fmt);
std::string render_witness(const WitnessTriangle& w); // "v0,v1,v2"
// witness-only report (the size-2 finder has no counts to publish)
std::string render_witness_report(const WitnessTriangle& w, ReportFormat fmt);

} // namespace rtri
