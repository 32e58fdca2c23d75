// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "qevo/gate_analysis.hpp"
#include "qevo/geometry.hpp"
#include "qevo/linalg.hpp"
#include "qevo/scenarios.hpp"

namespace qevo {

// Operators are stored as {"dim": n, "entries": [[[re, im], ...], ...]}
// (row major), states as {"dim": n, "amplitudes": [[re, im], ...]}.
// Parsers throw ParseError on malformed structure, shape mismatch, or
// non-finite numbers.
nlohmann::json operator_to_json(const Mat& m);
Mat operator_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const Vec& v);
Vec state_from_json(const nlohmann::json& j);

nlohmann::json geometry_to_json(const GeometryReport& report);
nlohmann::json propagator_analysis_to_json(const PropagatorAnalysis& analysis);
nlohmann::json time_series_to_json(const TimeSeries& series);
nlohmann::json scenario_report_to_json(const ScenarioReport& report);

// Header row plus one line per sample, 12 significant digits; the zanardi
// column appears only when the series carries it.  NaN samples print as
// "nan" (strtod round-trips them).
std::string time_series_to_csv(const TimeSeries& series);

// Throw IoError on any filesystem failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

Mat load_operator(const std::string& path);
Vec load_state(const std::string& path);

}  // namespace qevo
