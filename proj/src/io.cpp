// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#include "qevo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qevo/errors.hpp"

namespace qevo {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("complex entry must be a [re, im] number pair");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError("complex entry must be finite");
  }
  return {re, im};
}

int dim_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("expected an object with an integer 'dim' field");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw ParseError("'dim' must be positive");
  return dim;
}

// NaN has no JSON representation; emit null and keep columns aligned.
json finite_or_null(double x) {
  if (std::isnan(x)) return nullptr;
  return x;
}

void append_number(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  out += buf;
}

json cvector_to_json(const CVector& c) { return json::array({c.c1, c.c2, c.c3}); }

}  // namespace

json operator_to_json(const Mat& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

Mat operator_from_json(const json& j) {
  const int dim = dim_from_json(j);
  if (!j.contains("entries") || !j["entries"].is_array() ||
      static_cast<int>(j["entries"].size()) != dim) {
    throw ParseError("'entries' must be an array of " + std::to_string(dim) + " rows");
  }
  Mat m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j["entries"][r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError("row " + std::to_string(r) + " must have " +
                       std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) m(r, c) = complex_from_json(row[c]);
  }
  return m;
}

json state_to_json(const Vec& v) {
  json amplitudes = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) amplitudes.push_back(complex_to_json(v(i)));
  return json{{"dim", v.size()}, {"amplitudes", std::move(amplitudes)}};
}

Vec state_from_json(const json& j) {
  const int dim = dim_from_json(j);
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array() ||
      static_cast<int>(j["amplitudes"].size()) != dim) {
    throw ParseError("'amplitudes' must be an array of " + std::to_string(dim) +
                     " entries");
  }
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = complex_from_json(j["amplitudes"][i]);
  return v;
}

json geometry_to_json(const GeometryReport& report) {
  return json{
      {"delta_E", report.delta_e},
      {"s0", report.s0},
      {"s", report.s},
      {"travel_time", report.travel_time},
      {"eta_GE", report.eta_ge},
      {"eta_SE", report.eta_se},
      {"kappa_sq", report.kappa_sq},
      {"speed", report.speed},
      {"avg_entanglement_speed", report.avg_entanglement_speed},
  };
}

json propagator_analysis_to_json(const PropagatorAnalysis& analysis) {
  json j{
      {"yukalov", nullptr},
      {"zanardi", analysis.zanardi},
      {"c_vector", nullptr},
      {"c_vector_raw", nullptr},
      {"operator_schmidt_number", analysis.operator_schmidt_number},
      {"monte_carlo", nullptr},
  };
  if (analysis.yukalov) j["yukalov"] = *analysis.yukalov;
  if (analysis.c_vector) j["c_vector"] = cvector_to_json(*analysis.c_vector);
  if (analysis.c_vector_raw) j["c_vector_raw"] = cvector_to_json(*analysis.c_vector_raw);
  if (analysis.monte_carlo) {
    j["monte_carlo"] = json{
        {"estimate", analysis.monte_carlo->estimate},
        {"std_error", analysis.monte_carlo->std_error},
        {"n_samples", analysis.monte_carlo->n_samples},
        {"seed", analysis.monte_carlo->seed},
    };
  }
  return j;
}

json time_series_to_json(const TimeSeries& series) {
  json yukalov = json::array();
  for (double x : series.yukalov) yukalov.push_back(finite_or_null(x));
  json j{
      {"times", series.times},
      {"concurrence", series.concurrence},
      {"yukalov", std::move(yukalov)},
      {"zanardi", nullptr},
  };
  if (series.zanardi) j["zanardi"] = *series.zanardi;
  return j;
}

json scenario_report_to_json(const ScenarioReport& report) {
  json j{
      {"scenario", to_string(report.id)},
      {"geometry", geometry_to_json(report.geometry)},
      {"avg_concurrence", report.avg_concurrence},
      {"series", time_series_to_json(report.series)},
      {"propagator", propagator_analysis_to_json(report.propagator)},
      {"c_series", nullptr},
  };
  if (report.c_series) {
    j["c_series"] = json{{"c1", report.c_series->c1},
                         {"c2", report.c_series->c2},
                         {"c3", report.c_series->c3}};
  }
  return j;
}

std::string time_series_to_csv(const TimeSeries& series) {
  std::string out = series.zanardi ? "t,concurrence,yukalov,zanardi\n"
                                   : "t,concurrence,yukalov\n";
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    append_number(out, series.times[i]);
    out += ',';
    append_number(out, series.concurrence[i]);
    out += ',';
    append_number(out, series.yukalov[i]);
    if (series.zanardi) {
      out += ',';
      append_number(out, (*series.zanardi)[i]);
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

namespace {

nlohmann::json parse_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in '" + path + "'");
  return j;
}

}  // namespace

Mat load_operator(const std::string& path) {
  return operator_from_json(parse_json_file(path));
}

Vec load_state(const std::string& path) {
  return state_from_json(parse_json_file(path));
}

}  // namespace qevo
