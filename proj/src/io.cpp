// Copyright 2026 The cohlib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coh/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coh/errors.hpp"

namespace coh {

namespace {

using nlohmann::json;

std::vector<std::vector<double>> parse_real_part(const json& j,
                                                 const char* key,
                                                 std::size_t dim) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw Error(std::string("matrix JSON: missing or non-array \"") + key +
                "\"");
  }
  const json& rows = j.at(key);
  if (rows.size() != dim) {
    throw Error(std::string("matrix JSON: \"") + key + "\" must have dim rows");
  }
  std::vector<std::vector<double>> out;
  out.reserve(dim);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != dim) {
      throw Error(std::string("matrix JSON: ragged \"") + key + "\" array");
    }
    std::vector<double> values;
    values.reserve(dim);
    for (const json& x : row) {
      if (!x.is_number()) {
        throw Error(std::string("matrix JSON: non-numeric entry in \"") + key +
                    "\"");
      }
      values.push_back(x.get<double>());
    }
    out.push_back(std::move(values));
  }
  return out;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") ||
      !j.at("dim").is_number_unsigned()) {
    throw Error("matrix JSON: expected object with unsigned \"dim\"");
  }
  const std::size_t dim = j.at("dim").get<std::size_t>();
  if (dim == 0) throw Error("matrix JSON: dim must be >= 1");
  const auto re = parse_real_part(j, "re", dim);
  const auto im = parse_real_part(j, "im", dim);
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = Complex(re[i][k], im[i][k]);
  return m;
}

void append_matrix_json(std::string& out, const ComplexMatrix& m) {
  const std::size_t d = m.dim();
  out += "{\"dim\": " + std::to_string(d) + ", \"re\": [";
  for (std::size_t i = 0; i < d; ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < d; ++j) {
      if (j) out += ", ";
      out += format_real(m(i, j).real());
    }
    out += "]";
  }
  out += "], \"im\": [";
  for (std::size_t i = 0; i < d; ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < d; ++j) {
      if (j) out += ", ";
      out += format_real(m(i, j).imag());
    }
    out += "]";
  }
  out += "]}";
}

void append_number_map(std::string& out,
                       const std::map<std::string, double>& values) {
  out += "{";
  bool first = true;
  for (const auto& [key, value] : values) {
    if (!first) out += ", ";
    first = false;
    out += "\"" + key + "\": " + format_real(value);
  }
  out += "}";
}

json parse_json_text(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw Error(std::string("failed to parse ") + what + " JSON");
  }
  return j;
}

}  // namespace

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "1e999" : "-1e999";
  if (std::isnan(value)) return "null";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

ComplexMatrix parse_matrix_json(const std::string& text) {
  return matrix_from_json(parse_json_text(text, "matrix"));
}

std::string matrix_to_json(const ComplexMatrix& matrix) {
  std::string out;
  append_matrix_json(out, matrix);
  return out;
}

std::vector<ComplexMatrix> parse_channel_json(const std::string& text) {
  const json j = parse_json_text(text, "channel");
  if (!j.is_object() || !j.contains("dim") || !j.contains("operators") ||
      !j.at("operators").is_array()) {
    throw Error("channel JSON: expected {\"dim\", \"operators\": [...]}");
  }
  const std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<ComplexMatrix> ops;
  for (const json& jop : j.at("operators")) {
    ComplexMatrix op = matrix_from_json(jop);
    if (op.dim() != dim) {
      throw Error("channel JSON: operator dimension differs from \"dim\"");
    }
    ops.push_back(std::move(op));
  }
  if (ops.empty()) throw Error("channel JSON: empty operator list");
  return ops;
}

std::string channel_to_json(const KrausChannel& channel) {
  std::string out =
      "{\"dim\": " + std::to_string(channel.dim()) + ", \"operators\": [";
  for (std::size_t n = 0; n < channel.operators().size(); ++n) {
    if (n) out += ", ";
    append_matrix_json(out, channel.operators()[n]);
  }
  out += "]}";
  return out;
}

DensityMatrix read_state_file(const std::string& path, double tol) {
  return validate_density(parse_matrix_json(read_file(path)), tol);
}

KrausChannel read_channel_file(const std::string& path, double tol) {
  return validate_channel(parse_channel_json(read_file(path)), tol);
}

std::string report_to_json(const CoherenceReport& report) {
  std::string out = "{\"value\": " + format_real(report.value);
  out += ", \"alpha\": " + format_real(report.alpha);
  out += ", \"method\": \"" + to_string(report.method) + "\"";
  out += ", \"optimizer_weights\": [";
  for (std::size_t i = 0; i < report.optimizer.weights.size(); ++i) {
    if (i) out += ", ";
    out += format_real(report.optimizer.weights[i]);
  }
  out += "], \"diagnostics\": ";
  append_number_map(out, report.diagnostics);
  out += "}";
  return out;
}

std::string verdict_to_json(const ConditionVerdict& verdict) {
  std::string out = "{\"condition\": \"" + to_string(verdict.condition) + "\"";
  out += ", \"lhs\": " + format_real(verdict.lhs);
  out += ", \"rhs\": " + format_real(verdict.rhs);
  out += ", \"margin\": " + format_real(verdict.margin);
  out += std::string(", \"violated\": ") +
         (verdict.violated ? "true" : "false");
  out += ", \"witness\": ";
  append_number_map(out, verdict.witness);
  out += "}";
  return out;
}

std::string verdict_csv_header() {
  return "condition,lhs,rhs,margin,violated";
}

std::string verdict_to_csv_row(const ConditionVerdict& verdict) {
  std::string out = to_string(verdict.condition);
  out += "," + format_real(verdict.lhs);
  out += "," + format_real(verdict.rhs);
  out += "," + format_real(verdict.margin);
  out += verdict.violated ? ",1" : ",0";
  return out;
}

std::string sweep_to_csv(const SweepTable& table) {
  std::string out = "# scenario=" + table.scenario + "\n";
  for (const auto& [key, value] : table.params) {
    out += "# " + key + "=" + format_real(value) + "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ",";
    out += table.columns[c].name;
  }
  out += "\n";
  for (const std::vector<double>& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw Error("sweep table row width does not match columns");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += format_real(row[c]);
    }
    out += "\n";
  }
  return out;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
    if (!stream) {
      throw Error("cannot open " + temp.string() + " for writing");
    }
    stream.write(content.data(),
                 static_cast<std::streamsize>(content.size()));
    if (!stream) {
      std::error_code ec;
      fs::remove(temp, ec);
      throw Error("failed writing " + temp.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw Error("failed to move output into place at " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw Error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

std::vector<double> parse_grid_spec(const std::string& spec) {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  char sep1 = 0;
  char sep2 = 0;
  std::istringstream in(spec);
  if (!(in >> start >> sep1 >> stop >> sep2 >> step) || sep1 != ':' ||
      sep2 != ':' || !(in >> std::ws).eof()) {
    throw Error("grid spec must be start:stop:step, got \"" + spec + "\"");
  }
  if (step <= 0.0 || stop < start) {
    throw Error("grid spec needs step > 0 and stop >= start");
  }
  std::vector<double> grid;
  const double slack = step * 1e-9;
  for (int k = 0;; ++k) {
    const double value = start + step * k;
    if (value > stop + slack) break;
    grid.push_back(value);
  }
  return grid;
}

}  // namespace coh
