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

#pragma once

#include <string>
#include <vector>

#include "coh/audit.hpp"
#include "coh/channels.hpp"
#include "coh/complex_matrix.hpp"
#include "coh/density_matrix.hpp"
#include "coh/measures.hpp"
#include "coh/scenarios.hpp"

namespace coh {

/// 17-significant-digit decimal form; round-trips the double bit-for-bit.
std::string format_real(double value);

/// Matrix JSON: {"dim": d, "re": [[...]], "im": [[...]]}. Both parts are
/// required d x d arrays; ragged input is rejected.
ComplexMatrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const ComplexMatrix& matrix);

/// Channel JSON: {"dim": d, "operators": [matrix-JSON, ...]}.
std::vector<ComplexMatrix> parse_channel_json(const std::string& text);
std::string channel_to_json(const KrausChannel& channel);

DensityMatrix read_state_file(const std::string& path,
                              double tol = kDefaultValidationTol);
KrausChannel read_channel_file(const std::string& path,
                               double tol = kDefaultChannelTol);

std::string report_to_json(const CoherenceReport& report);
std::string verdict_to_json(const ConditionVerdict& verdict);
std::string verdict_to_csv_row(const ConditionVerdict& verdict);
/// Header matching verdict_to_csv_row (witness parameters are elided in
/// the CSV form).
std::string verdict_csv_header();

/// CSV with "# key=value" metadata lines, a header row of column names,
/// 17 significant digits, LF line endings.
std::string sweep_to_csv(const SweepTable& table);

/// Writes via a temporary file and renames, so failed runs leave no
/// partial output behind.
void atomic_write_file(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// "start:stop:step" -> inclusive grid.
std::vector<double> parse_grid_spec(const std::string& spec);

}  // namespace coh
