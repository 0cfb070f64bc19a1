/*
 * Copyright 2026 The AFE Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef AFE_CORE_REPORT_HPP_
#define AFE_CORE_REPORT_HPP_

#include <string>

#include "afe/core/afe.hpp"

namespace afe::core {

inline constexpr const char* kReportSchemaVersion = "1.0";

// Report document validated by schema/report.schema.json. `generated_at` is
// the only field that varies between identical runs.
std::string ReportJson(const AfeReport& report, const std::string& generated_at);

// {"PCT": {...}, "SHAP": {...}, "GA": {...}, "AFE": {...}}
std::string ImportanceJson(const AfeReport& report);

// "feature,weight" rows in ranking order.
std::string RankingCsv(const AfeReport& report);

// Shortest decimal that reads back to the same double.
std::string FormatDouble(double v);

}  // namespace afe::core

#endif  // AFE_CORE_REPORT_HPP_
