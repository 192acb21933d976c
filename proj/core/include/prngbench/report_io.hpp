// Copyright 2026 The prngbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRNGBENCH_REPORT_IO_HPP_
#define PRNGBENCH_REPORT_IO_HPP_

// Campaign report files: JSON lines, schema 1.
//
//   {"record":"header","schema":1,...}         campaign metadata
//   {"record":"stream","index":0,...}          one per finished stream
//   {"record":"failure","index":3,...}         one per stream that threw
//   {"record":"footer","complete":true,...}    absent if the file is truncated
//
// Doubles are written as decimals and again as 16 hex digits of their bit
// pattern ("p_value_bits"); readers take the bits. Nothing host- or
// time-dependent is written unless timing was recorded.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prngbench/classification.hpp"
#include "prngbench/harness.hpp"

namespace prngbench {

inline constexpr int kReportSchemaVersion = 1;

struct ReportHeader {
  std::string battery_name;
  std::string fingerprint;
  std::optional<GeneratorKind> kind;
  std::optional<std::uint64_t> master_seed;
  std::optional<std::uint64_t> stream_count;
  ClassificationPolicy policy;

  friend bool operator==(const ReportHeader&, const ReportHeader&) = default;
};

struct ReportFile {
  ReportHeader header;
  std::vector<BatteryReport> reports;
  std::vector<StreamFailure> failures;
  bool complete = true;
};

ReportFile make_report_file(const HarnessConfig& config, const CampaignOutcome& outcome);

std::string serialize_report_file(const ReportFile& file);

// Throws SchemaVersionError for a newer schema, FormatError otherwise.
ReportFile parse_report_file(std::string_view text);

void save_report_file(const ReportFile& file, const std::filesystem::path& path);
ReportFile load_report_file(const std::filesystem::path& path);

// Convenience wrappers for plain report lists.
void save_reports(const std::vector<BatteryReport>& reports, const std::filesystem::path& path);
std::vector<BatteryReport> load_reports(const std::filesystem::path& path);

// 16 lower-case hex digits of the IEEE-754 bit pattern, and back.
std::string double_to_bits_hex(double v);
double double_from_bits_hex(std::string_view hex);

}  // namespace prngbench

#endif  // PRNGBENCH_REPORT_IO_HPP_
