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

#include "prngbench/report_io.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "prngbench/error.hpp"

namespace prngbench {
namespace {

using Json = nlohmann::ordered_json;

Json result_to_json(const TestResult& r) {
  Json j;
  j["family"] = std::string(to_string(r.id.family));
  j["variant"] = r.id.variant_index;
  j["statistic_name"] = r.id.statistic;
  j["bigcrush"] = r.id.bigcrush_indices;
  j["statistic"] = r.statistic;
  j["statistic_bits"] = double_to_bits_hex(r.statistic);
  j["p_value"] = r.p_value.value();
  j["p_value_bits"] = double_to_bits_hex(r.p_value.value());
  j["classification"] = std::string(to_string(r.classification));
  j["samples"] = r.samples_consumed;
  return j;
}

Json policy_to_json(const ClassificationPolicy& p) {
  return Json{{"suspicious_low", p.suspicious_low},
              {"suspicious_low_bits", double_to_bits_hex(p.suspicious_low)},
              {"suspicious_high", p.suspicious_high},
              {"suspicious_high_bits", double_to_bits_hex(p.suspicious_high)},
              {"extreme_eps", p.extreme_eps},
              {"extreme_eps_bits", double_to_bits_hex(p.extreme_eps)}};
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

double bits_field(const Json& j, const char* key) {
  return double_from_bits_hex(field(j, key).get<std::string>());
}

TestResult result_from_json(const Json& j) {
  TestResult r;
  r.id.family = parse_test_family(field(j, "family").get<std::string>());
  r.id.variant_index = field(j, "variant").get<int>();
  r.id.statistic = field(j, "statistic_name").get<std::string>();
  r.id.bigcrush_indices = field(j, "bigcrush").get<std::vector<int>>();
  r.statistic = bits_field(j, "statistic_bits");
  r.p_value = PValue(bits_field(j, "p_value_bits"));
  r.classification = parse_classification(field(j, "classification").get<std::string>());
  r.samples_consumed = field(j, "samples").get<std::uint64_t>();
  return r;
}

ClassificationPolicy policy_from_json(const Json& j) {
  ClassificationPolicy p;
  p.suspicious_low = bits_field(j, "suspicious_low_bits");
  p.suspicious_high = bits_field(j, "suspicious_high_bits");
  p.extreme_eps = bits_field(j, "extreme_eps_bits");
  return p;
}

}  // namespace

std::string double_to_bits_hex(double v) {
  static constexpr char kHex[] = "0123456789abcdef";
  const auto bits = std::bit_cast<std::uint64_t>(v);
  std::string s(16, '0');
  for (int i = 0; i < 16; ++i) s[15 - i] = kHex[(bits >> (4 * i)) & 15U];
  return s;
}

double double_from_bits_hex(std::string_view hex) {
  std::uint64_t bits = 0;
  const auto* end = hex.data() + hex.size();
  const auto [ptr, ec] = std::from_chars(hex.data(), end, bits, 16);
  if (hex.size() != 16 || ec != std::errc() || ptr != end) {
    throw FormatError("bad bit pattern '" + std::string(hex) + "'");
  }
  return std::bit_cast<double>(bits);
}

ReportFile make_report_file(const HarnessConfig& config, const CampaignOutcome& outcome) {
  ReportFile f;
  f.header.battery_name = config.battery.name;
  f.header.fingerprint = fingerprint(config.battery);
  f.header.kind = config.kind;
  f.header.master_seed = config.master_seed;
  f.header.stream_count = config.stream_count;
  f.header.policy = config.battery.policy;
  f.reports = outcome.reports;
  f.failures = outcome.failures;
  f.complete = outcome.complete;
  return f;
}

std::string serialize_report_file(const ReportFile& file) {
  std::string out;
  Json h;
  h["record"] = "header";
  h["schema"] = kReportSchemaVersion;
  h["battery"] = file.header.battery_name;
  h["fingerprint"] = file.header.fingerprint;
  if (file.header.kind) h["generator"] = std::string(to_string(*file.header.kind));
  if (file.header.master_seed) h["master_seed"] = *file.header.master_seed;
  if (file.header.stream_count) h["streams"] = *file.header.stream_count;
  h["policy"] = policy_to_json(file.header.policy);
  out += h.dump() + '\n';

  for (const auto& r : file.reports) {
    Json s;
    s["record"] = "stream";
    s["index"] = r.index;
    s["generator"] = std::string(to_string(r.kind));
    s["seed"] = r.seed;
    s["fingerprint"] = r.fingerprint;
    if (r.wall_seconds) s["wall_seconds"] = *r.wall_seconds;
    Json results = Json::array();
    for (const auto& t : r.results) results.push_back(result_to_json(t));
    s["results"] = std::move(results);
    out += s.dump() + '\n';
  }
  for (const auto& f : file.failures) {
    Json e{{"record", "failure"}, {"index", f.index}, {"seed", f.seed}, {"message", f.message}};
    out += e.dump() + '\n';
  }
  Json footer{{"record", "footer"},
              {"complete", file.complete},
              {"streams_written", file.reports.size()},
              {"failures", file.failures.size()}};
  out += footer.dump() + '\n';
  return out;
}

ReportFile parse_report_file(std::string_view text) {
  ReportFile file;
  file.complete = false;
  bool have_header = false;
  bool have_footer = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      const Json j = Json::parse(line);
      const auto record = field(j, "record").get<std::string>();
      if (!have_header) {
        if (record != "header") throw FormatError("first record must be the header");
        const int schema = field(j, "schema").get<int>();
        if (schema > kReportSchemaVersion) {
          throw SchemaVersionError("report schema " + std::to_string(schema) +
                                   " is newer than supported schema " +
                                   std::to_string(kReportSchemaVersion));
        }
        if (schema < 1) throw FormatError("bad report schema " + std::to_string(schema));
        file.header.battery_name = field(j, "battery").get<std::string>();
        file.header.fingerprint = field(j, "fingerprint").get<std::string>();
        if (j.contains("generator")) {
          file.header.kind = parse_generator_kind(j["generator"].get<std::string>());
        }
        if (j.contains("master_seed")) file.header.master_seed = j["master_seed"].get<std::uint64_t>();
        if (j.contains("streams")) file.header.stream_count = j["streams"].get<std::uint64_t>();
        file.header.policy = policy_from_json(field(j, "policy"));
        have_header = true;
      } else if (have_footer) {
        throw FormatError("record after footer");
      } else if (record == "stream") {
        BatteryReport r;
        r.index = field(j, "index").get<std::uint64_t>();
        r.kind = parse_generator_kind(field(j, "generator").get<std::string>());
        r.seed = field(j, "seed").get<std::uint64_t>();
        r.fingerprint = field(j, "fingerprint").get<std::string>();
        if (j.contains("wall_seconds")) r.wall_seconds = j["wall_seconds"].get<double>();
        for (const auto& t : field(j, "results")) r.results.push_back(result_from_json(t));
        file.reports.push_back(std::move(r));
      } else if (record == "failure") {
        file.failures.push_back({field(j, "index").get<std::uint64_t>(),
                                 field(j, "seed").get<std::uint64_t>(),
                                 field(j, "message").get<std::string>()});
      } else if (record == "footer") {
        file.complete = field(j, "complete").get<bool>();
        have_footer = true;
      } else {
        throw FormatError("unknown record type '" + record + "'");
      }
    } catch (const SchemaVersionError&) {
      throw;
    } catch (const Error& e) {
      throw FormatError("report line " + std::to_string(line_no) + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
      throw FormatError("report line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw FormatError("report file has no header record");
  return file;
}

void save_report_file(const ReportFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << serialize_report_file(file);
  if (!out) throw IoError("write failed for " + path.string());
}

ReportFile load_report_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_report_file(ss.str());
}

void save_reports(const std::vector<BatteryReport>& reports, const std::filesystem::path& path) {
  ReportFile f;
  f.reports = reports;
  if (!reports.empty()) {
    f.header.kind = reports.front().kind;
    f.header.fingerprint = reports.front().fingerprint;
  }
  save_report_file(f, path);
}

std::vector<BatteryReport> load_reports(const std::filesystem::path& path) {
  return load_report_file(path).reports;
}

}  // namespace prngbench
