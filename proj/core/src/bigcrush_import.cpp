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

#include "prngbench/bigcrush_import.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

#include "prngbench/error.hpp"

namespace prngbench {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::string after_colon(std::string_view line) {
  const auto c = line.find(':');
  return c == std::string_view::npos ? std::string() : std::string(trim(line.substr(c + 1)));
}

double parse_plain(std::string_view s) {
  if (s == "eps") return 1e-301;
  if (s == "eps1") return 1e-16;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("bad p-value '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

double parse_bigcrush_p(std::string_view text) {
  std::string_view s = trim(text);
  if (starts_with(s, "1 -") || starts_with(s, "1-")) {
    s = trim(s.substr(s.find('-') + 1));
    if (s == "eps" || s == "eps1") return 1.0 - 1e-16;
    return 1.0 - parse_plain(s);
  }
  return parse_plain(s);
}

std::vector<BigCrushSummary> parse_bigcrush_summaries(std::string_view text) {
  static const std::regex kEntry(
      R"(^\s*(\d+)\s+(.*?)\s+((?:1\s*-\s*)?(?:eps1|eps|[0-9][0-9.eE+-]*))\s*$)");
  std::vector<BigCrushSummary> out;
  BigCrushSummary* cur = nullptr;
  bool in_table = false;
  int dashes = 0;

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const std::string_view line = trim(raw);

    if (const auto k = line.find("Summary results of"); k != std::string_view::npos) {
      out.emplace_back();
      cur = &out.back();
      std::string_view rest = trim(line.substr(k + 18));
      cur->battery = std::string(trim(rest.substr(0, rest.find('='))));
      in_table = false;
      dashes = 0;
      continue;
    }
    if (cur == nullptr) continue;
    if (starts_with(line, "Generator:")) {
      cur->generator = after_colon(line);
    } else if (starts_with(line, "Number of statistics:")) {
      const std::string v = after_colon(line);
      int count = 0;
      const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), count);
      if (ec == std::errc() && ptr == v.data() + v.size()) cur->statistic_count = count;
    } else if (starts_with(line, "The following tests gave p-values outside")) {
      in_table = true;
    } else if (in_table && starts_with(line, "----")) {
      if (++dashes == 2) in_table = false;
    } else if (in_table && dashes == 1 && !line.empty()) {
      std::cmatch m;
      if (!std::regex_match(line.data(), line.data() + line.size(), m, kEntry)) {
        throw FormatError("summary line " + std::to_string(line_no) + ": cannot read '" +
                          std::string(line) + "'");
      }
      BigCrushEntry e;
      e.index = std::stoi(m[1].str());
      e.name = m[2].str();
      e.p_value = parse_bigcrush_p(m[3].str());
      cur->entries.push_back(std::move(e));
    }
    if (eol == text.size()) break;
  }
  return out;
}

std::vector<BigCrushSummary> load_bigcrush_summaries(const std::filesystem::path& path) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  std::vector<BigCrushSummary> out;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    if (!in) throw IoError("cannot open " + f.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    auto part = parse_bigcrush_summaries(ss.str());
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<BatteryReport> bigcrush_reports(std::span<const BigCrushSummary> summaries,
                                            GeneratorKind kind,
                                            const ClassificationPolicy& policy) {
  std::vector<BatteryReport> out;
  out.reserve(summaries.size());
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    BatteryReport r;
    r.index = i;
    r.seed = i;
    r.kind = kind;
    r.fingerprint = std::string(kBigCrushFingerprint);
    for (const auto& e : summaries[i].entries) {
      TestResult t;
      t.id.family = TestFamily::External;
      t.id.variant_index = e.index;
      t.id.statistic = e.name;
      t.id.bigcrush_indices = {e.index};
      t.p_value = PValue(e.p_value);
      t.classification = classify(e.p_value, policy);
      r.results.push_back(std::move(t));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace prngbench
