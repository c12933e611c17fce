// Copyright 2026 The qdist Authors
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

#include "qdist/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "qdist/errors.hpp"

namespace qdist {

namespace {

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

template <typename T>
T parse_uint(const std::string& s, std::string_view column, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw CsvError("bad " + std::string(column) + " value \"" + s + "\"", line);
  }
  return value;
}

double parse_real(const std::string& s, std::string_view column, std::size_t line) {
  // from_chars for double is missing from older libstdc++; strtod is exact.
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(value)) {
    throw CsvError("bad " + std::string(column) + " value \"" + s + "\"", line);
  }
  return value;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<MetricsRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    if (r.circuit_id.find_first_of(",\n\r") != std::string::npos) {
      throw QdistError("circuit id \"" + r.circuit_id + "\" cannot be written to CSV");
    }
    out << r.circuit_id << ',' << r.width << ',' << strategy_name(r.strategy) << ','
        << r.k << ',' << r.n1q << ',' << r.n2q << ',' << r.n3q << ',' << r.depth_max
        << ',' << format_real(r.depth_mean) << ',' << r.n_nonlocal << ','
        << r.conn_minus_1 << ',' << format_real(r.compile_time_s) << '\n';
  }
}

void write_csv_file(const std::filesystem::path& path,
                    const std::vector<MetricsRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw QdistError("cannot open " + path.string() + " for writing");
  write_csv(out, records);
  if (!out) throw QdistError("failed writing " + path.string());
}

std::vector<MetricsRecord> read_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw CsvError("missing header", 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw CsvError("unexpected header \"" + line + "\"", 1);

  std::vector<MetricsRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 12) {
      throw CsvError("expected 12 fields, found " + std::to_string(f.size()), line_no);
    }
    MetricsRecord r;
    r.circuit_id = f[0];
    if (r.circuit_id.empty()) throw CsvError("empty circuit_id", line_no);
    r.width = parse_uint<std::size_t>(f[1], "width", line_no);
    const auto s = strategy_from_name(f[2]);
    if (!s) throw CsvError("unknown strategy \"" + f[2] + "\"", line_no);
    r.strategy = *s;
    r.k = parse_uint<std::size_t>(f[3], "k", line_no);
    r.n1q = parse_uint<std::size_t>(f[4], "n1q", line_no);
    r.n2q = parse_uint<std::size_t>(f[5], "n2q", line_no);
    r.n3q = parse_uint<std::size_t>(f[6], "n3q", line_no);
    r.depth_max = parse_uint<std::size_t>(f[7], "depth_max", line_no);
    r.depth_mean = parse_real(f[8], "depth_mean", line_no);
    r.n_nonlocal = parse_uint<std::size_t>(f[9], "n_nonlocal", line_no);
    r.conn_minus_1 = parse_uint<std::uint64_t>(f[10], "conn_minus_1", line_no);
    r.compile_time_s = parse_real(f[11], "compile_time_s", line_no);
    if (r.compile_time_s <= 0.0) throw CsvError("compile_time_s must be > 0", line_no);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<MetricsRecord> read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw QdistError("cannot open " + path.string());
  return read_csv(in);
}

std::size_t width_bin(std::size_t width) {
  if (width <= 1) return 1;
  return std::size_t{1} << static_cast<unsigned>(std::lround(std::log2(static_cast<double>(width))));
}

Statistics describe(std::vector<double> values) {
  Statistics st;
  st.count = values.size();
  if (values.empty()) return st;
  double sum = 0.0;
  for (double v : values) sum += v;
  st.mean = sum / static_cast<double>(values.size());
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  st.median = n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
  if (n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - st.mean) * (v - st.mean);
    st.stddev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return st;
}

Summary summarize(const std::vector<MetricsRecord>& records) {
  // Completeness: each circuit must cover strategies x its k values.
  std::set<EncodingStrategy> strategies;
  std::map<std::string, std::set<std::size_t>> ks;
  std::map<std::string, std::set<std::pair<EncodingStrategy, std::size_t>>> seen;
  for (const auto& r : records) {
    strategies.insert(r.strategy);
    ks[r.circuit_id].insert(r.k);
    seen[r.circuit_id].insert({r.strategy, r.k});
  }
  Summary summary;
  std::set<std::string> used;
  for (const auto& [id, kset] : ks) {
    if (seen[id].size() == strategies.size() * kset.size()) {
      used.insert(id);
      summary.circuits_used.push_back(id);
    } else {
      summary.circuits_dropped.push_back(id);
    }
  }

  std::map<EncodingStrategy, std::vector<double>> times;
  using Key = std::pair<EncodingStrategy, std::size_t>;
  std::map<Key, std::vector<const MetricsRecord*>> bins;
  for (const auto& r : records) {
    if (!used.count(r.circuit_id)) continue;
    ++summary.records_used;
    times[r.strategy].push_back(r.compile_time_s);
    bins[{r.strategy, width_bin(r.width)}].push_back(&r);
  }
  for (const auto& [s, t] : times) summary.compile_time.push_back({s, describe(t)});

  for (const auto& [key, rs] : bins) {
    BinMeans m{};
    m.strategy = key.first;
    m.width_bin = key.second;
    m.records = rs.size();
    bool all_local_depth = true;
    double local_depth = 0.0;
    for (const auto* r : rs) {
      m.n1q += static_cast<double>(r->n1q);
      m.n2q += static_cast<double>(r->n2q);
      m.n3q += static_cast<double>(r->n3q);
      m.depth_max += static_cast<double>(r->depth_max);
      m.depth_mean += r->depth_mean;
      m.n_nonlocal += static_cast<double>(r->n_nonlocal);
      m.conn_minus_1 += static_cast<double>(r->conn_minus_1);
      m.compile_time_s += r->compile_time_s;
      if (r->depth_max_without_markers) {
        local_depth += static_cast<double>(*r->depth_max_without_markers);
      } else {
        all_local_depth = false;
      }
    }
    const double n = static_cast<double>(rs.size());
    for (double* field : {&m.n1q, &m.n2q, &m.n3q, &m.depth_max, &m.depth_mean,
                          &m.n_nonlocal, &m.conn_minus_1, &m.compile_time_s}) {
      *field /= n;
    }
    if (all_local_depth) m.depth_max_without_markers = local_depth / n;
    summary.bins.push_back(m);
  }
  return summary;
}

std::string summary_to_json(const Summary& summary,
                            const std::vector<CircuitFailure>& failures,
                            const std::vector<SkippedConfiguration>& skipped) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["records_used"] = summary.records_used;
  j["circuits_used"] = summary.circuits_used.size();
  j["circuits_dropped"] = summary.circuits_dropped;
  ordered_json times = ordered_json::array();
  for (const auto& t : summary.compile_time) {
    times.push_back({{"strategy", std::string(strategy_name(t.strategy))},
                     {"count", t.compile_time_s.count},
                     {"mean", t.compile_time_s.mean},
                     {"median", t.compile_time_s.median},
                     {"stddev", t.compile_time_s.stddev}});
  }
  j["compile_time_s"] = times;
  ordered_json bins = ordered_json::array();
  for (const auto& b : summary.bins) {
    ordered_json e = {{"strategy", std::string(strategy_name(b.strategy))},
                      {"width_bin", b.width_bin},
                      {"records", b.records},
                      {"n1q", b.n1q},
                      {"n2q", b.n2q},
                      {"n3q", b.n3q},
                      {"depth_max", b.depth_max},
                      {"depth_mean", b.depth_mean},
                      {"n_nonlocal", b.n_nonlocal},
                      {"conn_minus_1", b.conn_minus_1},
                      {"compile_time_s", b.compile_time_s}};
    if (b.depth_max_without_markers) {
      e["depth_max_without_markers"] = *b.depth_max_without_markers;
    }
    bins.push_back(std::move(e));
  }
  j["width_bins"] = bins;
  if (!failures.empty()) {
    ordered_json f = ordered_json::array();
    for (const auto& x : failures) f.push_back({{"circuit_id", x.circuit_id}, {"error", x.message}});
    j["failures"] = f;
  }
  if (!skipped.empty()) {
    ordered_json s = ordered_json::array();
    for (const auto& x : skipped)
      s.push_back({{"circuit_id", x.circuit_id}, {"width", x.width}, {"k", x.k}});
    j["skipped"] = s;
  }
  return j.dump(2) + "\n";
}

}  // namespace qdist
