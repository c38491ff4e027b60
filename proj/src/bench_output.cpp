// Copyright 2026 The matchembed Authors
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

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "bench.hpp"
#include "error.hpp"
#include "text_util.hpp"

namespace matchembed {

namespace {

constexpr const char* kTrialColumns[] = {
    "experiment", "generator",  "sweep_variable", "sweep_value",
    "objective",  "algorithm",  "trial",          "seed",
    "status",     "value",      "optimum",        "ratio",
    "difference", "degenerate", "uses_sentinel",  "error"};
constexpr const char* kTimingColumns[] = {
    "experiment", "sweep_value", "algorithm", "trial",
    "embed_ms",   "solve_ms",    "total_ms"};

std::string Field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

template <std::size_t N>
void Header(std::ostream& out, const char* const (&columns)[N]) {
  for (std::size_t i = 0; i < N; ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
}

void Row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out << (i ? "," : "") << Field(fields[i]);
  }
  out << '\n';
}

// RFC 4180 records; quoted fields may hold commas, quotes and newlines.
std::vector<std::vector<std::string>> ParseCsv(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      field.clear();
      row.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  Require(!quoted, "unterminated quoted CSV field", ErrorCode::kParse);
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <std::size_t N>
void CheckHeader(const std::vector<std::vector<std::string>>& rows,
                 const char* const (&columns)[N], const char* what) {
  Require(!rows.empty(), std::string(what) + " is empty", ErrorCode::kParse);
  bool match = rows[0].size() == N;
  for (std::size_t i = 0; match && i < N; ++i) match = rows[0][i] == columns[i];
  Require(match, std::string(what) + " has an unexpected header",
          ErrorCode::kParse);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    Require(rows[r].size() == N,
            std::string(what) + " row " + std::to_string(r) +
                " has the wrong number of fields",
            ErrorCode::kParse);
  }
}

double Number(const std::string& s, const std::string& what) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  return ParseNumber<double>(s, what);
}

bool Flag(const std::string& s) {
  Require(s == "0" || s == "1", "invalid flag '" + s + "'", ErrorCode::kParse);
  return s == "1";
}

std::string XmlEscape(std::string_view s) {
  std::string o;
  for (char c : s) {
    switch (c) {
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '&': o += "&amp;"; break;
      default: o += c;
    }
  }
  return o;
}

// Key joining a trial row with its timing row.
using TimingKey = std::tuple<std::string, std::string, std::string, int>;

}  // namespace

void WriteTrialsCsv(std::ostream& out, const std::vector<TrialRecord>& rs) {
  Header(out, kTrialColumns);
  for (const TrialRecord& r : rs) {
    Row(out, {r.experiment, r.generator, r.sweep_variable,
              FormatDouble(r.sweep_value), std::string(ObjectiveName(r.objective)),
              std::string(AlgorithmName(r.algorithm)), std::to_string(r.trial),
              std::to_string(r.seed), r.ok ? "ok" : "error",
              FormatDouble(r.value), FormatDouble(r.optimum),
              FormatDouble(r.ratio), FormatDouble(r.difference),
              r.degenerate ? "1" : "0", r.uses_sentinel ? "1" : "0", r.error});
  }
}

void WriteTimingsCsv(std::ostream& out, const std::vector<TrialRecord>& rs) {
  Header(out, kTimingColumns);
  for (const TrialRecord& r : rs) {
    Row(out, {r.experiment, FormatDouble(r.sweep_value),
              std::string(AlgorithmName(r.algorithm)), std::to_string(r.trial),
              FormatDouble(r.embed_ms), FormatDouble(r.solve_ms),
              FormatDouble(r.total_ms)});
  }
}

void WriteSummaryCsv(std::ostream& out, const std::vector<CellSummary>& s) {
  out << "experiment,sweep_variable,sweep_value,objective,algorithm,metric,"
         "records,ok,failed,mean,stddev,ci_half_width,ci_low,ci_high\n";
  for (const CellSummary& c : s) {
    Row(out, {c.experiment, c.sweep_variable, FormatDouble(c.sweep_value),
              std::string(ObjectiveName(c.objective)),
              std::string(AlgorithmName(c.algorithm)), c.metric,
              std::to_string(c.records), std::to_string(c.ok),
              c.failed ? "1" : "0", FormatDouble(c.mean), FormatDouble(c.stddev),
              FormatDouble(c.half_width), FormatDouble(c.mean - c.half_width),
              FormatDouble(c.mean + c.half_width)});
  }
}

std::vector<TrialRecord> ReadTrialsCsv(std::istream& trials,
                                       std::istream* timings) {
  const auto rows = ParseCsv(trials);
  CheckHeader(rows, kTrialColumns, "trials CSV");
  std::vector<TrialRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    TrialRecord r;
    r.experiment = f[0];
    r.generator = f[1];
    r.sweep_variable = f[2];
    r.sweep_value = Number(f[3], "sweep_value");
    r.objective = ParseObjective(f[4]);
    r.algorithm = ParseAlgorithm(f[5]);
    r.trial = ParseInt(f[6], "trial");
    r.seed = ParseUint64(f[7], "seed");
    Require(f[8] == "ok" || f[8] == "error", "invalid status '" + f[8] + "'",
            ErrorCode::kParse);
    r.ok = f[8] == "ok";
    r.value = Number(f[9], "value");
    r.optimum = Number(f[10], "optimum");
    r.ratio = Number(f[11], "ratio");
    r.difference = Number(f[12], "difference");
    r.degenerate = Flag(f[13]);
    r.uses_sentinel = Flag(f[14]);
    r.error = f[15];
    out.push_back(std::move(r));
  }
  if (timings != nullptr) {
    const auto trows = ParseCsv(*timings);
    CheckHeader(trows, kTimingColumns, "timings CSV");
    std::map<TimingKey, const std::vector<std::string>*> index;
    for (std::size_t i = 1; i < trows.size(); ++i) {
      const auto& f = trows[i];
      index[{f[0], f[1], f[2], ParseInt(f[3], "trial")}] = &f;
    }
    for (TrialRecord& r : out) {
      const auto it = index.find({r.experiment, FormatDouble(r.sweep_value),
                                  std::string(AlgorithmName(r.algorithm)),
                                  r.trial});
      if (it == index.end()) continue;
      const auto& f = *it->second;
      r.embed_ms = Number(f[4], "embed_ms");
      r.solve_ms = Number(f[5], "solve_ms");
      r.total_ms = Number(f[6], "total_ms");
    }
  }
  return out;
}

void WriteSummarySvg(std::ostream& out, const std::vector<CellSummary>& s) {
  constexpr double kWidth = 720, kHeight = 440;
  constexpr double kLeft = 70, kRight = 160, kTop = 40, kBottom = 50;
  constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#8c564b"};

  std::vector<Algorithm> series;
  double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
  for (const CellSummary& c : s) {
    if (std::find(series.begin(), series.end(), c.algorithm) == series.end()) {
      series.push_back(c.algorithm);
    }
    x_lo = std::min(x_lo, c.sweep_value);
    x_hi = std::max(x_hi, c.sweep_value);
    if (c.failed) continue;
    y_lo = std::min(y_lo, c.mean - c.half_width);
    y_hi = std::max(y_hi, c.mean + c.half_width);
  }
  if (!std::isfinite(x_lo)) x_lo = 0, x_hi = 1;
  if (x_hi == x_lo) x_lo -= 1, x_hi += 1;
  if (!std::isfinite(y_lo)) y_lo = 0, y_hi = 1;
  if (y_hi == y_lo) y_lo -= 0.5, y_hi += 0.5;
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto X = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * pw; };
  auto Y = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * ph; };
  auto num = [](double v) {
    std::ostringstream o;
    o.precision(6);
    o << v;
    return o.str();
  };

  const std::string metric = std::any_of(s.begin(), s.end(), [](auto& c) {
    return c.metric == "difference";
  }) ? "difference to optimum" : "approximation ratio";
  const std::string title =
      s.empty() ? "no data"
                : s[0].experiment + " (" +
                      std::string(ObjectiveName(s[0].objective)) + ")";
  const std::string xlabel = s.empty() ? "" : s[0].sweep_variable;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" "
      << "font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kLeft << "\" y=\"22\" font-size=\"15\">" << XmlEscape(title)
      << "</text>\n"
      << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double yv = y_lo + (y_hi - y_lo) * i / 4.0;
    const double xv = x_lo + (x_hi - x_lo) * i / 4.0;
    out << "<line x1=\"" << kLeft - 4 << "\" y1=\"" << Y(yv) << "\" x2=\""
        << kLeft << "\" y2=\"" << Y(yv) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << Y(yv) + 4
        << "\" text-anchor=\"end\">" << num(yv) << "</text>\n"
        << "<line x1=\"" << X(xv) << "\" y1=\"" << kTop + ph << "\" x2=\""
        << X(xv) << "\" y2=\"" << kTop + ph + 4 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << X(xv) << "\" y=\"" << kTop + ph + 18
        << "\" text-anchor=\"middle\">" << num(xv) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\">" << XmlEscape(xlabel) << "</text>\n"
      << "<text transform=\"translate(16," << kTop + ph / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << metric << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kColors[k % std::size(kColors)];
    std::vector<const CellSummary*> pts;
    for (const CellSummary& c : s) {
      if (c.algorithm == series[k] && !c.failed) pts.push_back(&c);
    }
    std::sort(pts.begin(), pts.end(), [](auto* a, auto* b) {
      return a->sweep_value < b->sweep_value;
    });
    out << "<g stroke=\"" << color << "\" fill=\"" << color << "\">\n";
    if (pts.size() > 1) {
      out << "<polyline fill=\"none\" stroke-width=\"2\" points=\"";
      for (const CellSummary* c : pts) {
        out << X(c->sweep_value) << ',' << Y(c->mean) << ' ';
      }
      out << "\"/>\n";
    }
    for (const CellSummary* c : pts) {
      const double x = X(c->sweep_value);
      const double lo = Y(c->mean - c->half_width);
      const double hi = Y(c->mean + c->half_width);
      out << "<line x1=\"" << x << "\" y1=\"" << lo << "\" x2=\"" << x
          << "\" y2=\"" << hi << "\"/>\n"
          << "<line x1=\"" << x - 4 << "\" y1=\"" << lo << "\" x2=\"" << x + 4
          << "\" y2=\"" << lo << "\"/>\n"
          << "<line x1=\"" << x - 4 << "\" y1=\"" << hi << "\" x2=\"" << x + 4
          << "\" y2=\"" << hi << "\"/>\n"
          << "<circle cx=\"" << x << "\" cy=\"" << Y(c->mean)
          << "\" r=\"3\"/>\n";
    }
    out << "</g>\n";
    const double ly = kTop + 16 + 20 * k;
    out << "<line x1=\"" << kLeft + pw + 16 << "\" y1=\"" << ly << "\" x2=\""
        << kLeft + pw + 40 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kLeft + pw + 46 << "\" y=\"" << ly + 4 << "\">"
        << AlgorithmName(series[k]) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace matchembed
