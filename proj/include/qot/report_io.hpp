#ifndef QOT_REPORT_IO_HPP
#define QOT_REPORT_IO_HPP

// CSV emission and ingestion for link reports, plus the comparison metrics
// between two reports. The GSNR schema is normative and byte-stable:
//   span,channel,freq_thz,signal_dbm,ase_dbm,nli_dbm,gsnr_db
// with %.6g formatting, rows span-major, spans numbered from 1 and channels
// from 0, frequencies absolute THz. Comparison files use
//   span,channel,freq_thz,gsnr_a_db,gsnr_b_db,abs_err_db
// with the same conventions.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qot/channel.hpp"
#include "qot/errors.hpp"
#include "qot/link_engine.hpp"
#include "qot/units.hpp"

namespace qot {

inline const char* kGsnrCsvHeader = "span,channel,freq_thz,signal_dbm,ase_dbm,nli_dbm,gsnr_db";
inline const char* kComparisonCsvHeader =
    "span,channel,freq_thz,gsnr_a_db,gsnr_b_db,abs_err_db";

// GSNR surface of one report: freq_thz per channel, gsnr_db[span][channel].
// Span numbering in files is 1-based; indices into gsnr_db are 0-based.
struct GsnrTable {
  std::vector<double> freq_thz;
  std::vector<std::vector<double>> gsnr_db;
};

struct ComparisonMetrics {
  double mae_db = 0.0;
  double max_ae_db = 0.0;
  std::vector<double> per_channel_abs_err;  // mean over spans, per channel
  std::size_t worst_channel_index = 0;      // 0-based, matching the CSV column
  std::size_t worst_span_index = 0;         // 1-based, matching the CSV column

  void validate() const {
    if (!(max_ae_db >= mae_db) || !(mae_db >= 0.0)) {
      throw DomainError("ComparisonMetrics: requires max_ae_db >= mae_db >= 0");
    }
  }
};

namespace detail {

inline std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

inline double csv_double(const std::string& s, int line_no) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("gsnr csv line " + std::to_string(line_no) + ": '" + s +
                      "' is not a number");
  }
  return v;
}

inline long csv_long(const std::string& s, int line_no) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("gsnr csv line " + std::to_string(line_no) + ": '" + s +
                      "' is not an integer");
  }
  return v;
}

}  // namespace detail

inline GsnrTable table_from_report(const ChannelPlan& plan, const LinkReport& report) {
  GsnrTable t;
  t.freq_thz.reserve(plan.size());
  for (std::size_t i = 0; i < plan.size(); ++i) {
    t.freq_thz.push_back((plan.absolute_ref_freq() + plan.at(i).center_freq) / 1e12);
  }
  t.gsnr_db.reserve(report.span_states.size());
  for (const auto& span : report.span_states) {
    if (span.size() != plan.size()) {
      throw DomainError("table_from_report: report does not match the plan");
    }
    std::vector<double> row;
    row.reserve(span.size());
    for (const ChannelState& s : span) row.push_back(gsnr_db(s));
    t.gsnr_db.push_back(std::move(row));
  }
  return t;
}

inline std::string render_gsnr_csv(const ChannelPlan& plan, const LinkReport& report) {
  std::string out = kGsnrCsvHeader;
  out += "\n";
  for (std::size_t s = 0; s < report.span_states.size(); ++s) {
    const auto& span = report.span_states[s];
    if (span.size() != plan.size()) {
      throw DomainError("render_gsnr_csv: report does not match the plan");
    }
    for (std::size_t i = 0; i < plan.size(); ++i) {
      const ChannelState& st = span[i];
      out += std::to_string(s + 1);
      out += ",";
      out += std::to_string(i);
      out += ",";
      out += detail::fmt6((plan.absolute_ref_freq() + plan.at(i).center_freq) / 1e12);
      out += ",";
      out += detail::fmt6(watt_to_dbm(st.signal_w));
      out += ",";
      out += detail::fmt6(watt_to_dbm(st.ase_w));
      out += ",";
      out += detail::fmt6(watt_to_dbm(st.nli_w));
      out += ",";
      out += detail::fmt6(gsnr_db(st));
      out += "\n";
    }
  }
  return out;
}

// Reads back a GSNR CSV, validating the header, the span-major row order,
// and the rectangular shape. Only the columns the comparison needs (span,
// channel, freq_thz, gsnr_db) are parsed numerically.
inline GsnrTable parse_gsnr_csv(const std::string& text) {
  GsnrTable t;
  std::size_t pos = 0;
  int line_no = 0;
  std::size_t n_channels = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = eol == std::string::npos ? text.size() : eol + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;
    if (line_no == 1) {
      if (line != kGsnrCsvHeader) {
        throw ConfigError("gsnr csv: unexpected header '" + line + "'");
      }
      continue;
    }
    if (line.empty()) continue;

    auto fields = detail::split_csv_row(line);
    if (fields.size() != 7) {
      throw ConfigError("gsnr csv line " + std::to_string(line_no) + ": expected 7 fields");
    }
    long span_no = detail::csv_long(fields[0], line_no);
    long ch_no = detail::csv_long(fields[1], line_no);
    double freq = detail::csv_double(fields[2], line_no);
    double gsnr = detail::csv_double(fields[6], line_no);

    if (span_no == static_cast<long>(t.gsnr_db.size()) + 1 && ch_no == 0) {
      t.gsnr_db.emplace_back();  // first row of the next span
    }
    if (t.gsnr_db.empty() || span_no != static_cast<long>(t.gsnr_db.size()) ||
        ch_no != static_cast<long>(t.gsnr_db.back().size())) {
      throw ConfigError("gsnr csv line " + std::to_string(line_no) +
                        ": rows must be span-major and contiguous");
    }
    t.gsnr_db.back().push_back(gsnr);
    if (t.gsnr_db.size() == 1) {
      t.freq_thz.push_back(freq);
      n_channels = t.freq_thz.size();
    } else {
      std::size_t i = t.gsnr_db.back().size() - 1;
      if (i >= n_channels || std::fabs(freq - t.freq_thz[i]) > 1e-9 * std::fabs(t.freq_thz[i])) {
        throw ConfigError("gsnr csv line " + std::to_string(line_no) +
                          ": channel frequency differs between spans");
      }
    }
  }
  if (t.gsnr_db.empty()) throw ConfigError("gsnr csv: no data rows");
  for (const auto& row : t.gsnr_db) {
    if (row.size() != n_channels) {
      throw ConfigError("gsnr csv: spans disagree on the channel count");
    }
  }
  return t;
}

inline ComparisonMetrics compare_tables(const GsnrTable& a, const GsnrTable& b) {
  if (a.gsnr_db.size() != b.gsnr_db.size() || a.freq_thz.size() != b.freq_thz.size()) {
    throw ConfigError("compare: reports have different shapes");
  }
  std::size_t n_spans = a.gsnr_db.size();
  std::size_t n_channels = a.freq_thz.size();
  if (n_spans == 0 || n_channels == 0) throw ConfigError("compare: empty reports");
  for (std::size_t i = 0; i < n_channels; ++i) {
    if (std::fabs(a.freq_thz[i] - b.freq_thz[i]) > 1e-9 * std::fabs(a.freq_thz[i])) {
      throw ConfigError("compare: channel frequencies differ between reports");
    }
  }

  ComparisonMetrics m;
  m.per_channel_abs_err.assign(n_channels, 0.0);
  double total = 0.0;
  for (std::size_t s = 0; s < n_spans; ++s) {
    if (a.gsnr_db[s].size() != n_channels || b.gsnr_db[s].size() != n_channels) {
      throw ConfigError("compare: reports have different shapes");
    }
    for (std::size_t i = 0; i < n_channels; ++i) {
      double err = std::fabs(a.gsnr_db[s][i] - b.gsnr_db[s][i]);
      total += err;
      m.per_channel_abs_err[i] += err;
      if (err > m.max_ae_db) {
        m.max_ae_db = err;
        m.worst_span_index = s + 1;
        m.worst_channel_index = i;
      }
    }
  }
  m.mae_db = total / static_cast<double>(n_spans * n_channels);
  for (double& e : m.per_channel_abs_err) e /= static_cast<double>(n_spans);
  return m;
}

inline std::string render_comparison_csv(const GsnrTable& a, const GsnrTable& b) {
  compare_tables(a, b);  // reuse the shape/frequency validation
  std::string out = kComparisonCsvHeader;
  out += "\n";
  for (std::size_t s = 0; s < a.gsnr_db.size(); ++s) {
    for (std::size_t i = 0; i < a.freq_thz.size(); ++i) {
      out += std::to_string(s + 1);
      out += ",";
      out += std::to_string(i);
      out += ",";
      out += detail::fmt6(a.freq_thz[i]);
      out += ",";
      out += detail::fmt6(a.gsnr_db[s][i]);
      out += ",";
      out += detail::fmt6(b.gsnr_db[s][i]);
      out += ",";
      out += detail::fmt6(std::fabs(a.gsnr_db[s][i] - b.gsnr_db[s][i]));
      out += "\n";
    }
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace qot

#endif  // QOT_REPORT_IO_HPP
