#pragma once

// CSV plumbing: shortest round-trip formatting of doubles (so repeated runs
// are byte-identical), sample-column parsing, and sweep-result serialisation.

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "heo/aser.hpp"
#include "heo/types.hpp"

namespace heo {

/// Shortest decimal string that round-trips the given double. Infinities and
/// NaN serialise as `inf`, `-inf`, `nan`.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw InvalidArgument("not a number: '" + std::string(s) + "'");
  return v;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    std::string field = line.substr(start, comma - start);
    // strip surrounding blanks and a trailing CR
    const auto a = field.find_first_not_of(" \t\r");
    const auto b = field.find_last_not_of(" \t\r");
    fields.push_back(a == std::string::npos ? std::string() : field.substr(a, b - a + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

inline bool is_number(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size() && !s.empty();
}

}  // namespace detail

/// Reads a signal from CSV text: one sample per line, or multi-column rows
/// with a header naming a `sample` column (the format `signal` writes).
/// Throws ParseError with the offending line number on malformed input.
inline Signal read_signal_csv(std::istream& in) {
  Signal samples;
  std::string line;
  std::size_t line_no = 0;
  std::size_t column = 0;
  bool have_column = false;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw ParseError(line_no, "blank line inside input");
    }
    auto fields = detail::split_csv_line(line);
    if (first_content_line) {
      first_content_line = false;
      bool all_numbers = true;
      for (const auto& f : fields) all_numbers = all_numbers && detail::is_number(f);
      if (!all_numbers) {
        // header line: locate the sample column
        if (fields.size() == 1) continue;  // single-column header, data follows
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (fields[i] == "sample") {
            column = i;
            have_column = true;
          }
        }
        if (!have_column)
          throw ParseError(line_no, "multi-column header lacks a 'sample' column");
        continue;
      }
    }
    if (fields.size() > 1 && !have_column)
      throw ParseError(line_no, "expected one value per line");
    const std::size_t idx = have_column ? column : 0;
    if (idx >= fields.size()) throw ParseError(line_no, "missing sample column");
    try {
      samples.push_back(parse_double(fields[idx]));
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (samples.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "input contains no samples");
  return samples;
}

/// `n,value` rows for the valid range of an operator output.
inline void write_output_csv(std::ostream& out, const OperatorOutput& y) {
  out << "n,value\n";
  for (std::size_t n = y.first; n <= y.last; ++n)
    out << n << ',' << format_double(y.samples[n]) << '\n';
}

/// `n,sample,amp_track,freq_track` rows for a generated signal.
inline void write_signal_csv(std::ostream& out, const ModulatedSignal& sig) {
  out << "n,sample,amp_track,freq_track\n";
  for (std::size_t n = 0; n < sig.samples.size(); ++n)
    out << n << ',' << format_double(sig.samples[n]) << ',' << format_double(sig.amp_track[n])
        << ',' << format_double(sig.freq_track[n]) << '\n';
}

/// `kind,k,modulation,beta,aser_db` rows; infinities as the literal inf.
inline void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "kind,k,modulation,beta,aser_db\n";
  for (const SweepRow& row : result.rows)
    out << to_string(row.kind) << ',' << row.k << ',' << to_string(row.modulation) << ','
        << format_double(row.beta) << ',' << format_double(row.aser_db) << '\n';
}

}  // namespace heo
