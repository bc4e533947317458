#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace addcomb {

/// Floats are always rendered at 12 significant digits so that repeated runs
/// of the same seeded experiment are byte-identical.
inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

/// Minimal CSV writer: mandatory header, comma separation, quoting only when
/// a field contains a comma, quote or newline.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    append_row(header);
  }

  void append_row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out_ << ',';
      out_ << escape(fields[i]);
    }
    out_ << '\n';
  }

  std::size_t columns() const { return columns_; }
  std::string str() const { return out_.str(); }

 private:
  static std::string escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  }

  std::size_t columns_;
  std::ostringstream out_;
};

}  // namespace addcomb
