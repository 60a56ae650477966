#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace aq::cli {

enum class Format { csv, json };

/// "%.15g", with non-finite values spelled "inf", "-inf" or "nan".
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v + 0.0);  // no "-0"
  return buf;
}

/**
 * Streams rows of named numeric columns as CSV (header row first) or as a
 * JSON array of objects with the same keys. Non-finite values become the
 * quoted strings "inf"/"nan" in JSON.
 */
class TableWriter {
 public:
  TableWriter(std::ostream& out, Format format, std::vector<std::string> columns)
      : out_(out), format_(format), columns_(std::move(columns)) {
    if (format_ == Format::csv) {
      for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
      out_ << '\n';
    } else {
      out_ << '[';
    }
  }

  TableWriter(const TableWriter&) = delete;
  TableWriter& operator=(const TableWriter&) = delete;

  ~TableWriter() { finish(); }

  void row(const std::vector<double>& values) {
    if (format_ == Format::csv) {
      for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_number(values[i]);
      out_ << '\n';
    } else {
      out_ << (rows_ ? ",\n " : "\n ") << '{';
      for (std::size_t i = 0; i < values.size(); ++i) {
        const std::string text = format_number(values[i]);
        const bool quoted = !std::isfinite(values[i]);
        out_ << (i ? ", " : "") << '"' << columns_[i] << "\": " << (quoted ? "\"" + text + "\"" : text);
      }
      out_ << '}';
    }
    ++rows_;
  }

  void finish() {
    if (finished_) return;
    finished_ = true;
    if (format_ == Format::json) out_ << (rows_ ? "\n]\n" : "]\n");
    out_.flush();
  }

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
  std::size_t rows_ = 0;
  bool finished_ = false;
};

}  // namespace aq::cli
