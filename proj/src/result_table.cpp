#include "ramseq/result_table.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "ramseq/error.hpp"

namespace ramseq {

ResultTable::ResultTable(std::vector<std::string> headers, std::string title)
    : title_(std::move(title)), headers_(std::move(headers)) {}

ResultTable& ResultTable::add_row(std::vector<Cell> cells) {
  if (cells.size() != headers_.size()) throw InputError("table row width does not match headers");
  rows_.push_back(std::move(cells));
  return *this;
}

std::string ResultTable::format_number(double value, int significant_digits) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general,
                                 significant_digits);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void ResultTable::render(std::ostream& out, Format format, bool exact) const {
  const int digits = exact ? 12 : 6;
  std::vector<std::vector<std::string>> text;
  text.reserve(rows_.size());
  for (const auto& row : rows_) {
    auto& line = text.emplace_back();
    for (const auto& cell : row) {
      if (const auto* s = std::get_if<std::string>(&cell)) {
        line.push_back(*s);
      } else {
        line.push_back(format_number(std::get<double>(cell), digits));
      }
    }
  }

  if (format == Format::csv) {
    for (std::size_t c = 0; c < headers_.size(); ++c) {
      out << (c ? "," : "") << csv_escape(headers_[c]);
    }
    out << '\n';
    for (const auto& line : text) {
      for (std::size_t c = 0; c < line.size(); ++c) out << (c ? "," : "") << csv_escape(line[c]);
      out << '\n';
    }
    return;
  }

  std::vector<std::size_t> width(headers_.size());
  for (std::size_t c = 0; c < headers_.size(); ++c) width[c] = headers_[c].size();
  for (const auto& line : text) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << '\n';
  };
  if (!title_.empty()) out << title_ << '\n';
  emit(headers_);
  std::size_t rule = 0;
  for (std::size_t c = 0; c < width.size(); ++c) rule += width[c] + (c + 1 < width.size() ? 2 : 0);
  out << std::string(rule, '-') << '\n';
  for (const auto& line : text) emit(line);
}

std::string ResultTable::str(Format format, bool exact) const {
  std::ostringstream out;
  render(out, format, exact);
  return out.str();
}

}  // namespace ramseq
