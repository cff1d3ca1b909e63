#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace ramseq {

/// Rows of labelled numeric cells for CLI output.
class ResultTable {
 public:
  using Cell = std::variant<std::string, double>;

  enum class Format { text, csv };

  explicit ResultTable(std::vector<std::string> headers, std::string title = {});

  ResultTable& add_row(std::vector<Cell> cells);

  const std::vector<std::string>& headers() const { return headers_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  const std::string& title() const { return title_; }

  /// Numbers use 6 significant digits, or 12 with `exact`. Output does not
  /// depend on the global locale.
  void render(std::ostream& out, Format format = Format::text, bool exact = false) const;
  std::string str(Format format = Format::text, bool exact = false) const;

  static std::string format_number(double value, int significant_digits);

 private:
  std::string title_;
  std::vector<std::string> headers_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace ramseq
