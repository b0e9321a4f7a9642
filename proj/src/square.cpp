#include "unimagic/square.hpp"

#include <cctype>

namespace unimagic {

Cell::Cell(std::string digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw std::invalid_argument("empty cell");
  for (char ch : digits_) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("cell contains a non-digit: " + digits_);
  }
}

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f'; }

}  // namespace

Square parse_square(std::string_view text) {
  std::vector<std::vector<Token>> rows;
  int line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Token> row;
    auto flush = [&] {
      if (!row.empty()) rows.push_back(std::move(row));
      row.clear();
    };
    std::size_t i = 0;
    while (i < line.size()) {
      const char ch = line[i];
      if (is_space(ch)) {
        ++i;
      } else if (ch == '/') {
        flush();
        ++i;
      } else {
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i]) && line[i] != '/') {
          if (!std::isdigit(static_cast<unsigned char>(line[i]))) {
            throw ParseError(std::string("unexpected character '") + line[i] + "'", line_no,
                             static_cast<int>(i) + 1);
          }
          ++i;
        }
        row.push_back({std::string(line.substr(start, i - start)), line_no, static_cast<int>(start) + 1});
      }
    }
    flush();
    pos = eol + 1;
    ++line_no;
  }

  if (rows.empty()) throw ParseError("no rows", line_no - 1, 1);
  const auto n = rows.size();
  const Token& first = rows.front().front();
  const auto width = first.text.size();
  if (width > static_cast<std::size_t>(kMaxCellWidth)) {
    throw ParseError("cell wider than " + std::to_string(kMaxCellWidth) + " digits", first.line, first.column);
  }

  Square::Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != n) {
      const Token& at = row.size() > n ? row[n] : row.back();
      const int column = row.size() > n ? at.column : at.column + static_cast<int>(at.text.size());
      throw ParseError("row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(n),
                       at.line, column);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Token& t = row[j];
      if (t.text.size() != width) {
        throw ParseError("cell '" + t.text + "' has width " + std::to_string(t.text.size()) + ", expected " +
                             std::to_string(width),
                         t.line, t.column);
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Cell(t.text).value<std::int64_t>();
    }
  }
  return Square(std::move(m), static_cast<int>(width));
}

}  // namespace unimagic
