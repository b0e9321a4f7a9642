#ifndef UNIMAGIC_SQUARE_HPP
#define UNIMAGIC_SQUARE_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace unimagic {

/// Fixed-width digit string. "05" and "5" are different cells.
class Cell {
 public:
  Cell() = default;
  explicit Cell(std::string digits);

  template <std::integral Scalar>
  static Cell from_value(Scalar value, int width);

  const std::string& digits() const { return digits_; }
  int width() const { return static_cast<int>(digits_.size()); }
  int digit(int k) const { return digits_[static_cast<std::size_t>(k)] - '0'; }
  bool is_palindrome() const { return std::equal(digits_.begin(), digits_.end(), digits_.rbegin()); }

  template <std::integral Scalar = std::int64_t>
  Scalar value() const {
    Scalar v{0};
    for (char ch : digits_) v = static_cast<Scalar>(v * 10 + (ch - '0'));
    return v;
  }

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;

 private:
  std::string digits_;
};

/// Widest cell a 64-bit value grid can hold without overflow on row sums
/// of reasonable order.
inline constexpr int kMaxCellWidth = 17;

/// n x n grid of equal-width cells. Cells are kept as their integer values;
/// the shared width restores leading zeros.
template <std::integral Scalar>
class BasicSquare {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  BasicSquare() = default;

  BasicSquare(Matrix values, int width) : values_(std::move(values)), width_(width) {
    if (values_.rows() != values_.cols()) throw std::invalid_argument("square must have as many rows as columns");
    if (width_ < 1 || width_ > kMaxCellWidth) throw std::invalid_argument("cell width out of range");
    Scalar limit{1};
    for (int k = 0; k < width_; ++k) limit *= 10;
    if ((values_.array() < 0).any() || (values_.array() >= limit).any()) {
      throw std::invalid_argument("cell value does not fit the cell width");
    }
  }

  static BasicSquare from_cells(const std::vector<std::vector<Cell>>& rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    if (n == 0) throw std::invalid_argument("empty square");
    const int w = rows.front().front().width();
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (static_cast<Eigen::Index>(row.size()) != n) throw std::invalid_argument("ragged square");
      for (Eigen::Index j = 0; j < n; ++j) {
        const Cell& c = row[static_cast<std::size_t>(j)];
        if (c.width() != w) throw std::invalid_argument("mixed cell widths");
        m(i, j) = c.template value<Scalar>();
      }
    }
    return BasicSquare(std::move(m), w);
  }

  Eigen::Index order() const { return values_.rows(); }
  int width() const { return width_; }
  const Matrix& values() const { return values_; }
  Scalar value(Eigen::Index i, Eigen::Index j) const { return values_(i, j); }
  Cell cell(Eigen::Index i, Eigen::Index j) const { return Cell::from_value(values_(i, j), width_); }

  /// Row-major cell values; comparing these is comparing the concatenated
  /// cell strings, because every cell has the same width.
  std::vector<Scalar> row_major() const {
    return std::vector<Scalar>(values_.data(), values_.data() + values_.size());
  }

  friend bool operator==(const BasicSquare& a, const BasicSquare& b) {
    return a.width_ == b.width_ && a.values_.rows() == b.values_.rows() && a.values_ == b.values_;
  }

  friend bool operator<(const BasicSquare& a, const BasicSquare& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    if (a.width_ != b.width_) return a.width_ < b.width_;
    return std::lexicographical_compare(a.values_.data(), a.values_.data() + a.values_.size(),
                                        b.values_.data(), b.values_.data() + b.values_.size());
  }

 private:
  Matrix values_;
  int width_ = 1;
};

using Square = BasicSquare<std::int64_t>;

template <std::integral Scalar>
Cell Cell::from_value(Scalar value, int width) {
  if (value < 0) throw std::invalid_argument("negative cell value");
  std::string s(static_cast<std::size_t>(width), '0');
  for (int k = width - 1; k >= 0; --k) {
    s[static_cast<std::size_t>(k)] = static_cast<char>('0' + value % 10);
    value /= 10;
  }
  if (value != 0) throw std::invalid_argument("cell value does not fit the cell width");
  return Cell(std::move(s));
}

/// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// One square in the text format: `#` comments, blank lines skipped,
/// one row per line, whitespace-separated cells of equal length.
/// A `/` outside a comment also ends a row, so "1 2 / 3 4" is one line.
Square parse_square(std::string_view text);

}  // namespace unimagic

#endif  // UNIMAGIC_SQUARE_HPP
