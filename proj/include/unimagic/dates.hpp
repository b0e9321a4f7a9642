#ifndef UNIMAGIC_DATES_HPP
#define UNIMAGIC_DATES_HPP

#include <array>
#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "unimagic/search.hpp"

namespace unimagic {

/// Gregorian calendar day, written dd.mm.yyyy.
class DateStamp {
 public:
  /// Throws std::invalid_argument for impossible dates or years past 9999.
  DateStamp(int day, int month, int year);
  explicit DateStamp(std::chrono::year_month_day ymd);

  /// Parses "dd.mm.yyyy" (also accepts '/' or '-' as separator).
  static DateStamp parse(std::string_view text);

  int day() const { return day_; }
  int month() const { return month_; }
  int year() const { return year_; }

  std::chrono::sys_days sys_days() const;
  DateStamp next() const;
  std::string str() const;

  friend bool operator==(const DateStamp&, const DateStamp&) = default;
  friend auto operator<=>(const DateStamp& a, const DateStamp& b) {
    if (a.year_ != b.year_) return a.year_ <=> b.year_;
    if (a.month_ != b.month_) return a.month_ <=> b.month_;
    return a.day_ <=> b.day_;
  }

 private:
  int day_;
  int month_;
  int year_;
};

/// The eight digits of dd.mm.yyyy, left to right.
std::array<int, 8> digits_of(const DateStamp& d);

enum class DigitMode {
  SubsetOf,     // every digit in the alphabet
  ExactlyUses,  // the distinct digits are the alphabet
};

struct DateQuery {
  DateStamp from;
  DateStamp to;
  Alphabet alphabet;
  DigitMode mode = DigitMode::SubsetOf;
};

bool matches(const DateStamp& d, const Alphabet& alphabet, DigitMode mode);

/// Matching dates in [from, to], ascending. Throws std::invalid_argument
/// when from > to.
std::vector<DateStamp> scan(const DateQuery& q);

}  // namespace unimagic

#endif  // UNIMAGIC_DATES_HPP
