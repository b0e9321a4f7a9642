#include "unimagic/dates.hpp"

#include <charconv>
#include <stdexcept>

namespace unimagic {

namespace cr = std::chrono;

DateStamp::DateStamp(int day, int month, int year) : day_(day), month_(month), year_(year) {
  if (year < 0 || year > 9999) throw std::invalid_argument("year must have at most four digits");
  const cr::year_month_day ymd{cr::year{year}, cr::month{static_cast<unsigned>(month)},
                               cr::day{static_cast<unsigned>(day)}};
  if (month < 1 || day < 1 || !ymd.ok()) {
    throw std::invalid_argument("no such date: " + std::to_string(day) + "." + std::to_string(month) + "." +
                                std::to_string(year));
  }
}

DateStamp::DateStamp(cr::year_month_day ymd)
    : DateStamp(static_cast<int>(static_cast<unsigned>(ymd.day())), static_cast<int>(static_cast<unsigned>(ymd.month())),
                static_cast<int>(ymd.year())) {}

DateStamp DateStamp::parse(std::string_view text) {
  int parts[3] = {0, 0, 0};
  std::size_t lengths[3] = {2, 2, 4};
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    if (k > 0) {
      if (pos >= text.size() || (text[pos] != '.' && text[pos] != '/' && text[pos] != '-')) {
        throw std::invalid_argument("expected dd.mm.yyyy, got '" + std::string(text) + "'");
      }
      ++pos;
    }
    const char* begin = text.data() + pos;
    const char* end = text.data() + std::min(text.size(), pos + lengths[k]);
    auto [ptr, ec] = std::from_chars(begin, end, parts[k]);
    if (ec != std::errc() || ptr != end || static_cast<std::size_t>(end - begin) != lengths[k]) {
      throw std::invalid_argument("expected dd.mm.yyyy, got '" + std::string(text) + "'");
    }
    pos += lengths[k];
  }
  if (pos != text.size()) throw std::invalid_argument("expected dd.mm.yyyy, got '" + std::string(text) + "'");
  return DateStamp(parts[0], parts[1], parts[2]);
}

cr::sys_days DateStamp::sys_days() const {
  return cr::sys_days{cr::year{year_} / cr::month{static_cast<unsigned>(month_)} / cr::day{static_cast<unsigned>(day_)}};
}

DateStamp DateStamp::next() const { return DateStamp(cr::year_month_day{sys_days() + cr::days{1}}); }

std::string DateStamp::str() const {
  const auto d = digits_of(*this);
  std::string s;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k == 2 || k == 4) s += '.';
    s += static_cast<char>('0' + d[k]);
  }
  return s;
}

std::array<int, 8> digits_of(const DateStamp& d) {
  return {d.day() / 10,          d.day() % 10,         d.month() / 10,      d.month() % 10,
          d.year() / 1000 % 10, d.year() / 100 % 10, d.year() / 10 % 10, d.year() % 10};
}

bool matches(const DateStamp& d, const Alphabet& alphabet, DigitMode mode) {
  std::array<bool, 10> present{};
  for (int digit : digits_of(d)) {
    if (!alphabet.contains(digit)) return false;
    present[static_cast<std::size_t>(digit)] = true;
  }
  if (mode == DigitMode::SubsetOf) return true;
  for (int digit : alphabet.digits()) {
    if (!present[static_cast<std::size_t>(digit)]) return false;
  }
  return true;
}

std::vector<DateStamp> scan(const DateQuery& q) {
  if (q.to < q.from) throw std::invalid_argument("date range ends before it starts");
  std::vector<DateStamp> out;
  for (auto day = q.from.sys_days(); day <= q.to.sys_days(); day += cr::days{1}) {
    const DateStamp d{cr::year_month_day{day}};
    if (matches(d, q.alphabet, q.mode)) out.push_back(d);
  }
  return out;
}

}  // namespace unimagic
