#include <algorithm>

#include "backtrack.hpp"
#include "unimagic/search.hpp"

namespace unimagic {

std::vector<std::int64_t> palindromes(const Alphabet& alphabet, int width) {
  if (width < 1 || width > kMaxCellWidth) throw QueryError("cell width out of range");
  const auto& digits = alphabet.digits();
  const int half = (width + 1) / 2;
  std::vector<std::int64_t> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(half), 0);
  if (digits.empty()) return out;
  for (;;) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int k = 0; k < half; ++k) {
      const char ch = static_cast<char>('0' + digits[pick[static_cast<std::size_t>(k)]]);
      s[static_cast<std::size_t>(k)] = ch;
      s[static_cast<std::size_t>(width - 1 - k)] = ch;
    }
    out.push_back(Cell(s).value());
    int k = half - 1;
    while (k >= 0 && ++pick[static_cast<std::size_t>(k)] == digits.size()) pick[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void enumerate_palindromic(const Alphabet& alphabet, int order, int width, const SquareSink& sink, unsigned jobs) {
  if (order < 1) throw QueryError("order must be positive");
  detail::BacktrackConfig cfg;
  cfg.order = order;
  cfg.width = width;
  cfg.pool = palindromes(alphabet, width);
  cfg.lines = MagicCategory::SemiMagic;
  detail::backtrack_parallel(
      cfg, [](const Square&) { return true; }, sink, jobs);
}

std::vector<Square> enumerate_palindromic(const Alphabet& alphabet, int order, int width) {
  std::vector<Square> out;
  enumerate_palindromic(alphabet, order, width, [&](const Square& s) { out.push_back(s); });
  return out;
}

}  // namespace unimagic
