#ifndef UNIMAGIC_SEARCH_HPP
#define UNIMAGIC_SEARCH_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unimagic/classify.hpp"
#include "unimagic/square.hpp"
#include "unimagic/transform.hpp"

namespace unimagic {

/// Ordered set of distinct decimal digits, ascending.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<int> digits);

  /// "01258" or "0,1,2,5,8". Throws std::invalid_argument on repeats or
  /// non-digits.
  static Alphabet parse(std::string_view text);

  const std::vector<int>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  int sum() const;
  bool contains(int d) const;
  std::string str() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<int> digits_;
};

class QueryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Squares of order |alphabet| whose cells are the |alphabet|^2 two-digit
/// pairs over the alphabet, each used once.
struct SearchQuery {
  Alphabet alphabet;
  int order = 0;
  MagicCategory requirement = MagicCategory::Magic;
  /// Each of these must map the square to one that still meets
  /// `requirement` with the same constant.
  std::vector<Atomic> universality;
  /// Keep only the least member of each orbit under `universality`.
  bool dedup = false;
  /// Only squares whose tens and units digits each form a Latin square.
  bool via_latin = false;
  unsigned jobs = 1;
};

using SquareSink = std::function<void(const Square&)>;

/// Streams every matching square once, ascending by row-major cell
/// strings. Throws QueryError when order != |alphabet| or the order is
/// outside 1..10.
void enumerate(const SearchQuery& query, const SquareSink& sink);
std::vector<Square> enumerate(const SearchQuery& query);

/// Same filter `enumerate` applies to a finished square: requirement met
/// and every universality image meets it with the same constant.
bool satisfies(const Square& s, const SearchQuery& query);

/// Squares reachable from `s` by the query's universality transforms,
/// skipping steps that leave the digit set. Includes `s`; sorted.
std::vector<Square> orbit(const Square& s, std::span<const Atomic> generators);

/// True when no smaller orbit member also satisfies the query.
bool is_canonical(const Square& s, const SearchQuery& query);

/// Every palindromic digit string of the given width over the alphabet,
/// ascending by value.
std::vector<std::int64_t> palindromes(const Alphabet& alphabet, int width);

/// Semi-magic squares (diagonals unconstrained) of distinct palindromic
/// cells over the alphabet, ascending by row-major cell strings. The line
/// constant is whatever the first row sums to.
void enumerate_palindromic(const Alphabet& alphabet, int order, int width, const SquareSink& sink,
                           unsigned jobs = 1);
std::vector<Square> enumerate_palindromic(const Alphabet& alphabet, int order, int width);

}  // namespace unimagic

#endif  // UNIMAGIC_SEARCH_HPP
