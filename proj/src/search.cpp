#include "unimagic/search.hpp"

#include <algorithm>
#include <set>

#include <atomic>
#include <thread>

#include "backtrack.hpp"
#include "unimagic/latin.hpp"

namespace unimagic {

Alphabet::Alphabet(std::vector<int> digits) : digits_(std::move(digits)) {
  std::sort(digits_.begin(), digits_.end());
  for (int d : digits_) {
    if (d < 0 || d > 9) throw std::invalid_argument("alphabet digit out of range: " + std::to_string(d));
  }
  if (std::adjacent_find(digits_.begin(), digits_.end()) != digits_.end()) {
    throw std::invalid_argument("alphabet has a repeated digit");
  }
}

Alphabet Alphabet::parse(std::string_view text) {
  std::vector<int> digits;
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '{' || ch == '}') continue;
    if (ch < '0' || ch > '9') throw std::invalid_argument(std::string("not a digit in alphabet: '") + ch + "'");
    digits.push_back(ch - '0');
  }
  if (digits.empty()) throw std::invalid_argument("empty alphabet");
  return Alphabet(std::move(digits));
}

int Alphabet::sum() const {
  int s = 0;
  for (int d : digits_) s += d;
  return s;
}

bool Alphabet::contains(int d) const { return std::binary_search(digits_.begin(), digits_.end(), d); }

std::string Alphabet::str() const {
  std::string s;
  for (int d : digits_) s += static_cast<char>('0' + d);
  return s;
}

bool satisfies(const Square& s, const SearchQuery& query) {
  const auto v = categorize(s.values());
  if (v.category < query.requirement) return false;
  for (Atomic a : query.universality) {
    const auto image = apply_atomic(s, a);
    const auto* sq = std::get_if<Square>(&image);
    if (!sq) return false;
    const auto iv = categorize(sq->values());
    if (iv.category < query.requirement || iv.constant != v.constant) return false;
  }
  return true;
}

std::vector<Square> orbit(const Square& s, std::span<const Atomic> generators) {
  std::vector<Square> members{s};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Atomic a : generators) {
      auto image = apply_atomic(members[i], a);
      auto* sq = std::get_if<Square>(&image);
      if (sq && std::find(members.begin(), members.end(), *sq) == members.end()) {
        members.push_back(std::move(*sq));
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_canonical(const Square& s, const SearchQuery& query) {
  for (const Square& m : orbit(s, query.universality)) {
    if (!(m < s)) break;
    if (satisfies(m, query)) return false;
  }
  return true;
}

namespace {

void validate(const SearchQuery& q) {
  const auto n = static_cast<int>(q.alphabet.size());
  if (n == 0) throw QueryError("empty alphabet");
  if (q.order != n) {
    throw QueryError("order " + std::to_string(q.order) + " does not match alphabet size " + std::to_string(n));
  }
  if (q.requirement == MagicCategory::NotMagic) throw QueryError("requirement must be at least semi-magic");
  if (q.via_latin && n > 5) throw QueryError("Latin-pair enumeration supports orders up to 5");
  if (n > 10) throw QueryError("order above 10");
}

// Superimposes every orthogonal pair, keeps what passes, then emits in
// ascending order. Work is split by the first grid of the pair.
void enumerate_latin(const SearchQuery& query, const std::function<bool(const Square&)>& keep,
                     const SquareSink& sink) {
  const auto firsts = latin_squares(query.order);
  const auto& digits = query.alphabet.digits();
  std::vector<std::vector<Square>> results(firsts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task; (task = next.fetch_add(1)) < firsts.size();) {
      const IndexGrid& a = firsts[task];
      Square::Matrix tens = a.unaryExpr([&](int k) { return std::int64_t{10} * digits[static_cast<std::size_t>(k)]; });
      orthogonal_mates(a, [&](const IndexGrid& b) {
        Square::Matrix m = tens + b.unaryExpr([&](int k) { return std::int64_t{digits[static_cast<std::size_t>(k)]}; });
        Square s(std::move(m), 2);
        if (keep(s)) results[task].push_back(std::move(s));
      });
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(query.jobs, static_cast<unsigned>(firsts.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  std::vector<Square> all;
  for (auto& batch : results) {
    for (auto& s : batch) all.push_back(std::move(s));
  }
  std::sort(all.begin(), all.end());
  for (const auto& s : all) sink(s);
}

}  // namespace

void enumerate(const SearchQuery& query, const SquareSink& sink) {
  validate(query);
  detail::BacktrackConfig cfg;
  cfg.order = query.order;
  cfg.width = 2;
  for (int tens : query.alphabet.digits()) {
    for (int units : query.alphabet.digits()) cfg.pool.push_back(10 * tens + units);
  }
  std::sort(cfg.pool.begin(), cfg.pool.end());
  cfg.target = 11 * static_cast<std::int64_t>(query.alphabet.sum());
  cfg.lines = query.requirement;

  auto keep = [&](const Square& s) {
    if (!satisfies(s, query)) return false;
    return !query.dedup || is_canonical(s, query);
  };
  if (query.via_latin) {
    enumerate_latin(query, keep, sink);
  } else {
    detail::backtrack_parallel(cfg, keep, sink, query.jobs);
  }
}

std::vector<Square> enumerate(const SearchQuery& query) {
  std::vector<Square> out;
  enumerate(query, [&](const Square& s) { out.push_back(s); });
  return out;
}

}  // namespace unimagic
