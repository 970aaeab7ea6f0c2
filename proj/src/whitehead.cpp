#include <array>
#include <numeric>
#include <vector>

#include "pretzel/error.hpp"
#include "pretzel/nielsen.hpp"

namespace pretzel {

namespace {

// Type II Whitehead automorphism (A, m): m fixed, every other generator y
// goes to y, y m, m^-1 y or m^-1 y m (bit 0: right factor, bit 1: left).
struct WhiteheadMove {
  Letter multiplier;
  std::vector<std::uint8_t> option;
};

std::vector<WhiteheadMove> enumerate_moves(std::size_t rank) {
  std::vector<WhiteheadMove> moves;
  for (std::size_t g = 0; g < rank; ++g)
    for (int sign : {1, -1}) {
      std::size_t combos = 1;
      for (std::size_t i = 1; i < rank; ++i) combos *= 4;
      for (std::size_t code = 1; code < combos; ++code) {
        WhiteheadMove m{make_letter(g, sign), std::vector<std::uint8_t>(rank, 0)};
        std::size_t rest = code;
        for (std::size_t y = 0; y < rank; ++y) {
          if (y == g) continue;
          m.option[y] = static_cast<std::uint8_t>(rest % 4);
          rest /= 4;
        }
        moves.push_back(std::move(m));
      }
    }
  return moves;
}

const std::vector<WhiteheadMove>& moves_for_rank(std::size_t rank) {
  static const auto table = [] {
    std::array<std::vector<WhiteheadMove>, kMaxWhiteheadRank + 1> t;
    for (std::size_t r = 1; r <= kMaxWhiteheadRank; ++r) t[r] = enumerate_moves(r);
    return t;
  }();
  return table.at(rank);
}

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l)
    out.pop_back();
  else
    out.push_back(l);
}

// Applies `move` to the cyclic word `letters`; returns the cyclic length and
// leaves the freely reduced image in `buffer`.
std::size_t apply_cyclic(const WhiteheadMove& move, std::span<const Letter> letters, std::vector<Letter>& buffer) {
  buffer.clear();
  const Letter m = move.multiplier;
  const std::size_t gm = generator_of(m);
  for (Letter l : letters) {
    const std::size_t g = generator_of(l);
    if (g == gm) {
      push_reduced(buffer, l);
      continue;
    }
    const std::uint8_t opt = move.option[g];
    const bool pre = sign_of(l) > 0 ? (opt & 2) : (opt & 1);
    const bool post = sign_of(l) > 0 ? (opt & 1) : (opt & 2);
    if (pre) push_reduced(buffer, -m);
    push_reduced(buffer, l);
    if (post) push_reduced(buffer, m);
  }
  std::size_t lo = 0, hi = buffer.size();
  while (hi - lo >= 2 && buffer[lo] == -buffer[hi - 1]) {
    ++lo;
    --hi;
  }
  return hi - lo;
}

}  // namespace

Word whitehead_minimize(const Word& w) {
  const std::size_t rank = w.alphabet().rank();
  if (rank > kMaxWhiteheadRank) throw DomainError("Whitehead minimization rank limit exceeded");
  Word current = cyclic_reduce(w);
  if (current.length() <= 1) return current;
  const auto& moves = moves_for_rank(rank);
  std::vector<Letter> buffer;
  bool improved = true;
  while (improved && current.length() > 1) {
    improved = false;
    for (const auto& move : moves) {
      const std::size_t len = apply_cyclic(move, current.letters(), buffer);
      if (len < current.length()) {
        current = cyclic_reduce(Word(w.alphabet(), buffer));
        improved = true;
        break;
      }
    }
  }
  return current;
}

bool is_primitive_small(const Word& w, std::size_t max_support) {
  if (w.empty()) throw DomainError("primitivity of the trivial word");
  const SupportRestriction restricted = restrict_to_support(w);
  const std::size_t rank = restricted.word.alphabet().rank();
  if (rank > max_support || rank > kMaxWhiteheadRank)
    throw DomainError("support of size " + std::to_string(rank) + " exceeds the primitivity limit");
  const Word c = cyclic_reduce(restricted.word);
  if (c.length() == 1) return true;
  std::int64_t g = 0;
  for (auto e : abelianize(c)) g = std::gcd(g, e);
  if (g != 1) return false;
  if (is_proper_power(c)) return false;
  return whitehead_minimize(c).length() == 1;
}

}  // namespace pretzel
