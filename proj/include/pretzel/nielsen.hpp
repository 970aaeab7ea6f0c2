#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pretzel/word.hpp"

namespace pretzel {

/// Elementary Nielsen moves on an ordered pair (u, v).
enum class NielsenMove : std::uint8_t {
  Swap,              // (v, u)
  InvertFirst,       // (u^-1, v)
  InvertSecond,      // (u, v^-1)
  FirstTimesSecond,  // (u v, v)
  FirstTimesSecondInverse,
  SecondTimesFirst,  // (v u, v)
  SecondInverseTimesFirst,
  SecondTimesFirstRight,  // (u, v u)
  SecondTimesFirstInverseRight,
  FirstTimesSecondLeft,  // (u, u v)
  FirstInverseTimesSecondLeft,
};

inline constexpr NielsenMove kAllNielsenMoves[] = {
    NielsenMove::Swap,
    NielsenMove::InvertFirst,
    NielsenMove::InvertSecond,
    NielsenMove::FirstTimesSecond,
    NielsenMove::FirstTimesSecondInverse,
    NielsenMove::SecondTimesFirst,
    NielsenMove::SecondInverseTimesFirst,
    NielsenMove::SecondTimesFirstRight,
    NielsenMove::SecondTimesFirstInverseRight,
    NielsenMove::FirstTimesSecondLeft,
    NielsenMove::FirstInverseTimesSecondLeft,
};

std::string to_string(NielsenMove move);
std::optional<NielsenMove> nielsen_move_from_string(std::string_view name);

/// Pair of words with the moves that produced it from the original pair.
struct WordPair {
  Word first;
  Word second;
  std::vector<NielsenMove> log;

  WordPair(Word a, Word b) : first(std::move(a)), second(std::move(b)) {}

  WordPair apply(NielsenMove move) const;
  /// Replays `moves` on (first, second).
  WordPair replay(const std::vector<NielsenMove>& moves) const;
  const Word& element(std::size_t i) const { return i == 0 ? first : second; }
};

/// Every pair reachable with at most `radius` moves, deduplicated, in
/// breadth-first discovery order (the input pair first).
std::vector<WordPair> nielsen_ball(const WordPair& pair, unsigned radius);

struct TupleMove {
  std::size_t target;
  std::size_t other;     ///< unused for Invert/Drop
  enum Kind : std::uint8_t { MultiplyRight, MultiplyLeft, Invert, Drop } kind;
  int other_sign = 1;
};

struct NielsenReduction {
  std::vector<Word> words;
  std::vector<TupleMove> log;
};

/// Pairwise Nielsen reduction: repeatedly replace a member by a product with
/// another member (or inverse) when that is shortlex-smaller, drop trivial
/// members, and orient each member to the smaller of w, w^-1.
NielsenReduction nielsen_reduce(std::vector<Word> generators);

/// True when the cyclic reduction of `w` is u^k with k >= 2.
bool is_proper_power(const Word& w);

/// Cyclic Whitehead minimization in the free group on `w`'s own alphabet:
/// applies length-reducing Whitehead automorphisms until none shortens the
/// cyclic word. Rank is limited to kMaxWhiteheadRank.
Word whitehead_minimize(const Word& w);

inline constexpr std::size_t kMaxWhiteheadRank = 7;

/// Primitivity of `w` in the free group on its support. Throws DomainError
/// when the support is larger than `max_support` or `w` is trivial.
bool is_primitive_small(const Word& w, std::size_t max_support = 3);

}  // namespace pretzel
