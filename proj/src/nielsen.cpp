#include "pretzel/nielsen.hpp"

#include <array>
#include <set>

#include "pretzel/error.hpp"

namespace pretzel {

namespace {

constexpr std::array<const char*, 11> kMoveNames = {
    "swap", "invert1", "invert2", "u*v", "u*v^-1", "v*u", "v^-1*u", "v*u@2", "v*u^-1@2", "u*v@2", "u^-1*v@2",
};

}  // namespace

std::string to_string(NielsenMove move) { return kMoveNames.at(static_cast<std::size_t>(move)); }

std::optional<NielsenMove> nielsen_move_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kMoveNames.size(); ++i)
    if (name == kMoveNames[i]) return static_cast<NielsenMove>(i);
  return std::nullopt;
}

WordPair WordPair::apply(NielsenMove move) const {
  WordPair out = *this;
  const Word& u = first;
  const Word& v = second;
  switch (move) {
    case NielsenMove::Swap:
      out.first = v;
      out.second = u;
      break;
    case NielsenMove::InvertFirst: out.first = invert(u); break;
    case NielsenMove::InvertSecond: out.second = invert(v); break;
    case NielsenMove::FirstTimesSecond: out.first = u * v; break;
    case NielsenMove::FirstTimesSecondInverse: out.first = u * invert(v); break;
    case NielsenMove::SecondTimesFirst: out.first = v * u; break;
    case NielsenMove::SecondInverseTimesFirst: out.first = invert(v) * u; break;
    case NielsenMove::SecondTimesFirstRight: out.second = v * u; break;
    case NielsenMove::SecondTimesFirstInverseRight: out.second = v * invert(u); break;
    case NielsenMove::FirstTimesSecondLeft: out.second = u * v; break;
    case NielsenMove::FirstInverseTimesSecondLeft: out.second = invert(u) * v; break;
  }
  out.log.push_back(move);
  return out;
}

WordPair WordPair::replay(const std::vector<NielsenMove>& moves) const {
  WordPair out = *this;
  for (NielsenMove m : moves) out = out.apply(m);
  return out;
}

std::vector<WordPair> nielsen_ball(const WordPair& pair, unsigned radius) {
  using Key = std::pair<std::vector<Letter>, std::vector<Letter>>;
  auto key_of = [](const WordPair& p) {
    return Key{{p.first.letters().begin(), p.first.letters().end()},
               {p.second.letters().begin(), p.second.letters().end()}};
  };
  std::vector<WordPair> ball{pair};
  std::set<Key> seen{key_of(pair)};
  std::size_t layer_begin = 0;
  for (unsigned depth = 0; depth < radius; ++depth) {
    const std::size_t layer_end = ball.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (NielsenMove move : kAllNielsenMoves) {
        WordPair next = ball[i].apply(move);
        if (seen.insert(key_of(next)).second) ball.push_back(std::move(next));
      }
    layer_begin = layer_end;
  }
  return ball;
}

namespace {

Word oriented(const Word& w) {
  Word inv = invert(w);
  return shortlex_less(inv, w) ? inv : w;
}

}  // namespace

NielsenReduction nielsen_reduce(std::vector<Word> generators) {
  NielsenReduction out;
  auto& words = out.words;
  for (auto& w : generators) {
    if (w.empty()) {
      out.log.push_back({words.size(), 0, TupleMove::Drop});
      continue;
    }
    Word o = oriented(w);
    if (!(o == w)) out.log.push_back({words.size(), 0, TupleMove::Invert});
    words.push_back(std::move(o));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < words.size() && !changed; ++i)
      for (std::size_t j = 0; j < words.size() && !changed; ++j) {
        if (i == j) continue;
        for (int sign : {1, -1}) {
          const Word other = sign > 0 ? words[j] : invert(words[j]);
          for (auto kind : {TupleMove::MultiplyRight, TupleMove::MultiplyLeft}) {
            const Word product = kind == TupleMove::MultiplyRight ? words[i] * other : other * words[i];
            if (product.empty()) {
              out.log.push_back({i, j, kind, sign});
              out.log.push_back({i, 0, TupleMove::Drop});
              words.erase(words.begin() + static_cast<std::ptrdiff_t>(i));
              changed = true;
              break;
            }
            Word candidate = oriented(product);
            if (shortlex_less(candidate, words[i])) {
              out.log.push_back({i, j, kind, sign});
              if (!(candidate == product)) out.log.push_back({i, 0, TupleMove::Invert});
              words[i] = std::move(candidate);
              changed = true;
              break;
            }
          }
          if (changed) break;
        }
      }
  }
  return out;
}

bool is_proper_power(const Word& w) {
  if (w.empty()) throw DomainError("proper-power test on the trivial word");
  const Word c = cyclic_reduce(w);
  const auto letters = c.letters();
  const std::size_t n = letters.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = letters[i] == letters[i - period];
    if (periodic) return true;
  }
  return false;
}

}  // namespace pretzel
