#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pretzel {

/// Ordered set of distinct generator labels. Copies share storage.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  /// Labels `prefix<first>`, `prefix<first+1>`, ... (e.g. x0..x5, a1..a4).
  static Alphabet indexed(std::string_view prefix, std::size_t count,
                          std::size_t first = 0);

  std::size_t rank() const { return impl_->names.size(); }
  const std::string& name(std::size_t g) const { return impl_->names.at(g); }
  const std::vector<std::string>& names() const { return impl_->names; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const Alphabet& lhs, const Alphabet& rhs) {
    return lhs.impl_ == rhs.impl_ || lhs.impl_->names == rhs.impl_->names;
  }

 private:
  struct Impl {
    std::vector<std::string> names;
    std::map<std::string, std::size_t, std::less<>> index;
  };
  std::shared_ptr<const Impl> impl_;
};

/// A letter is +(g+1) for generator g and -(g+1) for its inverse.
using Letter = std::int32_t;

constexpr Letter make_letter(std::size_t g, int sign) {
  return sign > 0 ? static_cast<Letter>(g + 1) : -static_cast<Letter>(g + 1);
}
constexpr std::size_t generator_of(Letter l) {
  return static_cast<std::size_t>(l > 0 ? l - 1 : -l - 1);
}
constexpr int sign_of(Letter l) { return l > 0 ? 1 : -1; }

/// Freely reduced word over an Alphabet. Reduction happens on construction,
/// so every Word value is reduced.
class Word {
 public:
  explicit Word(Alphabet alphabet);
  Word(Alphabet alphabet, std::vector<Letter> letters);

  static Word generator(Alphabet alphabet, std::size_t g, long power = 1);

  const Alphabet& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word& lhs, const Word& rhs) {
    return lhs.letters_ == rhs.letters_ && lhs.alphabet_ == rhs.alphabet_;
  }

  /// Shortlex order on letter codes; used for canonical sorting only.
  friend bool shortlex_less(const Word& lhs, const Word& rhs);

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

bool shortlex_less(const Word& lhs, const Word& rhs);

struct ShortlexLess {
  bool operator()(const Word& lhs, const Word& rhs) const {
    return shortlex_less(lhs, rhs);
  }
};

/// Free reduction of `u` followed by `v`. Throws AlphabetMismatch.
Word concat_reduce(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return concat_reduce(u, v); }

Word invert(const Word& w);
Word power(const Word& w, long exponent);

/// Images of generators by index. Every generator used by `w` needs an image;
/// all images must share one target alphabet.
using Substitution = std::map<std::size_t, Word>;

/// Homomorphic image of `w`; `target` is the alphabet of the images.
Word substitute(const Word& w, const Substitution& images, const Alphabet& target);

/// Exponent-sum vector, one entry per generator.
std::vector<std::int64_t> abelianize(const Word& w);

/// Generators occurring in `w`, ascending.
std::vector<std::size_t> support(const Word& w);

/// Strip matching first/last letters; the result is a conjugate of `w`.
Word cyclic_reduce(const Word& w);

/// Least rotation (shortlex) of the cyclic reduction; equal iff conjugate.
std::vector<Letter> cyclic_normal_form(const Word& w);

struct SupportRestriction {
  Word word;                          ///< over the sub-alphabet of support(w)
  std::vector<std::size_t> original;  ///< sub-alphabet index -> original index
};

/// Rewrite `w` over the alphabet of its own support, keeping labels.
SupportRestriction restrict_to_support(const Word& w);

/// `a b^-1 a^3` syntax. "1" or an empty string is the identity.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string to_string(const Word& w);

}  // namespace pretzel
