#include "pretzel/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "pretzel/error.hpp"

namespace pretzel {

Alphabet::Alphabet(std::vector<std::string> names) {
  if (names.empty()) throw DomainError("alphabet must have at least one generator");
  auto impl = std::make_shared<Impl>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw DomainError("empty generator label");
    if (!impl->index.emplace(names[i], i).second)
      throw DomainError("duplicate generator label '" + names[i] + "'");
  }
  impl->names = std::move(names);
  impl_ = std::move(impl);
}

Alphabet Alphabet::indexed(std::string_view prefix, std::size_t count, std::size_t first) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    names.push_back(std::string(prefix) + std::to_string(first + i));
  return Alphabet(std::move(names));
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  auto it = impl_->index.find(name);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l)
    out.pop_back();
  else
    out.push_back(l);
}

void check_same(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) throw AlphabetMismatch("words are over different alphabets");
}

}  // namespace

Word::Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

Word::Word(Alphabet alphabet, std::vector<Letter> letters) : alphabet_(std::move(alphabet)) {
  const auto rank = alphabet_.rank();
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0 || generator_of(l) >= rank) throw DomainError("letter outside alphabet");
    push_reduced(letters_, l);
  }
}

Word Word::generator(Alphabet alphabet, std::size_t g, long power) {
  if (g >= alphabet.rank()) throw DomainError("generator index outside alphabet");
  const Letter l = make_letter(g, power >= 0 ? 1 : -1);
  const auto count = static_cast<std::size_t>(power >= 0 ? power : -power);
  return Word(std::move(alphabet), std::vector<Letter>(count, l));
}

bool shortlex_less(const Word& lhs, const Word& rhs) {
  if (lhs.letters_.size() != rhs.letters_.size())
    return lhs.letters_.size() < rhs.letters_.size();
  return lhs.letters_ < rhs.letters_;
}

Word concat_reduce(const Word& u, const Word& v) {
  check_same(u.alphabet(), v.alphabet());
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  for (Letter l : v.letters()) push_reduced(out, l);
  return Word(u.alphabet(), std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(-*it);
  return Word(w.alphabet(), std::move(out));
}

Word power(const Word& w, long exponent) {
  const Word base = exponent >= 0 ? w : invert(w);
  Word result(w.alphabet());
  for (long i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i) result = result * base;
  return result;
}

Word substitute(const Word& w, const Substitution& images, const Alphabet& target) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    auto it = images.find(generator_of(l));
    if (it == images.end())
      throw DomainError("no image for generator '" + w.alphabet().name(generator_of(l)) + "'");
    check_same(it->second.alphabet(), target);
    const auto img = it->second.letters();
    if (sign_of(l) > 0) {
      for (Letter m : img) push_reduced(out, m);
    } else {
      for (auto r = img.rbegin(); r != img.rend(); ++r) push_reduced(out, -*r);
    }
  }
  return Word(target, std::move(out));
}

std::vector<std::int64_t> abelianize(const Word& w) {
  std::vector<std::int64_t> v(w.alphabet().rank(), 0);
  for (Letter l : w.letters()) v[generator_of(l)] += sign_of(l);
  return v;
}

std::vector<std::size_t> support(const Word& w) {
  std::vector<std::size_t> s;
  for (Letter l : w.letters()) s.push_back(generator_of(l));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Word cyclic_reduce(const Word& w) {
  auto letters = w.letters();
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.alphabet(), std::vector<Letter>(letters.begin() + lo, letters.begin() + hi));
}

std::vector<Letter> cyclic_normal_form(const Word& w) {
  const Word c = cyclic_reduce(w);
  auto letters = c.letters();
  const std::size_t n = letters.size();
  std::vector<Letter> best(letters.begin(), letters.end());
  std::vector<Letter> rot(n);
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) rot[i] = letters[(s + i) % n];
    if (rot < best) best = rot;
  }
  return best;
}

SupportRestriction restrict_to_support(const Word& w) {
  SupportRestriction out{Word(w.alphabet()), support(w)};
  if (out.original.empty()) return out;
  std::vector<std::string> names;
  std::vector<std::size_t> position(w.alphabet().rank(), 0);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    names.push_back(w.alphabet().name(out.original[i]));
    position[out.original[i]] = i;
  }
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (Letter l : w.letters()) letters.push_back(make_letter(position[generator_of(l)], sign_of(l)));
  out.word = Word(Alphabet(std::move(names)), std::move(letters));
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string_view name = token;
    long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = std::string_view(token).substr(0, caret);
      const char* first = token.data() + caret + 1;
      const char* last = token.data() + token.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc() || ptr != last || first == last)
        throw ParseError("bad exponent in '" + token + "'");
    }
    auto g = alphabet.find(name);
    if (!g) {
      if (name == "1" && exponent == 1) {
        continue;
      }
      throw ParseError("unknown generator '" + std::string(name) + "'");
    }
    const Letter l = make_letter(*g, exponent >= 0 ? 1 : -1);
    for (long i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i) letters.push_back(l);
  }
  return Word(alphabet, std::move(letters));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long run = static_cast<long>(j - i) * sign_of(letters[i]);
    if (!out.empty()) out += ' ';
    out += w.alphabet().name(generator_of(letters[i]));
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace pretzel
