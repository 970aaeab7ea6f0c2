#include "pretzel/schreier.hpp"

#include <limits>
#include <string>

#include "pretzel/error.hpp"

namespace pretzel {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr std::int64_t kMaxIndex = 50'000'000;

}  // namespace

SchreierSystem::SchreierSystem(Alphabet ambient, AbelianQuotient quotient)
    : ambient_(std::move(ambient)), alphabet_(Alphabet({"x0"})), quotient_(std::move(quotient)) {}

std::size_t SchreierSystem::coset_index(const std::vector<std::int64_t>& tuple) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    idx = idx * static_cast<std::size_t>(radix_[i]) + static_cast<std::size_t>(tuple[i]);
  return idx;
}

SchreierSystem SchreierSystem::build(const Alphabet& ambient, const IntMatrix& relations) {
  if (relations.cols() != ambient.rank())
    throw DomainError("relation matrix width differs from the ambient rank");
  SchreierSystem sys(ambient, AbelianQuotient(relations));
  const auto& q = sys.quotient_;
  if (!q.finite()) throw DomainError("quotient is infinite; the kernel has infinite index");
  const std::size_t n = ambient.rank();

  std::int64_t index = 1;
  for (const auto& p : q.pivots()) {
    if (!p.fits_slong_p() || p.get_si() > kMaxIndex) throw DomainError("quotient too large to enumerate");
    sys.radix_.push_back(p.get_si());
    index *= p.get_si();
    if (index > kMaxIndex) throw DomainError("quotient too large to enumerate");
  }
  const auto cosets = static_cast<std::size_t>(index);

  sys.tuples_.resize(cosets);
  sys.transversal_.reserve(cosets);
  for (std::size_t c = 0; c < cosets; ++c) {
    std::vector<std::int64_t> t(n);
    std::size_t rest = c;
    for (std::size_t i = n; i-- > 0;) {
      t[i] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(sys.radix_[i]));
      rest /= static_cast<std::size_t>(sys.radix_[i]);
    }
    std::vector<Letter> letters;
    for (std::size_t g = 0; g < n; ++g) letters.insert(letters.end(), static_cast<std::size_t>(t[g]), make_letter(g, 1));
    sys.transversal_.emplace_back(ambient, std::move(letters));
    sys.tuples_[c] = std::move(t);
  }

  sys.next_.assign(cosets * n, kNone);
  sys.prev_.assign(cosets * n, kNone);
  for (std::size_t c = 0; c < cosets; ++c)
    for (std::size_t g = 0; g < n; ++g) {
      auto t = sys.tuples_[c];
      t[g] += 1;
      const std::size_t d = sys.coset_index(q.reduce(std::move(t)));
      sys.next_[c * n + g] = d;
      sys.prev_[d * n + g] = c;
    }

  sys.schreier_.assign(cosets * n, kNone);
  std::vector<std::string> names;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t c = 0; c < cosets; ++c) {
      Word def = sys.transversal_[c] * Word::generator(ambient, g) *
                 invert(sys.transversal_[sys.next_[c * n + g]]);
      if (def.empty()) continue;
      sys.schreier_[c * n + g] = sys.definitions_.size();
      names.push_back("x" + std::to_string(sys.definitions_.size()));
      sys.definitions_.push_back(std::move(def));
      sys.origins_.push_back({c, g});
    }
  if (names.empty()) throw InternalError("Schreier system with no generators");
  sys.alphabet_ = Alphabet(std::move(names));
  if (sys.rank() != cosets * (n - 1) + 1)
    throw InternalError("Schreier rank differs from index*(n-1)+1");
  return sys;
}

std::size_t SchreierSystem::coset_of(const Word& ambient_word) const {
  if (!(ambient_word.alphabet() == ambient_)) throw AlphabetMismatch("word is not over the ambient alphabet");
  return coset_index(quotient_.reduce(abelianize(ambient_word)));
}

bool SchreierSystem::contains(const Word& ambient_word) const { return coset_of(ambient_word) == 0; }

Word SchreierSystem::rewrite(const Word& w) const {
  if (!contains(w)) throw DomainError("word '" + to_string(w) + "' is not in the kernel");
  const std::size_t n = ambient_.rank();
  std::vector<Letter> out;
  std::size_t cursor = 0;
  for (Letter l : w.letters()) {
    const std::size_t g = generator_of(l);
    if (sign_of(l) > 0) {
      if (auto x = schreier_[cursor * n + g]; x != kNone) out.push_back(make_letter(x, 1));
      cursor = next_[cursor * n + g];
    } else {
      const std::size_t from = prev_[cursor * n + g];
      if (auto x = schreier_[from * n + g]; x != kNone) out.push_back(make_letter(x, -1));
      cursor = from;
    }
  }
  if (cursor != 0) throw InternalError("rewriting did not return to the base coset");
  return Word(alphabet_, std::move(out));
}

Word SchreierSystem::expand(const Word& w) const {
  if (!(w.alphabet() == alphabet_)) throw AlphabetMismatch("word is not over the Schreier alphabet");
  Substitution images;
  for (std::size_t x = 0; x < definitions_.size(); ++x) images.emplace(x, definitions_[x]);
  return substitute(w, images, ambient_);
}

}  // namespace pretzel
