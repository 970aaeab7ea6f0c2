#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pretzel/intmat.hpp"
#include "pretzel/word.hpp"

namespace pretzel {

/// Reidemeister-Schreier data for the kernel of X -> Z^n / rowspace(relations),
/// X free on the ambient alphabet.
///
/// Cosets are the canonical tuples 0 <= t_i < pivot_i of the quotient's normal
/// form, indexed in mixed radix with the first coordinate most significant.
/// The transversal word of tuple t is g_0^{t_0} g_1^{t_1} ..., which is prefix
/// closed. Schreier generators x_{c,g} = c g (rep(cg))^{-1} that are not
/// freely trivial are numbered x0, x1, ... generator-major: all cosets for
/// ambient generator 0 first, then generator 1, and so on.
class SchreierSystem {
 public:
  /// Throws DomainError if the quotient is infinite or too large to enumerate.
  static SchreierSystem build(const Alphabet& ambient, const IntMatrix& relations);

  const Alphabet& ambient() const { return ambient_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const AbelianQuotient& quotient() const { return quotient_; }

  std::size_t index() const { return transversal_.size(); }
  /// Number of free generators; index * (n - 1) + 1.
  std::size_t rank() const { return definitions_.size(); }

  const Word& transversal(std::size_t coset) const { return transversal_.at(coset); }
  const std::vector<std::int64_t>& coset_tuple(std::size_t coset) const { return tuples_.at(coset); }
  /// Ambient word of Schreier generator `x`.
  const Word& definition(std::size_t x) const { return definitions_.at(x); }
  const std::vector<Word>& definitions() const { return definitions_; }

  struct Origin {
    std::size_t coset;
    std::size_t generator;
  };
  Origin origin(std::size_t x) const { return origins_.at(x); }

  std::size_t coset_of(const Word& ambient_word) const;
  /// Kernel membership, decided in the abelian quotient.
  bool contains(const Word& ambient_word) const;

  /// Throws DomainError when `w` is not in the kernel.
  Word rewrite(const Word& w) const;
  /// Inverse of rewrite: substitute the definitions.
  Word expand(const Word& w) const;

 private:
  SchreierSystem(Alphabet ambient, AbelianQuotient quotient);
  std::size_t coset_index(const std::vector<std::int64_t>& tuple) const;

  Alphabet ambient_;
  Alphabet alphabet_;
  AbelianQuotient quotient_;
  std::vector<std::int64_t> radix_;
  std::vector<std::vector<std::int64_t>> tuples_;
  std::vector<Word> transversal_;
  // next_[c * n + g] = coset of c*g; prev_ is its inverse permutation.
  std::vector<std::size_t> next_;
  std::vector<std::size_t> prev_;
  // schreier_[c * n + g] = Schreier generator index or npos for trivial edges.
  std::vector<std::size_t> schreier_;
  std::vector<Word> definitions_;
  std::vector<Origin> origins_;
};

}  // namespace pretzel
