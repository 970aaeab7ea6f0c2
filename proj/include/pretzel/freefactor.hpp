#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pretzel/nielsen.hpp"
#include "pretzel/schreier.hpp"
#include "pretzel/word.hpp"

namespace pretzel {

enum class Execution { Serial, Parallel };

struct Budget {
  unsigned nielsen_radius = 3;
  int substitution_max = 2;
  std::size_t candidate_cap = 1'000'000;
  /// Largest support handed to the Whitehead primitivity test.
  std::size_t support_cap = 3;
  /// Run both certifiers even after a positive result and fail loudly if
  /// they disagree.
  bool cross_check = false;
  Execution execution = Execution::Parallel;
};

enum class FFOutcome { FreeFactor, NotFreeFactor, Unknown };
std::string to_string(FFOutcome outcome);

/// Automorphism of the ambient free group: target -> by^power target
/// (`left`) or target -> target by^power; all other generators fixed.
struct AmbientSubstitution {
  std::size_t target = 0;
  std::size_t by = 1;
  int power = 1;
  bool left = true;

  Substitution images(const Alphabet& ambient) const;
  std::string describe(const Alphabet& ambient) const;
};

struct Preprocessing {
  std::optional<AmbientSubstitution> substitution;
  std::vector<NielsenMove> nielsen;
};

/// {tuple} + (Schreier basis minus `removed`) is a free basis.
struct PositiveWitness {
  std::vector<std::size_t> removed;
};

struct NegativeWitness {
  enum class Kind {
    UnitDeterminant,     ///< |N| = 1 for a genus-one surface (set by classify)
    AbelianObstruction,  ///< tuple does not extend to a basis of the abelianization
    TrivialElement,      ///< a Nielsen transform of the pair contains 1
    NonPrimitive,        ///< an element of a Nielsen transform is not primitive
  };
  Kind kind = Kind::NonPrimitive;
  std::vector<NielsenMove> path;       ///< moves from the input pair
  std::size_t element = 0;             ///< which member of the transformed pair
  std::optional<Word> word;            ///< that member, over the Schreier alphabet
  std::vector<std::size_t> support;    ///< its support (Schreier generator indices)
};
std::string to_string(NegativeWitness::Kind kind);

struct Consumption {
  std::size_t candidates = 0;
  std::size_t fold_checks = 0;
  std::size_t ball_pairs = 0;
  std::size_t elements_tested = 0;
  std::size_t substitutions = 0;
  std::size_t nielsen_retries = 0;

  Consumption& operator+=(const Consumption& o);
};

struct FFVerdict {
  FFOutcome outcome = FFOutcome::Unknown;
  Preprocessing preprocessing;
  std::optional<PositiveWitness> positive;
  std::optional<NegativeWitness> negative;
  Consumption consumed;
};

/// Searches for generators of `sys` to drop so that the tuple plus the rest
/// of the basis is a basis. Subsets have the tuple's size; only generators in
/// the tuple's support are candidates, those occurring exactly once first,
/// then lexicographic. Deterministic for both execution modes.
std::optional<PositiveWitness> certify_free_factor(const SchreierSystem& sys, std::span<const Word> tuple,
                                                   const Budget& budget, Consumption* consumed = nullptr);

/// Looks for a non-primitive (or trivial) member among the Nielsen ball of
/// `pair`, testing members whose support fits `budget.support_cap`.
std::optional<NegativeWitness> certify_not_free_factor(const SchreierSystem& sys, const WordPair& pair,
                                                       const Budget& budget, Consumption* consumed = nullptr);

/// Prechecks, then positive search, then negative search, then the positive
/// search on radius-1 Nielsen transforms of the pair.
FFVerdict decide(const SchreierSystem& sys, std::span<const Word> tuple, const Budget& budget);

struct AmbientDecision {
  FFVerdict verdict;
  /// System the certificate refers to (after any substitution).
  std::optional<SchreierSystem> system;
  std::vector<Word> rewritten;
  /// Rewriting in the unsubstituted system (same as `rewritten` when no
  /// substitution was needed).
  std::vector<Word> initial_rewritten;
};

/// Builds the Schreier system of the kernel of X -> X/<tuple>[X,X] from the
/// abelianized tuple, rewrites, and decides; on Unknown retries under ambient
/// substitutions with |power| <= budget.substitution_max.
AmbientDecision decide_ambient(const Alphabet& ambient, std::span<const Word> ambient_tuple, const Budget& budget);

/// Relation matrix whose rows are the abelianized tuple members.
IntMatrix abelian_relations(std::span<const Word> tuple);

/// Replays a positive certificate: the completed set has rank(sys) members and
/// generates the whole free group.
bool replay_positive(const SchreierSystem& sys, std::span<const Word> tuple, const PositiveWitness& witness);

/// Replays a non-primitivity certificate against the pair it was issued for.
bool replay_negative(const WordPair& pair, const NegativeWitness& witness);

/// Replays whatever certificate `verdict` carries, starting from ambient words.
bool replay_verdict(const Alphabet& ambient, std::span<const Word> ambient_tuple, const FFVerdict& verdict);

}  // namespace pretzel
