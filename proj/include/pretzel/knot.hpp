#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pretzel/intmat.hpp"
#include "pretzel/polynomial.hpp"
#include "pretzel/word.hpp"

namespace pretzel {

enum class KnotFamily {
  GenusOneTriple,         ///< P(2p+1, 2q+1, 2r+1)
  AlternatingSignFamily,  ///< P(3,-3,...,3,-3, 2r+1)
  Unsupported,            ///< representable, not analyzed
};

struct PretzelKnot {
  /// Odd twist parameters in normalized order.
  std::vector<long> params;
  KnotFamily family = KnotFamily::Unsupported;
  /// Half-parameters of a triple: params = (2p+1, 2q+1, 2r+1).
  long p = 0, q = 0, r = 0;
  /// Number of (3,-3) blocks for the alternating-sign family; r is shared.
  int k = 0;
  bool mirrored = false;
  /// Some parameter is +-1: the knot is two-bridge and excluded.
  bool two_bridge = false;

  int genus() const { return static_cast<int>(params.size() / 2); }
  std::string name() const;
  friend bool operator==(const PretzelKnot&, const PretzelKnot&) = default;
};

/// Normalizes odd parameters. Three parameters always give a triple: mirror
/// when two or more are <= -3, then negative ones first, the rest ascending.
/// Longer lists are matched against the alternating-sign family (up to
/// mirroring); anything else is Unsupported. Throws DomainError on an even
/// parameter or fewer than three parameters.
PretzelKnot normalize(std::vector<long> params);

/// Genus-one knot from half-parameters; normalizes.
PretzelKnot triple(long p, long q, long r);

/// P(3,-3,...,3,-3,2r+1) with k blocks, k >= 1. Never renormalized as a
/// triple, even for k = 1.
PretzelKnot alternating_family(int k, long r);

/// `P(-5,7,9)`, `P(3,-3,3,-3,7)`, whitespace tolerant. Throws ParseError on
/// bad syntax and DomainError on even parameters.
PretzelKnot parse_knot(std::string_view text);

struct SeifertPair {
  IntMatrix plus;   ///< S+
  IntMatrix minus;  ///< S- = transpose(S+)
};

/// Throws DomainError for two-bridge or unsupported knots.
SeifertPair seifert_matrices(const PretzelKnot& knot);

/// det(t S+ - S+^T), stored as computed.
IntPolynomial alexander(const PretzelKnot& knot);
/// det S+ (the leading coefficient of the Alexander polynomial).
Integer leading_coefficient(const PretzelKnot& knot);

/// Generators of H (positive push-offs) and K (negative push-offs) as words
/// in the free group X of the surface complement.
struct BoundaryWords {
  Alphabet ambient;
  std::vector<Word> h;
  std::vector<Word> k;
};

/// Words read off the standard surface of an odd pretzel P(k_1..k_n): band j
/// runs between holes j-1 and j (holes 0 and n are outside), and loop j
/// crosses band j+1 downwards then band j upwards.
BoundaryWords band_words(const std::vector<long>& params);

/// Throws DomainError for two-bridge or unsupported knots.
BoundaryWords boundary_generators(const PretzelKnot& knot);

/// n = p^k with p prime and k >= 1. Throws DomainError for n <= 0.
bool is_prime_power(const Integer& n);

/// Rationally homologically fibered: det S+ != 0.
bool rhf(const PretzelKnot& knot);

}  // namespace pretzel
