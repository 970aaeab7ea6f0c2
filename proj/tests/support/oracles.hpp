// Brute-force reference implementations used only by tests. They work on
// plain integer vectors (letter g+1 / -(g+1)) and share no code with the
// library, so agreement is evidence rather than a tautology.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using W = std::vector<int>;

W reduce(const W& w);
W inverse(const W& w);
W mul(const W& u, const W& v);
W cyclic_core(const W& w);
/// Least rotation of the cyclic core, over all rotations (brute force).
W cyclic_class(const W& w);
bool proper_power(const W& w);

/// Images of the letter 0 under compositions of elementary Nielsen
/// automorphisms, as cyclic classes, never leaving words of length
/// <= corridor along the way.
std::set<W> primitive_classes(int rank, std::size_t corridor);

/// Reduces `w` with elementary automorphisms inside the length corridor until
/// a single letter appears.
bool primitive_by_search(const W& w, int rank, std::size_t corridor);

/// Naive Stallings folding; true when the words generate the free group on
/// `rank` letters.
bool generates_whole(int rank, const std::vector<W>& gens);
/// Number of vertices of the folded graph and whether every vertex has every
/// label (finite index).
std::pair<std::size_t, bool> folded_index(int rank, const std::vector<W>& gens);
bool folded_contains(int rank, const std::vector<W>& gens, const W& w);

/// Some w with |w| <= max_len making {u, v, w} (rank 3) or {u, v} (rank 2)
/// a basis.
bool extends_to_basis(const W& u, const W& v, int rank, std::size_t max_len);

/// All reduced words of length <= n in `rank` letters.
std::vector<W> all_words(int rank, std::size_t n);
W random_word(std::mt19937_64& rng, int rank, std::size_t max_len);

/// Cofactor expansion, for small matrices.
std::int64_t det(const std::vector<std::vector<std::int64_t>>& m);

/// v in the integer row lattice of a square nonsingular matrix (Cramer).
bool in_lattice(const std::vector<std::vector<std::int64_t>>& rows, const std::vector<std::int64_t>& v);

}  // namespace oracle
