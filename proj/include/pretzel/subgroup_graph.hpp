#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pretzel/word.hpp"

namespace pretzel {

/// Folded (Stallings) graph of a finitely generated subgroup of a free group.
///
/// Labels: 2g is generator g read forwards, 2g+1 backwards. Vertices are
/// renumbered by breadth-first search from the base (vertex 0), visiting
/// labels in ascending order, so equal subgroups give identical graphs.
class SubgroupGraph {
 public:
  static SubgroupGraph from_generators(const Alphabet& alphabet, std::span<const Word> generators);
  /// Same subgroup as `generators` plus the single letters `loops`.
  static SubgroupGraph from_generators(const Alphabet& alphabet, std::span<const Word> generators,
                                       std::span<const std::size_t> loops);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t vertex_count() const { return adjacency_.size(); }
  /// Undirected edge count (each generator edge once).
  std::size_t edge_count() const;
  /// Rank of the subgroup: E - V + 1.
  std::size_t subgroup_rank() const { return edge_count() + 1 - vertex_count(); }

  /// nullopt when some vertex lacks an incident label (infinite index).
  std::optional<std::size_t> index() const;
  bool contains(const Word& w) const;
  /// One vertex carrying a loop for every generator.
  bool generates_whole() const;

  std::optional<std::size_t> follow(std::size_t vertex, std::uint32_t label) const;

  std::string to_dot() const;

  friend bool operator==(const SubgroupGraph& a, const SubgroupGraph& b) {
    return a.alphabet_ == b.alphabet_ && a.adjacency_ == b.adjacency_;
  }

 private:
  SubgroupGraph(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  Alphabet alphabet_;
  // Sorted (label, target) lists.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adjacency_;
};

}  // namespace pretzel
