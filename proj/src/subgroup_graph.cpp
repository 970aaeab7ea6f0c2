#include "pretzel/subgroup_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "pretzel/error.hpp"

namespace pretzel {

namespace {

std::uint32_t forward_label(Letter l) {
  return static_cast<std::uint32_t>(2 * generator_of(l) + (sign_of(l) > 0 ? 0 : 1));
}

std::uint32_t reverse(std::uint32_t label) { return label ^ 1u; }

// Union-find folding. Out-edges live in one hash table keyed by
// (vertex, label); each vertex remembers which labels it has so a merged
// vertex can hand its edges to the survivor.
class Folder {
 public:
  explicit Folder(std::size_t labels) : labels_(labels) { add_vertex(); }

  std::uint32_t add_vertex() {
    parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
    labels_of_.emplace_back();
    return parent_.back();
  }

  void add_path(std::span<const Letter> letters) {
    if (letters.empty()) return;
    std::uint32_t at = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const std::uint32_t to = i + 1 == letters.size() ? 0 : add_vertex();
      add_edge(at, forward_label(letters[i]), to);
      at = to;
    }
    drain();
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  std::optional<std::uint32_t> target(std::uint32_t v, std::uint32_t label) {
    auto it = edges_.find(key(find(v), label));
    if (it == edges_.end()) return std::nullopt;
    return find(it->second);
  }

  std::size_t labels() const { return labels_; }

 private:
  std::uint64_t key(std::uint32_t v, std::uint32_t label) const {
    return static_cast<std::uint64_t>(v) * labels_ + label;
  }

  // Record v -label-> w and the reverse edge, queueing merges on conflicts.
  void add_edge(std::uint32_t v, std::uint32_t label, std::uint32_t w) {
    insert_half(find(v), label, find(w));
    insert_half(find(w), reverse(label), find(v));
  }

  void insert_half(std::uint32_t v, std::uint32_t label, std::uint32_t w) {
    auto [it, inserted] = edges_.try_emplace(key(v, label), w);
    if (inserted) {
      labels_of_[v].push_back(label);
    } else if (find(it->second) != w) {
      pending_.emplace_back(find(it->second), w);
    }
  }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (labels_of_[a].size() < labels_of_[b].size()) std::swap(a, b);
      // b is absorbed into a.
      parent_[b] = a;
      auto moved = std::move(labels_of_[b]);
      labels_of_[b].clear();
      for (std::uint32_t label : moved) {
        auto it = edges_.find(key(b, label));
        const std::uint32_t w = find(it->second);
        edges_.erase(it);
        insert_half(a, label, w == b ? a : w);
      }
    }
  }

  friend SubgroupGraph;

  std::size_t labels_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::vector<std::uint32_t>> labels_of_;
  std::unordered_map<std::uint64_t, std::uint32_t> edges_;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> pending_;
};

}  // namespace

SubgroupGraph SubgroupGraph::from_generators(const Alphabet& alphabet, std::span<const Word> generators) {
  return from_generators(alphabet, generators, {});
}

SubgroupGraph SubgroupGraph::from_generators(const Alphabet& alphabet, std::span<const Word> generators,
                                             std::span<const std::size_t> loops) {
  Folder folder(2 * alphabet.rank());
  for (std::size_t g : loops) {
    if (g >= alphabet.rank()) throw DomainError("loop generator outside alphabet");
    const Letter l = make_letter(g, 1);
    folder.add_path(std::span<const Letter>(&l, 1));
  }
  for (const Word& w : generators) {
    if (!(w.alphabet() == alphabet)) throw AlphabetMismatch("generator is not over the graph alphabet");
    folder.add_path(w.letters());
  }

  SubgroupGraph graph(alphabet);
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  std::deque<std::uint32_t> queue;
  const std::uint32_t base = folder.find(0);
  renumber.emplace(base, 0);
  queue.push_back(base);
  std::vector<std::uint32_t> order{base};
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    auto labels = folder.labels_of_[v];
    std::sort(labels.begin(), labels.end());
    for (std::uint32_t label : labels) {
      const std::uint32_t w = *folder.target(v, label);
      if (renumber.try_emplace(w, static_cast<std::uint32_t>(order.size())).second) {
        order.push_back(w);
        queue.push_back(w);
      }
    }
  }
  graph.adjacency_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& adj = graph.adjacency_[i];
    for (std::uint32_t label : folder.labels_of_[order[i]])
      adj.emplace_back(label, renumber.at(*folder.target(order[i], label)));
    std::sort(adj.begin(), adj.end());
  }
  return graph;
}

std::size_t SubgroupGraph::edge_count() const {
  std::size_t half = 0;
  for (const auto& adj : adjacency_) half += adj.size();
  return half / 2;
}

std::optional<std::size_t> SubgroupGraph::follow(std::size_t vertex, std::uint32_t label) const {
  const auto& adj = adjacency_.at(vertex);
  auto it = std::lower_bound(adj.begin(), adj.end(), std::make_pair(label, std::uint32_t{0}));
  if (it == adj.end() || it->first != label) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SubgroupGraph::index() const {
  const std::size_t full = 2 * alphabet_.rank();
  for (const auto& adj : adjacency_)
    if (adj.size() != full) return std::nullopt;
  return adjacency_.size();
}

bool SubgroupGraph::contains(const Word& w) const {
  if (!(w.alphabet() == alphabet_)) throw AlphabetMismatch("word is not over the graph alphabet");
  std::size_t at = 0;
  for (Letter l : w.letters()) {
    auto next = follow(at, forward_label(l));
    if (!next) return false;
    at = *next;
  }
  return at == 0;
}

bool SubgroupGraph::generates_whole() const {
  return adjacency_.size() == 1 && adjacency_[0].size() == 2 * alphabet_.rank();
}

std::string SubgroupGraph::to_dot() const {
  std::string out = "digraph subgroup {\n  0 [shape=doublecircle];\n";
  for (std::size_t v = 0; v < adjacency_.size(); ++v)
    for (auto [label, w] : adjacency_[v]) {
      if (label & 1u) continue;
      out += "  " + std::to_string(v) + " -> " + std::to_string(w) + " [label=\"" +
             alphabet_.name(label / 2) + "\"];\n";
    }
  return out + "}\n";
}

}  // namespace pretzel
