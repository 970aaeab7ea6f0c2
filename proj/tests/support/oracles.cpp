#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

namespace oracle {

W reduce(const W& w) {
  W out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

W inverse(const W& w) {
  W out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

W mul(const W& u, const W& v) {
  W out = u;
  out.insert(out.end(), v.begin(), v.end());
  return reduce(out);
}

W cyclic_core(const W& w) {
  W r = reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  return W(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

W cyclic_class(const W& w) {
  const W c = cyclic_core(w);
  W best = c;
  for (std::size_t k = 1; k < c.size(); ++k) {
    W rot(c.begin() + static_cast<long>(k), c.end());
    rot.insert(rot.end(), c.begin(), c.begin() + static_cast<long>(k));
    best = std::min(best, rot);
  }
  return best;
}

bool proper_power(const W& w) {
  const W c = cyclic_core(w);
  for (std::size_t d = 1; d < c.size(); ++d) {
    if (c.size() % d) continue;
    W u(c.begin(), c.begin() + static_cast<long>(d));
    W p;
    for (std::size_t k = 0; k < c.size() / d; ++k) p.insert(p.end(), u.begin(), u.end());
    if (p == c) return true;
  }
  return false;
}

namespace {

// x_i -> x_i x_j^e, x_i -> x_j^e x_i, and x_i -> x_i^-1, as substitutions.
std::vector<std::vector<W>> elementary_automorphisms(int rank) {
  std::vector<std::vector<W>> out;
  auto identity = [&] {
    std::vector<W> im;
    for (int g = 0; g < rank; ++g) im.push_back({g + 1});
    return im;
  };
  for (int i = 0; i < rank; ++i) {
    auto im = identity();
    im[i] = {-(i + 1)};
    out.push_back(im);
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      for (int e : {1, -1}) {
        auto right = identity();
        right[i] = {i + 1, e * (j + 1)};
        out.push_back(right);
        auto left = identity();
        left[i] = {e * (j + 1), i + 1};
        out.push_back(left);
      }
    }
  }
  return out;
}

W apply_images(const std::vector<W>& images, const W& w) {
  W out;
  for (int l : w) {
    const W& im = images[static_cast<std::size_t>(std::abs(l) - 1)];
    if (l > 0)
      out.insert(out.end(), im.begin(), im.end());
    else {
      W inv = inverse(im);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return reduce(out);
}

}  // namespace

std::set<W> primitive_classes(int rank, std::size_t corridor) {
  const auto autos = elementary_automorphisms(rank);
  const W letter(1, 1);
  std::set<W> seen;
  seen.insert(letter);
  std::deque<W> queue(1, letter);
  while (!queue.empty()) {
    W w = queue.front();
    queue.pop_front();
    for (const auto& a : autos) {
      W next = cyclic_class(apply_images(a, w));
      if (next.size() > corridor) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

bool primitive_by_search(const W& w, int rank, std::size_t corridor) {
  const auto autos = elementary_automorphisms(rank);
  W start = cyclic_class(w);
  if (start.empty()) return false;
  std::set<W> seen;
  seen.insert(start);
  std::deque<W> queue(1, start);
  while (!queue.empty()) {
    W cur = queue.front();
    queue.pop_front();
    if (cur.size() == 1) return true;
    for (const auto& a : autos) {
      W next = cyclic_class(apply_images(a, cur));
      if (next.size() > corridor) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

namespace {

// Edges as a map (vertex, signed label) -> vertex, merged until folded.
struct Folded {
  std::vector<std::map<int, int>> out;
  std::size_t alive = 0;
};

Folded fold(int rank, const std::vector<W>& gens) {
  (void)rank;
  std::vector<std::map<int, int>> adj(1);
  std::vector<int> parent(1, 0);
  std::vector<std::pair<int, std::pair<int, int>>> edges;  // (u, (label, v))
  for (const W& w : gens) {
    const W r = reduce(w);
    int at = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      int to = 0;
      if (i + 1 < r.size()) {
        to = static_cast<int>(parent.size());
        parent.push_back(to);
      }
      edges.push_back({at, {r[i], to}});
      at = to;
    }
  }
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  // Repeatedly look for two edges with the same label leaving one vertex.
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> seen;
    for (const auto& [u0, lv] : edges) {
      const auto [label, v0] = lv;
      const int u = find(u0), v = find(v0);
      for (auto [from, lab, to] : {std::tuple{u, label, v}, std::tuple{v, -label, u}}) {
        auto [it, fresh] = seen.emplace(std::pair{from, lab}, to);
        if (!fresh && find(it->second) != find(to)) {
          parent[static_cast<std::size_t>(find(to))] = find(it->second);
          changed = true;
        }
      }
      if (changed) break;
    }
  }
  Folded f;
  std::map<int, int> ids;
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (find(static_cast<int>(v)) == static_cast<int>(v)) ids.emplace(static_cast<int>(v), static_cast<int>(ids.size()));
  f.out.resize(ids.size());
  for (const auto& [u0, lv] : edges) {
    const int u = ids.at(find(u0)), v = ids.at(find(lv.second));
    f.out[static_cast<std::size_t>(u)][lv.first] = v;
    f.out[static_cast<std::size_t>(v)][-lv.first] = u;
  }
  f.alive = ids.size();
  // Base vertex 0 always maps to id 0 because find(0) is the smallest root
  // only if nothing merged into it from below; track it explicitly instead.
  if (ids.at(find(0)) != 0) {
    const int b = ids.at(find(0));
    std::swap(f.out[0], f.out[static_cast<std::size_t>(b)]);
    for (auto& m : f.out)
      for (auto& [l, t] : m) t = t == 0 ? b : t == b ? 0 : t;
  }
  return f;
}

}  // namespace

std::pair<std::size_t, bool> folded_index(int rank, const std::vector<W>& gens) {
  const Folded f = fold(rank, gens);
  bool full = true;
  for (const auto& m : f.out)
    if (m.size() != static_cast<std::size_t>(2 * rank)) full = false;
  return {f.alive, full};
}

bool generates_whole(int rank, const std::vector<W>& gens) {
  const auto [v, full] = folded_index(rank, gens);
  return v == 1 && full;
}

bool folded_contains(int rank, const std::vector<W>& gens, const W& w) {
  const Folded f = fold(rank, gens);
  int at = 0;
  for (int l : reduce(w)) {
    auto it = f.out[static_cast<std::size_t>(at)].find(l);
    if (it == f.out[static_cast<std::size_t>(at)].end()) return false;
    at = it->second;
  }
  return at == 0;
}

std::vector<W> all_words(int rank, std::size_t n) {
  std::vector<W> out{W{}};
  std::size_t layer = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = layer; i < end; ++i)
      for (int g = 1; g <= rank; ++g)
        for (int l : {g, -g}) {
          if (!out[i].empty() && out[i].back() == -l) continue;
          W w = out[i];
          w.push_back(l);
          out.push_back(w);
        }
    layer = end;
  }
  return out;
}

bool extends_to_basis(const W& u, const W& v, int rank, std::size_t max_len) {
  if (rank == 2) return generates_whole(2, {u, v});
  for (const W& w : all_words(rank, max_len))
    if (!w.empty() && generates_whole(rank, {u, v, w})) return true;
  return false;
}

W random_word(std::mt19937_64& rng, int rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution sign(0.5);
  W w;
  const std::size_t n = len(rng);
  while (w.size() < n) {
    int l = gen(rng) * (sign(rng) ? 1 : -1);
    if (!w.empty() && w.back() == -l) continue;
    w.push_back(l);
  }
  return w;
}

std::int64_t det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    total += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return total;
}

bool in_lattice(const std::vector<std::vector<std::int64_t>>& rows, const std::vector<std::int64_t>& v) {
  // v = c * rows  <=>  c_j = det(rows with row j replaced by v) / det(rows).
  const std::int64_t d = det(rows);
  if (d == 0) return false;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    auto m = rows;
    m[j] = v;
    if (det(m) % d != 0) return false;
  }
  return true;
}

}  // namespace oracle
