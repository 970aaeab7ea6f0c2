#include "pretzel/freefactor.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <numeric>

#include "pretzel/error.hpp"
#include "pretzel/subgroup_graph.hpp"

namespace pretzel {

std::string to_string(FFOutcome outcome) {
  switch (outcome) {
    case FFOutcome::FreeFactor: return "FreeFactor";
    case FFOutcome::NotFreeFactor: return "NotFreeFactor";
    case FFOutcome::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(NegativeWitness::Kind kind) {
  switch (kind) {
    case NegativeWitness::Kind::UnitDeterminant: return "unit-determinant";
    case NegativeWitness::Kind::AbelianObstruction: return "abelian-obstruction";
    case NegativeWitness::Kind::TrivialElement: return "trivial-element";
    case NegativeWitness::Kind::NonPrimitive: return "non-primitive";
  }
  return "non-primitive";
}

Consumption& Consumption::operator+=(const Consumption& o) {
  candidates += o.candidates;
  fold_checks += o.fold_checks;
  ball_pairs += o.ball_pairs;
  elements_tested += o.elements_tested;
  substitutions += o.substitutions;
  nielsen_retries += o.nielsen_retries;
  return *this;
}

Substitution AmbientSubstitution::images(const Alphabet& ambient) const {
  if (target >= ambient.rank() || by >= ambient.rank() || target == by)
    throw DomainError("ambient substitution needs two distinct generators");
  Substitution images;
  for (std::size_t g = 0; g < ambient.rank(); ++g) images.emplace(g, Word::generator(ambient, g));
  const Word shift = Word::generator(ambient, by, power);
  const Word self = Word::generator(ambient, target);
  images.at(target) = left ? shift * self : self * shift;
  return images;
}

std::string AmbientSubstitution::describe(const Alphabet& ambient) const {
  const Word image = images(ambient).at(target);
  return ambient.name(target) + " -> " + to_string(image);
}

IntMatrix abelian_relations(std::span<const Word> tuple) {
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(tuple.size());
  for (const Word& w : tuple) rows.push_back(abelianize(w));
  return IntMatrix::from_rows(rows);
}

namespace {

void check_alphabet(const SchreierSystem& sys, std::span<const Word> tuple) {
  for (const Word& w : tuple)
    if (!(w.alphabet() == sys.alphabet())) throw AlphabetMismatch("tuple is not over the Schreier alphabet");
}

// The tuple restricted to the letters it uses. Generators outside that
// support are free loops at the base that nothing else can fold onto, so
// generates_whole for the full set reduces to the same test here.
struct LocalProblem {
  explicit LocalProblem(Alphabet a) : alphabet(std::move(a)) {}
  Alphabet alphabet;
  std::vector<std::size_t> global;  // local -> Schreier index
  std::vector<Word> words;
  // rows of the abelianized tuple over local letters
  std::vector<std::vector<std::int64_t>> abelian;
  // candidate letters in search order (local indices)
  std::vector<std::size_t> order;
};

// Callers guarantee a nonempty tuple of nontrivial words.
LocalProblem localize(const SchreierSystem& sys, std::span<const Word> tuple) {
  std::map<std::size_t, std::size_t> count;
  for (const Word& w : tuple)
    for (Letter l : w.letters()) ++count[generator_of(l)];
  std::vector<std::string> names;
  std::vector<std::size_t> global;
  std::map<std::size_t, std::size_t> to_local;
  for (const auto& [g, n] : count) {
    to_local[g] = global.size();
    global.push_back(g);
    names.push_back(sys.alphabet().name(g));
  }
  LocalProblem lp{Alphabet(std::move(names))};
  lp.global = std::move(global);
  for (const Word& w : tuple) {
    std::vector<Letter> letters;
    letters.reserve(w.length());
    for (Letter l : w.letters()) letters.push_back(make_letter(to_local.at(generator_of(l)), sign_of(l)));
    lp.words.emplace_back(lp.alphabet, std::move(letters));
    lp.abelian.push_back(abelianize(lp.words.back()));
  }
  for (std::size_t i = 0; i < lp.global.size(); ++i)
    if (count.at(lp.global[i]) == 1) lp.order.push_back(i);
  for (std::size_t i = 0; i < lp.global.size(); ++i)
    if (count.at(lp.global[i]) != 1) lp.order.push_back(i);
  return lp;
}

// Determinant of a small integer matrix by fraction-free elimination.
bool unit_minor(const LocalProblem& lp, const std::vector<std::size_t>& drop) {
  const std::size_t k = drop.size();
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m.at(i, j) = static_cast<long>(lp.abelian[i][drop[j]]);
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

bool completes(const LocalProblem& lp, const std::vector<std::size_t>& drop) {
  std::vector<std::size_t> loops;
  loops.reserve(lp.global.size());
  for (std::size_t i = 0; i < lp.global.size(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) loops.push_back(i);
  return SubgroupGraph::from_generators(lp.alphabet, lp.words, loops).generates_whole();
}

// Lexicographic k-subsets of positions 0..n-1; false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

constexpr std::size_t kBlock = 2048;

}  // namespace

std::optional<PositiveWitness> certify_free_factor(const SchreierSystem& sys, std::span<const Word> tuple,
                                                   const Budget& budget, Consumption* consumed) {
  check_alphabet(sys, tuple);
  Consumption local;
  const std::size_t k = tuple.size();
  if (tuple.empty()) return std::nullopt;
  for (const Word& w : tuple)
    if (w.empty()) return std::nullopt;
  const LocalProblem lp = localize(sys, tuple);
  const std::size_t n = lp.order.size();
  if (k == 0 || k > n) return std::nullopt;

  std::optional<PositiveWitness> found;
  std::vector<std::size_t> comb(k);
  std::iota(comb.begin(), comb.end(), std::size_t{0});
  bool more = true;
  std::vector<std::vector<std::size_t>> block;
  block.reserve(kBlock);
  while (more && !found && local.candidates < budget.candidate_cap) {
    block.clear();
    while (more && block.size() < kBlock && local.candidates < budget.candidate_cap) {
      std::vector<std::size_t> drop(k);
      for (std::size_t i = 0; i < k; ++i) drop[i] = lp.order[comb[i]];
      block.push_back(std::move(drop));
      ++local.candidates;
      more = next_combination(comb, n);
    }
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(block.size());
    std::ptrdiff_t best = count;
    std::size_t folds = 0;
    if (budget.execution == Execution::Serial) {
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        if (!unit_minor(lp, block[i])) continue;
        ++folds;
        if (completes(lp, block[i])) {
          best = i;
          break;
        }
      }
    } else {
      std::atomic<std::ptrdiff_t> shared_best{count};
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : folds)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        if (i >= shared_best.load(std::memory_order_relaxed)) continue;
        if (!unit_minor(lp, block[i])) continue;
        ++folds;
        if (completes(lp, block[i])) {
          std::ptrdiff_t cur = shared_best.load();
          while (i < cur && !shared_best.compare_exchange_weak(cur, i)) {
          }
        }
      }
      best = shared_best.load();
    }
    local.fold_checks += folds;
    if (best < count) {
      PositiveWitness w;
      for (std::size_t l : block[best]) w.removed.push_back(lp.global[l]);
      std::sort(w.removed.begin(), w.removed.end());
      found = std::move(w);
    }
  }
  if (consumed) *consumed += local;
  return found;
}

namespace {

// Obstruction carried by a single word, if any.
std::optional<NegativeWitness::Kind> obstruction(const Word& w, std::size_t support_cap, bool* tested) {
  *tested = false;
  if (w.empty()) return NegativeWitness::Kind::TrivialElement;
  const std::size_t s = support(w).size();
  if (s > support_cap) return std::nullopt;
  *tested = true;
  const SupportRestriction r = restrict_to_support(w);
  if (is_proper_power(r.word) || !is_primitive_small(r.word, support_cap)) return NegativeWitness::Kind::NonPrimitive;
  return std::nullopt;
}

NegativeWitness make_witness(NegativeWitness::Kind kind, std::vector<NielsenMove> path, std::size_t element,
                             const Word& w) {
  NegativeWitness out;
  out.kind = kind;
  out.path = std::move(path);
  out.element = element;
  out.word = w;
  out.support = support(w);
  return out;
}

}  // namespace

std::optional<NegativeWitness> certify_not_free_factor(const SchreierSystem& sys, const WordPair& pair,
                                                       const Budget& budget, Consumption* consumed) {
  const Word members[] = {pair.first, pair.second};
  check_alphabet(sys, members);
  if (budget.support_cap > kMaxWhiteheadRank) throw DomainError("support cap exceeds the Whitehead rank limit");
  Consumption local;
  const std::vector<WordPair> ball = nielsen_ball(pair, budget.nielsen_radius);
  local.ball_pairs = ball.size();

  // Flatten to (pair, element) jobs; the answer is the first obstruction in
  // this order, whichever thread finds it.
  const std::ptrdiff_t jobs = static_cast<std::ptrdiff_t>(ball.size() * 2);
  std::vector<std::optional<NegativeWitness::Kind>> kinds(ball.size() * 2);
  std::size_t tested_count = 0;
  std::ptrdiff_t best = jobs;
  auto run = [&](std::ptrdiff_t j, std::size_t& tested_acc) {
    const WordPair& p = ball[static_cast<std::size_t>(j / 2)];
    bool tested = false;
    kinds[static_cast<std::size_t>(j)] = obstruction(p.element(static_cast<std::size_t>(j % 2)), budget.support_cap, &tested);
    if (tested) ++tested_acc;
  };
  if (budget.execution == Execution::Serial) {
    for (std::ptrdiff_t j = 0; j < jobs; ++j) {
      run(j, tested_count);
      if (kinds[static_cast<std::size_t>(j)]) {
        best = j;
        break;
      }
    }
  } else {
    std::atomic<std::ptrdiff_t> shared_best{jobs};
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : tested_count)
    for (std::ptrdiff_t j = 0; j < jobs; ++j) {
      if (j >= shared_best.load(std::memory_order_relaxed)) continue;
      run(j, tested_count);
      if (kinds[static_cast<std::size_t>(j)]) {
        std::ptrdiff_t cur = shared_best.load();
        while (j < cur && !shared_best.compare_exchange_weak(cur, j)) {
        }
      }
    }
    best = shared_best.load();
  }
  local.elements_tested = tested_count;
  if (consumed) *consumed += local;
  if (best == jobs) return std::nullopt;
  const WordPair& p = ball[static_cast<std::size_t>(best / 2)];
  const std::size_t e = static_cast<std::size_t>(best % 2);
  return make_witness(*kinds[static_cast<std::size_t>(best)], p.log, e, p.element(e));
}

namespace {

std::optional<NegativeWitness> abelian_precheck(const SchreierSystem& sys, std::span<const Word> tuple) {
  IntMatrix rows(tuple.size(), sys.rank());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const auto v = abelianize(tuple[i]);
    for (std::size_t j = 0; j < v.size(); ++j) rows.at(i, j) = static_cast<long>(v[j]);
  }
  for (const Integer& d : smith_invariants(rows))
    if (d != 1) {
      NegativeWitness w;
      w.kind = NegativeWitness::Kind::AbelianObstruction;
      return w;
    }
  return std::nullopt;
}

// Members of a longer tuple are checked one at a time: each must be
// primitive if the tuple extends to a basis.
std::optional<NegativeWitness> members_obstruction(std::span<const Word> tuple, const Budget& budget,
                                                   Consumption& consumed) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    bool tested = false;
    auto kind = obstruction(tuple[i], budget.support_cap, &tested);
    if (tested) ++consumed.elements_tested;
    if (kind) return make_witness(*kind, {}, i, tuple[i]);
  }
  return std::nullopt;
}

}  // namespace

FFVerdict decide(const SchreierSystem& sys, std::span<const Word> tuple, const Budget& budget) {
  check_alphabet(sys, tuple);
  FFVerdict v;
  if (auto w = abelian_precheck(sys, tuple)) {
    v.outcome = FFOutcome::NotFreeFactor;
    v.negative = std::move(w);
    return v;
  }
  if (auto w = certify_free_factor(sys, tuple, budget, &v.consumed)) {
    v.outcome = FFOutcome::FreeFactor;
    v.positive = std::move(w);
    if (!budget.cross_check) return v;
  }

  std::optional<NegativeWitness> negative;
  std::optional<WordPair> pair;
  if (tuple.size() == 2) {
    pair.emplace(tuple[0], tuple[1]);
    negative = certify_not_free_factor(sys, *pair, budget, &v.consumed);
  } else {
    negative = members_obstruction(tuple, budget, v.consumed);
  }
  if (negative) {
    if (v.outcome == FFOutcome::FreeFactor)
      throw InternalError("free-factor certificate and obstruction found for the same tuple");
    v.outcome = FFOutcome::NotFreeFactor;
    v.negative = std::move(negative);
    return v;
  }
  if (v.outcome == FFOutcome::FreeFactor || !pair) return v;

  // Same subgroup, different words: the drop search depends on supports.
  const std::vector<WordPair> ring = nielsen_ball(*pair, 1);
  for (std::size_t i = 1; i < ring.size(); ++i) {
    ++v.consumed.nielsen_retries;
    const Word members[] = {ring[i].first, ring[i].second};
    if (auto w = certify_free_factor(sys, members, budget, &v.consumed)) {
      v.outcome = FFOutcome::FreeFactor;
      v.positive = std::move(w);
      v.preprocessing.nielsen = ring[i].log;
      return v;
    }
  }
  return v;
}

namespace {

std::vector<Word> apply_substitution(const Alphabet& ambient, std::span<const Word> tuple,
                                     const AmbientSubstitution& s) {
  const Substitution images = s.images(ambient);
  std::vector<Word> out;
  for (const Word& w : tuple) out.push_back(substitute(w, images, ambient));
  return out;
}

std::vector<Word> rewrite_all(const SchreierSystem& sys, std::span<const Word> tuple) {
  std::vector<Word> out;
  for (const Word& w : tuple) out.push_back(sys.rewrite(w));
  return out;
}

}  // namespace

AmbientDecision decide_ambient(const Alphabet& ambient, std::span<const Word> ambient_tuple, const Budget& budget) {
  AmbientDecision out;
  out.system.emplace(SchreierSystem::build(ambient, abelian_relations(ambient_tuple)));
  out.rewritten = rewrite_all(*out.system, ambient_tuple);
  out.initial_rewritten = out.rewritten;
  out.verdict = decide(*out.system, out.rewritten, budget);
  if (out.verdict.outcome != FFOutcome::Unknown) return out;

  Consumption total = out.verdict.consumed;
  for (int magnitude = 1; magnitude <= budget.substitution_max; ++magnitude)
    for (int sign : {1, -1})
      for (std::size_t target = 0; target < ambient.rank(); ++target)
        for (std::size_t by = 0; by < ambient.rank(); ++by) {
          if (by == target) continue;
          for (bool left : {true, false}) {
            const AmbientSubstitution s{target, by, sign * magnitude, left};
            ++total.substitutions;
            const std::vector<Word> moved = apply_substitution(ambient, ambient_tuple, s);
            SchreierSystem sys = SchreierSystem::build(ambient, abelian_relations(moved));
            std::vector<Word> rewritten = rewrite_all(sys, moved);
            FFVerdict v = decide(sys, rewritten, budget);
            total += v.consumed;
            if (v.outcome == FFOutcome::Unknown) continue;
            v.preprocessing.substitution = s;
            v.consumed = total;
            out.verdict = std::move(v);
            out.system.emplace(std::move(sys));
            out.rewritten = std::move(rewritten);
            return out;
          }
        }
  out.verdict.consumed = total;
  return out;
}

bool replay_positive(const SchreierSystem& sys, std::span<const Word> tuple, const PositiveWitness& witness) {
  std::vector<Word> basis(tuple.begin(), tuple.end());
  for (std::size_t x = 0; x < sys.rank(); ++x)
    if (std::find(witness.removed.begin(), witness.removed.end(), x) == witness.removed.end())
      basis.push_back(Word::generator(sys.alphabet(), x));
  if (basis.size() != sys.rank()) return false;
  return SubgroupGraph::from_generators(sys.alphabet(), basis).generates_whole();
}

bool replay_negative(const WordPair& pair, const NegativeWitness& witness) {
  if (!witness.word || witness.element > 1) return false;
  const WordPair moved = pair.replay(witness.path);
  const Word& w = moved.element(witness.element);
  if (!(w == *witness.word) || support(w) != witness.support) return false;
  if (witness.kind == NegativeWitness::Kind::TrivialElement) return w.empty();
  if (witness.kind != NegativeWitness::Kind::NonPrimitive || w.empty()) return false;
  if (witness.support.size() > kMaxWhiteheadRank) return false;
  const SupportRestriction r = restrict_to_support(w);
  return is_proper_power(r.word) || !is_primitive_small(r.word, kMaxWhiteheadRank);
}

bool replay_verdict(const Alphabet& ambient, std::span<const Word> ambient_tuple, const FFVerdict& verdict) {
  if (verdict.outcome == FFOutcome::Unknown) return true;
  if (verdict.negative && verdict.negative->kind == NegativeWitness::Kind::UnitDeterminant) {
    const IntMatrix m = abelian_relations(ambient_tuple);
    if (!m.square()) return false;
    const Integer d = determinant(m);
    return d == 1 || d == -1;
  }
  std::vector<Word> moved(ambient_tuple.begin(), ambient_tuple.end());
  if (verdict.preprocessing.substitution)
    moved = apply_substitution(ambient, ambient_tuple, *verdict.preprocessing.substitution);
  const SchreierSystem sys = SchreierSystem::build(ambient, abelian_relations(moved));
  std::vector<Word> tuple = rewrite_all(sys, moved);

  if (verdict.negative) {
    if (verdict.outcome != FFOutcome::NotFreeFactor) return false;
    const auto& w = *verdict.negative;
    if (w.kind == NegativeWitness::Kind::AbelianObstruction) return abelian_precheck(sys, tuple).has_value();
    if (tuple.size() == 2) return replay_negative(WordPair(tuple[0], tuple[1]), w);
    if (w.element >= tuple.size() || !w.path.empty()) return false;
    // A single member: same checks with an empty path on a pair holding it.
    return replay_negative(WordPair(tuple[w.element], tuple[w.element]), NegativeWitness{w.kind, {}, 0, w.word, w.support});
  }
  if (!verdict.positive || verdict.outcome != FFOutcome::FreeFactor) return false;
  if (!verdict.preprocessing.nielsen.empty()) {
    if (tuple.size() != 2) return false;
    const WordPair p = WordPair(tuple[0], tuple[1]).replay(verdict.preprocessing.nielsen);
    tuple = {p.first, p.second};
  }
  return replay_positive(sys, tuple, *verdict.positive);
}

}  // namespace pretzel
