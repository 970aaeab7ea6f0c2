#include <random>

#include "convert.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "pretzel/error.hpp"
#include "pretzel/schreier.hpp"

using namespace pretzel;
using testing_support::ab;
using testing_support::from_oracle;
using testing_support::to_oracle;

namespace {

std::vector<std::string> printed_definitions(const SchreierSystem& sys) {
  std::vector<std::string> out;
  for (const auto& d : sys.definitions()) out.push_back(to_string(d));
  return out;
}

}  // namespace

TEST_CASE("index two basis") {
  const auto sys = SchreierSystem::build(ab(), IntMatrix{{1, 0}, {0, 2}});
  CHECK(sys.index() == 2);
  CHECK(printed_definitions(sys) == std::vector<std::string>{"a", "b a b^-1", "b^2"});
  CHECK(sys.alphabet().names() == std::vector<std::string>{"x0", "x1", "x2"});
}

TEST_CASE("index four basis") {
  const auto sys = SchreierSystem::build(ab(), IntMatrix{{1, -4}, {-3, 8}});
  CHECK(sys.index() == 4);
  CHECK(printed_definitions(sys) ==
        std::vector<std::string>{"a", "b a b^-1", "b^2 a b^-2", "b^3 a b^-3", "b^4"});

  const Alphabet x = ab();
  const Word alpha = power(parse_word("b^-1 a", x), 4) * parse_word("a^-3", x);
  const Word beta = parse_word("b^5", x) * power(parse_word("a^-1 b", x), 3);
  CHECK(to_string(sys.rewrite(alpha)) == "x4^-1 x3 x2 x1 x0^-2");
  CHECK(to_string(sys.rewrite(beta)) == "x4 x1^-1 x2^-1 x3^-1 x4");
  CHECK(sys.expand(parse_word("x4^-1 x3 x2 x1 x0^-2", sys.alphabet())) == alpha);
  CHECK(sys.rewrite(Word(x)).empty());
  CHECK(sys.expand(Word(sys.alphabet())).empty());
}

TEST_CASE("index five transversal") {
  const auto sys = SchreierSystem::build(ab(), IntMatrix{{1, -4}, {-3, 7}});
  CHECK(sys.index() == 5);
  CHECK(sys.rank() == 6);
  for (std::size_t c = 0; c < 5; ++c) CHECK(sys.transversal(c) == Word::generator(ab(), 1, static_cast<long>(c)));
}

TEST_CASE("trivial quotient") {
  const auto sys = SchreierSystem::build(ab(), IntMatrix{{1, 0}, {0, 1}});
  CHECK(sys.index() == 1);
  CHECK(sys.rank() == 2);
  CHECK(sys.transversal(0).empty());
  CHECK(printed_definitions(sys) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(SchreierSystem::build(ab(), IntMatrix(2, 2)), DomainError);
  CHECK_THROWS_AS(SchreierSystem::build(ab(), IntMatrix{{1, 0, 0}}), DomainError);
  const auto sys = SchreierSystem::build(ab(), IntMatrix{{2, 0}, {0, 1}});
  CHECK_THROWS_AS(sys.rewrite(parse_word("a", ab())), DomainError);
  CHECK_THROWS_AS(sys.expand(parse_word("a", ab())), AlphabetMismatch);
}

TEST_CASE("random systems: rank formula, membership, round trips") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> entry(-4, 4);
  int built = 0;
  while (built < 150) {
    const std::size_t n = 2 + static_cast<std::size_t>(built % 2);
    IntMatrix m(n, n);
    std::vector<std::vector<std::int64_t>> plain(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) plain[i][j] = (m.at(i, j) = entry(rng)).get_si();
    const auto d = oracle::det(plain);
    if (d == 0 || std::abs(d) > 40) continue;
    ++built;
    const Alphabet amb = Alphabet::indexed("g", n);
    const auto sys = SchreierSystem::build(amb, m);
    CHECK(sys.index() == static_cast<std::size_t>(std::abs(d)));
    CHECK(sys.rank() == sys.index() * (n - 1) + 1);
    for (const auto& def : sys.definitions()) CHECK(sys.contains(def));

    for (int k = 0; k < 20; ++k) {
      const auto o = oracle::random_word(rng, static_cast<int>(n), 12);
      const Word w = from_oracle(amb, o);
      std::vector<std::int64_t> ab_vec(n, 0);
      for (int l : o) ab_vec[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
      CHECK(sys.contains(w) == oracle::in_lattice(plain, ab_vec));
      // Correct w into the kernel with the transversal and round-trip it.
      const Word kernel = w * invert(sys.transversal(sys.coset_of(w)));
      REQUIRE(sys.contains(kernel));
      CHECK(sys.expand(sys.rewrite(kernel)) == kernel);
      // Folding the definitions recognizes the same kernel word. The naive
      // oracle fold is quadratic, so only small systems go through it.
      if (sys.index() <= 12)
        CHECK(oracle::folded_contains(static_cast<int>(n), testing_support::to_oracle(sys.definitions()),
                                    to_oracle(kernel)));
    }
    if (sys.index() > 12) continue;
    const auto [vertices, full] =
        oracle::folded_index(static_cast<int>(n), testing_support::to_oracle(sys.definitions()));
    CHECK(full);
    CHECK(vertices == sys.index());
  }
}
