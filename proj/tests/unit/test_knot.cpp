#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pretzel/error.hpp"
#include "pretzel/freefactor.hpp"
#include "pretzel/knot.hpp"

using namespace pretzel;

namespace {

std::vector<std::vector<std::int64_t>> plain(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).get_si();
  return out;
}

std::vector<std::vector<std::int64_t>> rows_of(const std::vector<Word>& ws) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& w : ws) out.push_back(abelianize(w));
  return out;
}

}  // namespace

TEST_CASE("normalization") {
  const auto a = normalize({7, -5, 7});
  CHECK(a.family == KnotFamily::GenusOneTriple);
  CHECK((a.p == -3 && a.q == 3 && a.r == 3));
  CHECK(a.name() == "P(-5,7,7)");

  const auto b = normalize({-3, -5, 7});
  CHECK(b.mirrored);
  CHECK((b.p == -4 && b.q == 1 && b.r == 2));
  CHECK(b.name() == "P(-7,3,5)");

  CHECK(normalize({3, 1, 5}).two_bridge);
  CHECK(normalize({-1, 5, 7}).two_bridge);
  CHECK_FALSE(normalize({-3, 5, 7}).two_bridge);

  CHECK(parse_knot("P(5,-7,-7)").params == parse_knot("P(-5,7,7)").params);
  CHECK(parse_knot(" P( -5 , 7,9 ) ").name() == "P(-5,7,9)");
  CHECK(triple(-3, 3, 4).name() == "P(-5,7,9)");

  const auto f = parse_knot("P(3,-3,3,-3,7)");
  CHECK(f.family == KnotFamily::AlternatingSignFamily);
  CHECK((f.k == 2 && f.r == 3));
  CHECK(parse_knot("P(-3,3,-3,3,-7)").family == KnotFamily::AlternatingSignFamily);
  CHECK(alternating_family(1, 2).family == KnotFamily::AlternatingSignFamily);
  CHECK(alternating_family(1, 2).params == std::vector<long>{3, -3, 5});
  CHECK(parse_knot("P(3,5,7,9,11)").family == KnotFamily::Unsupported);

  CHECK_THROWS_AS(parse_knot("P(2,4,6)"), DomainError);
  CHECK_THROWS_AS(parse_knot("P(3,5)"), DomainError);
  CHECK_THROWS_AS(parse_knot("P(3,5,"), ParseError);
  CHECK_THROWS_AS(parse_knot("Q(3,5,7)"), ParseError);
  CHECK_THROWS_AS(parse_knot("P(3,x,7)"), ParseError);
}

TEST_CASE("Seifert matrices") {
  const auto s = seifert_matrices(parse_knot("P(-5,7,7)"));
  CHECK(s.plus == IntMatrix{{1, -4}, {-3, 7}});
  CHECK(s.minus == s.plus.transpose());
  CHECK(seifert_matrices(parse_knot("P(-3,5,7)")).plus == IntMatrix{{1, -3}, {-2, 6}});
  for (long r = 1; r <= 10; ++r) {
    CHECK(seifert_matrices(alternating_family(1, r)).plus == IntMatrix{{0, 1}, {2, r - 1}});
    const auto m = seifert_matrices(alternating_family(2, r)).plus;
    CHECK(m == IntMatrix{{0, 1, 0, 0}, {2, 0, -2, 0}, {0, -1, 0, 1}, {0, 0, 2, r - 1}});
    CHECK(abs(determinant(m)) == 4);
    CHECK(abs(determinant(seifert_matrices(alternating_family(3, r)).plus)) == 8);
  }
  CHECK_THROWS_AS(seifert_matrices(parse_knot("P(1,3,5)")), DomainError);
  CHECK_THROWS_AS(seifert_matrices(parse_knot("P(3,5,7,9,11)")), DomainError);
}

TEST_CASE("Alexander polynomials") {
  const auto j = parse_knot("P(-5,7,7)");
  CHECK(leading_coefficient(j) == -5);
  CHECK(alexander(j) == IntPolynomial{-5, 11, -5});
  CHECK(associated(alexander(parse_knot("P(-3,5,7)")), IntPolynomial{1}));
  CHECK(leading_coefficient(parse_knot("P(-3,5,7)")) == 0);
  const IntPolynomial f{2, -5, 2};
  for (int k = 1; k <= 3; ++k) {
    IntPolynomial expected{1};
    for (int i = 0; i < k; ++i) expected = expected * f;
    for (long r = 1; r <= 5; ++r) CHECK(associated(alexander(alternating_family(k, r)), expected));
  }
}

TEST_CASE("band words match the displayed generators") {
  const auto bw = boundary_generators(parse_knot("P(-5,7,7)"));
  const Alphabet& x = bw.ambient;
  CHECK(x.names() == std::vector<std::string>{"a", "b"});
  CHECK(bw.h[0] == power(parse_word("b^-1 a", x), 4) * parse_word("a^-3", x));
  CHECK(bw.h[1] == parse_word("b^4", x) * power(parse_word("a^-1 b", x), 3));
  for (long r = 1; r <= 6; ++r)
    CHECK(to_string(boundary_generators(triple(-2, 1, r)).k[0]) == "a b^-1 a^-1");
  const auto fam = boundary_generators(alternating_family(2, 3));
  CHECK(fam.ambient.names() == std::vector<std::string>{"a1", "a2", "a3", "a4"});
  CHECK(fam.h.size() == 4);
}

TEST_CASE("abelianized band words reproduce the Seifert rows") {
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<long> half(-25, 25), pos(1, 25);
  int done = 0;
  while (done < 100) {
    const PretzelKnot knot = triple(half(rng), pos(rng), pos(rng));
    if (knot.two_bridge) continue;
    ++done;
    const auto s = seifert_matrices(knot);
    const auto bw = boundary_generators(knot);
    CHECK(rows_of(bw.h) == plain(s.plus));
    CHECK(rows_of(bw.k) == plain(s.minus));
  }
  for (int k = 1; k <= 4; ++k)
    for (long r = -3; r <= 6; ++r) {
      if (r == 0 || r == -1) continue;
      const auto knot = alternating_family(k, r);
      const auto s = seifert_matrices(knot);
      const auto bw = boundary_generators(knot);
      CHECK(rows_of(bw.h) == plain(s.plus));
      CHECK(rows_of(bw.k) == plain(s.minus));
    }
}

TEST_CASE("Alexander polynomials are symmetric, normalized, and match pointwise determinants") {
  std::mt19937_64 rng(82);
  std::uniform_int_distribution<long> half(-25, 25), pos(1, 25), fam(1, 4), rr(-25, 25);
  for (int trial = 0; trial < 300; ++trial) {
    const PretzelKnot knot = trial % 4 == 3 ? alternating_family(static_cast<int>(fam(rng)), rr(rng))
                                            : triple(half(rng), pos(rng), pos(rng));
    if (knot.two_bridge) continue;
    const IntPolynomial d = alexander(knot);
    const auto s = seifert_matrices(knot);
    const std::size_t n = s.plus.rows();
    CHECK(abs(d.evaluate(1)) == 1);
    const long top = static_cast<long>(n);
    for (long i = 0; i <= top; ++i)
      CHECK(d.coefficient(static_cast<std::size_t>(i)) == d.coefficient(static_cast<std::size_t>(top - i)));
    CHECK(d.coefficient(0) == (n % 2 ? -1 : 1) * leading_coefficient(knot));
    for (long t = -2; t <= 2; ++t) {
      auto m = plain(s.plus);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = t * m[i][j] - s.plus.at(j, i).get_si();
      CHECK(d.evaluate(t) == Integer(static_cast<long>(oracle::det(m))));
    }
  }
}

TEST_CASE("prime powers and rational fiberedness") {
  CHECK(is_prime_power(5));
  CHECK_FALSE(is_prime_power(12));
  CHECK(is_prime_power(4));
  CHECK(is_prime_power(2));
  CHECK_FALSE(is_prime_power(1));
  CHECK(is_prime_power(Integer("1237940039285380274899124224")));  // 2^90
  CHECK_FALSE(is_prime_power(Integer(6) * 1000003));
  CHECK_THROWS_AS(is_prime_power(0), DomainError);
  CHECK_THROWS_AS(is_prime_power(-4), DomainError);
  for (long n = 2; n < 500; ++n) {
    long m = n, p = 2;
    while (m % p) ++p;
    while (m % p == 0) m /= p;
    CHECK(is_prime_power(n) == (m == 1));
  }
  CHECK_FALSE(rhf(parse_knot("P(-3,5,7)")));
  CHECK(rhf(parse_knot("P(-5,7,7)")));
}
