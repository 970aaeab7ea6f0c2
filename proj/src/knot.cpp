#include "pretzel/knot.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>

#include "pretzel/error.hpp"

namespace pretzel {

std::string PretzelKnot::name() const {
  std::string out = "P(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  return out + ")";
}

namespace {

bool matches_family(const std::vector<long>& v) {
  if (v.size() < 3 || v.size() % 2 == 0) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] != (i % 2 == 0 ? 3 : -3)) return false;
  return true;
}

void set_flags(PretzelKnot& knot) {
  knot.two_bridge = std::any_of(knot.params.begin(), knot.params.end(), [](long x) { return x == 1 || x == -1; });
}

}  // namespace

PretzelKnot normalize(std::vector<long> params) {
  if (params.size() < 3) throw DomainError("a pretzel knot needs at least three parameters");
  for (long x : params)
    if (x % 2 == 0) throw DomainError("pretzel parameter " + std::to_string(x) + " is even");

  PretzelKnot knot;
  if (params.size() == 3) {
    const auto strongly_negative = std::count_if(params.begin(), params.end(), [](long x) { return x <= -3; });
    if (strongly_negative >= 2) {
      knot.mirrored = true;
      for (long& x : params) x = -x;
    }
    // Negative entries first, then ascending; this is plain ascending order.
    std::sort(params.begin(), params.end());
    knot.params = params;
    knot.family = KnotFamily::GenusOneTriple;
    knot.p = (params[0] - 1) / 2;
    knot.q = (params[1] - 1) / 2;
    knot.r = (params[2] - 1) / 2;
    set_flags(knot);
    return knot;
  }

  std::vector<long> negated(params.size());
  std::transform(params.begin(), params.end(), negated.begin(), [](long x) { return -x; });
  if (!matches_family(params) && matches_family(negated)) {
    knot.mirrored = true;
    params = negated;
  }
  knot.params = params;
  if (matches_family(params)) {
    knot.family = KnotFamily::AlternatingSignFamily;
    knot.k = static_cast<int>(params.size() / 2);
    knot.r = (params.back() - 1) / 2;
  }
  set_flags(knot);
  return knot;
}

PretzelKnot triple(long p, long q, long r) { return normalize({2 * p + 1, 2 * q + 1, 2 * r + 1}); }

PretzelKnot alternating_family(int k, long r) {
  if (k < 1) throw DomainError("the alternating-sign family needs k >= 1");
  PretzelKnot knot;
  for (int i = 0; i < k; ++i) {
    knot.params.push_back(3);
    knot.params.push_back(-3);
  }
  knot.params.push_back(2 * r + 1);
  knot.family = KnotFamily::AlternatingSignFamily;
  knot.k = k;
  knot.r = r;
  set_flags(knot);
  return knot;
}

PretzelKnot parse_knot(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.size() < 3 || (compact[0] != 'P' && compact[0] != 'p') || compact[1] != '(' || compact.back() != ')')
    throw ParseError("expected P(k1,k2,...): '" + std::string(text) + "'");
  std::vector<long> params;
  std::string_view body(compact);
  body = body.substr(2, body.size() - 3);
  while (true) {
    const std::size_t comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ParseError("bad pretzel parameter '" + std::string(item) + "'");
    params.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return normalize(std::move(params));
}

namespace {

void require_analyzable(const PretzelKnot& knot) {
  if (knot.family == KnotFamily::Unsupported)
    throw DomainError(knot.name() + " is outside the analyzed families");
  if (knot.two_bridge && knot.family == KnotFamily::GenusOneTriple)
    throw DomainError(knot.name() + " is two-bridge (a parameter is +-1)");
}

}  // namespace

SeifertPair seifert_matrices(const PretzelKnot& knot) {
  require_analyzable(knot);
  if (knot.family == KnotFamily::GenusOneTriple) {
    const long p = knot.p, q = knot.q, r = knot.r;
    IntMatrix plus{{p + q + 1, -q - 1}, {-q, q + r + 1}};
    return {plus, plus.transpose()};
  }
  const std::size_t n = 2 * static_cast<std::size_t>(knot.k);
  IntMatrix plus(n, n);
  // Rows are 1-based in the comments: odd row 2i-1 is (-1 at 2i-2, 1 at 2i),
  // even row 2i is (2 at 2i-1, -2 at 2i+1), and the last row is (2, r-1).
  for (std::size_t row = 1; row <= n; ++row) {
    if (row == n) {
      plus.at(row - 1, row - 2) = 2;
      plus.at(row - 1, row - 1) = knot.r - 1;
    } else if (row % 2 == 1) {
      if (row >= 3) plus.at(row - 1, row - 2) = -1;
      plus.at(row - 1, row) = 1;
    } else {
      plus.at(row - 1, row - 2) = 2;
      plus.at(row - 1, row) = -2;
    }
  }
  return {plus, plus.transpose()};
}

IntPolynomial alexander(const PretzelKnot& knot) {
  const SeifertPair s = seifert_matrices(knot);
  return pencil_determinant(s.plus, s.minus);
}

Integer leading_coefficient(const PretzelKnot& knot) { return determinant(seifert_matrices(knot).plus); }

BoundaryWords band_words(const std::vector<long>& params) {
  const std::size_t n = params.size();
  if (n < 2) throw DomainError("need at least two bands");
  const Alphabet ambient = n - 1 == 2 ? Alphabet({"a", "b"}) : Alphabet::indexed("a", n - 1, 1);
  const Word one(ambient);
  // Hole h (1..n-1) is generator h-1; holes 0 and n are trivial.
  auto hole = [&](std::size_t h) { return h == 0 || h == n ? one : Word::generator(ambient, h - 1); };
  auto half = [](long k) { return (k - 1) / 2; };

  BoundaryWords out{ambient, {}, {}};
  for (std::size_t j = 1; j < n; ++j) {
    // Loop j: band j+1 (holes j, j+1) downwards, band j (holes j-1, j) upwards.
    const long m_down = half(params[j]);
    const long m_up = half(params[j - 1]);
    const Word dl = hole(j), dr = hole(j + 1);
    const Word ul = hole(j - 1), ur = hole(j);
    out.h.push_back(power(invert(dr) * dl, m_down + 1) * power(invert(ul) * ur, m_up));
    out.k.push_back(power(dl * invert(dr), m_down) * power(ur * invert(ul), m_up + 1));
  }
  return out;
}

BoundaryWords boundary_generators(const PretzelKnot& knot) {
  require_analyzable(knot);
  return band_words(knot.params);
}

bool is_prime_power(const Integer& n) {
  if (n <= 0) throw DomainError("prime-power test needs a positive integer");
  if (n == 1) return false;
  Integer m = n;
  for (Integer d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    while (m % d == 0) m /= d;
    return m == 1;
  }
  return true;
}

bool rhf(const PretzelKnot& knot) { return leading_coefficient(knot) != 0; }

}  // namespace pretzel
