// Obstruction words published against hand-picked free bases. Each entry is
// checked three ways: the listed words generate the same subgroup as the
// canonical Schreier basis (and are as many as its rank), the displayed
// word expands to the element computed from the band model, and the
// displayed word is not primitive in the free group on the listed basis.
#include <string>
#include <vector>

#include "doctest.h"
#include "pretzel/freefactor.hpp"
#include "pretzel/knot.hpp"
#include "pretzel/nielsen.hpp"
#include "pretzel/schreier.hpp"
#include "pretzel/subgroup_graph.hpp"

using namespace pretzel;

namespace {

struct Display {
  const char* knot;
  char side;            // 'H' or 'K'
  const char* element;  // "alpha", "beta", "beta alpha"
  const char* ambient;  // the element as printed over a, b
  std::vector<const char*> basis;
  const char* word;     // over y0, y1, ...
  // The printed ambient word is only a conjugate (in X) of the element; the
  // basis word itself still expands to the element exactly.
  bool conjugate = false;
};

Word element_of(const BoundaryWords& bw, const Display& d) {
  const auto& pair = d.side == 'H' ? bw.h : bw.k;
  const std::string e = d.element;
  if (e == "alpha") return pair[0];
  if (e == "beta") return pair[1];
  return pair[1] * pair[0];
}

void check(const Display& d) {
  CAPTURE(d.knot);
  CAPTURE(d.side);
  const PretzelKnot knot = parse_knot(d.knot);
  const BoundaryWords bw = boundary_generators(knot);
  const auto& pair = d.side == 'H' ? bw.h : bw.k;
  const Alphabet& x = bw.ambient;
  const Word printed = parse_word(d.ambient, x);
  if (d.conjugate)
    CHECK(cyclic_normal_form(printed) == cyclic_normal_form(element_of(bw, d)));
  else
    CHECK(printed == element_of(bw, d));
  const Word target = element_of(bw, d);

  std::vector<Word> basis;
  for (const char* b : d.basis) basis.push_back(parse_word(b, x));
  // H[X,X] contains [X,X], so it is normal and conjugating the printed
  // element does not move the subgroup.
  const auto sys = SchreierSystem::build(x, abelian_relations(pair));
  CHECK(basis.size() == sys.rank());
  CHECK(SubgroupGraph::from_generators(x, basis) == SubgroupGraph::from_generators(x, sys.definitions()));

  const Alphabet y = Alphabet::indexed("y", basis.size());
  Substitution images;
  for (std::size_t i = 0; i < basis.size(); ++i) images.emplace(i, basis[i]);
  const Word displayed = parse_word(d.word, y);
  CHECK(substitute(displayed, images, x) == target);
  const auto r = restrict_to_support(displayed);
  CHECK((is_proper_power(r.word) || !is_primitive_small(r.word, kMaxWhiteheadRank)));
}

}  // namespace

TEST_CASE("index two, basis a b^-1, b a b^-2, b^2") {
  const std::vector<const char*> basis{"a b^-1", "b a b^-2", "b^2"};
  check({"P(-3,5,11)", 'H', "beta", "b^6 a^-1 b a^-1 b", basis, "y2^2 y1^-2 y2"});
  check({"P(-3,7,7)", 'H', "beta", "b^4 a^-1 b a^-1 b a^-1 b", basis, "y2 y1^-3 y2"});
}

TEST_CASE("index four with x_i = b^i a b^-i") {
  const std::vector<const char*> basis{"a", "b a b^-1", "b^2 a b^-2", "b^3 a b^-3", "b^4"};
  check({"P(-5,7,25)", 'H', "beta alpha", "b^12 a^-2", basis, "y4^3 y0^-2"});
  check({"P(-5,9,15)", 'K', "beta alpha", "b^8 a^-3", basis, "y4^2 y0^-3"});
}

TEST_CASE("index two with a modified third generator") {
  // y2 = x2^-1 x1 x0 for x0 = a, x1 = b a b^-1, x2 = b^2.
  const std::vector<const char*> basis{"a", "b a b^-1", "b^-1 a b^-1 a"};
  check({"P(-5,7,13)", 'H', "alpha", "b^-1 a b^-1 a b^-1 a b^-1 a a^-3", basis, "y2^2 y0^-3"});
  check({"P(-5,7,21)", 'H', "alpha", "b^-1 a b^-1 a b^-1 a b^-1 a a^-3", basis, "y2^2 y0^-3"});
}

TEST_CASE("index three, basis a b^-1, b a b^-2, b^2 a b^-3, b^3") {
  const std::vector<const char*> basis{"a b^-1", "b a b^-2", "b^2 a b^-3", "b^3"};
  check({"P(-5,7,11)", 'H', "beta", "b^6 a^-1 b a^-1 b a^-1 b", basis, "y3 y2^-3 y3"});
  check({"P(-5,7,23)", 'H', "beta", "b^12 a^-1 b a^-1 b a^-1 b", basis, "y3^3 y2^-3 y3"});
  check({"P(-5,11,11)", 'H', "beta", "b^6 a^-1 b a^-1 b a^-1 b a^-1 b a^-1 b", basis, "y3 y2^-5 y3"});
}

TEST_CASE("index two with the a-first transversal") {
  const std::vector<const char*> basis{"b", "a b a^-1", "a^2"};
  check({"P(-5,9,9)", 'H', "beta", "b^5 a^-1 b a^-1 b a^-1 b a^-1 b", basis, "y0^5 y2^-1 y1 y0 y2^-1 y1 y0"});
  check({"P(-5,9,13)", 'H', "beta", "b^7 a^-1 b a^-1 b a^-1 b a^-1 b", basis, "y0^7 y2^-1 y1 y0 y2^-1 y1 y0"});
}

TEST_CASE("index six with powers of a") {
  check({"P(-5,9,17)", 'H', "beta", "b^9 a^-1 b a^-1 b a^-1 b a^-1 b",
         {"b a^2", "a b a", "a^2 b", "a^3 b a^-1", "a^4 b a^-2", "a^5 b a^-3", "a^6"},
         "y0 y6^-1 y4 y2 y0 y6^-1 y4 y2 y0 y6^-1 y4 y2 y6^-1 y5 y2 y6^-1 y5 y2"});
  check({"P(-5,11,13)", 'K', "beta", "b^6 a^-1 b a^-1 b a^-1 b a^-1 b a^-1 b a^-1 b",
         {"b a^-3", "a b a^-4", "a^2 b a^-5", "a^3 b a^-6", "a^4 b a^-7", "a^5 b a^-8", "a^6"},
         "y0 y3 y6 y0 y3 y6 y0 y3 y6 y0 y2 y4 y6 y0 y2 y4 y6", true});
}
