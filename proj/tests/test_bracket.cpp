#include <doctest.h>

#include <random>

#include "core/bracket.hpp"
#include "core/relations.hpp"

using namespace vb;

TEST_CASE("closure structure basics") {
  GaussCode g = closure(parse_word("n=2"));
  CHECK(components(g) == 2);
  CHECK(g.crossing_count() == 0);

  g = closure(parse_word("n=2 s1"));
  CHECK(components(g) == 1);
  REQUIRE(g.components[0].size() == 2);
  CHECK(g.components[0][0].passage == Passage::Over);
  CHECK(g.components[0][1].passage == Passage::Under);
  CHECK(g.components[0][0].sign == 1);

  g = closure(parse_word("n=2 v1"));
  CHECK(components(g) == 1);
  CHECK(g.crossing_count() == 0);
  REQUIRE(g.virtual_record.size() == 1);
  CHECK(g.virtual_record[0].a.component == 0);
  CHECK(g.virtual_record[0].b.component == 0);

  CHECK(components(closure(parse_word("n=3"))) == 3);
  CHECK(components(closure(parse_word("n=3 s1 s2"))) == 1);
  CHECK(components(closure(parse_word("n=2 v1 v1"))) == 2);
}

TEST_CASE("closure crossing counts match letters") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> idx(1, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int t = 0; t < 100; ++t) {
    BraidWord w{4, BraidCategory::Virtual, {}};
    int sig = 0, vir = 0;
    for (int i = 0; i < 8; ++i) {
      int k = kind(rng);
      if (k == 2) { w.letters.push_back(vgen(idx(rng))); ++vir; }
      else { w.letters.push_back({k ? GenKind::SigmaNeg : GenKind::SigmaPos, idx(rng)}); ++sig; }
    }
    GaussCode g = closure(w);
    CHECK(g.crossing_count() == sig);
    CHECK(g.virtual_count() == vir);
    CHECK(components(g) == cycle_count(underlying_permutation(w)));
  }
}

TEST_CASE("bracket of unknots and kinks") {
  CHECK(normalized_bracket(parse_word("n=1")) == Laurent::one());
  CHECK(bracket_state_sum(closure(parse_word("n=1"))) == Laurent::one());
  CHECK(bracket_state_sum(closure(parse_word("n=2 s1"))) == Laurent::monomial('A', 3, -1));
  CHECK(bracket_state_sum(closure(parse_word("n=2 S1"))) == Laurent::monomial('A', -3, -1));
  CHECK(normalized_bracket(parse_word("n=2 s1")) == Laurent::one());
  CHECK(normalized_bracket(parse_word("n=2 S1")) == Laurent::one());
  // 2-component unlink
  CHECK(bracket_state_sum(closure(parse_word("n=2"))) == bracket_delta());
  // virtual kink is invisible
  CHECK(normalized_bracket(parse_word("n=2 v1")) == Laurent::one());
}

TEST_CASE("virtual trefoil bracket frozen from the 4-state enumeration") {
  // closure of s1 s1 v1: code O1+ U2+ U1+ O2+, the virtual trefoil.
  BraidWord vt = parse_word("n=2 s1 s1 v1");
  GaussCode g = closure(vt);
  CHECK(components(g) == 1);
  CHECK(g.crossing_count() == 2);
  CHECK(g.virtual_count() == 1);
  // states: AA -> 1 loop, AB -> 1, BA -> 1, BB -> 2 (worked by hand)
  Laurent expect = Laurent::monomial('A', 2) + Laurent::one() +
                   Laurent::monomial('A', -2) * bracket_delta() + Laurent::one();
  CHECK(bracket_state_sum(g) == expect);
  CHECK(expect == Laurent::parse("-1*A^-4 + 1 + A^2"));
  Laurent norm = normalized_bracket(vt);
  CHECK(norm == Laurent::parse("-1*A^-10 + A^-6 + A^-4"));
  CHECK(norm != Laurent::one()); // distinguishes it from the unknot
}

TEST_CASE("bracket rejects flat codes") {
  CHECK_THROWS_AS(bracket_state_sum(closure(parse_word("n=2 c1 cat=flat"))), Error);
}

TEST_CASE("bracket invariant under every virtual relation at every site") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> idx(1, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  auto& table = relations_for(BraidCategory::Virtual, 4);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    BraidWord w{4, BraidCategory::Virtual, {}};
    for (int i = 0; i < 8; ++i) {
      int k = kind(rng);
      w.letters.push_back(
          {k == 0 ? GenKind::SigmaPos : k == 1 ? GenKind::SigmaNeg : GenKind::V, idx(rng)});
    }
    Laurent before = bracket_state_sum(closure(w));
    for (auto& site : applicable_relations(w, table)) {
      BraidWord after = apply_relation(w, *site.rel, site.pos, site.dir);
      CAPTURE(site.rel->name);
      CHECK(bracket_state_sum(closure(after)) == before);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("flat parity map") {
  GaussCode g = closure(parse_word("n=2 c1 v1 cat=flat"));
  CHECK(components(g) == 2);
  auto parity = virtual_parity_between_components(g);
  REQUIRE(parity.size() == 1);
  CHECK(parity.begin()->second == 1);

  GaussCode unlink = closure(parse_word("n=2 cat=flat"));
  auto p2 = virtual_parity_between_components(unlink);
  REQUIRE(p2.size() == 1);
  CHECK(p2.begin()->second == 0);
}

TEST_CASE("canonical key identifies rotated codes") {
  BraidWord a = parse_word("n=3 s1 s2");
  GaussCode g = closure(a);
  // rotate component 0 by hand
  GaussCode rot = g;
  std::rotate(rot.components[0].begin(), rot.components[0].begin() + 1, rot.components[0].end());
  CHECK(canonical_key(g) == canonical_key(rot));
  CHECK(canonical_key(g) != canonical_key(closure(parse_word("n=3 s1 S2"))));
}
