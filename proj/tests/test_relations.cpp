#include <doctest.h>

#include <random>

#include "core/relations.hpp"

using namespace vb;

TEST_CASE("every relation preserves permutation and writhe") {
  for (auto cat : {BraidCategory::Virtual, BraidCategory::Flat, BraidCategory::Welded,
                   BraidCategory::Unrestricted}) {
    for (int n = 2; n <= 5; ++n) {
      for (const auto& rel : relations_for(cat, n)) {
        BraidWord lhs{n, cat, rel.lhs};
        BraidWord rhs{n, cat, rel.rhs};
        CAPTURE(rel.name);
        CHECK(underlying_permutation(lhs) == underlying_permutation(rhs));
        CHECK(writhe(lhs) == writhe(rhs));
      }
    }
  }
}

TEST_CASE("special detour example") {
  auto rel = find_relation(BraidCategory::Virtual, 3, "special-detour:p:1");
  REQUIRE(rel.has_value());
  BraidWord w = parse_word("n=3 v1 s2 v1");
  CHECK(apply_relation(w, *rel, 0, Direction::Forward) == parse_word("n=3 v2 s1 v2"));
}

TEST_CASE("F1 example and category guard") {
  auto rel = find_relation(BraidCategory::Welded, 3, "F1:1");
  REQUIRE(rel.has_value());
  BraidWord w = parse_word("n=3 v1 s2 s1 cat=welded");
  CHECK(apply_relation(w, *rel, 0, Direction::Forward) ==
        parse_word("n=3 s2 s1 v2 cat=welded"));

  BraidWord wv = parse_word("n=3 v1 s2 s1");
  CHECK_THROWS_WITH_AS(apply_relation(wv, *rel, 0, Direction::Forward),
                       doctest::Contains("CategoryViolation"), Error);
}

TEST_CASE("flat detour is one-sided") {
  // v across c is a relation; c across v must not be in the table.
  auto& table = relations_for(BraidCategory::Flat, 3);
  bool found_legal = false;
  for (auto& rel : table) {
    if (rel.lhs == std::vector<Generator>{cgen(1), vgen(2), cgen(1)} ||
        rel.rhs == std::vector<Generator>{cgen(1), vgen(2), cgen(1)})
      FAIL("forbidden flat detour present: " << rel.name);
    if (rel.lhs == std::vector<Generator>{vgen(1), cgen(2), vgen(1)}) found_legal = true;
  }
  CHECK(found_legal);
}

TEST_CASE("apply then reverse restores the word") {
  std::mt19937 rng(23);
  for (auto cat : {BraidCategory::Virtual, BraidCategory::Flat, BraidCategory::Welded,
                   BraidCategory::Unrestricted}) {
    int n = 4;
    auto& table = relations_for(cat, n);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 120; ++trial) {
      BraidWord w{n, cat, {}};
      std::uniform_int_distribution<int> idx(1, n - 1);
      for (int i = 0; i < 9; ++i) {
        int k = pick(rng);
        GenKind gk = cat == BraidCategory::Flat
                         ? (k == 0 ? GenKind::V : GenKind::C)
                         : (k == 0 ? GenKind::SigmaPos : k == 1 ? GenKind::SigmaNeg : GenKind::V);
        w.letters.push_back({gk, idx(rng)});
      }
      auto sites = applicable_relations(w, table);
      for (auto& site : sites) {
        BraidWord after = apply_relation(w, *site.rel, site.pos, site.dir);
        Direction back = site.dir == Direction::Forward ? Direction::Backward : Direction::Forward;
        CHECK(apply_relation(after, *site.rel, site.pos, back) == w);
      }
    }
  }
}

TEST_CASE("no-match errors") {
  auto rel = find_relation(BraidCategory::Virtual, 3, "special-detour:p:1");
  REQUIRE(rel.has_value());
  CHECK_THROWS_AS(apply_relation(parse_word("n=3 s1 s2 s1"), *rel, 0, Direction::Forward), Error);
  CHECK_THROWS_AS(apply_relation(parse_word("n=3 v1"), *rel, 0, Direction::Forward), Error);
}
