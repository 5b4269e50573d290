#include <doctest.h>

#include <random>

#include "core/braid.hpp"

using namespace vb;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len, BraidCategory cat) {
  BraidWord w{n, cat, {}};
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int i = 0; i < len; ++i) {
    int k = kind(rng);
    GenKind gk;
    if (cat == BraidCategory::Flat)
      gk = k == 0 ? GenKind::V : GenKind::C;
    else
      gk = k == 0 ? GenKind::SigmaPos : k == 1 ? GenKind::SigmaNeg : GenKind::V;
    w.letters.push_back({gk, idx(rng)});
  }
  return w;
}

} // namespace

TEST_CASE("free_reduce cancels inverse and involutive pairs") {
  CHECK(free_reduce(parse_word("n=2 s1 S1")).letters.empty());
  CHECK(free_reduce(parse_word("n=2 v1 v1")).letters.empty());
  CHECK(free_reduce(parse_word("n=3 s1 v2 S1")) == parse_word("n=3 s1 v2 S1"));
  CHECK(free_reduce(parse_word("n=2 c1 c1 cat=flat")).letters.empty());
}

TEST_CASE("free_reduce is idempotent and order independent") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord w = random_word(rng, 4, 12, BraidCategory::Virtual);
    BraidWord r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    // right-to-left cancellation must agree with the stack pass
    BraidWord alt = invert(free_reduce(invert(w)));
    CHECK(alt == r);
  }
}

TEST_CASE("underlying permutation examples") {
  CHECK(underlying_permutation(parse_word("n=3")) == std::vector<int>{1, 2, 3});
  CHECK(underlying_permutation(parse_word("n=2 s1")) == std::vector<int>{2, 1});
  CHECK(underlying_permutation(parse_word("n=3 s1 v2")) == std::vector<int>{3, 1, 2});
}

TEST_CASE("writhe examples") {
  CHECK(writhe(parse_word("n=3 s1 S2 v1 s1")) == 1);
  CHECK(writhe(parse_word("n=3 v1 v2 v1")) == 0);
  CHECK(writhe(parse_word("n=2 S1 S1")) == -2);
}

TEST_CASE("include_right and shift_left") {
  BraidWord w = parse_word("n=2 s1");
  CHECK(include_right(w) == parse_word("n=3 s1"));
  CHECK(shift_left(parse_word("n=3 s1 v2")) == parse_word("n=4 s2 v3"));
  CHECK(shift_left(parse_word("n=1")) == parse_word("n=2"));
}

TEST_CASE("compose and invert") {
  CHECK(compose(parse_word("n=2 s1"), parse_word("n=2 v1")) == parse_word("n=2 s1 v1"));
  CHECK(invert(parse_word("n=3 s1 v1 S2")) == parse_word("n=3 s2 v1 S1"));
  CHECK_THROWS_AS(compose(parse_word("n=2 s1"), parse_word("n=3 s1")), Error);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord w = random_word(rng, 4, 9, BraidCategory::Virtual);
    CHECK(invert(invert(w)) == w);
    CHECK(free_reduce(compose(w, invert(w))).letters.empty());
  }
}

TEST_CASE("category guards on letters") {
  CHECK_THROWS_AS(parse_word("n=2 s1 cat=flat"), Error);
  CHECK_THROWS_AS(parse_word("n=2 c1"), Error); // virtual default rejects flat crossings
  CHECK_THROWS_AS(parse_word("n=2 s5"), Error);
  CHECK_NOTHROW(parse_word("n=2 c1 cat=flat"));
}

TEST_CASE("print/parse round trip is exact") {
  for (const char* s : {"n=3 s1 v2 S1", "n=2 c1 cat=flat", "n=1", "n=4 s3 v1 v1 S3 cat=welded"}) {
    BraidWord w = parse_word(s);
    CHECK(print_word(w) == s);
    CHECK(parse_word(print_word(w)) == w);
  }
}
