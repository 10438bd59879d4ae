#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gpd/errors.hpp"
#include "gpd/perms.hpp"

using namespace gpd;

namespace {
Polynomial zdiff(int a, int b) {
  return Polynomial::variable(VarId::z(a)) - Polynomial::variable(VarId::z(b));
}
}  // namespace

TEST_CASE("one-line basics") {
  Permutation w = Permutation::parse("2431");
  CHECK(w.inverse() == Permutation::parse("4132"));
  CHECK(w.length() == 4);
  CHECK(Permutation::parse("2,4,3,1") == w);
  CHECK(Permutation::longest(4) == Permutation::parse("4321"));
  CHECK(Permutation::longest(4).length() == 6);
  CHECK(Permutation::longest(4).compose(Permutation::longest(4)) ==
        Permutation::identity(4));
  CHECK_THROWS_AS(Permutation::parse("122"), ValidationError);
  CHECK_THROWS_AS(Permutation::parse("13"), ValidationError);
  CHECK_THROWS_AS(Permutation::parse(""), ValidationError);
}

TEST_CASE("length changes by one under right multiplication") {
  for (const auto& w : all_permutations(4)) {
    for (int a = 1; a < 4; ++a) {
      int before = w.length(), after = w.right_s(a).length();
      if (w(a) < w(a + 1))
        CHECK(after == before + 1);
      else
        CHECK(after == before - 1);
    }
  }
}

TEST_CASE("word products") {
  CHECK(word_product({}, 3) == Permutation::identity(3));
  CHECK(word_product({1, 1}, 2) == Permutation::identity(2));
  CHECK(word_product({3, 4, 2, 1, 2, 3}, 5).size() == 5);
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& q : reduced_words(w)) {
        CHECK((int)q.size() == w.length());
        CHECK(word_product(q, n) == w);
      }
}

TEST_CASE("demazure product absorbs repeats") {
  CHECK(demazure_product({1, 1}, 2) == Permutation::parse("21"));
  CHECK(demazure_product({1, 2, 1}, 3) == Permutation::parse("321"));
  CHECK(demazure_product({2, 1, 2}, 3) == Permutation::parse("321"));
  CHECK(demazure_product({1, 2, 1, 2, 1}, 3) == Permutation::parse("321"));
  // on reduced words it agrees with the ordinary product
  for (const auto& w : all_permutations(4))
    for (const auto& q : reduced_words(w))
      CHECK(demazure_product(q, 4) == w);
}

TEST_CASE("beta roots match the pinned six-letter example") {
  auto betas = beta_roots({3, 4, 2, 1, 2, 3}, 5);
  REQUIRE(betas.size() == 6);
  CHECK(betas[0] == zdiff(3, 4));
  CHECK(betas[1] == zdiff(3, 5));
  CHECK(betas[2] == zdiff(2, 4));
  CHECK(betas[3] == zdiff(1, 4));
  CHECK(betas[4] == zdiff(1, 2));
  CHECK(betas[5] == zdiff(1, 5));
}

TEST_CASE("single letter beta root") {
  for (int a = 1; a <= 3; ++a) {
    auto betas = beta_roots({a}, 4);
    REQUIRE(betas.size() == 1);
    CHECK(betas[0] == zdiff(a, a + 1));
  }
}

TEST_CASE("reduced words give positive beta roots") {
  for (int n = 2; n <= 4; ++n) {
    std::set<std::string> positive;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        positive.insert(canonical_string(zdiff(a, b)));
    for (const auto& w : all_permutations(n))
      for (const auto& q : reduced_words(w))
        for (const auto& beta : beta_roots(q, n))
          CHECK(positive.count(canonical_string(beta)) == 1);
  }
}

TEST_CASE("beta root multiset is word independent") {
  for (const auto& w : all_permutations(4)) {
    auto words = reduced_words(w);
    std::vector<std::string> reference;
    for (size_t qi = 0; qi < words.size(); ++qi) {
      std::vector<std::string> roots;
      for (const auto& beta : beta_roots(words[qi], 4))
        roots.push_back(canonical_string(beta));
      std::sort(roots.begin(), roots.end());
      if (qi == 0)
        reference = roots;
      else
        CHECK(roots == reference);
    }
  }
}

TEST_CASE("direct sum") {
  CHECK(direct_sum(Permutation::parse("12"), Permutation::parse("12")) ==
        Permutation::parse("1234"));
  CHECK(direct_sum(Permutation::parse("21"), Permutation::parse("12")) ==
        Permutation::parse("2134"));
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3))
      CHECK(direct_sum(u, v).length() == u.length() + v.length());
}

TEST_CASE("rectangle words") {
  CHECK(cut_deck_word(1) == Word{1});
  CHECK(word_product(cut_deck_word(1), 2) == Permutation::parse("21"));
  CHECK(cut_deck_word(2) == Word{2, 1, 3, 2});
  CHECK(word_product(cut_deck_word(2), 4) == Permutation::parse("3412"));
  CHECK(rect_word(1, 2) == Word{1, 2});
  CHECK(rect_word(2, 1) == Word{2, 1});
  for (int n = 1; n <= 4; ++n)
    CHECK(word_product(cut_deck_word(n), 2 * n).length() == n * n);
  // the rectangle word is reduced for every k, n up to 3
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 3; ++n)
      CHECK(word_product(rect_word(k, n), n + k).length() == n * k);
}

TEST_CASE("coset elements") {
  auto c = coset_elements(Permutation::identity(3), {1});
  CHECK(c == std::set<Permutation>{Permutation::parse("123"),
                                   Permutation::parse("213")});
  for (const auto& w : all_permutations(3)) {
    CHECK(coset_elements(w, {1, 2}).size() == 6);
    CHECK(coset_elements(w, {}) == std::set<Permutation>{w});
  }
}

TEST_CASE("partial permutation parsing and validation") {
  auto w = PartialPermutation::parse("10/00");
  CHECK(w.rows() == 2);
  CHECK(w.cols() == 2);
  CHECK(w.entry(1, 1) == 1);
  CHECK(w.entry(2, 2) == 0);
  CHECK_THROWS_AS(PartialPermutation::parse("11/00"), ValidationError);
  CHECK_THROWS_AS(PartialPermutation::parse("10/10"), ValidationError);
  CHECK_THROWS_AS(PartialPermutation::parse("1/00"), ValidationError);
  CHECK_THROWS_AS(PartialPermutation::parse("x"), ValidationError);
  auto full = PartialPermutation::of(Permutation::parse("21"));
  CHECK(full.entry(1, 2) == 1);
  CHECK(full.entry(2, 1) == 1);
}

TEST_CASE("completions") {
  auto single = completions(PartialPermutation::parse("1"));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == Permutation::parse("12"));

  auto empty = completions(PartialPermutation::parse("0"));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == Permutation::parse("21"));

  // the 2x2 partial permutation with a single NW 1
  auto c = completions(PartialPermutation::parse("10/00"));
  std::set<Permutation> got(c.begin(), c.end());
  CHECK(got == std::set<Permutation>{
                   Permutation::parse("1324"), Permutation::parse("1342"),
                   Permutation::parse("1423"), Permutation::parse("1432")});

  // full 2x2 permutation matrices complete in exactly 2 ways
  for (const auto& w : all_permutations(2))
    CHECK(completions(PartialPermutation::of(w)).size() == 2);
}
