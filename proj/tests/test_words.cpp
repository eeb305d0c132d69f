#include <catch_amalgamated.hpp>

#include <random>

#include "affw/words.hpp"
#include "brute.hpp"

using namespace affw;

namespace {

const RootType kTypes[] = {RootType::A2, RootType::B2, RootType::G2};
const RootType A2 = RootType::A2;

EPSet hat(RootType t, std::vector<FiniteRoot> dirs) {
  const RootSystem& rs = RootSystem::get(t);
  EPSet s(t);
  for (FiniteRoot d : dirs) s.set(rs.index(d), LevelSet::ray(min_level(d)));
  return s;
}

bool subset(const std::set<AffineRoot>& a, const std::set<AffineRoot>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("finite words") {
  CHECK_THROWS(WBar::from_word(A2, {0, 0}));
  CHECK(WBar::from_word(A2, {1, 0, 1}).w == Word{0, 1, 0});
  for (RootType t : kTypes)
    for (const auto& e : brute::elements(t, 5)) {
      WBar x = WBar::from_word(t, e.word);
      CHECK(brute::window(inversion_set(x), 7) == brute::inversion_set(t, e.word, 7));
      CHECK(from_inversion_set(inversion_set(x)) == x);
    }
}

TEST_CASE("periodic words of the bijection example") {
  WBar u = WBar::periodic(A2, {}, {0, 1, 2});
  CHECK(u == WBar::infinite(A2, {}, kBeta));
  CHECK(inversion_set(u) == hat(A2, {{1, 0}, {1, 1}}));
  WBar v = WBar::periodic(A2, {}, {0, 1, 0, 2});
  CHECK(v == WBar::infinite(A2, {}, kNoSimple));
  CHECK(leq(u, v));
  CHECK_FALSE(leq(v, u));
  CHECK(meet(u, v) == u);
  CHECK_THROWS(WBar::periodic(A2, {}, {0, 0}));
}

TEST_CASE("an infinite word is the union of its prefixes") {
  for (RootType t : kTypes)
    for (const WBar& x : maximal_elements(t)) {
      Word p = prefix(x, 90);
      REQUIRE(p.size() == 90);
      std::set<AffineRoot> inv = brute::inversion_set(t, p, 4);
      CHECK(subset(inv, brute::window(inversion_set(x), 4)));
      CHECK(brute::window(inversion_set(x), 4) == inv);
    }
  CHECK(prefix(WBar::periodic(A2, {}, {0, 1, 2}), 9) == Word{0, 1, 2, 0, 1, 2, 0, 1, 2});
  CHECK(prefix(WBar::periodic(A2, {}, {0, 1, 0, 2}), 12) == Word{0, 1, 0, 2, 0, 1, 0, 2, 0, 1, 0, 2});
  CHECK(prefix(WBar::from_word(A2, {0, 1}), 5) == Word{0, 1});
}

TEST_CASE("maximal elements") {
  CHECK(maximal_elements(A2).size() == 6);
  CHECK(maximal_elements(RootType::B2).size() == 8);
  CHECK(maximal_elements(RootType::G2).size() == 12);
  for (RootType t : kTypes) {
    const RootSystem& rs = RootSystem::get(t);
    auto max = maximal_elements(t);
    for (std::size_t i = 0; i < max.size(); ++i) {
      CHECK(inversion_set(max[i]) == hat(t, rs.positive_systems()[i].roots));
      for (std::size_t j = 0; j < max.size(); ++j)
        if (i != j) CHECK_FALSE(leq(max[i], max[j]));
    }
  }
  // the six maximal elements, as periods
  const std::vector<std::pair<Word, std::vector<FiniteRoot>>> periods{
      {{0, 1, 0, 2}, {{1, 0}, {0, 1}, {1, 1}}},    {{2, 0, 1, 0}, {{-1, 0}, {0, -1}, {-1, -1}}},
      {{1, 2, 1, 0}, {{-1, 0}, {0, 1}, {-1, -1}}}, {{0, 1, 2, 1}, {{1, 0}, {0, -1}, {1, 1}}},
      {{1, 0, 2, 0}, {{-1, 0}, {0, 1}, {1, 1}}},   {{0, 2, 0, 1}, {{1, 0}, {0, -1}, {-1, -1}}},
  };
  std::set<WBar> listed;
  for (const auto& [period, dirs] : periods) {
    WBar x = WBar::periodic(A2, {}, period);
    CHECK(inversion_set(x) == hat(A2, dirs));
    listed.insert(x);
  }
  auto max = maximal_elements(A2);
  CHECK(listed == std::set<WBar>(max.begin(), max.end()));
}

TEST_CASE("meet of finite words is the greatest common lower bound") {
  std::mt19937 rng(5);
  for (RootType t : kTypes) {
    auto els = brute::elements(t, 5);
    std::vector<std::set<AffineRoot>> inv;
    for (const auto& e : els) inv.push_back(brute::inversion_set(t, e.word, 6));
    for (int trial = 0; trial < 150; ++trial) {
      std::size_t a = rng() % els.size(), b = rng() % els.size();
      WBar m = meet(WBar::from_word(t, els[a].word), WBar::from_word(t, els[b].word));
      auto ms = brute::window(inversion_set(m), 6);
      CHECK(subset(ms, inv[a]));
      CHECK(subset(ms, inv[b]));
      for (std::size_t c = 0; c < els.size(); ++c)
        if (subset(inv[c], inv[a]) && subset(inv[c], inv[b])) CHECK(subset(inv[c], ms));
    }
  }
}

TEST_CASE("bounded joins of finite words are least upper bounds") {
  CHECK(join_bounded({WBar::from_word(A2, {0}), WBar::from_word(A2, {1})}) == WBar::from_word(A2, {0, 1, 0}));
  // alpha and -alpha+delta force a ray in both directions
  CHECK_FALSE(join_bounded({WBar::from_word(A2, {0}), WBar::from_word(A2, {2, 1})}).has_value());
  CHECK_FALSE(bounded({WBar::from_word(A2, {0}), WBar::from_word(A2, {2, 1})}));
  std::mt19937 rng(9);
  for (RootType t : kTypes) {
    auto els = brute::elements(t, 8);
    std::vector<std::set<AffineRoot>> inv;
    for (const auto& e : els) inv.push_back(brute::inversion_set(t, e.word, 9));
    auto small = brute::elements(t, 3);
    for (int trial = 0; trial < 60; ++trial) {
      const Word& a = small[rng() % small.size()].word;
      const Word& b = small[rng() % small.size()].word;
      auto ia = brute::inversion_set(t, a, 9), ib = brute::inversion_set(t, b, 9);
      // least finite upper bound within length 8, if any
      std::optional<std::size_t> least;
      for (std::size_t c = 0; c < els.size(); ++c)
        if (subset(ia, inv[c]) && subset(ib, inv[c]) && (!least || inv[c].size() < inv[*least].size())) least = c;
      auto j = join_bounded({WBar::from_word(t, a), WBar::from_word(t, b)});
      REQUIRE(j.has_value() == bounded({WBar::from_word(t, a), WBar::from_word(t, b)}));
      if (!j) continue;
      auto js = brute::window(inversion_set(*j), 9);
      CHECK(subset(ia, js));
      CHECK(subset(ib, js));
      if (least && j->finite()) CHECK(js == inv[*least]);
    }
  }
}

TEST_CASE("products, orthogonality and max_word_below") {
  CHECK(orthogonal(WBar::from_word(A2, {0}), WBar::from_word(A2, {1})));
  CHECK_FALSE(orthogonal(WBar::from_word(A2, {0}), WBar::from_word(A2, {0, 1})));
  CHECK(times({0}, WBar::from_word(A2, {1})) == WBar::from_word(A2, {0, 1}));
  CHECK(times({0}, WBar::from_word(A2, {0, 1})) == WBar::from_word(A2, {1}));
  CHECK(times({2}, WBar::periodic(A2, {}, {0, 1, 2})) == WBar::infinite(A2, {2}, kBeta));
  CHECK(max_word_below(EPSet::full(A2)) == WBar::infinite(A2, {}, kNoSimple));
  CHECK(max_word_below(inversion_set(WBar::from_word(A2, {0, 1, 2}))) == WBar::from_word(A2, {0, 1, 2}));
  CHECK(max_word_below(EPSet(A2)) == WBar::identity(A2));
  CHECK_THROWS_AS(from_inversion_set(EPSet::full(A2)), NotInversionSet);
}
