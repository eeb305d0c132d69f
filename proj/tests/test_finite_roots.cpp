#include <catch_amalgamated.hpp>

#include <functional>

#include "affw/finite_roots.hpp"
#include "brute.hpp"

using namespace affw;

namespace {

const RootType kTypes[] = {RootType::A2, RootType::B2, RootType::G2};

// Largest n with v a sum of n members of s, or -1.
int max_decomposition(FiniteRoot v, const std::vector<FiniteRoot>& s) {
  std::function<int(FiniteRoot)> go = [&](FiniteRoot x) -> int {
    if (x.a == 0 && x.b == 0) return 0;
    int best = -1;
    for (FiniteRoot r : s) {
      FiniteRoot y = x - r;
      if (y.a < 0 || y.b < 0) continue;
      int sub = go(y);
      if (sub >= 0) best = std::max(best, sub + 1);
    }
    return best;
  };
  return go(v);
}

bool brute_closed(RootType t, const std::vector<FiniteRoot>& set) {
  auto all = brute::roots(t);
  for (FiniteRoot x : set)
    for (FiniteRoot y : set)
      for (FiniteRoot z : all) {
        if (std::find(set.begin(), set.end(), z) != set.end()) continue;
        long long det = 1LL * x.a * y.b - 1LL * x.b * y.a;
        if (det == 0) {
          if (z == x || z == y) return false;
          continue;
        }
        long long k1 = 1LL * z.a * y.b - 1LL * z.b * y.a, k2 = 1LL * x.a * z.b - 1LL * x.b * z.a;
        if (det < 0) k1 = -k1, k2 = -k2;
        if (k1 >= 0 && k2 >= 0) return false;
      }
  return true;
}

std::vector<FiniteRoot> sorted(std::vector<FiniteRoot> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("root lists match the lattice vectors of root length") {
  for (RootType t : kTypes) {
    const RootSystem& rs = RootSystem::get(t);
    CHECK(sorted(rs.roots()) == sorted(brute::roots(t)));
    CHECK(sorted(rs.positive()) == sorted(brute::positive_roots(t)));
  }
  CHECK(RootSystem::get(RootType::A2).size() == 6);
  CHECK(RootSystem::get(RootType::B2).size() == 8);
  CHECK(RootSystem::get(RootType::G2).size() == 12);
  CHECK(RootSystem::get(RootType::A2).highest() == FiniteRoot{1, 1});
  CHECK(RootSystem::get(RootType::B2).highest() == FiniteRoot{2, 1});
  CHECK(RootSystem::get(RootType::G2).highest() == FiniteRoot{3, 2});
}

TEST_CASE("root list is closed under simple reflections from the simple roots") {
  for (RootType t : kTypes) {
    std::vector<FiniteRoot> orbit{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (FiniteRoot m : {FiniteRoot{1, 0}, FiniteRoot{0, 1}}) {
        FiniteRoot r = brute::reflect(t, m, orbit[i]);
        if (std::find(orbit.begin(), orbit.end(), r) == orbit.end()) orbit.push_back(r);
      }
    CHECK(sorted(orbit) == sorted(RootSystem::get(t).roots()));
  }
}

TEST_CASE("cartan matrices") {
  using C = std::array<std::array<int, 2>, 2>;
  CHECK(RootSystem::get(RootType::A2).cartan() == C{{{2, -1}, {-1, 2}}});
  CHECK(RootSystem::get(RootType::B2).cartan() == C{{{2, -2}, {-1, 2}}});
  CHECK(RootSystem::get(RootType::G2).cartan() == C{{{2, -3}, {-1, 2}}});
}

TEST_CASE("reflect") {
  const RootSystem& a2 = RootSystem::get(RootType::A2);
  const RootSystem& g2 = RootSystem::get(RootType::G2);
  CHECK(a2.reflect({1, 0}, {1, 0}) == FiniteRoot{-1, 0});
  CHECK(a2.reflect({1, 0}, {0, 1}) == FiniteRoot{1, 1});
  CHECK(g2.reflect({1, 0}, {0, 1}) == FiniteRoot{3, 1});
  for (RootType t : kTypes) {
    const RootSystem& rs = RootSystem::get(t);
    for (FiniteRoot m : rs.roots())
      for (FiniteRoot x : rs.roots()) {
        FiniteRoot y = rs.reflect(m, x);
        CHECK(y == brute::reflect(t, m, x));
        CHECK(rs.is_root(y));
        CHECK(rs.reflect(m, y) == x);
      }
  }
}

TEST_CASE("h_L and d_L") {
  const RootSystem& a2 = RootSystem::get(RootType::A2);
  const RootSystem& g2 = RootSystem::get(RootType::G2);
  CHECK(h_L(a2, {1, 1}, kBeta) == 1);
  CHECK(h_L(a2, {1, 1}, kNoSimple) == 2);
  CHECK(h_L(g2, {3, 2}, kNoSimple) == 5);
  CHECK(d_L(a2, {0, 1}, kBeta) == 0);
  CHECK(d_L(a2, {1, 1}, kBeta) == 1);
  CHECK(d_L(g2, {3, 2}, kBeta) == 3);
  CHECK_THROWS_AS(h_L(a2, {-1, 0}, kNoSimple), std::invalid_argument);
  CHECK_THROWS_AS(d_L(a2, {-1, -1}, kNoSimple), std::invalid_argument);
}

TEST_CASE("d_L equals h_L and an independent decomposition count") {
  int cases = 0;
  for (RootType t : kTypes) {
    const RootSystem& rs = RootSystem::get(t);
    for (SimpleSet L = 0; L < 4; ++L) {
      std::vector<FiniteRoot> outside;
      for (FiniteRoot r : brute::positive_roots(t))
        if (!in_span(r, L)) outside.push_back(r);
      for (FiniteRoot r : rs.positive()) {
        int expect = in_span(r, L) ? 0 : max_decomposition(r, outside);
        CHECK(d_L(rs, r, L) == expect);
        CHECK(h_L(rs, r, L) == expect);
        ++cases;
      }
    }
  }
  CHECK(cases == 3 * 4 + 4 * 4 + 6 * 4);
}

TEST_CASE("three-root sums") {
  for (RootType t : kTypes) {
    auto pos = brute::positive_roots(t);
    auto in = [&](FiniteRoot r) { return std::find(pos.begin(), pos.end(), r) != pos.end(); };
    int qualifying = 0;
    for (FiniteRoot x : pos)
      for (FiniteRoot y : pos)
        for (FiniteRoot z : pos)
          if (in(x + y) && in(x + y + z)) {
            ++qualifying;
            CHECK((in(x + z) || in(y + z)));
          }
    if (t != RootType::A2) CHECK(qualifying > 0);
  }
}

TEST_CASE("phi biclosed sets") {
  const RootSystem& a2 = RootSystem::get(RootType::A2);
  auto pb = make_phi_biclosed(a2, 0, kAlpha, kNoSimple);
  CHECK(sorted(phi_biclosed_set(a2, pb)) == sorted({{0, 1}, {1, 1}}));
  auto plain = make_phi_biclosed(a2, 0, kNoSimple, kNoSimple);
  CHECK(sorted(phi_biclosed_set(a2, plain)) == sorted(a2.positive()));
  CHECK(is_biclosed_in_phi(a2, a2.positive()));
  CHECK_FALSE(is_biclosed_in_phi(a2, {{1, 0}, {0, 1}}));
  CHECK_THROWS_AS(make_phi_biclosed(a2, 0, kAlpha, kBeta), std::invalid_argument);
}

TEST_CASE("biclosed subsets of Phi are exactly the Psi+_{D1,D2}") {
  for (RootType t : kTypes) {
    const RootSystem& rs = RootSystem::get(t);
    const auto& all = rs.roots();
    std::set<std::vector<FiniteRoot>> by_formula, by_search;
    for (int sys = 0; sys < static_cast<int>(rs.positive_systems().size()); ++sys)
      for (SimpleSet d1 = 0; d1 < 4; ++d1)
        for (SimpleSet d2 = 0; d2 < 4; ++d2) {
          if (!orthogonal(rs, rs.positive_systems()[sys], d1, d2)) continue;
          auto s = sorted(phi_biclosed_set(rs, make_phi_biclosed(rs, sys, d1, d2)));
          CHECK(is_biclosed_in_phi(rs, s));
          by_formula.insert(s);
        }
    for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<FiniteRoot> s, c;
      for (std::size_t i = 0; i < all.size(); ++i) (mask >> i & 1 ? s : c).push_back(all[i]);
      bool bic = brute_closed(t, s) && brute_closed(t, c);
      CHECK(is_biclosed_in_phi(rs, s) == bic);
      if (bic) {
        by_search.insert(sorted(s));
        PhiBiclosed pb;
        REQUIRE(classify_phi_biclosed(rs, s, pb));
        CHECK(sorted(phi_biclosed_set(rs, pb)) == sorted(s));
      }
    }
    CHECK(by_formula == by_search);
  }
}
