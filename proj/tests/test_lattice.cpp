#include <catch_amalgamated.hpp>

#include <random>

#include "affw/lattice.hpp"
#include "brute.hpp"

using namespace affw;

namespace {

const RootType kTypes[] = {RootType::A2, RootType::B2, RootType::G2};
const RootType A2 = RootType::A2;

BElement inv(const Word& w) { return BElement::inv(WBar::from_word(A2, w)); }
BElement co(const Word& w) { return BElement::co(WBar::from_word(A2, w)); }

std::vector<BElement> sample(RootType t, int len) {
  std::set<BElement> out;
  for (const auto& e : Universe::get(t, len).entries()) out.insert(recognize(e.set));
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("recognition") {
  for (RootType t : kTypes)
    for (const auto& e : Universe::get(t, 5).entries()) {
      BElement b = recognize(e.set);
      CHECK(to_epset(b) == e.set);
      CHECK(normalize(b) == b);
    }
  // hat(Phi+) is both Phi_x and Phi_y' and is stored as Inv
  BElement h = recognize(base_set(A2, kNoSimple, kNoSimple));
  CHECK_FALSE(h.coinv);
  CHECK(normalize(BElement::co(h.x)) != h);
  CHECK_THROWS_AS(recognize(EPSet::from_roots(A2, {{{1, 0}, 0}, {{0, 1}, 0}})), NotBiclosed);
}

TEST_CASE("complement") {
  CHECK(complement(bottom_element(A2)) == top_element(A2));
  CHECK(complement(inv({0})) == co({0}));
  CHECK(complement(complement(inv({0, 2}))) == inv({0, 2}));
  // the complement of hat(Phi+) is hat(-Phi+), the maximal word of the opposite system
  BElement h = recognize(base_set(A2, kNoSimple, kNoSimple));
  BElement c = complement(h);
  CHECK_FALSE(c.coinv);
  CHECK(to_epset(c) == base_set(A2, kNoSimple, kNoSimple).complement());
}

TEST_CASE("join and meet examples") {
  CHECK(join(inv({0}), inv({1})) == inv({0, 1, 0}));
  CHECK(join(co({0, 1}), co({0, 2})) == co({0}));
  CHECK(meet(inv({0, 1}), inv({0, 2})) == inv({0}));
  CHECK(meet(inv({0, 1}), top_element(A2)) == inv({0, 1}));
  // alpha and -alpha+delta: no word lies above both, so the join is a complement
  BElement j = join(inv({0}), inv({2, 1}));
  CHECK(j.coinv);
  CHECK(to_epset(j).includes(to_epset(inv({0}))));
  CHECK(to_epset(j).includes(to_epset(inv({2, 1}))));
  for (const BElement& b : {inv({}), inv({0, 1}), co({2}), recognize(base_set(A2, kBeta, kNoSimple))}) {
    CHECK(join(b, complement(b)) == top_element(A2));
    CHECK(meet(b, complement(b)) == bottom_element(A2));
  }
}

TEST_CASE("lattice laws on sampled elements") {
  std::mt19937 rng(2);
  for (RootType t : kTypes) {
    auto pool = sample(t, 4);
    std::vector<EPSet> sets;
    for (const auto& b : pool) sets.push_back(to_epset(b));
    for (int trial = 0; trial < 150; ++trial) {
      std::size_t a = rng() % pool.size(), b = rng() % pool.size();
      BElement j = join(pool[a], pool[b]), m = meet(pool[a], pool[b]);
      CHECK(j == join(pool[b], pool[a]));
      CHECK(m == meet(pool[b], pool[a]));
      CHECK(join(pool[a], m) == pool[a]);
      CHECK(meet(pool[a], j) == pool[a]);
      EPSet js = to_epset(j), ms = to_epset(m);
      CHECK(brute::biclosed(t, brute::window(js, 6), 6));
      CHECK(brute::biclosed(t, brute::window(ms, 6), 6));
      for (const EPSet& c : sets) {
        if (c.includes(sets[a]) && c.includes(sets[b])) CHECK(c.includes(js));
        if (sets[a].includes(c) && sets[b].includes(c)) CHECK(ms.includes(c));
      }
      CHECK(leq(pool[a], pool[b]) == leq(complement(pool[b]), complement(pool[a])));
    }
  }
}

TEST_CASE("chains") {
  WBar u = WBar::periodic(A2, {}, {0, 1, 2});
  std::vector<BElement> up, down;
  for (int k = 0; k <= 30; ++k) {
    up.push_back(BElement::inv(WBar::from_word(A2, prefix(u, k))));
    down.push_back(complement(up.back()));
  }
  BElement top = chain_union(up);
  CHECK(top == up.back());
  CHECK(brute::window(to_epset(top), 3) == brute::window(inversion_set(u), 3));
  CHECK(chain_intersection(down) == down.back());
  CHECK(chain_union({inv({0})}) == inv({0}));
  CHECK_THROWS_AS(chain_union({inv({0}), inv({1})}), std::invalid_argument);
  // descending complements of maximal words
  std::vector<BElement> desc{complement(BElement::inv(u)), complement(BElement::inv(WBar::periodic(A2, {}, {0, 1, 0, 2})))};
  BElement low = chain_intersection(desc);
  CHECK(brute::biclosed(A2, brute::window(to_epset(low), 8), 8));
}

TEST_CASE("finite closure join") {
  CHECK(finite_closure_join(A2, {{0}}) == inv({0}));
  CHECK(finite_closure_join(A2, {{0}, {1}}) == inv({0, 1, 0}));
  CHECK_FALSE(finite_closure_join(A2, {{0}, {2, 1}}).has_value());
}

TEST_CASE("quasi-positive counterexample") {
  for (int n : {6, 10}) {
    QuasiPositiveReport q = quasi_positive_counterexample(n);
    CHECK(q.contained);
    CHECK(q.hull_matches);
    CHECK(q.not_coclosed);
    CHECK(q.witness_a.dir + q.witness_b.dir == q.witness_sum.dir);
    CHECK(q.witness_a.level + q.witness_b.level == q.witness_sum.level);
  }
}
