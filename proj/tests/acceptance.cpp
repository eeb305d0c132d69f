// Acceptance run: one PASS/FAIL line per criterion, with the time limit each must meet.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "affw/closure.hpp"
#include "affw/oracle.hpp"
#include "brute.hpp"

using namespace affw;

namespace {

const RootType kTypes[] = {RootType::A2, RootType::B2, RootType::G2};

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool c, const std::string& what) {
    if (!c && ok) note = what;
    ok = ok && c;
  }
};

EPSet hat(RootType t, const std::vector<FiniteRoot>& dirs) {
  const RootSystem& rs = RootSystem::get(t);
  EPSet s(t);
  for (FiniteRoot d : dirs) s.set(rs.index(d), LevelSet::ray(min_level(d)));
  return s;
}

void suite_on_all_types(Outcome& o, const std::string& name, OracleParams p = {}) {
  for (RootType t : kTypes) {
    p.type = t;
    OracleReport r = run_suite(name, p);
    o.require(r.passed(), name + " failed on " + std::string(type_name(t)) + ": " + r.to_json().dump());
  }
}

void c1(Outcome& o) {
  const long long expect[] = {12, 16, 24};
  for (int i = 0; i < 3; ++i) {
    OracleParams p;
    p.type = kTypes[i];
    OracleReport r = run_suite("d_equals_h", p);
    o.require(r.passed() && r.cases == expect[i], "d_equals_h on " + std::string(type_name(kTypes[i])));
  }
}

void c2(Outcome& o) {
  for (RootType t : kTypes) {
    auto pos = brute::positive_roots(t);
    auto is_pos = [&](FiniteRoot r) { return std::find(pos.begin(), pos.end(), r) != pos.end(); };
    long long qualifying = 0;
    for (FiniteRoot x : pos)
      for (FiniteRoot y : pos)
        for (FiniteRoot z : pos) qualifying += is_pos(x + y) && is_pos(x + y + z);
    OracleParams p;
    p.type = t;
    OracleReport r = run_suite("three_root_sum", p);
    o.require(r.passed() && r.cases == qualifying, "three_root_sum on " + std::string(type_name(t)));
  }
}

void c3(Outcome& o) {
  for (RootType t : kTypes) {
    OracleParams p;
    p.type = t;
    OracleReport r = run_suite("closure_formula", p);
    o.require(r.passed() && r.cases == 12, "closure_formula on " + std::string(type_name(t)));
  }
}

void c4(Outcome& o) {
  WBar x = WBar::periodic(RootType::A2, {}, {0, 1, 2});
  EPSet s = inversion_set(x);
  o.require(canonicalize(s) == BiclosedCanonical{RootType::A2, {}, kBeta, kNoSimple}, "canonical form");
  o.require(s == hat(RootType::A2, {{1, 0}, {1, 1}}), "inversion set");
}

void c5(Outcome& o) {
  const std::size_t counts[] = {6, 8, 12};
  for (int i = 0; i < 3; ++i) {
    auto max = maximal_elements(kTypes[i]);
    o.require(max.size() == counts[i], "count for " + std::string(type_name(kTypes[i])));
  }
  const RootType A2 = RootType::A2;
  const std::vector<std::pair<Word, std::vector<FiniteRoot>>> periods{
      {{0, 1, 0, 2}, {{1, 0}, {0, 1}, {1, 1}}},    {{2, 0, 1, 0}, {{-1, 0}, {0, -1}, {-1, -1}}},
      {{1, 2, 1, 0}, {{-1, 0}, {0, 1}, {-1, -1}}}, {{0, 1, 2, 1}, {{1, 0}, {0, -1}, {1, 1}}},
      {{1, 0, 2, 0}, {{-1, 0}, {0, 1}, {1, 1}}},   {{0, 2, 0, 1}, {{1, 0}, {0, -1}, {-1, -1}}},
  };
  std::set<EPSet> from_max, from_periods, from_hats;
  std::set<BiclosedCanonical> canon_max, canon_periods;
  for (const WBar& x : maximal_elements(A2)) {
    from_max.insert(inversion_set(x));
    canon_max.insert(canonicalize(inversion_set(x)));
  }
  for (const auto& [period, dirs] : periods) {
    EPSet s = inversion_set(WBar::periodic(A2, {}, period));
    o.require(s == hat(A2, dirs), "period does not give its listed set");
    canon_periods.insert(canonicalize(s));
    from_periods.insert(s);
    from_hats.insert(hat(A2, dirs));
  }
  o.require(from_max == from_hats && from_max == from_periods, "maximal elements differ from the listed six");
  o.require(canon_max == canon_periods && canon_max.size() == 6, "canonical forms differ");
}

void c6(Outcome& o) {
  for (RootType t : kTypes) {
    std::set<BElement> pool;
    for (const Universe::Entry& e : Universe::get(t, 6).entries()) pool.insert(recognize(e.set));
    o.require(pool.size() >= 200, "sample too small for " + std::string(type_name(t)));
  }
  suite_on_all_types(o, "lattice_laws");
}

void c7(Outcome& o) {
  for (RootType t : kTypes)
    for (const Universe::Entry& e : Universe::get(t, 4).entries()) {
      const std::string label = std::string(type_name(t)) + " " + encode(e.form).dump();
      if (is_finitely_generated(e.form)) {
        auto g = generators(e.form);
        o.require(closure(t, g) == e.set, "generators do not close to " + label);
        o.require(closure_window(t, g, 20) == e.set.truncate(20), "window-20 closure differs for " + label);
        continue;
      }
      for (int level : {2, 4, 6}) {
        GenerationGap gap = generation_gap(e.form, level);
        o.require(gap.confirmed && !gap.missing.empty(), "no missing root at level " + std::to_string(level) + " for " + label);
        o.require(!(closure(t, gap.truncation) == e.set), "truncation regenerates " + label);
      }
    }
}

void c8(Outcome& o) {
  const RootType A2 = RootType::A2;
  auto R = [](int a, int b, int n) { return AffineRoot{{a, b}, n}; };
  const Order le1{R(1, 0, 0), R(0, 1, 0), R(1, 1, 1), R(1, 0, 1), R(-1, 0, 1), R(0, -1, 1), R(-1, -1, 1)};
  const Order le2{R(0, 1, 0), R(-1, 0, 1), R(1, 1, 1), R(1, 0, 1), R(-1, -1, 1), R(0, -1, 1), R(1, 0, 0)};
  BraidPath path = connect(A2, le1, le2);
  o.require(!path.moves.empty() && check_path(A2, le1, le2, path), "seven-root example path");
  for (const Move& m : path.moves) {
    Realization r = realize(A2, m.result);
    o.require(r.status == Realizability::Realized && verify_chain(A2, m.result, r.chain), "uncertified vertex");
  }
  std::vector<AffineRoot> pool = brute::affine_roots(A2, 1);
  std::sort(pool.begin(), pool.end());
  std::vector<AffineRoot> r;
  long long graphs = 0;
  std::function<void(std::size_t)> subsets = [&](std::size_t from) {
    if (!r.empty()) {
      BraidGraph g = build_braid_graph(A2, r);
      ++graphs;
      o.require(g.components == 1 && g.unknown == 0, "disconnected or undecided graph on " + encode_roots(r).dump());
    }
    if (r.size() == 4) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      r.push_back(pool[i]);
      subsets(i + 1);
      r.pop_back();
    }
  };
  subsets(0);
  o.require(pool.size() == 9 && graphs == 9 + 36 + 84 + 126, "subset count");
}

void c9(Outcome& o) {
  for (int n : {6, 10}) {
    QuasiPositiveReport q = quasi_positive_counterexample(n);
    o.require(q.contained && q.hull_matches && q.not_coclosed, "verdicts at window " + std::to_string(n));
  }
}

void c10(Outcome& o) {
  suite_on_all_types(o, "jop");
  suite_on_all_types(o, "dominance");
  suite_on_all_types(o, "distance_not_one");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"d equals h", 1, c1},
      {"three root sum", 1, c2},
      {"closure formula", 10, c3},
      {"periodic word bijection example", 1, c4},
      {"maximal elements", 5, c5},
      {"ortholattice laws", 120, c6},
      {"finitely generated classification", 120, c7},
      {"braid graph connectivity", 300, c8},
      {"quasi-positive counterexample", 1, c9},
      {"structural properties", 60, c10},
  };
  int failed = 0;
  for (int i = 0; i < 10; ++i) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= criteria[i].limit) o.require(false, "over time");
    std::printf("%s %2d %-36s %8.3fs (limit %gs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                criteria[i].limit, o.ok ? "" : " : ", o.note.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
