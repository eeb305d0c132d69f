#include "affw/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "affw/closure.hpp"

namespace affw {

namespace {

constexpr std::size_t kKeptFailures = 20;

struct Run {
  OracleReport& report;

  void check(bool ok, const std::function<Json()>& payload) {
    ++report.cases;
    if (ok) return;
    ++report.failure_count;
    if (report.failures.size() < kKeptFailures) report.failures.push_back(payload());
  }
};

Json word_json(const Word& w) { return Json(w); }

// Biclosed sets of small canonical length, recognized as lattice elements.
std::vector<BElement> sample_elements(RootType t, int max_len) {
  std::set<BElement> out;
  for (const Universe::Entry& e : Universe::get(t, max_len).entries()) out.insert(recognize(e.set));
  return {out.begin(), out.end()};
}

// Finite words of length <= max_len and infinite words w . hat(Phi+_{L,0}) with |w| <= max_len.
std::vector<WBar> sample_words(RootType t, int max_len) {
  std::set<WBar> out;
  for (const Universe::Entry& e : Universe::get(t, max_len).entries())
    if (e.form.K == kNoSimple) out.insert(from_inversion_set(e.set));
  return {out.begin(), out.end()};
}

void d_equals_h(const OracleParams& p, Run& run) {
  const RootSystem& rs = RootSystem::get(p.type);
  for (FiniteRoot r : rs.positive())
    for (SimpleSet L = 0; L <= kAllSimple; ++L) {
      int d = d_L(rs, r, L), h = h_L(rs, r, L);
      run.check(d == h, [&] { return Json{{"root", encode(r)}, {"L", encode_simple(L)}, {"d", d}, {"h", h}}; });
    }
}

void three_root_sum(const OracleParams& p, Run& run) {
  const RootSystem& rs = RootSystem::get(p.type);
  auto pos = [&](FiniteRoot r) { return rs.is_root(r) && r.positive(); };
  for (FiniteRoot x : rs.positive())
    for (FiniteRoot y : rs.positive())
      for (FiniteRoot z : rs.positive())
        if (pos(x + y) && pos(x + y + z))
          run.check(pos(x + z) || pos(y + z), [&] { return Json{encode(x), encode(y), encode(z)}; });
}

void closure_formula(const OracleParams& p, Run& run) {
  const RootSystem& rs = RootSystem::get(p.type);
  for (SimpleSet L = 0; L < kAllSimple; ++L)
    for (int n = 1; n <= 4; ++n) {
      std::vector<AffineRoot> gens;
      EPSet expect(p.type);
      for (FiniteRoot r : rs.positive()) {
        if (in_span(r, L)) continue;
        for (int k = 0; k <= n; ++k) gens.push_back({r, k});
        expect.set(rs.index(r), LevelSet::interval(0, n * d_L(rs, r, L)));
      }
      EPSet got = closure(p.type, gens);
      int window = std::max(p.window, safe_window(got));
      auto naive = closure_window(p.type, gens, window);
      bool ok = got == expect && got.truncate(window) == naive;
      run.check(ok, [&] { return Json{{"L", encode_simple(L)}, {"n", n}, {"closure", encode(got)}, {"expected", encode(expect)}}; });
    }
}

void dominance(const OracleParams& p, Run& run) {
  int max_len = p.window > 0 ? p.window : 8;
  for (const ElementEntry& e : elements_up_to(p.type, max_len)) {
    auto inv = inversion_roots(p.type, e.word);
    std::set<AffineRoot> in(inv.begin(), inv.end());
    bool ok = true;
    for (AffineRoot r : inv)
      for (int l = min_level(r.dir); l < r.level; ++l) ok = ok && in.count({r.dir, l});
    run.check(ok, [&] { return Json{{"word", word_json(e.word)}}; });
  }
}

void action_laws(const OracleParams& p, Run& run) {
  int window = p.window > 0 ? p.window : 8;
  int samples = p.samples > 0 ? p.samples : 300;
  const auto& bases = Universe::get(p.type, 3).entries();
  std::mt19937_64 rng(p.seed);
  auto random_word = [&](int max_len) {
    Word w(rng() % (max_len + 1));
    for (int& g : w) g = static_cast<int>(rng() % kRank);
    return w;
  };
  for (int i = 0; i < samples; ++i) {
    const Universe::Entry& g = bases[rng() % bases.size()];
    Word u = random_word(3), v = random_word(3);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    EPSet lhs = act(uv, g.set);
    EPSet rhs = act(u, act(v, g.set));
    bool ok = lhs == rhs && is_biclosed_window(lhs, window) && act(Word{}, g.set) == g.set;
    run.check(ok, [&] { return Json{{"set", encode(g.form)}, {"u", u}, {"v", v}}; });
  }
}

void lattice_laws(const OracleParams& p, Run& run) {
  int samples = p.samples > 0 ? p.samples : 1500;
  std::vector<BElement> pool = sample_elements(p.type, 6);
  std::vector<EPSet> sets;
  for (const BElement& b : pool) sets.push_back(to_epset(b));
  const BElement top = top_element(p.type), bot = bottom_element(p.type);
  for (const BElement& a : pool) {
    BElement c = complement(a);
    bool ok = join(a, a) == a && meet(a, a) == a && complement(c) == a && join(a, c) == top && meet(a, c) == bot;
    run.check(ok, [&] { return Json{{"element", encode(a)}}; });
  }
  std::mt19937_64 rng(p.seed);
  for (int i = 0; i < samples; ++i) {
    std::size_t ia = rng() % pool.size(), ib = rng() % pool.size();
    const BElement &a = pool[ia], &b = pool[ib];
    BElement j = join(a, b), m = meet(a, b);
    EPSet js = to_epset(j), ms = to_epset(m);
    bool ok = j == join(b, a) && m == meet(b, a);
    ok = ok && join(a, m) == a && meet(a, j) == a;
    ok = ok && js.includes(sets[ia]) && js.includes(sets[ib]);
    ok = ok && sets[ia].includes(ms) && sets[ib].includes(ms);
    ok = ok && (leq(a, b) == leq(complement(b), complement(a)));
    for (const EPSet& c : sets) {
      if (c.includes(sets[ia]) && c.includes(sets[ib]) && !c.includes(js)) ok = false;
      if (sets[ia].includes(c) && sets[ib].includes(c) && !ms.includes(c)) ok = false;
    }
    run.check(ok, [&] { return Json{{"a", encode(a)}, {"b", encode(b)}, {"join", encode(j)}, {"meet", encode(m)}}; });
  }
}

void jop(const OracleParams& p, Run& run) {
  int samples = p.samples > 0 ? p.samples : 400;
  std::vector<WBar> words = sample_words(p.type, 4);
  std::vector<EPSet> sets;
  for (const WBar& w : words) sets.push_back(inversion_set(w));
  std::mt19937_64 rng(p.seed);
  for (int i = 0; i < samples; ++i) {
    std::size_t ia = rng() % words.size(), ib = rng() % words.size();
    auto w = join_bounded({words[ia], words[ib]}, p.budget);
    if (!w) continue;
    EPSet ws = inversion_set(*w);
    for (std::size_t iv = 0; iv < words.size(); ++iv) {
      if (!sets[iv].disjoint(sets[ia]) || !sets[iv].disjoint(sets[ib])) continue;
      run.check(sets[iv].disjoint(ws), [&] {
        return Json{{"a", encode(words[ia])}, {"b", encode(words[ib])}, {"join", encode(*w)}, {"v", encode(words[iv])}};
      });
    }
  }
}

void distance_not_one(const OracleParams& p, Run& run) {
  std::vector<WBar> words = sample_words(p.type, p.window > 0 ? p.window : 4);
  std::vector<EPSet> inv, co;
  for (const WBar& w : words) {
    inv.push_back(inversion_set(w));
    co.push_back(inv.back().complement());
  }
  for (std::size_t v = 0; v < words.size(); ++v)
    for (std::size_t u = 0; u < words.size(); ++u) {
      bool proper = inv[u].includes(co[v]) && !(inv[u] == co[v]);
      bool ok = !proper;
      if (co[v].includes(inv[u])) ok = ok && difference_cardinality(co[v], inv[u]) != std::optional<long long>(1);
      run.check(ok, [&] { return Json{{"v", encode(words[v])}, {"u", encode(words[u])}}; });
    }
}

void quasi_positive(const OracleParams& p, Run& run) {
  for (int n : {6, p.window > 0 ? p.window : 10}) {
    QuasiPositiveReport q = quasi_positive_counterexample(n);
    run.check(q.contained && q.hull_matches && q.not_coclosed, [&] {
      return Json{{"window", n}, {"contained", q.contained}, {"hull_matches", q.hull_matches}, {"not_coclosed", q.not_coclosed}};
    });
  }
}

void braid_bruteforce(const OracleParams& p, Run& run) {
  int max_size = p.samples > 0 ? p.samples : (p.type == RootType::A2 ? 4 : 3);
  std::vector<AffineRoot> pool;
  for (FiniteRoot d : RootSystem::get(p.type).roots())
    for (int l = min_level(d); l <= 1; ++l) pool.push_back({d, l});
  std::sort(pool.begin(), pool.end());
  const int n = static_cast<int>(pool.size());
  std::vector<AffineRoot> r;
  std::function<void(int)> subsets = [&](int from) {
    if (!r.empty()) {
      BraidGraph g = build_braid_graph(p.type, r);
      bool ok = g.components == 1 && g.unknown == 0 && g.local_violations == 0;
      if (ok && r.size() <= 3)
        for (const Order& v : g.vertices) {
          Realization w = realize(p.type, v);
          ok = ok && w.status == Realizability::Realized && verify_chain(p.type, v, w.chain);
        }
      if (ok && g.vertices.size() > 1) {
        BraidPath path = connect(p.type, g.vertices.front(), g.vertices.back());
        ok = check_path(p.type, g.vertices.front(), g.vertices.back(), path);
      }
      run.check(ok, [&] {
        return Json{{"R", encode_roots(r)}, {"components", g.components}, {"unknown", g.unknown}, {"local_violations", g.local_violations}};
      });
    }
    if (static_cast<int>(r.size()) == max_size) return;
    for (int i = from; i < n; ++i) {
      r.push_back(pool[i]);
      subsets(i + 1);
      r.pop_back();
    }
  };
  subsets(0);
}

using Suite = void (*)(const OracleParams&, Run&);

const std::map<std::string, std::pair<Suite, int>>& registry() {
  // name -> (suite, default window reported in the header)
  static const std::map<std::string, std::pair<Suite, int>> r{
      {"d_equals_h", {d_equals_h, 0}},
      {"three_root_sum", {three_root_sum, 0}},
      {"closure_formula", {closure_formula, 20}},
      {"dominance", {dominance, 8}},
      {"action_laws", {action_laws, 8}},
      {"lattice_laws", {lattice_laws, 0}},
      {"jop", {jop, 0}},
      {"distance_not_one", {distance_not_one, 4}},
      {"quasi_positive", {quasi_positive, 10}},
      {"braid_bruteforce", {braid_bruteforce, 1}},
  };
  return r;
}

}  // namespace

Json OracleReport::to_json() const {
  Json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["type"] = type_name(type);
  j["window"] = window;
  j["seed"] = seed;
  j["cases"] = cases;
  j["failure_count"] = failure_count;
  j["failures"] = failures;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, entry] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

OracleReport run_suite(const std::string& name, const OracleParams& params) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown oracle suite '" + name + "'");
  if (name == "quasi_positive" && params.type != RootType::A2)
    throw std::invalid_argument("quasi_positive runs on A2 only");
  OracleReport report;
  report.suite = name;
  report.type = params.type;
  report.seed = params.seed;
  report.window = params.window > 0 ? params.window : it->second.second;
  OracleParams effective = params;
  effective.window = report.window;
  Run run{report};
  it->second.first(effective, run);
  return report;
}

}  // namespace affw
