#include "affw/biclosed.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

#include "affw/closure.hpp"

namespace affw {

const std::vector<std::pair<SimpleSet, SimpleSet>>& orthogonal_pairs() {
  static const std::vector<std::pair<SimpleSet, SimpleSet>> pairs{
      {kAllSimple, kNoSimple}, {kNoSimple, kNoSimple}, {kAlpha, kNoSimple}, {kBeta, kNoSimple},
      {kNoSimple, kAlpha},     {kNoSimple, kBeta},     {kNoSimple, kAllSimple}};
  return pairs;
}

EPSet base_set(RootType t, SimpleSet L, SimpleSet K) {
  const RootSystem& rs = RootSystem::get(t);
  if (!orthogonal(rs, rs.positive_systems()[0], L, K))
    throw std::invalid_argument("L and K are not orthogonal");
  EPSet out(t);
  for (int i = 0; i < rs.size(); ++i) {
    FiniteRoot r = rs.roots()[i];
    if ((r.positive() && !in_span(r, L)) || in_span(r, K)) out.set(i, LevelSet::ray(min_level(r)));
  }
  return out;
}

EPSet act(const AffineElement& x, const EPSet& g) {
  const RootSystem& rs = g.system();
  const auto& roots = rs.roots();
  AffineElement inv = x.inverse();
  EPSet out(g.type());
  for (int i = 0; i < rs.size(); ++i) {
    AffineRoot img = inv.apply({roots[i], 0});
    int di = rs.index(img.dir);
    const LevelSet& src = g.at(di);
    const LevelSet& opp = g.at(rs.negate(di));
    const int shift = img.level, floor = min_level(img.dir);
    const int lo = min_level(roots[i]);
    const int upto = std::max({lo, src.span() - shift, floor - shift}) + 1;
    LevelSet s;
    for (int n = lo; n < upto; ++n) {
      int m = n + shift;
      if (m >= floor ? src.contains(m) : !opp.contains(-m)) s.insert(n);
    }
    if (src.infinite()) s = s.unite(LevelSet::ray(upto));
    out.set(i, std::move(s));
  }
  return out;
}

EPSet act(const Word& x, const EPSet& g) { return act(AffineElement::from_word(g.type(), x), g); }

BiclosedCanonical act(const Word& x, const BiclosedCanonical& g) { return canonicalize(act(x, to_epset(g))); }

EPSet to_epset(const BiclosedCanonical& c) {
  if (c.L == kAllSimple) return finite_inversion_set(c.type, reduce(c.type, c.w));
  return act(c.w, base_set(c.type, c.L, c.K));
}

bool member(const BiclosedCanonical& c, AffineRoot r) { return to_epset(c).contains(r); }

EPSet finite_inversion_set(RootType t, const Word& w) {
  if (!is_reduced(t, w)) throw std::invalid_argument("word is not reduced");
  return EPSet::from_roots(t, inversion_roots(t, w));
}

// ---- Universe ----

Universe::Universe(RootType t, int budget) : budget_(budget) {
  std::vector<std::pair<SimpleSet, SimpleSet>> pairs = orthogonal_pairs();
  std::vector<EPSet> bases;
  for (auto [L, K] : pairs) bases.push_back(base_set(t, L, K));
  for (const ElementEntry& e : elements_up_to(t, budget)) {
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      EPSet s = act(e.element, bases[b]);
      if (index_.count(s)) continue;
      index_.emplace(s, entries_.size());
      entries_.push_back({{t, e.word, pairs[b].first, pairs[b].second}, std::move(s)});
    }
  }
}

const Universe& Universe::get(RootType t, int budget) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Universe>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{static_cast<int>(t), budget}];
  if (!slot) slot.reset(new Universe(t, budget));
  return *slot;
}

const Universe::Entry* Universe::find(const EPSet& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

// ---- canonical forms ----

namespace {

Word finite_word(const EPSet& s) {
  const RootType t = s.type();
  Word w;
  EPSet cur = s;
  long long left = *cur.count();
  while (left > 0) {
    int g = 0;
    while (g < kRank && !cur.contains(simple_affine_root(t, g))) ++g;
    if (g == kRank) throw NotBiclosed("finite set is not an inversion set");
    cur = act(AffineElement::generator(t, g), cur);
    auto c = cur.count();
    if (!c || *c != left - 1) throw NotBiclosed("finite set is not an inversion set");
    left = *c;
    w.push_back(g);
  }
  return w;
}

BiclosedCanonical search_canonical(const EPSet& s, int max_depth) {
  const RootType t = s.type();
  std::map<EPSet, std::pair<SimpleSet, SimpleSet>> targets;
  for (auto [L, K] : orthogonal_pairs())
    if (L != kAllSimple) targets.emplace(base_set(t, L, K), std::pair{L, K});
  AffineElement gens[kRank];
  for (int g = 0; g < kRank; ++g) gens[g] = AffineElement::generator(t, g);

  std::set<EPSet> seen{s};
  std::vector<std::vector<EPSet>> layers{{s}};
  int depth = -1;
  for (int d = 0; d <= max_depth; ++d) {
    for (const EPSet& x : layers[d])
      if (targets.count(x)) depth = d;
    if (depth >= 0) break;
    std::vector<EPSet> next;
    for (const EPSet& x : layers[d])
      for (int g = 0; g < kRank; ++g) {
        EPSet y = act(gens[g], x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    layers.push_back(std::move(next));
  }
  if (depth < 0) throw NotBiclosed("no canonical form within the search depth");

  std::vector<std::set<EPSet>> good(depth + 1);
  for (const EPSet& x : layers[depth])
    if (targets.count(x)) good[depth].insert(x);
  for (int k = depth - 1; k >= 0; --k)
    for (const EPSet& x : layers[k])
      for (int g = 0; g < kRank; ++g)
        if (good[k + 1].count(act(gens[g], x))) {
          good[k].insert(x);
          break;
        }
  Word w;
  EPSet cur = s;
  for (int k = 0; k < depth; ++k)
    for (int g = 0; g < kRank; ++g) {
      EPSet y = act(gens[g], cur);
      if (good[k + 1].count(y)) {
        w.push_back(g);
        cur = std::move(y);
        break;
      }
    }
  auto [L, K] = targets.at(cur);
  return {t, w, L, K};
}

}  // namespace

BiclosedCanonical canonicalize(const EPSet& s, int budget) {
  if (!s.canonical()) throw NotBiclosed("a direction carries a non-interval level set");
  if (s.finite()) return {s.type(), finite_word(s), kAllSimple, kNoSimple};
  if (const auto* e = Universe::get(s.type(), budget).find(s)) return e->form;
  return search_canonical(s, 4 * budget + 16);
}

BiclosedCanonical normalize(const BiclosedCanonical& c) {
  if (c.L > kAllSimple || c.K > kAllSimple) throw std::invalid_argument("simple subset mask out of range");
  for (int g : c.w)
    if (g < 0 || g >= kRank) throw std::invalid_argument("generator index out of range");
  return canonicalize(act(c.w, base_set(c.type, c.L, c.K)));
}

PhiBiclosed classify_I(const EPSet& s) {
  PhiBiclosed pb;
  if (!classify_phi_biclosed(s.system(), I_of(s), pb)) throw NotBiclosed("ray directions are not biclosed in Phi");
  return pb;
}

namespace {

SimpleSet orthogonal_part(const RootSystem& rs, const PositiveSystem& ps, SimpleSet M) {
  SimpleSet out = kNoSimple;
  for (int i = 0; i < 2; ++i) {
    bool ok = true;
    for (int j = 0; j < 2; ++j)
      if ((M >> j & 1) && rs.inner(ps.simple[i], ps.simple[j]) != 0) ok = false;
    if (ok) out |= 1u << i;
  }
  return out;
}

bool fg_from_class(const RootSystem& rs, const PhiBiclosed& pb) {
  const PositiveSystem& ps = rs.positive_systems()[pb.system];
  if (pb.added == kNoSimple) return pb.removed == kAllSimple;
  return pb.removed == orthogonal_part(rs, ps, pb.added);
}

}  // namespace

bool is_finitely_generated(const BiclosedCanonical& c) {
  return fg_from_class(RootSystem::get(c.type), classify_I(to_epset(c)));
}

std::vector<AffineRoot> generators(const BiclosedCanonical& c) {
  const RootSystem& rs = RootSystem::get(c.type);
  EPSet s = to_epset(c);
  PhiBiclosed pb = classify_I(s);
  if (!fg_from_class(rs, pb)) throw NotFinitelyGenerated("biclosed set is not finitely generated");
  const PositiveSystem& ps = rs.positive_systems()[pb.system];
  std::vector<AffineRoot> out;
  for (int i = 0; i < rs.size(); ++i) {
    const LevelSet& lv = s.at(i);
    if (lv.empty()) continue;
    FiniteRoot r = rs.roots()[i];
    if (in_system_span(ps, r, pb.removed)) {
      for (int k = lv.min(); k <= lv.max(); ++k)
        if (lv.contains(k)) out.push_back({r, k});
    } else if (in_system_span(ps, r, pb.added)) {
      out.push_back({r, lv.min()});
    } else {
      out.push_back(bottom(r));
    }
  }
  return out;
}

GenerationGap generation_gap(const BiclosedCanonical& c, int level) {
  const RootSystem& rs = RootSystem::get(c.type);
  EPSet s = to_epset(c);
  PhiBiclosed pb = classify_I(s);
  if (fg_from_class(rs, pb)) throw std::invalid_argument("biclosed set is finitely generated");
  const PositiveSystem& ps = rs.positive_systems()[pb.system];
  GenerationGap gap;
  gap.truncation = s.truncate(level);
  EPSet hull = closure(c.type, gap.truncation);
  SimpleSet free = pb.added == kNoSimple ? kAllSimple : orthogonal_part(rs, ps, pb.added);
  gap.confirmed = true;
  for (int i = 0; i < 2; ++i) {
    if (!(free >> i & 1) || (pb.removed >> i & 1)) continue;
    FiniteRoot a = ps.simple[i];
    // top of the a-string the truncation generates; finite, since I has no opposite pair
    const LevelSet& made = hull.at(a);
    int t = made.empty() || made.infinite() ? min_level(a) - 1 : made.max();
    for (const AffineRoot& r : gap.truncation)
      if (r.dir == a) t = std::max(t, r.level);
    AffineRoot miss{a, t + 1};
    gap.missing.push_back(miss);
    gap.confirmed = gap.confirmed && s.contains(miss) && !hull.contains(miss);
  }
  gap.confirmed = gap.confirmed && !gap.missing.empty();
  return gap;
}

}  // namespace affw
