#include "affw/words.hpp"

#include <algorithm>

#include "affw/closure.hpp"

namespace affw {

WBar WBar::from_word(RootType t, const Word& w) {
  if (!is_reduced(t, w)) throw std::invalid_argument("word is not reduced");
  return {t, lexmin_word(t, AffineElement::from_word(t, w)), kAllSimple};
}

WBar WBar::infinite(RootType t, const Word& w, SimpleSet L) {
  if (L >= kAllSimple) throw std::invalid_argument("an infinite word needs a proper subset L");
  return from_inversion_set(act(w, base_set(t, L, kNoSimple)));
}

namespace {

int finite_order(const FiniteElement& g) {
  FiniteElement p = g;
  for (int k = 1; k <= 12; ++k) {
    if (p == FiniteElement{}) return k;
    p = p * g;
  }
  throw std::logic_error("finite part has no order <= 12");
}

Word repeat(const Word& p, const Word& q, int k) {
  Word out = p;
  for (int i = 0; i < k; ++i) out.insert(out.end(), q.begin(), q.end());
  return out;
}

}  // namespace

WBar WBar::periodic(RootType t, const Word& p, const Word& q) {
  if (q.empty()) throw std::invalid_argument("period must be nonempty");
  int ord = finite_order(AffineElement::from_word(t, q).finite_part());
  Word longest = repeat(p, q, 4 * ord + 1);
  if (!is_reduced(t, longest)) throw std::invalid_argument("periodic word is not reduced");
  EPSet early = finite_inversion_set(t, repeat(p, q, 2 * ord + 1));
  EPSet late = finite_inversion_set(t, repeat(p, q, 3 * ord + 1));
  EPSet limit(t);
  for (int i = 0; i < limit.ndirs(); ++i) {
    const LevelSet& s = late.at(i);
    if (s == early.at(i)) limit.set(i, s);
    else limit.set(i, LevelSet::ray(s.min()));
  }
  WBar out = from_inversion_set(limit);
  if (out.finite() || !limit.includes(finite_inversion_set(t, longest)))
    throw std::logic_error("periodic word did not stabilize");
  return out;
}

EPSet inversion_set(const WBar& x) {
  if (x.finite()) return finite_inversion_set(x.type, x.w);
  return to_epset(x.form());
}

WBar from_inversion_set(const EPSet& s) {
  BiclosedCanonical c;
  try {
    c = canonicalize(s);
  } catch (const NotBiclosed& e) {
    throw NotInversionSet(e.what());
  }
  if (c.K != kNoSimple) throw NotInversionSet("set is not the inversion set of a word");
  return {c.type, c.w, c.L};
}

WBar times(const Word& u, const WBar& x) { return from_inversion_set(act(u, inversion_set(x))); }

bool leq(const WBar& x, const WBar& y) { return inversion_set(y).includes(inversion_set(x)); }

bool orthogonal(const WBar& x, const WBar& y) { return inversion_set(x).disjoint(inversion_set(y)); }

namespace {

constexpr int kBudgetCap = 26;

bool has_ascent_inside(const WBar& u, const EPSet& d) {
  AffineElement x = AffineElement::from_word(u.type, u.w);
  for (int g = 0; g < kRank; ++g) {
    AffineRoot r = x.apply(simple_affine_root(u.type, g));
    if (is_positive(r) && d.contains(r)) return true;
  }
  return false;
}

std::optional<WBar> best_below(const EPSet& d, int budget) {
  std::vector<const Universe::Entry*> cand;
  for (const auto& e : Universe::get(d.type(), budget).entries())
    if (e.form.K == kNoSimple && d.includes(e.set)) cand.push_back(&e);
  for (const auto* c : cand) {
    bool maximal = std::none_of(cand.begin(), cand.end(),
                                [&](const auto* o) { return o != c && o->set.includes(c->set); });
    if (maximal) return WBar{c->form.type, c->form.w, c->form.L};
  }
  return std::nullopt;
}

}  // namespace

WBar max_word_below(const EPSet& d, int budget) {
  if (d.finite()) {
    // Greedy ascent is exact here: a finite maximal element has no ascent inside d.
    WBar u = WBar::identity(d.type());
    for (bool grew = true; grew;) {
      grew = false;
      AffineElement x = AffineElement::from_word(u.type, u.w);
      for (int g = 0; g < kRank && !grew; ++g) {
        AffineRoot r = x.apply(simple_affine_root(u.type, g));
        if (!is_positive(r) || !d.contains(r)) continue;
        Word w = u.w;
        w.push_back(g);
        u = WBar::from_word(u.type, w);
        grew = true;
      }
    }
    return u;
  }
  std::optional<WBar> prev;
  for (int b = budget; b <= kBudgetCap; b += 4) {
    std::optional<WBar> u = best_below(d, b);
    if (!u) u = WBar::identity(d.type());
    if (u->finite() ? !has_ascent_inside(*u, d) : prev == u) return *u;
    prev = u;
  }
  throw std::runtime_error("max_word_below did not settle within the budget cap");
}

WBar meet(const WBar& x, const WBar& y) { return max_word_below(inversion_set(x).intersect(inversion_set(y))); }

namespace {

EPSet union_of(const std::vector<WBar>& a) {
  EPSet u(a.front().type);
  for (const WBar& x : a) u = u.unite(inversion_set(x));
  return u;
}

bool opposite_free(const EPSet& s) {
  for (int i = 0; i < s.ndirs(); ++i)
    if (!s.at(i).empty() && !s.at(s.system().negate(i)).empty()) return false;
  return true;
}

}  // namespace

bool bounded(const std::vector<WBar>& a) {
  if (a.empty()) return true;
  return opposite_free(closure(union_of(a)));
}

std::optional<WBar> join_bounded(const std::vector<WBar>& a, int budget) {
  if (a.empty()) return std::nullopt;
  EPSet c = closure(union_of(a));
  if (!opposite_free(c)) return std::nullopt;
  if (c.finite()) return from_inversion_set(c);
  std::optional<WBar> prev;
  for (int b = budget; b <= kBudgetCap; b += 4) {
    std::vector<const Universe::Entry*> cand;
    for (const auto& e : Universe::get(c.type(), b).entries())
      if (e.form.K == kNoSimple && e.set.includes(c)) cand.push_back(&e);
    std::optional<WBar> u;
    for (const auto* x : cand)
      if (std::all_of(cand.begin(), cand.end(), [&](const auto* o) { return o->set.includes(x->set); })) {
        u = WBar{x->form.type, x->form.w, x->form.L};
        break;
      }
    if (u && prev == u) return u;
    prev = u;
  }
  throw std::runtime_error("join did not settle within the budget cap");
}

std::vector<WBar> maximal_elements(RootType t) {
  const RootSystem& rs = RootSystem::get(t);
  std::vector<WBar> out;
  for (const PositiveSystem& ps : rs.positive_systems()) {
    EPSet s(t);
    for (FiniteRoot r : ps.roots) s.set(rs.index(r), LevelSet::ray(min_level(r)));
    out.push_back(from_inversion_set(s));
  }
  return out;
}

Word prefix(const WBar& x, int n) {
  if (x.finite()) return Word(x.w.begin(), x.w.begin() + std::min<std::size_t>(n, x.w.size()));
  const RootType t = x.type;
  const RootSystem& rs = RootSystem::get(t);
  EPSet target = inversion_set(x);
  // Phi_{w x_k} for the finite words x_k with Phi_{x_k} = closure((Phi+_{L,0})_k); from the
  // first k where it sits inside the target the sets increase to it.
  auto stage = [&](int k) {
    std::vector<AffineRoot> gens;
    for (FiniteRoot r : rs.positive())
      if (!in_span(r, x.L))
        for (int j = 0; j <= k; ++j) gens.push_back({r, j});
    return act(x.w, closure(t, gens));
  };
  int k = 0;
  EPSet cur = stage(k);
  while (!target.includes(cur)) cur = stage(++k);
  Word out = canonicalize(cur).w;
  AffineElement at = AffineElement::from_word(t, out);
  while (static_cast<int>(out.size()) < n) {
    EPSet next = stage(++k);
    AffineElement y = AffineElement::from_word(t, canonicalize(next).w);
    Word step = lexmin_word(t, at.inverse() * y);
    out.insert(out.end(), step.begin(), step.end());
    at = y;
  }
  out.resize(n);
  return out;
}

}  // namespace affw
