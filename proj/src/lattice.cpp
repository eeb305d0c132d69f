#include "affw/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "affw/closure.hpp"

namespace affw {

EPSet to_epset(const BElement& b) {
  EPSet s = inversion_set(b.x);
  return b.coinv ? s.complement() : s;
}

BElement recognize(const EPSet& s) {
  BiclosedCanonical c = canonicalize(s);
  if (c.K == kNoSimple) return BElement::inv({c.type, c.w, c.L});
  BiclosedCanonical d = canonicalize(s.complement());
  if (d.K != kNoSimple) throw NotBiclosed("neither an inversion set nor a complement of one");
  return BElement::co({d.type, d.w, d.L});
}

BElement normalize(const BElement& b) { return recognize(to_epset(b)); }

BElement bottom_element(RootType t) { return BElement::inv(WBar::identity(t)); }
BElement top_element(RootType t) { return BElement::co(WBar::identity(t)); }

bool leq(const BElement& a, const BElement& b) { return to_epset(b).includes(to_epset(a)); }

BElement complement(const BElement& b) { return normalize({!b.coinv, b.x}); }

BElement join(const BElement& a, const BElement& b) {
  BElement out;
  if (!a.coinv && !b.coinv) {
    if (auto j = join_bounded({a.x, b.x})) {
      out = BElement::inv(*j);
    } else {
      EPSet d = inversion_set(a.x).complement().intersect(inversion_set(b.x).complement());
      out = BElement::co(max_word_below(d));
    }
  } else if (a.coinv && b.coinv) {
    out = BElement::co(meet(a.x, b.x));
  } else {
    const WBar& x = a.coinv ? b.x : a.x;
    const WBar& y = a.coinv ? a.x : b.x;
    out = BElement::co(max_word_below(inversion_set(x).complement().intersect(inversion_set(y))));
  }
  out = normalize(out);
  EPSet s = to_epset(out);
  if (!s.includes(to_epset(a)) || !s.includes(to_epset(b))) throw std::logic_error("join misses an operand");
  return out;
}

BElement meet(const BElement& a, const BElement& b) { return complement(join(complement(a), complement(b))); }

namespace {

EPSet checked_chain(const std::vector<BElement>& chain, bool unite) {
  if (chain.empty()) throw std::invalid_argument("empty chain");
  std::vector<EPSet> sets;
  for (const BElement& b : chain) sets.push_back(to_epset(b));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].includes(sets[j]) && !sets[j].includes(sets[i]))
        throw std::invalid_argument("chain elements are not comparable");
  EPSet acc = sets[0];
  for (const EPSet& s : sets) acc = unite ? acc.unite(s) : acc.intersect(s);
  return acc;
}

}  // namespace

BElement chain_union(const std::vector<BElement>& chain) { return recognize(checked_chain(chain, true)); }
BElement chain_intersection(const std::vector<BElement>& chain) { return recognize(checked_chain(chain, false)); }

std::optional<BElement> finite_closure_join(RootType t, const std::vector<Word>& words) {
  EPSet u(t);
  for (const Word& w : words) u = u.unite(finite_inversion_set(t, w));
  EPSet c = closure(u);
  if (!c.finite()) return std::nullopt;
  return BElement::inv(from_inversion_set(c));
}

// ---- quasi-positive system ----

namespace {

using QRoot = AffineRoot;  // direction one of -a, -b, -a-b; any integer level

const FiniteRoot kQDirs[3] = {{-1, 0}, {0, -1}, {-1, -1}};

bool q_in_cone(QRoot u, QRoot v, QRoot z) {
  long long U[3] = {u.dir.a, u.dir.b, u.level}, V[3] = {v.dir.a, v.dir.b, v.level}, Z[3] = {z.dir.a, z.dir.b, z.level};
  long long c[3] = {U[1] * V[2] - U[2] * V[1], U[2] * V[0] - U[0] * V[2], U[0] * V[1] - U[1] * V[0]};
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) return u == z;
  if (c[0] * Z[0] + c[1] * Z[1] + c[2] * Z[2] != 0) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      long long d = U[i] * V[j] - U[j] * V[i];
      if (d == 0) continue;
      long long n1 = Z[i] * V[j] - Z[j] * V[i], n2 = U[i] * Z[j] - U[j] * Z[i];
      if (d < 0) n1 = -n1, n2 = -n2;
      return n1 >= 0 && n2 >= 0;
    }
  return false;
}

std::vector<QRoot> q_all(int n) {
  std::vector<QRoot> out;
  for (FiniteRoot d : kQDirs)
    for (int k = -n; k <= n; ++k) out.push_back({d, k});
  return out;
}

std::set<QRoot> q_closure(const std::set<QRoot>& gens, int n) {
  std::set<QRoot> cur = gens;
  auto all = q_all(n);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<QRoot> v(cur.begin(), cur.end());
    for (QRoot z : all) {
      if (cur.count(z)) continue;
      bool hit = false;
      for (std::size_t i = 0; i < v.size() && !hit; ++i)
        for (std::size_t j = i + 1; j < v.size() && !hit; ++j) hit = q_in_cone(v[i], v[j], z);
      if (hit) cur.insert(z), grew = true;
    }
  }
  return cur;
}

// Per direction: level predicate.
template <class F>
std::set<QRoot> q_set(int n, F&& keep) {
  std::set<QRoot> out;
  for (QRoot r : q_all(n))
    if (keep(r)) out.insert(r);
  return out;
}

}  // namespace

QuasiPositiveReport quasi_positive_counterexample(int window) {
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  const int n = window;
  const FiniteRoot A = kQDirs[0], B = kQDirs[1], AB = kQDirs[2];
  auto b1 = q_set(n, [&](QRoot r) { return r.dir != B || r.level <= 0; });
  auto b2 = q_set(n, [&](QRoot r) { return r.dir != A || r.level >= 0; });
  auto b3 = q_set(n, [&](QRoot r) { return r.dir == A && r.level >= 0; });
  auto b4 = q_set(n, [&](QRoot r) { return r.dir == B && r.level <= 0; });
  auto shown = q_set(n, [&](QRoot r) {
    return r.dir == AB || (r.dir == A && r.level >= 0) || (r.dir == B && r.level <= 0);
  });

  QuasiPositiveReport rep;
  rep.window = n;
  std::set<QRoot> both;
  std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(), std::inserter(both, both.end()));
  rep.contained = std::includes(both.begin(), both.end(), b3.begin(), b3.end()) &&
                  std::includes(both.begin(), both.end(), b4.begin(), b4.end());
  std::set<QRoot> u = b3;
  u.insert(b4.begin(), b4.end());
  rep.hull_matches = q_closure(u, n) == shown;

  std::set<QRoot> rest;
  for (QRoot r : q_all(n))
    if (!shown.count(r)) rest.insert(r);
  std::vector<QRoot> rv(rest.begin(), rest.end());
  std::stable_sort(rv.begin(), rv.end(), [](QRoot x, QRoot y) { return std::abs(x.level) < std::abs(y.level); });
  for (std::size_t i = 0; i < rv.size() && !rep.not_coclosed; ++i)
    for (std::size_t j = i + 1; j < rv.size() && !rep.not_coclosed; ++j)
      for (QRoot z : shown)
        if (q_in_cone(rv[i], rv[j], z)) {
          rep.not_coclosed = true;
          rep.witness_a = rv[i], rep.witness_b = rv[j], rep.witness_sum = z;
          break;
        }
  return rep;
}

}  // namespace affw
