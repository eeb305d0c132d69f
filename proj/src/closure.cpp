#include "affw/closure.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace affw {

namespace {

struct Span {
  bool on = false;
  bool ray = false;
  int lo = 0;
  int hi = 0;

  bool absorb(const Span& o) {
    if (!o.on) return false;
    Span before = *this;
    if (!on) {
      *this = o;
    } else {
      lo = std::min(lo, o.lo);
      hi = std::max(hi, o.hi);
      ray = ray || o.ray;
    }
    return before.on != on || before.ray != ray || before.lo != lo || (!ray && before.hi != hi);
  }
};

// Levels (p1*m + p2*n)/q over m in a, n in b. Extremes of each residue class sit within q
// steps of the interval ends, so only those corners are scanned.
Span combo_span(const Span& a, const Span& b, const DirCombo& c) {
  Span out;
  auto scan = [&](int ma, int mb, int na, int nb, bool want_min) {
    bool found = false;
    int best = 0;
    for (int m = ma; m <= mb; ++m)
      for (int n = na; n <= nb; ++n) {
        int num = c.p1 * m + c.p2 * n;
        if (num % c.q != 0) continue;
        int v = num / c.q;
        if (!found || (want_min ? v < best : v > best)) best = v, found = true;
      }
    return std::pair{found, best};
  };
  int a_top = a.ray ? a.lo + c.q - 1 : std::min(a.hi, a.lo + c.q - 1);
  int b_top = b.ray ? b.lo + c.q - 1 : std::min(b.hi, b.lo + c.q - 1);
  auto [has_min, lo] = scan(a.lo, a_top, b.lo, b_top, true);
  if (!has_min) return out;
  out.on = true;
  out.lo = lo;
  if (a.ray || b.ray) {
    out.ray = true;
    return out;
  }
  auto [has_max, hi] = scan(std::max(a.lo, a.hi - c.q + 1), a.hi, std::max(b.lo, b.hi - c.q + 1), b.hi, false);
  out.hi = has_max ? hi : lo;
  return out;
}

}  // namespace

EPSet closure(const EPSet& gens) {
  const RootType t = gens.type();
  const RootSystem& rs = RootSystem::get(t);
  const auto& roots = rs.roots();
  const int nd = rs.size();
  std::vector<Span> sp(nd);
  for (int i = 0; i < nd; ++i) {
    const LevelSet& s = gens.at(i);
    if (s.empty()) continue;
    sp[i].on = true;
    sp[i].lo = s.min();
    sp[i].ray = s.infinite();
    sp[i].hi = s.infinite() ? s.min() : s.max();
  }
  bool changed = true;
  for (int round = 0; changed; ++round) {
    if (round > 10000) throw std::logic_error("closure did not stabilize");
    changed = false;
    for (int i = 0; i < nd; ++i) {
      if (!sp[i].on) continue;
      for (int j = 0; j < nd; ++j) {
        if (j == i || !sp[j].on) continue;
        if (roots[j] == -roots[i]) {
          if (!sp[i].ray || !sp[j].ray) {
            sp[i].ray = sp[j].ray = true;
            changed = true;
          }
          continue;
        }
        for (const DirCombo& c : dir_combos(t, i, j)) changed |= sp[c.target].absorb(combo_span(sp[i], sp[j], c));
      }
    }
  }
  EPSet out(t);
  for (int i = 0; i < nd; ++i) {
    if (!sp[i].on) continue;
    out.set(i, sp[i].ray ? LevelSet::ray(sp[i].lo) : LevelSet::interval(sp[i].lo, sp[i].hi));
  }
  return out;
}

EPSet closure(RootType t, const std::vector<AffineRoot>& gens) {
  for (const AffineRoot& r : gens)
    if (!RootSystem::get(t).is_root(r.dir) || !is_positive(r))
      throw std::invalid_argument("generator is not a positive affine root: " + to_string(r));
  return closure(EPSet::from_roots(t, gens));
}

std::vector<AffineRoot> closure_window(RootType t, const std::vector<AffineRoot>& gens, int n) {
  const RootSystem& rs = RootSystem::get(t);
  const int nd = rs.size();
  std::vector<std::vector<char>> have(nd, std::vector<char>(n + 1, 0));
  std::vector<AffineRoot> members, work;
  auto add = [&](AffineRoot r) {
    int i = rs.index(r.dir);
    if (i < 0 || !is_positive(r)) throw std::invalid_argument("not a positive affine root: " + to_string(r));
    if (r.level > n || have[i][r.level]) return;
    have[i][r.level] = 1;
    members.push_back(r);
    work.push_back(r);
  };
  for (const AffineRoot& r : gens) add(r);
  while (!work.empty()) {
    AffineRoot r = work.back();
    work.pop_back();
    std::size_t count = members.size();
    for (std::size_t k = 0; k < count; ++k)
      for (const Combination& c : combine(t, r, members[k], n)) add(c.root);
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_closed_window(RootType t, const std::vector<AffineRoot>& set, int n) {
  std::vector<AffineRoot> inside;
  for (const AffineRoot& r : set)
    if (r.level <= n) inside.push_back(r);
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  return closure_window(t, inside, n).size() == inside.size();
}

bool is_closed_window(const EPSet& set, int n) { return is_closed_window(set.type(), set.truncate(n), n); }

bool is_biclosed_window(const EPSet& set, int n) {
  return is_closed_window(set, n) && is_closed_window(set.complement(), n);
}

int safe_window(const EPSet& gens) { return 3 * gens.extent() + 8; }

}  // namespace affw
