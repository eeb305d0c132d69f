#include "affw/braid.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/connected_components.hpp>

#include "affw/closure.hpp"

namespace affw {

namespace {

using Vec3 = std::array<long long, 3>;

constexpr int kVerifyWindow = 12;

Vec3 vec(AffineRoot r) { return {r.dir.a, r.dir.b, r.level}; }

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

long long dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

// Angular position inside the plane; positive roots of a plane lie in a pointed cone.
bool angle_less(const Plane& p, AffineRoot u, AffineRoot v) { return dot(cross(vec(u), vec(v)), p.normal) > 0; }

void check_order(const Order& order) {
  std::set<AffineRoot> seen;
  for (AffineRoot r : order) {
    if (!is_positive(r)) throw std::invalid_argument("braid vertex contains non-positive root " + to_string(r));
    if (!seen.insert(r).second) throw std::invalid_argument("braid vertex repeats root " + to_string(r));
  }
  if (order.size() > 30) throw std::invalid_argument("braid vertices are limited to 30 roots");
}

std::vector<Plane> planes_of(const Order& order) {
  std::set<Plane> out;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) out.insert(plane_of(order[i], order[j]));
  return {out.begin(), out.end()};
}

EPSet hat_system(RootType t, int system) {
  const RootSystem& rs = RootSystem::get(t);
  EPSet s(t);
  for (FiniteRoot d : rs.positive_systems().at(system).roots) s.set(rs.index(d), LevelSet::ray(min_level(d)));
  return s;
}

// Biclosed sets available to witness chains, with their traces on R.
struct Pool {
  std::vector<const EPSet*> sets;
  std::vector<BiclosedCanonical> forms;
  std::vector<std::uint32_t> masks;
  std::map<std::uint32_t, std::vector<int>> by_mask;
  int empty = -1;
  EPSet extra;

  Pool(RootType t, int budget, const Order& r, int pivot) {
    const Universe& u = Universe::get(t, budget);
    for (const Universe::Entry& e : u.entries()) add(&e.set, e.form, r);
    if (pivot >= 0) {
      extra = hat_system(t, pivot);
      if (!u.find(extra)) add(&extra, canonicalize(extra, budget), r);
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i]->empty()) empty = static_cast<int>(i);
  }

  void add(const EPSet* s, const BiclosedCanonical& f, const Order& r) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (s->contains(r[i])) m |= 1u << i;
    by_mask[m].push_back(static_cast<int>(sets.size()));
    sets.push_back(s);
    forms.push_back(f);
    masks.push_back(m);
  }

  int index_of(const EPSet& s) const {
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (*sets[i] == s) return static_cast<int>(i);
    return -1;
  }

  const std::vector<int>& with_mask(std::uint32_t m) const {
    static const std::vector<int> none;
    auto it = by_mask.find(m);
    return it == by_mask.end() ? none : it->second;
  }

  // Sets in `cands` containing some set of `reach`.
  std::vector<std::pair<int, int>> step(const std::vector<int>& reach, const std::vector<int>& cands) const {
    std::vector<std::pair<int, int>> out;
    for (int c : cands)
      for (int b : reach)
        if (sets[c]->includes(*sets[b])) {
          out.push_back({c, b});
          break;
        }
    return out;
  }
};

// Every subset of the positive roots of level <= n that is closed with a closed complement
// inside the window. Truncations of biclosed sets are of this kind.
struct WindowSets {
  std::vector<AffineRoot> roots;
  std::vector<std::uint64_t> sets;

  WindowSets(RootType t, int n) {
    for (FiniteRoot d : RootSystem::get(t).roots())
      for (int l = min_level(d); l <= n; ++l) roots.push_back({d, l});
    std::sort(roots.begin(), roots.end(), [](AffineRoot x, AffineRoot y) {
      return std::tie(x.level, x) < std::tie(y.level, y);
    });
    const int m = static_cast<int>(roots.size());
    if (m > 64) throw std::invalid_argument("window too large for refutation");
    // Triples with z inside cone(x, y), filed under the last of the three in search order.
    std::vector<std::vector<std::array<int, 3>>> by_last(m);
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        for (int z = 0; z < m; ++z) {
          if (z == x || z == y) continue;
          Vec3 vx = vec(roots[x]), vy = vec(roots[y]), vz = vec(roots[z]);
          Vec3 n = cross(vx, vy);
          if (dot(n, vz) != 0) continue;
          if (dot(cross(vx, vz), n) < 0 || dot(cross(vz, vy), n) < 0) continue;
          by_last[std::max({x, y, z})].push_back({x, y, z});
        }
    std::uint64_t in = 0;
    std::function<void(int)> dfs = [&](int k) {
      if (k == m) {
        sets.push_back(in);
        return;
      }
      for (int bit = 0; bit < 2; ++bit) {
        if (bit) in |= 1ull << k;
        else in &= ~(1ull << k);
        bool ok = true;
        for (auto [x, y, z] : by_last[k]) {
          bool bx = in >> x & 1, by = in >> y & 1, bz = in >> z & 1;
          if (bx == by && bz != bx) {
            ok = false;
            break;
          }
        }
        if (ok) dfs(k + 1);
      }
      in &= ~(1ull << k);
    };
    dfs(0);
  }

  static const WindowSets& get(RootType t, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<WindowSets>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{static_cast<int>(t), n}];
    if (!slot) slot.reset(new WindowSets(t, n));
    return *slot;
  }

  // Whether some nested chain of window sets meets R in every prefix of the order.
  bool chain_exists(const Order& order) const {
    std::vector<int> pos;
    for (AffineRoot r : order) pos.push_back(static_cast<int>(std::find(roots.begin(), roots.end(), r) - roots.begin()));
    std::map<std::uint32_t, std::vector<std::uint64_t>> by_trace;
    for (std::uint64_t s : sets) {
      std::uint32_t m = 0;
      for (std::size_t i = 0; i < pos.size(); ++i)
        if (s >> pos[i] & 1) m |= 1u << i;
      by_trace[m].push_back(s);
    }
    std::vector<std::uint64_t> reach{0};
    for (std::size_t i = 1; i <= order.size(); ++i) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t c : by_trace[(1u << i) - 1])
        for (std::uint64_t b : reach)
          if ((b & ~c) == 0) {
            next.push_back(c);
            break;
          }
      if (next.empty()) return false;
      reach = std::move(next);
    }
    return true;
  }
};

int refutation_window(const Order& order) {
  int top = 0;
  for (AffineRoot r : order) top = std::max(top, r.level);
  return top + 1;
}

Realization search_chain(RootType t, const Order& order, int budget, int pivot) {
  Realization out;
  if (!local_test(order) || !separation_test(t, order)) {
    out.status = Realizability::NotRealizable;
    return out;
  }
  const int n = static_cast<int>(order.size());
  Pool pool(t, budget, order, pivot);

  int forced_level = -1, forced = -1;
  if (pivot >= 0) {
    forced = pool.index_of(hat_system(t, pivot));
    std::uint32_t m = pool.masks[forced];
    if ((m & (m + 1)) != 0) {  // R n hat(Psi+) is not a prefix
      out.status = Realizability::NotRealizable;
      return out;
    }
    forced_level = std::popcount(m);
  }

  std::vector<std::vector<std::pair<int, int>>> levels(n + 1);
  levels[0] = {{forced_level == 0 ? forced : pool.empty, -1}};
  for (int i = 1; i <= n; ++i) {
    std::vector<int> reach;
    for (auto [c, parent] : levels[i - 1]) reach.push_back(c);
    std::vector<int> cands = i == forced_level ? std::vector<int>{forced} : pool.with_mask((1u << i) - 1);
    levels[i] = pool.step(reach, cands);
    if (levels[i].empty()) {
      if (pivot < 0 && !WindowSets::get(t, refutation_window(order)).chain_exists(order))
        out.status = Realizability::NotRealizable;
      return out;
    }
  }
  std::vector<int> idx(n + 1);
  idx[n] = levels[n].front().first;
  for (int i = n; i > 0; --i) {
    int parent = -1;
    for (auto [c, p] : levels[i])
      if (c == idx[i]) parent = p;
    idx[i - 1] = parent;
  }
  out.status = Realizability::Realized;
  out.pivot = pivot;
  for (int i : idx) out.chain.push_back(pool.forms[i]);
  return out;
}

std::vector<int> pivots_of(RootType t, const Order& order, int budget) {
  std::vector<int> out;
  for (std::size_t p = 0; p < RootSystem::get(t).positive_systems().size(); ++p)
    if (search_chain(t, order, budget, static_cast<int>(p)).status == Realizability::Realized)
      out.push_back(static_cast<int>(p));
  return out;
}

Order apply_reversal(const Order& order, const DihedralSubstring& s) {
  Order out = order;
  std::reverse(out.begin() + s.begin, out.begin() + s.end);
  return out;
}

// Breadth-first search over reversals allowed by `usable`, stopping at the first vertex
// accepted by `goal`, which may append one final move of its own.
template <class Usable, class Goal>
std::optional<std::vector<Move>> bfs(const Order& start, Usable usable, Goal goal, std::size_t limit = 50000) {
  std::map<Order, std::pair<Order, DihedralSubstring>> parent;
  std::deque<Order> queue{start};
  parent[start] = {Order{}, DihedralSubstring{}};
  auto path_to = [&](Order v) {
    std::vector<Move> moves;
    while (v != start) {
      auto& [prev, block] = parent.at(v);
      moves.push_back({block, v});
      v = prev;
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
  };
  while (!queue.empty() && parent.size() < limit) {
    Order v = queue.front();
    queue.pop_front();
    std::vector<Move> tail;
    if (goal(v, tail)) {
      std::vector<Move> moves = path_to(v);
      moves.insert(moves.end(), tail.begin(), tail.end());
      return moves;
    }
    for (const DihedralSubstring& s : dihedral_substrings(v)) {
      if (s.trivial()) continue;
      Order next = apply_reversal(v, s);
      if (parent.count(next) || !usable(s, next)) continue;
      parent[next] = {v, s};
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace

Plane plane_of(AffineRoot u, AffineRoot v) {
  Vec3 n = cross(vec(u), vec(v));
  long long g = std::gcd(std::gcd(n[0], n[1]), n[2]);
  if (g == 0) throw std::invalid_argument("roots " + to_string(u) + " and " + to_string(v) + " are parallel");
  for (long long& c : n) c /= g;
  for (long long c : n) {
    if (c == 0) continue;
    if (c < 0)
      for (long long& x : n) x = -x;
    break;
  }
  return {n};
}

bool in_plane(const Plane& p, AffineRoot r) { return dot(p.normal, vec(r)) == 0; }

bool local_test(const Order& order) {
  for (const Plane& p : planes_of(order)) {
    Order sub;
    for (AffineRoot r : order)
      if (in_plane(p, r)) sub.push_back(r);
    auto less = [&p](AffineRoot u, AffineRoot v) { return angle_less(p, u, v); };
    auto greater = [&p](AffineRoot u, AffineRoot v) { return angle_less(p, v, u); };
    if (!std::is_sorted(sub.begin(), sub.end(), less) && !std::is_sorted(sub.begin(), sub.end(), greater)) return false;
  }
  return true;
}

bool separation_test(RootType t, const Order& order) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    EPSet head = closure(t, Order(order.begin(), order.begin() + i));
    EPSet tail = closure(t, Order(order.begin() + i, order.end()));
    if (!head.disjoint(tail)) return false;
  }
  return true;
}

Realization realize(RootType t, const Order& order, int budget, int pivot) {
  check_order(order);
  if (pivot >= static_cast<int>(RootSystem::get(t).positive_systems().size()))
    throw std::invalid_argument("pivot index out of range");
  return search_chain(t, order, budget, pivot);
}

namespace {

// Memoized, since witness chains reuse a small stock of sets.
bool window_biclosed(const EPSet& s) {
  static std::mutex mu;
  static std::map<EPSet, bool> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(s); it != memo.end()) return it->second;
  }
  bool ok = is_biclosed_window(s, std::min(safe_window(s), kVerifyWindow));
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(s, ok);
  return ok;
}

}  // namespace

bool verify_chain(RootType t, const Order& order, const std::vector<BiclosedCanonical>& chain) {
  if (chain.size() != order.size() + 1) return false;
  std::vector<EPSet> sets;
  for (const BiclosedCanonical& c : chain) {
    if (c.type != t) return false;
    EPSet s = to_epset(c);
    if (!window_biclosed(s)) return false;
    sets.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0 && !sets[i].includes(sets[i - 1])) return false;
    for (std::size_t j = 0; j < order.size(); ++j)
      if (sets[i].contains(order[j]) != (j < i)) return false;
  }
  return true;
}

std::vector<DihedralSubstring> dihedral_substrings(const Order& order) {
  std::vector<DihedralSubstring> out;
  for (const Plane& p : planes_of(order)) {
    int lo = static_cast<int>(order.size()), hi = -1, count = 0;
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
      if (in_plane(p, order[i])) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
        ++count;
      }
    if (hi - lo + 1 == count) out.push_back({p, lo, hi + 1});
  }
  std::sort(out.begin(), out.end(), [](const DihedralSubstring& x, const DihedralSubstring& y) {
    return std::tie(x.begin, x.end, x.plane) < std::tie(y.begin, y.end, y.plane);
  });
  for (int i = 0; i < static_cast<int>(order.size()); ++i) out.push_back({Plane{}, i, i + 1});
  return out;
}

Order reverse(RootType t, const Order& order, const DihedralSubstring& s, int budget) {
  check_order(order);
  if (s.begin < 0 || s.end > static_cast<int>(order.size()) || s.begin >= s.end)
    throw std::invalid_argument("substring out of range");
  if (!s.trivial()) {
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
      if (in_plane(s.plane, order[i]) != (i >= s.begin && i < s.end))
        throw std::invalid_argument("block is not a dihedral substring");
  }
  Order out = apply_reversal(order, s);
  if (realize(t, out, budget).status != Realizability::Realized)
    throw BraidError("reversed order could not be certified as realizable");
  return out;
}

BraidPath connect(RootType t, const Order& from, const Order& to, int budget) {
  check_order(from);
  check_order(to);
  if (std::set<AffineRoot>(from.begin(), from.end()) != std::set<AffineRoot>(to.begin(), to.end()))
    throw std::invalid_argument("orders are on different root sets");
  if (realize(t, from, budget).status != Realizability::Realized ||
      realize(t, to, budget).status != Realizability::Realized)
    throw BraidError("endpoint is not a certified vertex");

  const RootSystem& rs = RootSystem::get(t);
  std::map<std::pair<Order, int>, bool> memo;
  auto ok = [&](const Order& v, int pivot) {
    auto key = std::make_pair(v, pivot);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool r = search_chain(t, v, budget, pivot).status == Realizability::Realized;
    memo[key] = r;
    return r;
  };

  auto staged = [&]() -> std::optional<std::vector<Move>> {
    std::vector<int> p1 = pivots_of(t, from, budget), p2 = pivots_of(t, to, budget);
    if (p1.empty() || p2.empty()) return std::nullopt;
    auto common = [&](int a, int b) {
      int n = 0;
      for (FiniteRoot x : rs.positive_systems()[a].roots)
        for (FiniteRoot y : rs.positive_systems()[b].roots) n += x == y;
      return n;
    };
    int p = p1[0], q = p2[0];
    for (int a : p1)
      for (int b : p2)
        if (common(a, b) > common(p, q)) p = a, q = b;

    std::vector<Move> moves;
    Order cur = from;
    auto finite_only = [&](int pivot) {
      return [&, pivot](const DihedralSubstring& s, const Order& next) { return !s.plane.infinite() && ok(next, pivot); };
    };
    while (p != q) {
      const PositiveSystem& ps = rs.positive_systems()[p];
      const PositiveSystem& target = rs.positive_systems()[q];
      FiniteRoot a1{};
      for (FiniteRoot s : ps.simple)
        if (std::find(target.roots.begin(), target.roots.end(), -s) != target.roots.end()) a1 = s;
      std::vector<FiniteRoot> next_roots;
      for (FiniteRoot r : ps.roots) next_roots.push_back(r == a1 ? -a1 : r);
      int p3 = rs.positive_system_index(next_roots);
      Plane flip = plane_of({a1, min_level(a1)}, {a1, min_level(a1) + 1});
      auto goal = [&](const Order& v, std::vector<Move>& tail) {
        if (ok(v, p3)) return true;
        for (const DihedralSubstring& s : dihedral_substrings(v)) {
          if (s.trivial() || s.plane != flip) continue;
          Order w = apply_reversal(v, s);
          if (ok(w, p3)) {
            tail.push_back({s, w});
            return true;
          }
        }
        return false;
      };
      auto leg = bfs(cur, finite_only(p), goal);
      if (!leg) return std::nullopt;
      for (Move& m : *leg) moves.push_back(m);
      if (!moves.empty()) cur = moves.back().result;
      p = p3;
    }
    auto reach = [&](const Order& v, std::vector<Move>&) { return v == to; };
    auto leg = bfs(cur, finite_only(q), reach);
    if (!leg) return std::nullopt;
    for (Move& m : *leg) moves.push_back(m);
    return moves;
  };

  BraidPath out;
  if (auto moves = staged()) {
    out.moves = std::move(*moves);
    out.method = "staged";
    return out;
  }
  auto any = [&](const DihedralSubstring&, const Order& next) { return ok(next, -1); };
  auto reach = [&](const Order& v, std::vector<Move>&) { return v == to; };
  auto moves = bfs(from, any, reach);
  if (!moves) throw BraidError("no reversal path found");
  out.moves = std::move(*moves);
  out.method = "search";
  return out;
}

bool check_path(RootType t, const Order& from, const Order& to, const BraidPath& path, int budget) {
  auto certified = [&](const Order& v) {
    Realization r = realize(t, v, budget);
    return r.status == Realizability::Realized && verify_chain(t, v, r.chain);
  };
  if (!certified(from)) return false;
  Order cur = from;
  for (const Move& m : path.moves) {
    if (m.block.trivial()) return false;
    auto subs = dihedral_substrings(cur);
    bool found = std::any_of(subs.begin(), subs.end(), [&](const DihedralSubstring& s) {
      return s.plane == m.block.plane && s.begin == m.block.begin && s.end == m.block.end;
    });
    if (!found || apply_reversal(cur, m.block) != m.result || !certified(m.result)) return false;
    cur = m.result;
  }
  return cur == to;
}

BraidGraph build_braid_graph(RootType t, const std::vector<AffineRoot>& r, int budget) {
  Order base = r;
  std::sort(base.begin(), base.end());
  check_order(base);
  if (base.size() > 8) throw std::invalid_argument("braid graphs are limited to 8 roots");
  const int n = static_cast<int>(base.size());
  Pool pool(t, budget, base, -1);

  // Every order with a witness chain, found by extending prefixes.
  std::set<Order> realized;
  std::vector<int> perm;
  std::function<void(std::uint32_t, const std::vector<int>&)> extend = [&](std::uint32_t used, const std::vector<int>& reach) {
    if (static_cast<int>(perm.size()) == n) {
      Order o;
      for (int i : perm) o.push_back(base[i]);
      realized.insert(o);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used >> i & 1) continue;
      auto stepped = pool.step(reach, pool.with_mask(used | 1u << i));
      if (stepped.empty()) continue;
      std::vector<int> next;
      for (auto [c, parent] : stepped) next.push_back(c);
      perm.push_back(i);
      extend(used | 1u << i, next);
      perm.pop_back();
    }
  };
  extend(0, {pool.empty});

  BraidGraph g;
  Order o = base;
  do {
    bool local = local_test(o) && separation_test(t, o);
    if (realized.count(o)) {
      if (!local) ++g.local_violations;
    } else if (local && WindowSets::get(t, refutation_window(o)).chain_exists(o)) {
      ++g.unknown;
    }
  } while (std::next_permutation(o.begin(), o.end()));

  g.vertices.assign(realized.begin(), realized.end());
  std::map<Order, int> id;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) id[g.vertices[i]] = static_cast<int>(i);
  boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> graph(g.vertices.size());
  std::set<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (const DihedralSubstring& s : dihedral_substrings(g.vertices[i])) {
      if (s.trivial()) continue;
      auto it = id.find(apply_reversal(g.vertices[i], s));
      if (it == id.end() || it->second == static_cast<int>(i)) continue;
      edges.insert(std::minmax(static_cast<int>(i), it->second));
    }
  }
  for (auto [a, b] : edges) boost::add_edge(a, b, graph);
  g.edges.assign(edges.begin(), edges.end());
  g.component.resize(g.vertices.size());
  g.components = g.vertices.empty() ? 0 : boost::connected_components(graph, g.component.data());
  return g;
}

}  // namespace affw
