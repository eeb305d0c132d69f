#include "affw/finite_roots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace affw {

std::string_view type_name(RootType t) {
  switch (t) {
    case RootType::A2: return "A2";
    case RootType::B2: return "B2";
    case RootType::G2: return "G2";
  }
  return "?";
}

RootType parse_type(std::string_view s) {
  if (s == "A2") return RootType::A2;
  if (s == "B2") return RootType::B2;
  if (s == "G2") return RootType::G2;
  throw std::invalid_argument("unknown root system type '" + std::string(s) + "' (expected A2, B2 or G2)");
}

std::string to_string(FiniteRoot r) {
  std::string out;
  auto term = [&out](int c, const char* sym) {
    if (c == 0) return;
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += sym;
  };
  term(r.a, "a");
  term(r.b, "b");
  return out.empty() ? "0" : out;
}

FiniteElement FiniteElement::operator*(const FiniteElement& o) const {
  return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
           m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
}

const RootSystem& RootSystem::get(RootType t) {
  static const RootSystem a2(RootType::A2);
  static const RootSystem b2(RootType::B2);
  static const RootSystem g2(RootType::G2);
  switch (t) {
    case RootType::A2: return a2;
    case RootType::B2: return b2;
    case RootType::G2: return g2;
  }
  throw std::invalid_argument("bad root type");
}

RootSystem::RootSystem(RootType t) : type_(t) {
  switch (t) {
    case RootType::A2: gram_ = {2, -1, 2}; break;
    case RootType::B2: gram_ = {2, -2, 4}; break;
    case RootType::G2: gram_ = {2, -3, 6}; break;
  }

  // Orbit of the simple roots under the simple reflections.
  std::set<FiniteRoot> seen{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<FiniteRoot> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    FiniteRoot r = todo.back();
    todo.pop_back();
    for (FiniteRoot s : simple()) {
      FiniteRoot img = reflect(s, r);
      if (seen.insert(img).second) todo.push_back(img);
    }
  }
  for (FiniteRoot r : seen)
    if (r.positive()) positive_.push_back(r);
  std::sort(positive_.begin(), positive_.end(), [](FiniteRoot x, FiniteRoot y) {
    if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
    return x < y;
  });
  roots_ = positive_;
  for (FiniteRoot r : positive_) roots_.push_back(-r);
  highest_ = positive_.back();

  std::set<FiniteElement> elems{FiniteElement{}};
  std::vector<FiniteElement> queue{FiniteElement{}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int s = 0; s < 2; ++s) {
      FiniteElement next = simple_reflection(s) * queue[i];
      if (elems.insert(next).second) queue.push_back(next);
    }
  }
  group_ = queue;

  for (const FiniteElement& z : group_) {
    PositiveSystem ps;
    ps.z = z;
    for (FiniteRoot r : positive_) ps.roots.push_back(z.apply(r));
    ps.simple = {z.apply({1, 0}), z.apply({0, 1})};
    systems_.push_back(std::move(ps));
  }
}

std::array<std::array<int, 2>, 2> RootSystem::cartan() const {
  auto s = simple();
  std::array<std::array<int, 2>, 2> c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = pairing(s[j], s[i]);
  return c;
}

int RootSystem::inner(FiniteRoot x, FiniteRoot y) const {
  return x.a * y.a * gram_[0] + (x.a * y.b + x.b * y.a) * gram_[1] + x.b * y.b * gram_[2];
}

int RootSystem::pairing(FiniteRoot v, FiniteRoot r) const { return 2 * inner(v, r) / norm2(r); }

FiniteRoot RootSystem::reflect(FiniteRoot mirror, FiniteRoot target) const {
  return target - mirror * pairing(target, mirror);
}

int RootSystem::index(FiniteRoot r) const {
  auto it = std::find(roots_.begin(), roots_.end(), r);
  return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

FiniteElement RootSystem::simple_reflection(int i) const {
  FiniteRoot s = simple()[i];
  FiniteRoot ea = reflect(s, {1, 0});
  FiniteRoot eb = reflect(s, {0, 1});
  return {{ea.a, eb.a, ea.b, eb.b}};
}

int RootSystem::positive_system_index(const std::vector<FiniteRoot>& roots) const {
  std::set<FiniteRoot> want(roots.begin(), roots.end());
  for (std::size_t i = 0; i < systems_.size(); ++i) {
    std::set<FiniteRoot> have(systems_[i].roots.begin(), systems_[i].roots.end());
    if (have == want) return static_cast<int>(i);
  }
  return -1;
}

bool in_span(FiniteRoot r, SimpleSet s) {
  if (r.a != 0 && !(s & kAlpha)) return false;
  if (r.b != 0 && !(s & kBeta)) return false;
  return true;
}

int h_L(const RootSystem& rs, FiniteRoot root, SimpleSet L) {
  if (!rs.is_root(root) || !root.positive()) throw std::invalid_argument("h_L expects a positive root, got " + to_string(root));
  int h = 0;
  if (!(L & kAlpha)) h += root.a;
  if (!(L & kBeta)) h += root.b;
  return h;
}

int d_L(const RootSystem& rs, FiniteRoot root, SimpleSet L) {
  if (!rs.is_root(root) || !root.positive()) throw std::invalid_argument("d_L expects a positive root, got " + to_string(root));
  if (in_span(root, L)) return 0;
  std::vector<FiniteRoot> parts;
  for (FiniteRoot r : rs.positive())
    if (!in_span(r, L)) parts.push_back(r);
  // best[v]: most parts summing to v, or -1 when v is not such a sum.
  std::map<FiniteRoot, int> memo;
  std::function<int(FiniteRoot)> best = [&](FiniteRoot v) -> int {
    if (v.a == 0 && v.b == 0) return 0;
    if (v.a < 0 || v.b < 0) return -1;
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    int out = -1;
    for (FiniteRoot p : parts) {
      int sub = best(v - p);
      if (sub >= 0) out = std::max(out, sub + 1);
    }
    memo[v] = out;
    return out;
  };
  return std::max(best(root), 0);
}

bool orthogonal(const RootSystem& rs, const PositiveSystem& ps, SimpleSet x, SimpleSet y) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if ((x >> i & 1) && (y >> j & 1) && rs.inner(ps.simple[i], ps.simple[j]) != 0) return false;
  return true;
}

PhiBiclosed make_phi_biclosed(const RootSystem& rs, int system, SimpleSet removed, SimpleSet added) {
  if (system < 0 || system >= static_cast<int>(rs.positive_systems().size()))
    throw std::invalid_argument("positive system index out of range");
  if (removed > kAllSimple || added > kAllSimple) throw std::invalid_argument("simple subset mask out of range");
  if (!orthogonal(rs, rs.positive_systems()[system], removed, added))
    throw std::invalid_argument("removed and added simple subsets are not orthogonal");
  return {system, removed, added};
}

bool in_system_span(const PositiveSystem& ps, FiniteRoot r, SimpleSet s) {
  FiniteRoot x = ps.simple[0], y = ps.simple[1];
  int det = x.a * y.b - x.b * y.a;
  int ka = (r.a * y.b - r.b * y.a) / det;
  int kb = (x.a * r.b - x.b * r.a) / det;
  return in_span({ka, kb}, s);
}

std::vector<FiniteRoot> phi_biclosed_set(const RootSystem& rs, const PhiBiclosed& pb) {
  const PositiveSystem& ps = rs.positive_systems().at(pb.system);
  std::vector<FiniteRoot> out;
  for (FiniteRoot r : rs.roots()) {
    bool pos = std::find(ps.roots.begin(), ps.roots.end(), r) != ps.roots.end();
    if ((pos && !in_system_span(ps, r, pb.removed)) || in_system_span(ps, r, pb.added)) out.push_back(r);
  }
  return out;
}

bool is_closed_in_phi(const RootSystem& rs, const std::vector<FiniteRoot>& set) {
  std::set<FiniteRoot> in(set.begin(), set.end());
  for (FiniteRoot x : set) {
    for (FiniteRoot y : set) {
      int det = x.a * y.b - x.b * y.a;
      if (det == 0) continue;  // collinear pairs only reach +-x
      for (FiniteRoot t : rs.roots()) {
        int n1 = t.a * y.b - t.b * y.a;
        int n2 = x.a * t.b - x.b * t.a;
        bool cone = det > 0 ? (n1 >= 0 && n2 >= 0) : (n1 <= 0 && n2 <= 0);
        if (cone && !in.count(t)) return false;
      }
    }
  }
  return true;
}

bool is_biclosed_in_phi(const RootSystem& rs, const std::vector<FiniteRoot>& set) {
  std::set<FiniteRoot> in(set.begin(), set.end());
  std::vector<FiniteRoot> rest;
  for (FiniteRoot r : rs.roots())
    if (!in.count(r)) rest.push_back(r);
  return is_closed_in_phi(rs, set) && is_closed_in_phi(rs, rest);
}

bool classify_phi_biclosed(const RootSystem& rs, const std::vector<FiniteRoot>& set, PhiBiclosed& out) {
  std::set<FiniteRoot> want(set.begin(), set.end());
  for (int sys = 0; sys < static_cast<int>(rs.positive_systems().size()); ++sys) {
    for (SimpleSet rem = 0; rem <= kAllSimple; ++rem) {
      for (SimpleSet add = 0; add <= kAllSimple; ++add) {
        if (!orthogonal(rs, rs.positive_systems()[sys], rem, add)) continue;
        PhiBiclosed pb{sys, rem, add};
        auto got = phi_biclosed_set(rs, pb);
        if (std::set<FiniteRoot>(got.begin(), got.end()) == want) {
          out = pb;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace affw
