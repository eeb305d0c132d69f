#include "affw/affine_roots.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace affw {

std::string to_string(AffineRoot r) {
  std::string out = to_string(r.dir);
  if (r.level != 0) {
    out += r.level < 0 ? "-" : "+";
    int k = r.level < 0 ? -r.level : r.level;
    if (k != 1) out += std::to_string(k);
    out += "d";
  }
  return out;
}

// ---- LevelSet ----

LevelSet LevelSet::interval(int lo, int hi) {
  LevelSet s;
  if (hi < lo) return s;
  s.bits_.assign(hi + 1, 0);
  for (int k = std::max(lo, 0); k <= hi; ++k) s.bits_[k] = 1;
  s.normalize();
  return s;
}

LevelSet LevelSet::ray(int lo) {
  LevelSet s;
  s.bits_.assign(std::max(lo, 0), 0);
  s.tail_ = true;
  s.normalize();
  return s;
}

void LevelSet::normalize() {
  while (!bits_.empty() && static_cast<bool>(bits_.back()) == tail_) bits_.pop_back();
}

bool LevelSet::contains(int level) const { return level >= 0 && bit(level); }

std::optional<long long> LevelSet::count() const {
  if (tail_) return std::nullopt;
  return std::count(bits_.begin(), bits_.end(), 1);
}

int LevelSet::min() const {
  for (int k = 0; k < span(); ++k)
    if (bits_[k]) return k;
  return span();
}

int LevelSet::max() const {
  for (int k = span() - 1; k >= 0; --k)
    if (bits_[k]) return k;
  return -1;
}

std::vector<std::pair<int, int>> LevelSet::runs() const {
  std::vector<std::pair<int, int>> out;
  int k = 0;
  while (k < span()) {
    if (!bits_[k]) {
      ++k;
      continue;
    }
    int lo = k;
    while (k < span() && bits_[k]) ++k;
    if (k == span() && tail_) return out.emplace_back(lo, -1), out;
    out.emplace_back(lo, k - 1);
  }
  if (tail_) out.emplace_back(span(), -1);
  return out;
}

bool LevelSet::is_interval() const { return runs().size() <= 1; }

LevelSet LevelSet::unite(const LevelSet& o) const {
  LevelSet r;
  int n = std::max(span(), o.span());
  r.bits_.resize(n);
  for (int k = 0; k < n; ++k) r.bits_[k] = bit(k) || o.bit(k);
  r.tail_ = tail_ || o.tail_;
  r.normalize();
  return r;
}

LevelSet LevelSet::intersect(const LevelSet& o) const {
  LevelSet r;
  int n = std::max(span(), o.span());
  r.bits_.resize(n);
  for (int k = 0; k < n; ++k) r.bits_[k] = bit(k) && o.bit(k);
  r.tail_ = tail_ && o.tail_;
  r.normalize();
  return r;
}

LevelSet LevelSet::minus(const LevelSet& o) const {
  LevelSet r;
  int n = std::max(span(), o.span());
  r.bits_.resize(n);
  for (int k = 0; k < n; ++k) r.bits_[k] = bit(k) && !o.bit(k);
  r.tail_ = tail_ && !o.tail_;
  r.normalize();
  return r;
}

LevelSet LevelSet::complement(int floor) const {
  LevelSet r;
  int n = std::max(span(), floor);
  r.bits_.resize(n);
  for (int k = 0; k < n; ++k) r.bits_[k] = k >= floor && !bit(k);
  r.tail_ = !tail_;
  r.normalize();
  return r;
}

bool LevelSet::includes(const LevelSet& o) const {
  if (o.tail_ && !tail_) return false;
  int n = std::max(span(), o.span());
  for (int k = 0; k < n; ++k)
    if (o.bit(k) && !bit(k)) return false;
  return true;
}

void LevelSet::insert(int level) {
  if (level < 0 || contains(level)) return;
  if (level >= span()) bits_.resize(level + 1, tail_);
  bits_[level] = 1;
  normalize();
}

void LevelSet::clear_below(int floor) {
  if (floor <= 0) return;
  if (floor > span()) bits_.resize(floor, tail_);
  for (int k = 0; k < floor; ++k) bits_[k] = 0;
  normalize();
}

// ---- EPSet ----

EPSet::EPSet(RootType t) : type_(t), dirs_(RootSystem::get(t).size()) {}

EPSet EPSet::full(RootType t) {
  EPSet e(t);
  const auto& roots = e.system().roots();
  for (int i = 0; i < e.ndirs(); ++i) e.dirs_[i] = LevelSet::ray(min_level(roots[i]));
  return e;
}

EPSet EPSet::from_roots(RootType t, const std::vector<AffineRoot>& roots) {
  EPSet e(t);
  for (const AffineRoot& r : roots) e.insert(r);
  return e;
}

const LevelSet& EPSet::at(FiniteRoot dir) const {
  int i = system().index(dir);
  if (i < 0) throw std::invalid_argument("not a root: " + to_string(dir));
  return dirs_[i];
}

void EPSet::set(int dir_index, LevelSet s) {
  s.clear_below(min_level(system().roots()[dir_index]));
  dirs_[dir_index] = std::move(s);
}

bool EPSet::contains(AffineRoot r) const {
  int i = system().index(r.dir);
  return i >= 0 && dirs_[i].contains(r.level);
}

void EPSet::insert(AffineRoot r) {
  int i = system().index(r.dir);
  if (i < 0 || !is_positive(r)) throw std::invalid_argument("not a positive affine root: " + to_string(r));
  dirs_[i].insert(r.level);
}

bool EPSet::empty() const {
  return std::all_of(dirs_.begin(), dirs_.end(), [](const LevelSet& s) { return s.empty(); });
}

bool EPSet::finite() const {
  return std::none_of(dirs_.begin(), dirs_.end(), [](const LevelSet& s) { return s.infinite(); });
}

std::optional<long long> EPSet::count() const {
  long long n = 0;
  for (const LevelSet& s : dirs_) {
    auto c = s.count();
    if (!c) return std::nullopt;
    n += *c;
  }
  return n;
}

bool EPSet::canonical() const {
  return std::all_of(dirs_.begin(), dirs_.end(), [](const LevelSet& s) { return s.is_interval(); });
}

int EPSet::extent() const {
  int fin = 0, ray = 0;
  for (const LevelSet& s : dirs_) {
    if (s.empty()) continue;
    if (s.infinite()) ray = std::max(ray, std::max(s.span(), s.min()));
    else fin = std::max(fin, s.max());
  }
  return fin + ray;
}

std::vector<AffineRoot> EPSet::truncate(int max_level) const {
  std::vector<AffineRoot> out;
  const auto& roots = system().roots();
  for (int i = 0; i < ndirs(); ++i)
    for (int k = 0; k <= max_level; ++k)
      if (dirs_[i].contains(k)) out.push_back({roots[i], k});
  std::sort(out.begin(), out.end());
  return out;
}

EPSet EPSet::unite(const EPSet& o) const {
  EPSet r(type_);
  for (int i = 0; i < ndirs(); ++i) r.dirs_[i] = dirs_[i].unite(o.dirs_[i]);
  return r;
}

EPSet EPSet::intersect(const EPSet& o) const {
  EPSet r(type_);
  for (int i = 0; i < ndirs(); ++i) r.dirs_[i] = dirs_[i].intersect(o.dirs_[i]);
  return r;
}

EPSet EPSet::minus(const EPSet& o) const {
  EPSet r(type_);
  for (int i = 0; i < ndirs(); ++i) r.dirs_[i] = dirs_[i].minus(o.dirs_[i]);
  return r;
}

EPSet EPSet::complement() const {
  EPSet r(type_);
  const auto& roots = system().roots();
  for (int i = 0; i < ndirs(); ++i) r.dirs_[i] = dirs_[i].complement(min_level(roots[i]));
  return r;
}

bool EPSet::includes(const EPSet& o) const {
  for (int i = 0; i < ndirs(); ++i)
    if (!dirs_[i].includes(o.dirs_[i])) return false;
  return true;
}

std::string EPSet::key() const {
  std::string k;
  k += static_cast<char>('0' + static_cast<int>(type_));
  for (const LevelSet& s : dirs_) {
    k += '|';
    for (auto [lo, hi] : s.runs()) {
      k += std::to_string(lo);
      k += ':';
      k += std::to_string(hi);
      k += ',';
    }
  }
  return k;
}

std::vector<FiniteRoot> I_of(const EPSet& b) {
  std::vector<FiniteRoot> out;
  for (int i = 0; i < b.ndirs(); ++i)
    if (b.at(i).infinite()) out.push_back(b.system().roots()[i]);
  return out;
}

std::vector<FiniteRoot> A_of(const EPSet& b) {
  std::vector<FiniteRoot> out;
  for (int i = 0; i < b.ndirs(); ++i)
    if (!b.at(i).empty()) out.push_back(b.system().roots()[i]);
  return out;
}

std::optional<long long> difference_cardinality(const EPSet& a, const EPSet& b) { return a.minus(b).count(); }

// ---- combination table ----

namespace {

struct ComboTable {
  int n = 0;
  std::vector<std::vector<DirCombo>> cells;  // n*n
};

ComboTable build_table(RootType t) {
  const RootSystem& rs = RootSystem::get(t);
  ComboTable tab;
  tab.n = rs.size();
  tab.cells.resize(tab.n * tab.n);
  const auto& roots = rs.roots();
  for (int i = 0; i < tab.n; ++i) {
    for (int j = 0; j < tab.n; ++j) {
      FiniteRoot x = roots[i], y = roots[j];
      int det = x.a * y.b - x.b * y.a;
      if (det == 0) continue;
      for (int k = 0; k < tab.n; ++k) {
        FiniteRoot z = roots[k];
        int n1 = z.a * y.b - z.b * y.a;
        int n2 = x.a * z.b - x.b * z.a;
        int q = det;
        if (q < 0) n1 = -n1, n2 = -n2, q = -q;
        if (n1 <= 0 || n2 <= 0) continue;
        int g = std::gcd(std::gcd(n1, n2), q);
        tab.cells[i * tab.n + j].push_back({k, n1 / g, n2 / g, q / g});
      }
    }
  }
  return tab;
}

const ComboTable& table(RootType t) {
  static const std::array<ComboTable, 3> tabs{build_table(RootType::A2), build_table(RootType::B2),
                                              build_table(RootType::G2)};
  return tabs[static_cast<int>(t)];
}

}  // namespace

const std::vector<DirCombo>& dir_combos(RootType t, int i, int j) {
  const ComboTable& tab = table(t);
  return tab.cells[i * tab.n + j];
}

std::vector<Combination> combine(RootType t, AffineRoot a, AffineRoot b, int max_level) {
  const RootSystem& rs = RootSystem::get(t);
  int i = rs.index(a.dir), j = rs.index(b.dir);
  if (i < 0 || j < 0 || !is_positive(a) || !is_positive(b))
    throw std::invalid_argument("combine expects positive affine roots");
  std::vector<Combination> out;
  if (a.dir == b.dir) {
    if (a.level == b.level) {
      out.push_back({a, Rational(1, 2), Rational(1, 2)});
      return out;
    }
    int m = a.level, n = b.level;
    int lo = std::min(m, n), hi = std::max(m, n);
    for (int k = lo + 1; k < hi && k <= max_level; ++k)
      out.push_back({{a.dir, k}, Rational(n - k, n - m), Rational(k - m, n - m)});
    return out;
  }
  if (a.dir == -b.dir) {
    // (1,k) = k1 (1,m) + k2 (-1,n), k1 - k2 = 1, so k2 = (k - m)/(m + n).
    int m = a.level, n = b.level, s = m + n;
    for (int k = m + 1; k <= max_level; ++k) {
      Rational k2(k - m, s);
      out.push_back({{a.dir, k}, k2 + 1, k2});
    }
    for (int k = n + 1; k <= max_level; ++k) {
      Rational k1(k - n, s);
      out.push_back({{b.dir, k}, k1, k1 + 1});
    }
    return out;
  }
  for (const DirCombo& c : dir_combos(t, i, j)) {
    int num = c.p1 * a.level + c.p2 * b.level;
    if (num % c.q != 0) continue;
    AffineRoot r{rs.roots()[c.target], num / c.q};
    if (!is_positive(r) || r.level > max_level) continue;
    out.push_back({r, Rational(c.p1, c.q), Rational(c.p2, c.q)});
  }
  std::sort(out.begin(), out.end(), [](const Combination& x, const Combination& y) { return x.root < y.root; });
  return out;
}

}  // namespace affw
