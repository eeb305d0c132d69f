#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "affw/finite_roots.hpp"

namespace affw {

using Rational = boost::rational<long long>;

// dir + level * delta
struct AffineRoot {
  FiniteRoot dir;
  int level = 0;

  auto operator<=>(const AffineRoot&) const = default;
  AffineRoot operator-() const { return {-dir, -level}; }
};

inline int min_level(FiniteRoot dir) { return dir.positive() ? 0 : 1; }
inline bool is_positive(AffineRoot r) { return r.level >= min_level(r.dir); }
// alpha_0: alpha for positive alpha, alpha + delta otherwise.
inline AffineRoot bottom(FiniteRoot dir) { return {dir, min_level(dir)}; }

std::string to_string(AffineRoot r);  // "a+b+2d", "-a+d", ...

// A set of integer levels that is eventually constant: explicit bits below bits.size(),
// then `tail` for every level from bits.size() on.
class LevelSet {
 public:
  LevelSet() = default;
  static LevelSet interval(int lo, int hi);  // [lo, hi]; empty when hi < lo
  static LevelSet ray(int lo);               // [lo, inf)

  bool contains(int level) const;
  bool empty() const { return !tail_ && bits_.empty(); }
  bool infinite() const { return tail_; }
  std::optional<long long> count() const;  // nullopt when infinite
  int min() const;                          // requires !empty()
  int max() const;                          // requires !empty() and !infinite()
  int span() const { return static_cast<int>(bits_.size()); }  // levels >= span() all equal tail
  bool is_interval() const;
  // Maximal runs [lo, hi]; hi == -1 marks an unbounded last run.
  std::vector<std::pair<int, int>> runs() const;

  LevelSet unite(const LevelSet& o) const;
  LevelSet intersect(const LevelSet& o) const;
  LevelSet minus(const LevelSet& o) const;
  LevelSet complement(int floor) const;  // complement within [floor, inf)
  bool includes(const LevelSet& o) const;
  void insert(int level);
  void clear_below(int floor);

  bool operator==(const LevelSet& o) const { return tail_ == o.tail_ && bits_ == o.bits_; }
  bool operator<(const LevelSet& o) const {
    return tail_ != o.tail_ ? tail_ < o.tail_ : bits_ < o.bits_;
  }

 private:
  void normalize();
  bool bit(int level) const { return level < span() ? bits_[level] : tail_; }

  std::vector<std::uint8_t> bits_;
  bool tail_ = false;
};

// Per-direction level sets over the positive affine roots of one root system.
class EPSet {
 public:
  EPSet() = default;
  explicit EPSet(RootType t);
  static EPSet full(RootType t);
  static EPSet from_roots(RootType t, const std::vector<AffineRoot>& roots);  // throws on non-positive

  RootType type() const { return type_; }
  const RootSystem& system() const { return RootSystem::get(type_); }
  const LevelSet& at(int dir_index) const { return dirs_[dir_index]; }
  const LevelSet& at(FiniteRoot dir) const;
  void set(int dir_index, LevelSet s);
  int ndirs() const { return static_cast<int>(dirs_.size()); }

  bool contains(AffineRoot r) const;
  void insert(AffineRoot r);
  bool empty() const;
  bool finite() const;
  std::optional<long long> count() const;
  // Every direction is empty, a finite interval or a ray.
  bool canonical() const;
  // Largest finite level present plus largest ray start; used to size oracle windows.
  int extent() const;
  std::vector<AffineRoot> truncate(int max_level) const;  // sorted

  EPSet unite(const EPSet& o) const;
  EPSet intersect(const EPSet& o) const;
  EPSet minus(const EPSet& o) const;
  EPSet complement() const;
  bool includes(const EPSet& o) const;
  bool disjoint(const EPSet& o) const { return intersect(o).empty(); }

  bool operator==(const EPSet& o) const { return type_ == o.type_ && dirs_ == o.dirs_; }
  bool operator<(const EPSet& o) const { return type_ != o.type_ ? type_ < o.type_ : dirs_ < o.dirs_; }
  std::string key() const;

 private:
  RootType type_ = RootType::A2;
  std::vector<LevelSet> dirs_;
};

// Ray directions.
std::vector<FiniteRoot> I_of(const EPSet& b);
// Inhabited directions.
std::vector<FiniteRoot> A_of(const EPSet& b);

// Cardinality of a \ b, nullopt for infinity.
std::optional<long long> difference_cardinality(const EPSet& a, const EPSet& b);

struct Combination {
  AffineRoot root;
  Rational k1;
  Rational k2;
};

// Root directions strictly inside the cone of directions i and j (independent):
// target = (p1/q) dir_i + (p2/q) dir_j.
struct DirCombo {
  int target;
  int p1;
  int p2;
  int q;
};
const std::vector<DirCombo>& dir_combos(RootType t, int i, int j);

// Positive roots k1*a + k2*b with k1, k2 > 0, up to max_level.
std::vector<Combination> combine(RootType t, AffineRoot a, AffineRoot b, int max_level);

}  // namespace affw
