#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace affw {

enum class RootType { A2, B2, G2 };

std::string_view type_name(RootType t);
RootType parse_type(std::string_view s);  // throws std::invalid_argument

// a*alpha + b*beta; alpha is the short simple root for B2 and G2.
struct FiniteRoot {
  int a = 0;
  int b = 0;

  auto operator<=>(const FiniteRoot&) const = default;
  FiniteRoot operator-() const { return {-a, -b}; }
  FiniteRoot operator+(FiniteRoot o) const { return {a + o.a, b + o.b}; }
  FiniteRoot operator-(FiniteRoot o) const { return {a - o.a, b - o.b}; }
  FiniteRoot operator*(int k) const { return {a * k, b * k}; }
  bool positive() const { return a >= 0 && b >= 0 && (a | b) != 0; }
};

std::string to_string(FiniteRoot r);  // "a+b", "-2a-b", ...

// Subsets of the simple system are bit masks: bit 0 = alpha, bit 1 = beta.
using SimpleSet = unsigned;
inline constexpr SimpleSet kNoSimple = 0;
inline constexpr SimpleSet kAlpha = 1;
inline constexpr SimpleSet kBeta = 2;
inline constexpr SimpleSet kAllSimple = 3;

// Finite Weyl group element as an integer 2x2 matrix on (a,b) coordinates.
struct FiniteElement {
  std::array<int, 4> m{1, 0, 0, 1};
  auto operator<=>(const FiniteElement&) const = default;
  FiniteRoot apply(FiniteRoot r) const { return {m[0] * r.a + m[1] * r.b, m[2] * r.a + m[3] * r.b}; }
  FiniteElement operator*(const FiniteElement& o) const;
};

struct PositiveSystem {
  FiniteElement z;                 // roots = z(Phi+)
  std::vector<FiniteRoot> roots;   // z applied to the standard positive roots, same order
  std::array<FiniteRoot, 2> simple;
};

class RootSystem {
 public:
  static const RootSystem& get(RootType t);

  RootType type() const { return type_; }
  std::string_view name() const { return type_name(type_); }

  // Positive roots by height then lexicographically, followed by their negatives in the same order.
  const std::vector<FiniteRoot>& roots() const { return roots_; }
  const std::vector<FiniteRoot>& positive() const { return positive_; }
  int size() const { return static_cast<int>(roots_.size()); }
  int npos() const { return static_cast<int>(positive_.size()); }
  std::array<FiniteRoot, 2> simple() const { return {FiniteRoot{1, 0}, FiniteRoot{0, 1}}; }
  FiniteRoot highest() const { return highest_; }

  // cartan()[i][j] = <alpha_j, alpha_i^vee>
  std::array<std::array<int, 2>, 2> cartan() const;
  int inner(FiniteRoot x, FiniteRoot y) const;
  int norm2(FiniteRoot x) const { return inner(x, x); }
  int pairing(FiniteRoot v, FiniteRoot r) const;  // <v, r^vee> = 2(v,r)/(r,r)
  FiniteRoot reflect(FiniteRoot mirror, FiniteRoot target) const;

  int index(FiniteRoot r) const;  // -1 when r is not a root
  bool is_root(FiniteRoot r) const { return index(r) >= 0; }
  int negate(int i) const { return i < npos() ? i + npos() : i - npos(); }

  const std::vector<FiniteElement>& weyl_group() const { return group_; }
  FiniteElement simple_reflection(int i) const;
  const std::vector<PositiveSystem>& positive_systems() const { return systems_; }
  int positive_system_index(const std::vector<FiniteRoot>& roots) const;  // -1 when absent

 private:
  explicit RootSystem(RootType t);

  RootType type_;
  std::array<int, 3> gram_{};  // (alpha,alpha), (alpha,beta), (beta,beta)
  std::vector<FiniteRoot> roots_;
  std::vector<FiniteRoot> positive_;
  FiniteRoot highest_;
  std::vector<FiniteElement> group_;
  std::vector<PositiveSystem> systems_;
};

// Roots in the span of the simple roots selected by s (both signs).
bool in_span(FiniteRoot r, SimpleSet s);

// Sum of coefficients on simple roots outside L.
int h_L(const RootSystem& rs, FiniteRoot root, SimpleSet L);
// Largest n with root a sum of n elements of Phi+_{L,empty}; exhaustive decomposition.
int d_L(const RootSystem& rs, FiniteRoot root, SimpleSet L);

// Same, for the simple roots of ps.
bool in_system_span(const PositiveSystem& ps, FiniteRoot r, SimpleSet s);

bool orthogonal(const RootSystem& rs, const PositiveSystem& ps, SimpleSet x, SimpleSet y);

// Psi+_{D1,D2} = (Psi+ \ Phi_{D1}) u Phi_{D2}; D1, D2 index the simple system of ps.
struct PhiBiclosed {
  int system = 0;  // index into RootSystem::positive_systems()
  SimpleSet removed = kNoSimple;
  SimpleSet added = kNoSimple;
};

// Validates orthogonality; throws std::invalid_argument otherwise.
PhiBiclosed make_phi_biclosed(const RootSystem& rs, int system, SimpleSet removed, SimpleSet added);
std::vector<FiniteRoot> phi_biclosed_set(const RootSystem& rs, const PhiBiclosed& pb);

// Closed under nonnegative real combinations that land in Phi, for the set and its complement.
bool is_closed_in_phi(const RootSystem& rs, const std::vector<FiniteRoot>& set);
bool is_biclosed_in_phi(const RootSystem& rs, const std::vector<FiniteRoot>& set);

// Finds (system, removed, added) with Psi+_{removed,added} equal to set; the first match in
// positive-system order wins.
bool classify_phi_biclosed(const RootSystem& rs, const std::vector<FiniteRoot>& set, PhiBiclosed& out);

}  // namespace affw
