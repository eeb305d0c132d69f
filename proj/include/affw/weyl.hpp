#pragma once

#include <array>
#include <compare>
#include <vector>

#include "affw/affine_roots.hpp"

namespace affw {

// Generator indices: 0 = s_alpha, 1 = s_beta, 2 = s_{delta - highest root}.
using Word = std::vector<int>;
inline constexpr int kRank = 3;

AffineRoot simple_affine_root(RootType t, int s);

// Element of the affine Weyl group, stored as its integer matrix on (a, b, level).
class AffineElement {
 public:
  AffineElement() = default;
  static AffineElement generator(RootType t, int s);
  static AffineElement from_word(RootType t, const Word& w);

  AffineRoot apply(AffineRoot r) const;
  AffineElement inverse() const;
  AffineElement operator*(const AffineElement& o) const;
  auto operator<=>(const AffineElement&) const = default;

  // The finite Weyl group part (action on directions).
  FiniteElement finite_part() const { return {{m_[0], m_[1], m_[3], m_[4]}}; }

 private:
  std::array<int, 9> m_{1, 0, 0, 0, 1, 0, 0, 0, 1};
};

// Positive roots made negative by the inverse; the inversion set of the element.
std::vector<AffineRoot> inversion_roots(RootType t, const Word& w);
bool is_reduced(RootType t, const Word& w);
int length(RootType t, const AffineElement& x);
// Lexicographically least reduced word of x.
Word lexmin_word(RootType t, const AffineElement& x);
Word reduce(RootType t, const Word& w);

// Elements of length <= max_len ordered by (length, lexmin word).
struct ElementEntry {
  AffineElement element;
  Word word;
};
std::vector<ElementEntry> elements_up_to(RootType t, int max_len);

}  // namespace affw
