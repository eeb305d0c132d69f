#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "affw/words.hpp"

namespace affw {

// Phi_x (Inv) or its complement Phi_x' (CoInv). A set of both kinds is stored as Inv.
struct BElement {
  bool coinv = false;
  WBar x;

  auto operator<=>(const BElement&) const = default;
  static BElement inv(WBar x) { return {false, std::move(x)}; }
  static BElement co(WBar x) { return {true, std::move(x)}; }
};

EPSet to_epset(const BElement& b);
BElement recognize(const EPSet& s);  // throws NotBiclosed
BElement normalize(const BElement& b);
BElement bottom_element(RootType t);
BElement top_element(RootType t);

bool leq(const BElement& a, const BElement& b);
BElement complement(const BElement& b);
BElement join(const BElement& a, const BElement& b);
BElement meet(const BElement& a, const BElement& b);

// Pairwise comparable families only; throws std::invalid_argument otherwise.
BElement chain_union(const std::vector<BElement>& chain);
BElement chain_intersection(const std::vector<BElement>& chain);

// Inv of the join when the closure of the union is finite, nullopt otherwise.
std::optional<BElement> finite_closure_join(RootType t, const std::vector<Word>& words);

// The quasi-positive system {-a+ld, -b+md, -a-b+nd} of type A2 with levels in [-window, window].
struct QuasiPositiveReport {
  int window = 0;
  bool contained = false;        // B3, B4 inside B1 n B2
  bool hull_matches = false;     // closure(B3 u B4) is the expected set
  bool not_coclosed = false;     // that set has a non-closed complement
  AffineRoot witness_a, witness_b, witness_sum;
};
QuasiPositiveReport quasi_positive_counterexample(int window);

}  // namespace affw
