#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "affw/affine_roots.hpp"
#include "affw/weyl.hpp"

namespace affw {

// w . hat(Phi+_{L,K}) with Phi+_{L,K} = (Phi+ \ Phi_L) u Phi_K over the standard simple system.
// L = all simple roots gives the finite sets Phi_w.
struct BiclosedCanonical {
  RootType type = RootType::A2;
  Word w;
  SimpleSet L = kAllSimple;
  SimpleSet K = kNoSimple;

  auto operator<=>(const BiclosedCanonical&) const = default;
  bool finite() const { return L == kAllSimple; }
};

class NotFinitelyGenerated : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotBiclosed : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kDefaultBudget = 10;

// The seven orthogonal (L, K), finite one first.
const std::vector<std::pair<SimpleSet, SimpleSet>>& orthogonal_pairs();

EPSet base_set(RootType t, SimpleSet L, SimpleSet K);

// x . G = (Phi_x \ x(-G)) u (x(G) \ (-Phi_x))
EPSet act(const AffineElement& x, const EPSet& g);
EPSet act(const Word& x, const EPSet& g);
BiclosedCanonical act(const Word& x, const BiclosedCanonical& g);

EPSet to_epset(const BiclosedCanonical& c);
bool member(const BiclosedCanonical& c, AffineRoot r);
EPSet finite_inversion_set(RootType t, const Word& w);  // throws on a non-reduced word

// All w . hat(Phi+_{L,K}) with |w| <= budget over the orthogonal pairs, keyed by set; the stored
// form is the first one met in (length, lexicographic word) order.
class Universe {
 public:
  struct Entry {
    BiclosedCanonical form;
    EPSet set;
  };
  static const Universe& get(RootType t, int budget);

  const std::vector<Entry>& entries() const { return entries_; }
  const Entry* find(const EPSet& s) const;
  int budget() const { return budget_; }

 private:
  Universe(RootType t, int budget);
  int budget_;
  std::vector<Entry> entries_;
  std::map<EPSet, std::size_t> index_;
};

// Canonical form of a biclosed set; throws NotBiclosed when none is found.
BiclosedCanonical canonicalize(const EPSet& s, int budget = kDefaultBudget);
BiclosedCanonical normalize(const BiclosedCanonical& c);

// I_G as Psi+_{removed, added} of some positive system of Phi.
PhiBiclosed classify_I(const EPSet& s);

bool is_finitely_generated(const BiclosedCanonical& c);
// Throws NotFinitelyGenerated.
std::vector<AffineRoot> generators(const BiclosedCanonical& c);

// For a set that is not finitely generated: its truncation at `level` and the roots
// alpha_i + (t_i + 1) delta it fails to generate, t_i being the top of the alpha_i-string
// in the closure of the truncation.
struct GenerationGap {
  std::vector<AffineRoot> truncation;
  std::vector<AffineRoot> missing;
  bool confirmed = false;  // every missing root lies in the set but not in the closure
};
GenerationGap generation_gap(const BiclosedCanonical& c, int level);

}  // namespace affw
