#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <vector>

#include "affw/biclosed.hpp"

namespace affw {

// An element of W-bar: a finite reduced word (L = all simple roots), or the infinite reduced
// word u with Phi_u = w . hat(Phi+_{L,empty}) for a proper L. Words are stored lexicographically
// minimal.
struct WBar {
  RootType type = RootType::A2;
  Word w;
  SimpleSet L = kAllSimple;

  auto operator<=>(const WBar&) const = default;
  bool finite() const { return L == kAllSimple; }
  BiclosedCanonical form() const { return {type, w, L, kNoSimple}; }

  static WBar identity(RootType t) { return {t, {}, kAllSimple}; }
  static WBar from_word(RootType t, const Word& w);  // throws on a non-reduced word
  static WBar infinite(RootType t, const Word& w, SimpleSet L);
  // The infinite word p q q q ...; throws when it is not reduced.
  static WBar periodic(RootType t, const Word& p, const Word& q);
};

class NotInversionSet : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

EPSet inversion_set(const WBar& x);
WBar from_inversion_set(const EPSet& s);  // throws NotInversionSet

// u x, with Phi_{ux} = u . Phi_x.
WBar times(const Word& u, const WBar& x);

bool leq(const WBar& x, const WBar& y);
bool orthogonal(const WBar& x, const WBar& y);

// Greatest u with Phi_u inside d; when the candidates have several maximal elements the first
// in canonical order is returned.
WBar max_word_below(const EPSet& d, int budget = kDefaultBudget);
WBar meet(const WBar& x, const WBar& y);

// The family has an upper bound in W-bar.
bool bounded(const std::vector<WBar>& a);
// Least upper bound, or nullopt when the family is unbounded.
std::optional<WBar> join_bounded(const std::vector<WBar>& a, int budget = kDefaultBudget);

// One per positive system of Phi, in RootSystem::positive_systems() order.
std::vector<WBar> maximal_elements(RootType t);

// The first n letters of a reduced expression of x (all of it when x is finite and shorter).
Word prefix(const WBar& x, int n);

}  // namespace affw
