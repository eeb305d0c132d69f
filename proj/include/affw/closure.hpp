#pragma once

#include <vector>

#include "affw/affine_roots.hpp"

namespace affw {

// Least closed superset, exact. Accepts any EPSet (levels are convexified per direction).
EPSet closure(const EPSet& gens);
// Throws std::invalid_argument on a non-positive generator.
EPSet closure(RootType t, const std::vector<AffineRoot>& gens);

// Naive pairwise fixpoint over the positive affine roots of level <= n.
std::vector<AffineRoot> closure_window(RootType t, const std::vector<AffineRoot>& gens, int n);

bool is_closed_window(RootType t, const std::vector<AffineRoot>& set, int n);
bool is_closed_window(const EPSet& set, int n);
bool is_biclosed_window(const EPSet& set, int n);

// A window large enough that truncation does not hide intermediate roots of gens.
int safe_window(const EPSet& gens);

}  // namespace affw
