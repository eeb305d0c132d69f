#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affw/biclosed.hpp"

namespace affw {

inline constexpr int kBraidBudget = 12;

// A finite R with a total order, listed smallest first.
using Order = std::vector<AffineRoot>;

// The plane of a maximal dihedral subsystem, by its primitive normal in (a, b, level) space.
struct Plane {
  std::array<long long, 3> normal{};
  bool infinite() const { return normal[2] == 0; }  // contains delta
  auto operator<=>(const Plane&) const = default;
};

// Positions [begin, end) of a contiguous block equal to R n plane. A block of length one has a
// zero normal.
struct DihedralSubstring {
  Plane plane;
  int begin = 0;
  int end = 0;
  bool trivial() const { return end - begin < 2; }
};

enum class Realizability { Realized, NotRealizable, Unknown };

struct Realization {
  Realizability status = Realizability::Unknown;
  std::vector<BiclosedCanonical> chain;  // chain[i] meets R in the first i roots, i = 0..|R|
  int pivot = -1;                        // positive system whose hat sits in the chain, if requested
};

class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Plane plane_of(AffineRoot u, AffineRoot v);
bool in_plane(const Plane& p, AffineRoot r);

// Every maximal dihedral subsystem meets the order in one of its two reflection orders.
bool local_test(const Order& order);
// Each prefix and its complement in R have disjoint closures.
bool separation_test(RootType t, const Order& order);
// Witness chain of biclosed sets, optionally passing through hat(Psi+) for a positive system.
Realization realize(RootType t, const Order& order, int budget = kBraidBudget, int pivot = -1);
// Independent check of a witness: canonical sets, nested, meeting R in the prefixes.
bool verify_chain(RootType t, const Order& order, const std::vector<BiclosedCanonical>& chain);

std::vector<DihedralSubstring> dihedral_substrings(const Order& order);
// Throws BraidError when the result cannot be certified.
Order reverse(RootType t, const Order& order, const DihedralSubstring& s, int budget = kBraidBudget);

struct Move {
  DihedralSubstring block;
  Order result;
};
struct BraidPath {
  std::vector<Move> moves;
  std::string method;  // "staged" or "search"
};
// Throws BraidError when either end is not certified or no path is found.
BraidPath connect(RootType t, const Order& from, const Order& to, int budget = kBraidBudget);
// Each move reverses a dihedral substring of the previous vertex, every vertex has a verified
// witness chain, and the path runs from `from` to `to`.
bool check_path(RootType t, const Order& from, const Order& to, const BraidPath& path, int budget = kBraidBudget);

struct BraidGraph {
  std::vector<Order> vertices;              // realized orders, sorted
  std::vector<std::pair<int, int>> edges;   // i < j
  std::vector<int> component;
  int components = 0;
  int unknown = 0;           // both tests pass, no witness within the budget
  int local_violations = 0;  // witness found although the local test fails; expected 0
};
BraidGraph build_braid_graph(RootType t, const std::vector<AffineRoot>& r, int budget = kBraidBudget);

}  // namespace affw
