#pragma once

#include <stdexcept>

#include <json.hpp>

#include "affw/braid.hpp"
#include "affw/lattice.hpp"

namespace affw {

using Json = nlohmann::ordered_json;

// Input that parses as JSON but does not describe a valid value.
class JsonInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Json encode(FiniteRoot r);
Json encode(AffineRoot r);
Json encode(const EPSet& s);
Json encode(const BiclosedCanonical& c);
Json encode(const WBar& x);
Json encode(const BElement& b);
Json encode_simple(SimpleSet s);
Json encode_roots(const std::vector<AffineRoot>& roots);
Json encode(const Plane& p);
Json encode(const Move& m);

FiniteRoot decode_finite(RootType t, const Json& j);
AffineRoot decode_affine(RootType t, const Json& j);
std::vector<AffineRoot> decode_roots(RootType t, const Json& j);
EPSet decode_epset(RootType t, const Json& j);
SimpleSet decode_simple(const Json& j);
Word decode_word(const Json& j);
BiclosedCanonical decode_canonical(RootType t, const Json& j);
// [w...], {"w":[...],"L":[...]} or {"prefix":[...],"period":[...]}.
WBar decode_wbar(RootType t, const Json& j);
BElement decode_belement(RootType t, const Json& j);

}  // namespace affw
