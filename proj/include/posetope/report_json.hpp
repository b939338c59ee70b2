#pragma once

#include <json.hpp>

#include "posetope/harness.hpp"
#include "posetope/polytope.hpp"
#include "posetope/poset.hpp"
#include "posetope/transfer.hpp"

namespace posetope {

using Json = nlohmann::json;

// Keys are sorted (nlohmann's default object type is an ordered map), and
// every exact quantity is an integer or a "p/q" string.

Json to_json(const PosetStats& s);
Json to_json(const Poset& p, const XWitness& w);
Json to_json(const Poset& p, const ElementClass& c);
Json to_json(const FVector& f);
Json to_json(const AffineMap& m);
Json to_json(const Poset& p, const EquivalenceReport& r);
Json to_json(const Poset& p, const DeletionStats& s);
Json to_json(const TheoremRecord& r);
Json to_json(const TheoremReport& r);
Json to_json(const ConjectureReport& r);

FVector fvector_from_json(const Json& j);
TheoremRecord theorem_record_from_json(const Json& j);

}  // namespace posetope
