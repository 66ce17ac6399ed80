#pragma once

#include <json.hpp>

#include "rlf/chains.hpp"

namespace rlf {

// Stable key order everywhere; identical inputs must serialize byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);                 // fraction string "p/q"
Json to_json(const AffineClass& f);         // {"m": [[a,b],[c,d]], "t": ["p/q","r/s"]}
Json to_json(const CurveClass& k);          // {"v": [p,q], "s": "r/q"}
Json to_json(const InvariantCurveClass& k); // adds "action" and optional "twin"
Json to_json(const RealCode& code);         // {"c": ..., "a": ...}
Json to_json(const FixedSetReport& rep);
Json to_json(const DecoratedChain& d);      // {"classes": [...], "bits": {...}, "closure_bit": ...}
Json chain_to_json(const ConcreteChain& chain); // {"c1": ..., "cycles": [...]}

Rat rat_from_json(const Json& j);
AffineClass affine_from_json(const Json& j);
CurveClass curve_from_json(const Json& j);
RealCode code_from_json(const Json& j);
DecoratedChain decorated_from_json(const Json& j);

// Chain file {"c1": <AffineClass>, "cycles": [<CurveClass>...]}; builds and
// therefore validates the chain.
ConcreteChain chain_from_json(const Json& j);

} // namespace rlf
