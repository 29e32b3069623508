#pragma once

// JSON descriptors for rings, elements, matrices, codes and Toeplitz
// specifications.  Malformed documents raise ParseError; claimed code
// parameters that disagree with the encoder raise ClaimMismatch.

#include <string>

#include <json.hpp>

#include "chainmdp/constructions.hpp"

namespace chainmdp::io {

using nlohmann::json;

/// Object descriptor, or the shorthands "z<N>" (N a prime power) and "f<p>".
ChainRing ring_from_json(const json& j);
json ring_to_json(const ChainRing& ring);

Element element_from_json(const ChainRing& ring, const json& j);
json element_to_json(const Element& e);

/// {"ring", "rows", "cols", "entries": [[...], ...]}
json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const json& j);
/// Bare row arrays or full matrix objects, over a known ring.
RingMatrix matrix_from_json(const ChainRing& ring, const json& j);

/// {"ring", "n", "encoder": {"coeffs": [...]}, "claimed": {"k", "delta"}};
/// delta is claimed only for reduced encoders.
json code_to_json(const PolyMatrix& encoder);
/// Loads the encoder and checks every claimed value.
PolyMatrix encoder_from_json(const json& j);

json toeplitz_to_json(const ToeplitzSpec& t);
ToeplitzSpec toeplitz_from_json(const json& j);
json certificate_to_json(const ToeplitzSpec& t, bool with_minors);

json parse(const std::string& text);

}  // namespace chainmdp::io
