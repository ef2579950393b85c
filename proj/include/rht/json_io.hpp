#pragma once

#include <json.hpp>

#include "rht/biquotient.hpp"
#include "rht/sullivan.hpp"

namespace rht {

using Json = nlohmann::ordered_json;

// {"generators": [{"name": "u", "degree": 2}, ...],
//  "differential": {"x": "a^2 + 2*a*b", ...}, "minimal": true}
Json model_to_json(const SullivanAlgebra& model);
SullivanAlgebra model_from_json(const Json& j);

// {"g": [{"family": "SU", "n": 3}],
//  "h": [{"kind": "circle", "left": [[1,2,-3]], "right": [[0,0,0]]}],
//  "convention": "pullback_difference"}
Json biquotient_spec_to_json(const BiquotientSpec& spec);
BiquotientSpec biquotient_spec_from_json(const Json& j);

Json betti_to_json(const BettiVector& betti);

} // namespace rht
