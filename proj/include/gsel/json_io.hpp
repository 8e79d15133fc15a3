#pragma once

#include "gsel/hgsys.hpp"
#include "gsel/identities.hpp"
#include "gsel/oracle.hpp"

#include <json.hpp>

namespace gsel {

using json = nlohmann::json;

// {"I":[...],"n":...,"N":...}
json to_json(const Channel& ch);
Channel channel_from_json(const json& j);

// {"pairings":[...]}
json to_json(const GenericWeight& w);
GenericWeight weight_from_json(const json& j);

// {"abs_tol":...,"rel_tol":...,"max_depth":...,"precision":"double|extended","seed":...}
json to_json(const QuadratureConfig& cfg);
QuadratureConfig quad_config_from_json(const json& j);

// {"re":...,"im":...,"log_modulus":...,"phase":...}
json complex_result(const Complex& z);

json to_json(const IdentityReport& rep);
json to_json(const GenericityReport& rep);
json to_json(const QuadResult& res);

// {"base_exponent":[[re,im],...],"order":...,"coeffs":[[[i,...],re,im],...]}
json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

} // namespace gsel
