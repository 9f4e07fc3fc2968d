#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "vekua/bvp.hpp"
#include "vekua/domain.hpp"
#include "vekua/path.hpp"
#include "vekua/radial_profile.hpp"
#include "vekua/types.hpp"

namespace vekua {

using Json = nlohmann::json;

/// Schema violations in configuration documents; the CLI maps these to its
/// config-error exit code.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Complex complex_from_json(const Json& j, const std::string& what);

/// {"kind": "constant"|"power"|"exponential"|"reciprocal", "c": .., "alpha": ..,
///  "range": [r_min, r_max]}  or  {"kind": "table", "points": [[r, eps], ...]}
RadialProfile profile_from_json(const Json& j);
Json profile_to_json(const RadialProfile& p);

/// {"kind": "rectangle", "x": [x0,x1], "y": [y0,y1]} |
/// {"kind": "disk", "center": [cx,cy], "radius": r} |
/// {"kind": "polygon", "vertices": [[x,y], ...]}
Domain domain_from_json(const Json& j);

PathOptions path_options_from_json(const Json& j); // all fields optional

/// {"case": .., "profile": .., "domain": .., "z0": [x,y]?, "n_max": ..,
///  "boundary": {"preset": name, ...} | {"values": [[x,y,value],...]},
///  "oversampling": 4.0?}
BvpProblem bvp_problem_from_json(const Json& j);

/// Named analytic Dirichlet data. Supported: "r_pow_cos" (params: beta),
/// "harmonic_saddle", "axial_uniform", "constant" (params: value),
/// "formal_power" (params: n, coeff) - the trace of the problem's own basis
/// element.
std::function<double(Complex)> boundary_preset(const std::string& name, const Json& params,
                                               const BvpProblem& problem);

uint64_t config_hash(const Json& j);
std::string config_hash_hex(const Json& j);

} // namespace vekua
