#pragma once

// JSON forms of the library's objects. Rationals are "p/q" strings (integers
// are also accepted on input), permutations are 1-based image arrays, groups
// are {degree, generators}. Every reader throws Error(parse) on bad input.

#include <string>

#include "json.hpp"
#include "symext/certificates.hpp"
#include "symext/superlinear.hpp"

namespace symext::io {

using nlohmann::json;

json to_json(const Rat& r);
json to_json(const RatVec& v);
json to_json(const RatMat& m);
json to_json(const Permutation& g);
json to_json(const PermGroup& g);
json to_json(const Inequality& q);  // [a..., b]
json to_json(const Polytope& p);
json to_json(const AffineAction& a);
json to_json(const ExtensionSpec& s);
json to_json(const Theorem1Certificate& c);
json to_json(const SdpCertificate& c);
json to_json(const SuperlinearCertificate& c);

Rat rat_from_json(const json& j);
RatVec vec_from_json(const json& j);
RatMat mat_from_json(const json& j);
Permutation perm_from_json(const json& j);
/// Also accepts {"named": "symmetric" | "alternating", "degree": n}.
PermGroup group_from_json(const json& j);
Inequality ineq_from_json(const json& j, std::size_t dim);
/// Vertices keep their listed order (certificates index into it).
Polytope polytope_from_json(const json& j);
/// {"labels": [{"tag", "points" (1-based), "unordered"}]} or
/// {"dim", "maps": [{"M", "t"}]}; "group" may be omitted when `group` is given.
AffineAction action_from_json(const json& j, const PermGroup* group = nullptr);
ExtensionSpec extension_from_json(const json& j);
Theorem1Certificate theorem1_from_json(const json& j);
SdpCertificate sdp_from_json(const json& j);
SuperlinearCertificate superlinear_from_json(const json& j);

/// Comma-joined Rat strings; keys of the "section" object.
std::string vertex_key(const RatVec& v);

json parse(const std::string& text);
json read_file(const std::string& path);

}  // namespace symext::io
