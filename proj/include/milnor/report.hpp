#ifndef MILNOR_REPORT_HPP
#define MILNOR_REPORT_HPP

#include "milnor/critloc.hpp"
#include "milnor/newton.hpp"
#include "milnor/puiseux.hpp"
#include "milnor/zeta.hpp"

#include <json.hpp>

namespace milnor {

inline constexpr const char* kToolName = "milnorlab";
inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::json;

json to_json(const Coeff& c);
json to_json(const NewtonData& nd);
json to_json(const MultiplicityVerdict& mv);
json to_json(const ZetaFactored& z);
json to_json(const Zeta3hResult& z);
json to_json(const PuiseuxBranch& b);
json to_json(const BranchesResult& br);
json to_json(const BranchReport& r);
json to_json(const FibrationReport& r);
json to_json(const CircleSample& s);

/// Human-readable rendering of a report document (the JSON stays the
/// contract; this is a convenience view of the same data).
std::string render_text(const json& doc, int indent = 0);

} // namespace milnor

#endif
