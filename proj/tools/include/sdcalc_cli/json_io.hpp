#pragma once

#include <json.hpp>
#include <vector>

#include "sdcalc/sdcalc.hpp"

namespace sdcalc::cli {

using Json = nlohmann::json;

/// int64 range as a JSON number, anything larger as a decimal string.
Json to_json(const Int& x);
Json to_json(const HClass& x);
Json to_json(const std::vector<HClass>& xs);
Json to_json(const IntMatrix& m);
Json to_json(const std::vector<Int>& v);
Json to_json(const Diagram& d);
Json to_json(const SumForm& f);
Json to_json(const CanonicalForm& f);
Json to_json(const FormInvariants& f);
Json to_json(const Detection& d);
Json to_json(const KirbyData& k);
Json to_json(const BlfData& b);
Json to_json(const TwistWord& w);
Json to_json(const SurgeredAction& a);
Json to_json(const Verdict& v);
Json to_json(const GeneratorMove& m);

/// Accepts a JSON integer or a string of decimal digits with optional sign.
/// Throws ParseError naming `path` otherwise.
Int int_from_json(const Json& j, const std::string& path);

}  // namespace sdcalc::cli
