#pragma once
// JSON Lines records for transforms and arcs, and the number formatting used
// by every machine-readable output.

#include <string>
#include <string_view>
#include <vector>

#include "rfg/arc.hpp"
#include "rfg/mobius.hpp"

namespace rfg {

/// %.17g; non-finite values become null.
std::string format_double(double x);
/// Quoted and escaped JSON string.
std::string json_string(std::string_view s);

/// {"a_re":..,"a_im":..,"c_re":..,"c_im":..}
std::string mobius_to_json(const MobiusTransform& f);
/// {"mid_arg":..,"len":..}
std::string arc_to_json(const Arc& arc);

/// Throws ParseError on malformed input, NotInGroup for a bad matrix.
MobiusTransform mobius_from_json(std::string_view line);
/// One transform per non-blank line.
std::vector<MobiusTransform> mobius_from_jsonl(std::string_view text);

} // namespace rfg
