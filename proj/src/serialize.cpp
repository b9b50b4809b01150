#include "rfg/serialize.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "rfg/error.hpp"

namespace rfg {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string mobius_to_json(const MobiusTransform& f) {
  return "{\"a_re\":" + format_double(f.a().real()) + ",\"a_im\":" + format_double(f.a().imag()) +
         ",\"c_re\":" + format_double(f.c().real()) + ",\"c_im\":" + format_double(f.c().imag()) + "}";
}

std::string arc_to_json(const Arc& arc) {
  return "{\"mid_arg\":" + format_double(arc.mid_arg()) + ",\"len\":" + format_double(arc.length) + "}";
}

MobiusTransform mobius_from_json(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  auto number = [&j](const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number())
      throw Error(ErrorCode::ParseError, std::string("missing numeric field '") + key + "'");
    return j[key].get<double>();
  };
  return MobiusTransform::build({number("a_re"), number("a_im")}, {number("c_re"), number("c_im")});
}

std::vector<MobiusTransform> mobius_from_jsonl(std::string_view text) {
  std::vector<MobiusTransform> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back(mobius_from_json(line));
    start = end + 1;
  }
  return out;
}

} // namespace rfg
