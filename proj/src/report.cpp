#include "twisted/report.hpp"

#include <iomanip>
#include <sstream>

namespace twisted {

namespace {

std::string quoted(const std::string& value) {
  if (value.find_first_of(" \t\"") == std::string::npos && !value.empty()) return value;
  std::ostringstream out;
  out << std::quoted(value);
  return out.str();
}

}  // namespace

std::string VerificationReport::to_line(bool with_timing) const {
  std::ostringstream out;
  out << "claim=" << quoted(claim) << " n=" << n;
  if (!shape.empty()) out << " shape=" << quoted(shape);
  if (!mode.empty()) out << " mode=" << quoted(mode);
  if (expected) out << " expected=" << *expected;
  if (value) out << ' ' << value_key << '=' << *value;
  out << " status=" << status();
  if (!witness.empty()) out << " witness=" << quoted(witness);
  if (explored != 0) out << " explored=" << explored;
  if (with_timing) out << " elapsed_ms=" << std::fixed << std::setprecision(1) << elapsed_ms;
  for (const auto& [key, value] : details) out << ' ' << key << '=' << quoted(value);
  return out.str();
}

nlohmann::ordered_json VerificationReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["n"] = n;
  if (!shape.empty()) j["shape"] = shape;
  if (!mode.empty()) j["mode"] = mode;
  j["expected"] = expected ? nlohmann::ordered_json(*expected) : nlohmann::ordered_json(nullptr);
  j[value_key] = value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
  j["status"] = status();
  j["witness"] = witness;
  j["explored"] = explored;
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  for (const auto& [key, value] : details) j["details"][key] = value;
  return j;
}

}  // namespace twisted
