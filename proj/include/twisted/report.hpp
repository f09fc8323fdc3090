#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace twisted {

/// Outcome of one claim check.
///
/// Text form is a single line of space-separated key=value pairs in a fixed
/// key order: claim n shape mode expected value status witness explored
/// elapsed_ms, followed by any extra details. Absent optional fields are
/// omitted. Values containing spaces are double-quoted.
struct VerificationReport {
  std::string claim;
  int n = 0;
  std::string shape;
  std::string mode;
  std::optional<long long> expected;
  std::optional<long long> value;
  bool pass = false;
  /// Not evaluated (outside the claim's range); rendered as status=skip.
  bool skipped = false;
  /// Key used for `value` in the rendered forms.
  std::string value_key = "value";
  std::string witness;
  std::uint64_t explored = 0;
  double elapsed_ms = 0.0;
  std::vector<std::pair<std::string, std::string>> details;

  void add_detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
  std::string status() const { return skipped ? "skip" : (pass ? "pass" : "fail"); }

  std::string to_line(bool with_timing = true) const;
  nlohmann::ordered_json to_json(bool with_timing = true) const;
};

}  // namespace twisted
