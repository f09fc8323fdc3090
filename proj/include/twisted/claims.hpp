#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twisted/oracles.hpp"
#include "twisted/report.hpp"

namespace twisted {

/// One row of the acceptance matrix: a closed form in n (and k for paths)
/// claimed for every n >= min_n.
struct ClaimSpec {
  std::string id;
  std::string statement;
  int min_n;
};

const std::vector<ClaimSpec>& claim_registry();
/// Throws std::invalid_argument for unknown ids.
const ClaimSpec& find_claim(std::string_view id);

/// Closed-form value of a claim at n. `order` is the path order for thm-pk
/// and ignored otherwise.
long long expected_value(std::string_view id, int n, int order = 0);

struct VerifyOptions {
  Execution exec = Execution::Parallel;
  /// Exhaustive family searches run only for n <= search_limit; larger n get
  /// construction checks alone.
  int search_limit = 6;
  /// Max-flow oracles run only for n <= flow_limit.
  int flow_limit = 7;
  std::size_t samples = 50;
  std::uint64_t seed = 0;
};

/// Runs construction and oracle checks for one claim at one n. Returns one
/// report per cell (several for thm-pk, one per path order k).
std::vector<VerificationReport> verify_claim(std::string_view id, int n, const VerifyOptions& options = {});

/// The kappa(n-1) >= 2 P_2 family checked through the formula alone: members
/// are edges, pairwise disjoint, cover N(u), and the size is n.
VerificationReport audit_p2_single_family(int n, std::size_t samples, std::uint64_t seed = 0);

}  // namespace twisted
