#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "parkcomp/arith.hpp"
#include "parkcomp/core.hpp"

namespace parkcomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitDisagreement = 2;

using InstanceBackend = std::function<Count(const TakenSpots&, std::uint64_t cap)>;
using UBackend = std::function<Count(std::span<const int>, std::uint64_t cap)>;

/// Every counting route the CLI can cross-check. Tests swap entries out to
/// make sure disagreements are caught.
struct Backends {
  InstanceBackend pc_formula;
  InstanceBackend pc_brute;
  InstanceBackend ipc_formula;
  InstanceBackend ipc_det;
  InstanceBackend ipc_dp;
  InstanceBackend ipc_brute;
  UBackend upf_sum;
  UBackend upf_goncarov;
  UBackend upf_brute;
};

Backends default_backends();

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

/// Names accepted by `identities --check`.
const std::vector<std::string>& identity_checks();

CheckResult run_identity_check(const std::string& name, int max_n, std::uint64_t cap,
                               const Backends& backends);

/// Brute-force cap: PARKCOMP_CAP when set and valid, else kDefaultCap.
std::uint64_t cap_from_environment();

/// Parses "1,2,3" (empty string gives the empty list).
std::vector<int> parse_list(const std::string& text);
std::string format_list(std::span<const int> values);

/// Entry point behind the `parkcomp` binary. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Backends& backends = default_backends());

}  // namespace parkcomp::cli
