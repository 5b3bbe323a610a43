#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "grpkit/coset_table.hpp"

namespace grpkit {

struct VerifyOptions {
  unsigned jobs = 1;
  std::size_t max_cosets = EnumerationLimits{}.max_cosets;
  std::uint64_t node_budget = 1000000000ull;
};

enum class CheckStatus { Pass, Fail, Error };

struct CheckResult {
  std::string type;
  std::string subject;  // e.g. "Gamma index 7"
  CheckStatus status = CheckStatus::Error;
  std::string expected;
  std::string actual;  // or the error message
  double seconds = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  bool has_failures() const;
  bool has_errors() const;
};

// Runs a JSON manifest: {"checks": [{"type": ..., ...}, ...]}. Group fields
// name a catalog key or a .grp file relative to base_dir. Throws ParseError
// for malformed JSON and InvalidArgument for bad checks or unresolvable
// references; resource errors inside a check become Error entries.
VerificationReport run_manifest_text(std::string_view json, std::filesystem::path const& base_dir,
                                     VerifyOptions const& options = {});
VerificationReport run_manifest(std::filesystem::path const& path, VerifyOptions const& options = {});

// One line per check in manifest order plus a summary line. Timing is the
// trailing "(... s)" field of each line and can be left out.
std::string render_report(VerificationReport const& report, bool with_timing = true);

}  // namespace grpkit
