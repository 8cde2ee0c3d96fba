#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace wichtel {

/// Settings for the full self-verification run. The defaults exercise
/// every cross-method identity the library promises.
struct VerifyOptions {
  std::size_t cap = 9;            // exhaustive censuses run for n = 2..cap
  std::size_t agree_max = 60;     // cross-method count agreement range
  std::size_t rounding_max = 500; // nearest-integer formula check range
};

struct VerifyResult {
  std::size_t checks_run = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Runs every verification check, writing one line per check group to
/// `progress` when given. Throws CapExceeded if options.cap exceeds the
/// hard enumeration limit.
VerifyResult run_verification(const VerifyOptions& options,
                              std::ostream* progress = nullptr);

}  // namespace wichtel
