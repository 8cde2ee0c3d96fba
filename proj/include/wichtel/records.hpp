#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "wichtel/distribution.hpp"
#include "wichtel/exact.hpp"
#include "wichtel/permutation.hpp"
#include "wichtel/sampler.hpp"

namespace wichtel {

// Output records for the CLI. Exact values travel as decimal strings
// (counts) or "num/den" strings (rationals) next to a float field; JSON
// never carries a count as a native number. Floats are formatted
// shortest-round-trip so emitted files are byte-stable across runs.

enum class OutputFormat { csv, json };

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

nlohmann::json count_record(std::size_t n, const std::string& what,
                            const ExactCount& value);
std::string count_csv(std::size_t n, const std::string& what,
                      const ExactCount& value);

nlohmann::json types_record(std::size_t n, const std::vector<CycleType>& types);
std::string types_csv(std::size_t n, const std::vector<CycleType>& types);

/// {"n":, "pmf":[{"k":, "exact":"num/den", "float":, "poisson_limit":}...],
///  "mean_exact":"num/den"}
nlohmann::json dist_record(const PairCountDistribution& dist);
std::string dist_csv(const PairCountDistribution& dist);

nlohmann::json tail_record(std::size_t n, std::size_t k, const ExactRatio& exact);
std::string tail_csv(std::size_t n, std::size_t k, const ExactRatio& exact);

/// CSV with header n,prob_ge_1,prob_ge_3,tv_poisson,mean.
std::string table_csv(const std::vector<ConvergenceRow>& rows);
nlohmann::json table_record(const std::vector<ConvergenceRow>& rows);

/// {"n":, "trials":, "seed":, "histogram":{"k": count...}, "accept_rate":}
nlohmann::json simulate_record(const SampleReport& report);
std::string simulate_csv(const SampleReport& report);

}  // namespace wichtel
