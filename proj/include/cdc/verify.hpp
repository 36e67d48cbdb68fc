#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "cdc/construction.hpp"

namespace cdc {

/// Ground-truth verification result.  `min_distance` is absent when the code
/// has at most one codeword (infinite distance) or when nothing was checked;
/// when `budget_exceeded` is set the minimum covers only the pairs scanned.
struct VerifyReport {
  std::size_t n = 0;
  bool k_uniform = true;
  bool rref_ok = true;
  bool distinct_ok = true;
  std::optional<int> min_distance;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  ///< pair attaining the minimum
  bool budget_exceeded = false;
  std::uint64_t pairs_checked = 0;

  /// True when well-formed and the verified minimum distance meets `claimed`.
  bool meets(std::optional<int> claimed) const {
    if (!k_uniform || !rref_ok || !distinct_ok || budget_exceeded) return false;
    if (!claimed) return !min_distance.has_value() || n <= 1;
    return !min_distance || *min_distance >= *claimed;
  }
};

inline constexpr std::uint64_t kDefaultPairBudget = 100'000'000;

/// Exact minimum subspace distance over all codeword pairs (OpenMP-parallel
/// scan) plus well-formedness checks.  Deterministic: reports the
/// lexicographically first pair attaining the minimum.
VerifyReport verify_code(const SubspaceCode& c,
                         std::uint64_t pair_budget = kDefaultPairBudget);

/// Serial reference implementation of the same scan, kept for testing and
/// benchmarking against the parallel kernel.
VerifyReport verify_code_serial(const SubspaceCode& c,
                                std::uint64_t pair_budget = kDefaultPairBudget);

/// Brute-force count of k-spaces close to a fixed m-space, by enumeration;
/// the independent oracle for the counting formula.
Int oracle_count_close(std::uint32_t q, int v, int k, int m, int t);

/// Brute-force Grassmannian size by enumeration.
Int oracle_grassmannian_size(std::uint32_t q, int v, int k);

/// Exact minimum rank distance of a rank-metric code over all pairs.
std::optional<int> min_rank_distance_bruteforce(const RankMetricCode& c);

}  // namespace cdc
