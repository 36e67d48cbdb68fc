#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdc/bound_value.hpp"

namespace cdc {

/// Known code sizes from the literature, keyed by (q, v, d, k).  Entries are
/// lower bounds (some exact).  A user file can add newer records; the path
/// is taken from the CDC_SEEDS environment variable, one entry per line:
///   q v d k value source-tag
class SeedTable {
 public:
  /// The built-in constants shipped with the library.
  static SeedTable builtin();
  /// Built-in constants merged with the CDC_SEEDS file, if set.
  static const SeedTable& active();

  void add(std::uint32_t q, int v, int d, int k, Int value, std::string tag);
  void load_stream(std::istream& in);
  void load_file(const std::string& path);

  /// Best seed for the parameters, including parametric families.
  std::optional<BoundValue> lookup(std::uint32_t q, int v, int d, int k) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::tuple<std::uint32_t, int, int, int>, BoundValue> entries_;
};

/// Size of a lifted MRD code with the given parameters.
BoundValue lmrd_lower(std::uint32_t q, int v, int d, int k);

/// Plain linkage: best split v = v1 + v2 of
/// L(v1) * q^(max{v2,k}(min{v2,k}-d/2+1)) + L(v2), where L supplies known
/// lower bounds for smaller ambient dimensions.
BoundValue original_linkage_lower(std::uint32_t q, int v, int d, int k,
                                  const std::function<Int(int)>& lower);

/// Improved linkage: best m in [k, v-d/2] of
/// L(m) * M(q,k,v-m+k,d) + L(v-m+k-d/2).
BoundValue improved_linkage_lower(std::uint32_t q, int v, int d, int k,
                                  const std::function<Int(int)>& lower);

/// Dynamic program over the improved-linkage recursion: initialises a(n)
/// from seeds, lifted-MRD and spread values, then sweeps n upward replacing
/// a(n) with the best linkage combination.  Returns a(0..v_max).
std::vector<BoundValue> linkage_dp(std::uint32_t q, int d, int k, int v_max,
                                   const SeedTable& seeds);

/// The two closed-form arithmetic-progression bounds for a(v0 + l*s) derived
/// from the linkage recursion; the second form needs v0 >= 2k - d/2 and
/// k >= d/2.
struct ProgressionBounds {
  Int form1;
  std::optional<Int> form2;
};
ProgressionBounds arithmetic_progression_lower(std::uint32_t q, int d, int k,
                                               int v0, int s, unsigned l,
                                               const Int& a_v0,
                                               const Int& a_shift);

/// Best implemented lower bound (memoised); uses the active seed table.
Int best_lower_value(std::uint32_t q, int v, int d, int k);

/// All applicable lower bounds with provenance plus the aggregated best.
BoundReport lower_bound_report(std::uint32_t q, int v, int d, int k);

}  // namespace cdc
