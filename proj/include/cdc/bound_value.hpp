#pragma once

#include <string>
#include <vector>

#include "cdc/combinatorics.hpp"

namespace cdc {

/// An exact bound together with the name of the result that produced it.
struct BoundValue {
  Int value;
  std::string source;
};

/// Code parameters (q, v, d; k) for A_q(v, d; k) queries.
struct CodeParams {
  std::uint32_t q = 2;
  int v = 0, d = 0, k = 0;
};

/// All bounds applicable to one parameter set, plus the aggregated best
/// values.  The MRD-subclass bound only constrains codes containing a lifted
/// MRD subcode and is never mixed into best_upper.
struct BoundReport {
  CodeParams params;
  std::vector<BoundValue> lower, upper;
  BoundValue best_lower, best_upper;
  std::optional<BoundValue> mrd_subclass_upper;
};

}  // namespace cdc
