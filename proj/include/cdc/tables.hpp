#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cdc/combinatorics.hpp"

namespace cdc {

/// One row of the A_2(v,4;3) survey table: best known lower bound, the
/// MRD-subclass bound, best known upper bound, the two linkage columns, and
/// the expurgation-augmentation sizes (display-only constants from the
/// literature, not computed here).
struct SurveyRow {
  int v = 0;
  Int bklb, mrdb, bkub, lold, lnew;
  std::optional<Int> ea;
};

/// Computes the survey rows for v = 6..19 (absolute sizes).
std::vector<SurveyRow> survey_table_sizes();

/// The same rows as ratios against the lifted-MRD size 2^(2(v-3)).
struct RatioRow {
  int v = 0;
  std::array<std::optional<Rat>, 6> cols;  // bklb mrdb bkub lold lnew ea
};
std::vector<RatioRow> survey_table_vs_lmrd();
/// Ratios against the MRD-subclass bound.
std::vector<RatioRow> survey_table_vs_mrd_bound();

/// Exact half-even rounding of a rational to `decimals` places, rendered as
/// a fixed-point decimal string.
std::string format_fixed(const Rat& x, int decimals);

}  // namespace cdc
