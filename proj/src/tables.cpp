#include "cdc/tables.hpp"

#include <map>

#include "cdc/bounds_lower.hpp"
#include "cdc/bounds_upper.hpp"
#include "cdc/errors.hpp"

namespace cdc {

namespace {

// Expurgation-augmentation code sizes quoted from the literature; shown for
// comparison only, no construction behind them here.
const std::map<int, Int>& ea_sizes() {
  static const std::map<int, Int> table = {
      {7, Int(301)},          {8, Int(1117)},     {9, Int(4852)},
      {10, Int(18924)},       {11, Int(79306)},   {12, Int(309667)},
      {13, Int(1287958)},     {14, Int(4970117)}, {15, Int(20560924)},
      {16, Int(79608330)},    {19, Int("5200895489")},
  };
  return table;
}

}  // namespace

std::vector<SurveyRow> survey_table_sizes() {
  const std::uint32_t q = 2;
  const int d = 4, k = 3, vmax = 19;
  auto dp = linkage_dp(q, d, k, vmax, SeedTable::active());
  std::vector<SurveyRow> rows;
  for (int v = 6; v <= vmax; ++v) {
    SurveyRow r;
    r.v = v;
    r.bklb = best_lower_value(q, v, d, k);
    auto mrd = mrd_containing_upper(q, v, d, k);
    if (!mrd) throw ParameterError("MRD-subclass bound inapplicable");
    r.mrdb = mrd->value;
    r.bkub = best_upper_value(q, v, d, k);
    auto lookup = [&](int n) { return dp[n].value; };
    r.lold = original_linkage_lower(q, v, d, k, lookup).value;
    r.lnew = improved_linkage_lower(q, v, d, k, lookup).value;
    auto it = ea_sizes().find(v);
    if (it != ea_sizes().end()) r.ea = it->second;
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

std::vector<RatioRow> ratios_against(bool vs_lmrd) {
  std::vector<RatioRow> out;
  for (const auto& row : survey_table_sizes()) {
    Int den = vs_lmrd ? int_pow(2u, 2 * (row.v - 3)) : row.mrdb;
    auto ratio = [&](const Int& x) {
      Rat r(x, den);
      r.canonicalize();
      return r;
    };
    RatioRow rr;
    rr.v = row.v;
    rr.cols[0] = ratio(row.bklb);
    rr.cols[1] = ratio(row.mrdb);
    rr.cols[2] = ratio(row.bkub);
    rr.cols[3] = ratio(row.lold);
    rr.cols[4] = ratio(row.lnew);
    if (row.ea) rr.cols[5] = ratio(*row.ea);
    out.push_back(std::move(rr));
  }
  return out;
}

}  // namespace

std::vector<RatioRow> survey_table_vs_lmrd() { return ratios_against(true); }

std::vector<RatioRow> survey_table_vs_mrd_bound() {
  return ratios_against(false);
}

std::string format_fixed(const Rat& x, int decimals) {
  if (decimals < 0) throw ParameterError("negative precision");
  Rat xc = x;
  xc.canonicalize();
  if (xc < 0) return "-" + format_fixed(Rat(-xc), decimals);
  Rat scaled = xc * int_pow(10u, static_cast<unsigned>(decimals));
  Int floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), scaled.get_num_mpz_t(),
             scaled.get_den_mpz_t());
  Rat frac = scaled - Rat(floor_part);
  // half-even tie handling on the exact remainder
  if (frac > Rat(1, 2) || (frac == Rat(1, 2) && mpz_odd_p(floor_part.get_mpz_t())))
    floor_part += 1;
  std::string digits = floor_part.get_str();
  if (decimals == 0) return digits;
  if (static_cast<int>(digits.size()) <= decimals)
    digits.insert(0, decimals + 1 - digits.size(), '0');
  digits.insert(digits.size() - decimals, ".");
  return digits;
}

}  // namespace cdc
