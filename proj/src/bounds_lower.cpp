#include "cdc/bounds_lower.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "cdc/bounds_upper.hpp"
#include "cdc/errors.hpp"
#include "cdc/partial_spreads.hpp"

namespace cdc {

SeedTable SeedTable::builtin() {
  SeedTable t;
  t.add(2, 6, 4, 3, 77, "seed:A2(6,4;3)=77");
  t.add(2, 7, 4, 3, 333, "seed:A2(7,4;3)>=333");
  t.add(2, 8, 4, 3, 1326, "seed:A2(8,4;3)>=1326");
  t.add(2, 9, 4, 3, 5986, "seed:A2(9,4;3)>=5986");
  t.add(2, 10, 4, 3, 23870, "seed:A2(10,4;3)>=23870");
  t.add(2, 11, 4, 3, 97526, "seed:A2(11,4;3)>=97526");
  t.add(2, 12, 4, 3, 385515, "seed:A2(12,4;3)>=385515");
  t.add(2, 13, 4, 3, 1597245, "seed:A2(13,4;3)=1597245");
  t.add(2, 8, 6, 3, 34, "seed:A2(8,6;3)>=34");
  return t;
}

const SeedTable& SeedTable::active() {
  static SeedTable table = [] {
    SeedTable t = builtin();
    if (const char* path = std::getenv("CDC_SEEDS")) t.load_file(path);
    return t;
  }();
  return table;
}

void SeedTable::add(std::uint32_t q, int v, int d, int k, Int value,
                    std::string tag) {
  if (v >= 0 && k > v - k) k = v - k;  // store under orthogonal parameters
  auto key = std::make_tuple(q, v, d, k);
  auto it = entries_.find(key);
  if (it == entries_.end() || it->second.value < value)
    entries_[key] = {std::move(value), std::move(tag)};
}

void SeedTable::load_stream(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::uint32_t q;
    int v, d, k;
    std::string value, tag;
    if (!(ls >> q >> v >> d >> k >> value)) continue;
    if (!(ls >> tag)) tag = "user";
    add(q, v, d, k, Int(value), tag);
  }
}

void SeedTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open seed file: " + path);
  load_stream(in);
}

std::optional<BoundValue> SeedTable::lookup(std::uint32_t q, int v, int d,
                                            int k) const {
  std::optional<BoundValue> best;
  auto it = entries_.find(std::make_tuple(q, v, d, k));
  if (it != entries_.end()) best = it->second;
  if (v == 7 && d == 4 && k == 3) {
    // parametric family valid for every field size
    Int val = int_pow(q, 8) + int_pow(q, 5) + int_pow(q, 4) + int_pow(q, 2) - q;
    if (!best || val > best->value)
      best = BoundValue{val, "seed:Aq(7,4;3)>=q8+q5+q4+q2-q"};
  }
  return best;
}

BoundValue lmrd_lower(std::uint32_t q, int v, int d, int k) {
  return {lifted_mrd_size(q, k, v, d), "lifted-mrd"};
}

namespace {

// Maximum size of a linear k x n rank-metric code with rank distance d/2,
// i.e. the rank-code factor of the linkage constructions.
Int rank_code_factor(std::uint32_t q, int k, int n, int d) {
  return lifted_mrd_size(q, k, n + k, d);
}

}  // namespace

BoundValue original_linkage_lower(std::uint32_t q, int v, int d, int k,
                                  const std::function<Int(int)>& lower) {
  BoundValue best{0, "linkage"};
  for (int v1 = k; v1 + k <= v; ++v1) {
    int v2 = v - v1;
    Int cand = lower(v1) * rank_code_factor(q, k, v2, d) + lower(v2);
    if (cand > best.value)
      best = {cand, "linkage(v1=" + std::to_string(v1) + ")"};
  }
  return best;
}

BoundValue improved_linkage_lower(std::uint32_t q, int v, int d, int k,
                                  const std::function<Int(int)>& lower) {
  BoundValue best{0, "improved-linkage"};
  for (int m = k; m <= v - d / 2; ++m) {
    Int cand =
        lower(m) * rank_code_factor(q, k, v - m, d) + lower(v - m + k - d / 2);
    if (cand > best.value)
      best = {cand, "improved-linkage(m=" + std::to_string(m) + ")"};
  }
  return best;
}

std::vector<BoundValue> linkage_dp(std::uint32_t q, int d, int k, int v_max,
                                   const SeedTable& seeds) {
  if (d < 2 || d % 2 != 0 || k < 1) throw ParameterError("linkage_dp params");
  std::vector<BoundValue> a(static_cast<std::size_t>(v_max) + 1,
                            BoundValue{0, "empty"});
  for (int n = k; n <= v_max; ++n) {
    BoundValue best{1, "single-codeword"};
    Int m = lifted_mrd_size(q, k, n, d);
    if (m > best.value) best = {m, "lifted-mrd"};
    if (d == 2 * k && n % k == 0) {
      Int sp = (int_pow(q, n) - 1) / (int_pow(q, k) - 1);
      if (sp > best.value) best = {sp, "spread"};
    }
    if (auto s = seeds.lookup(q, n, d, k))
      if (s->value > best.value) best = *s;
    a[n] = best;
  }
  for (int n = k; n <= v_max; ++n) {
    for (int m = k; m <= n - d / 2; ++m) {
      Int cand = a[m].value * rank_code_factor(q, k, n - m, d) +
                 a[n - m + k - d / 2].value;
      if (cand > a[n].value)
        a[n] = {cand, "improved-linkage(m=" + std::to_string(m) + ")"};
    }
  }
  return a;
}

ProgressionBounds arithmetic_progression_lower(std::uint32_t q, int d, int k,
                                               int v0, int s, unsigned l,
                                               const Int& a_v0,
                                               const Int& a_shift) {
  if (k > v0 || 2 * s < d || d % 2 != 0)
    throw ParameterError("arithmetic progression preconditions");
  Int b = rank_code_factor(q, k, s, d);
  ProgressionBounds out;
  out.form1 = a_v0 * int_pow(b, l) + a_shift * q_binomial(l, 1, b);
  if (v0 >= 2 * k - d / 2 && k >= d / 2) {
    Int base = int_pow(q, k - d / 2 + 1);
    out.form2 = a_shift * int_pow(base, v0 - k + d / 2) *
                    q_binomial(l, 1, int_pow(q, static_cast<std::uint64_t>(s) *
                                                    (k - d / 2 + 1))) +
                a_v0;
  }
  return out;
}

namespace {

// memoised DP tables per (q, d, k), grown on demand; returned by value so
// callers never hold references into a table another thread may regrow
std::vector<BoundValue> dp_table(std::uint32_t q, int d, int k, int v_needed) {
  using Key = std::tuple<std::uint32_t, int, int>;
  static std::map<Key, std::vector<BoundValue>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto& tab = cache[Key{q, d, k}];
  if (static_cast<int>(tab.size()) <= v_needed)
    tab = linkage_dp(q, d, k, std::max(v_needed, 2 * k + 4), SeedTable::active());
  return tab;
}

}  // namespace

Int best_lower_value(std::uint32_t q, int v, int d, int k) {
  if (auto t = trivial_code_size(q, v, d, k)) return *t;
  int kk = std::min(k, v - k);
  Int best = dp_table(q, d, kk, v)[v].value;
  if (d == 2 * kk) {
    Int ps = ps_best_lower(q, v, kk).value;
    best = std::max(best, ps);
  }
  return best;
}

BoundReport lower_bound_report(std::uint32_t q, int v, int d, int k) {
  BoundReport rep;
  rep.params = {q, v, d, k};
  if (auto t = trivial_code_size(q, v, d, k)) {
    rep.lower.push_back({*t, d <= 2 ? "full-grassmannian" : "dimension"});
    rep.best_lower = rep.lower.back();
    return rep;
  }
  int kk = std::min(k, v - k);
  const auto dp = dp_table(q, d, kk, v);
  if (auto s = SeedTable::active().lookup(q, v, d, kk)) rep.lower.push_back(*s);
  if (d == 2 * kk) {
    rep.lower.push_back(ps_best_lower(q, v, kk));
    auto& b = rep.lower.back();
    b.source = "partial-spread:" + b.source;
  }
  rep.lower.push_back(lmrd_lower(q, v, d, kk));
  auto lookup = [&](int n) { return dp[n].value; };
  rep.lower.push_back(original_linkage_lower(q, v, d, kk, lookup));
  rep.lower.push_back(improved_linkage_lower(q, v, d, kk, lookup));
  rep.lower.push_back(dp[v]);
  rep.lower.back().source = "linkage-dp:" + rep.lower.back().source;
  rep.best_lower = rep.lower.front();
  for (const auto& b : rep.lower)
    if (b.value > rep.best_lower.value) rep.best_lower = b;
  return rep;
}

}  // namespace cdc
