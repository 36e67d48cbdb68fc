#include "cdc/construction.hpp"

#include <algorithm>

#include "cdc/errors.hpp"

namespace cdc {

namespace {

constexpr std::uint64_t kMaxCodeSize = 1u << 22;

FieldPtr field_for(std::uint32_t q) {
  auto [p, e] = prime_power_decompose(q);
  return Field::make(p, e);
}

std::optional<int> min_opt(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

RankMetricCode trivial_rank_code(std::uint32_t q, int k, int n) {
  RankMetricCode c;
  c.field = field_for(q);
  c.rows = k;
  c.cols = n;
  c.words.push_back(MatrixFq(c.field, k, n));
  return c;
}

RankMetricCode gabidulin(std::uint32_t q, int k, int n, int d) {
  if (k < 1 || n < 1) throw ParameterError("gabidulin shape");
  if (d < 1 || d > std::min(k, n))
    throw ParameterError("gabidulin requires 1 <= d <= min{k,n}");
  const int big = std::max(k, n), small = std::min(k, n);
  const int ncoef = small - d + 1;

  FieldPtr base = field_for(q);
  FieldPtr ext = Field::extension(base, big);
  const std::uint32_t Q = ext->q();

  std::uint64_t size = 1;
  for (int i = 0; i < ncoef; ++i) {
    size *= Q;
    if (size > kMaxCodeSize) throw BudgetError("gabidulin code too large");
  }

  // evaluation points: the polynomial basis 1, x, ..., x^(small-1), which is
  // linearly independent over GF(q); frob_pt[j][i] = g_j^(q^i)
  std::vector<std::vector<Elem>> frob_pt(small, std::vector<Elem>(small));
  for (int j = 0; j < small; ++j) {
    Elem g = ext->from_digits([&] {
      std::vector<Elem> dg(big, 0);
      dg[j] = 1;
      return dg;
    }());
    for (int i = 0; i < small; ++i) frob_pt[j][i] = ext->frobenius(g, i);
  }

  RankMetricCode code;
  code.field = base;
  code.rows = k;
  code.cols = n;
  code.min_rank_distance = d;
  code.words.reserve(size);

  std::vector<Elem> coef(ncoef, 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t t = idx;
    for (int i = 0; i < ncoef; ++i) {
      coef[i] = static_cast<Elem>(t % Q);
      t /= Q;
    }
    // evaluate f(y) = sum coef_i y^(q^i) at every point, expand over the
    // polynomial basis: evaluations become the columns of a big x small matrix
    MatrixFq m(base, big, small);
    for (int j = 0; j < small; ++j) {
      Elem val = 0;
      for (int i = 0; i < ncoef; ++i)
        val = ext->add(val, ext->mul(coef[i], frob_pt[j][i]));
      auto dg = ext->digits(val);
      for (int r = 0; r < big; ++r) m.set(r, j, dg[r]);
    }
    code.words.push_back(k >= n ? std::move(m) : m.transposed());
  }
  return code;
}

SubspaceCode lift(const RankMetricCode& r) {
  SubspaceCode c;
  c.field = r.field;
  c.v = r.rows + r.cols;
  c.k = r.rows;
  if (r.min_rank_distance && r.words.size() > 1)
    c.claimed_d = 2 * *r.min_rank_distance;
  MatrixFq id = MatrixFq::identity(r.field, r.rows);
  c.words.reserve(r.words.size());
  for (const auto& m : r.words)
    c.words.push_back(Subspace::from_rref(id.concat(m)));
  return c;
}

SubspaceCode spread_construct(std::uint32_t q, int v, int k) {
  if (k < 1 || v < k || v % k != 0)
    throw ParameterError("spread needs k | v");
  const int t = v / k;
  FieldPtr base = field_for(q);
  FieldPtr ext = Field::extension(base, k);
  const std::uint32_t Q = ext->q();

  Int count = (int_pow(q, v) - 1) / (int_pow(q, k) - 1);
  if (count > Int(static_cast<unsigned long>(kMaxCodeSize)))
    throw BudgetError("spread too large");

  SubspaceCode code;
  code.field = base;
  code.v = v;
  code.k = k;
  code.claimed_d = 2 * k;
  code.words.reserve(count.get_ui());

  // projective points of GF(q^k)^t: first nonzero coordinate normalised to 1
  std::vector<Elem> u(t, 0);
  for (int lead = 0; lead < t; ++lead) {
    std::fill(u.begin(), u.end(), 0);
    u[lead] = 1;
    const int nfree = t - 1 - lead;
    std::uint64_t total = 1;
    for (int i = 0; i < nfree; ++i) total *= Q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rem = idx;
      for (int i = 0; i < nfree; ++i) {
        u[lead + 1 + i] = static_cast<Elem>(rem % Q);
        rem /= Q;
      }
      // expand the GF(q^k)-line through u into a k x v matrix over GF(q)
      MatrixFq m(base, k, v);
      for (int b = 0; b < k; ++b) {
        std::vector<Elem> dg(k, 0);
        dg[b] = 1;
        Elem alpha = ext->from_digits(dg);
        for (int c = 0; c < t; ++c) {
          auto coords = ext->digits(ext->mul(alpha, u[c]));
          for (int j = 0; j < k; ++j) m.set(b, c * k + j, coords[j]);
        }
      }
      code.words.push_back(Subspace::span(m));
    }
  }
  if (code.words.size() <= 1) code.claimed_d = std::nullopt;
  return code;
}

SubspaceCode greedy_cdc(std::uint32_t q, int v, int d, int k,
                        GreedyOrder order) {
  FieldPtr f = field_for(q);
  GrassmannianEnumerator en(f, v, k, 1'000'000);
  std::vector<MatrixFq> all;
  MatrixFq m(f, k, v);
  while (en.next(m)) all.push_back(m);
  if (order == GreedyOrder::reverse) {
    std::reverse(all.begin(), all.end());
  } else if (order == GreedyOrder::weight) {
    std::stable_sort(all.begin(), all.end(),
                     [](const MatrixFq& a, const MatrixFq& b) {
                       auto wt = [](const MatrixFq& x) {
                         return std::count_if(x.entries().begin(),
                                              x.entries().end(),
                                              [](Elem e) { return e != 0; });
                       };
                       return wt(a) < wt(b);
                     });
  }

  SubspaceCode code;
  code.field = f;
  code.v = v;
  code.k = k;
  code.claimed_d = d;
  for (const auto& cand : all) {
    Subspace s = Subspace::from_rref(cand);
    bool ok = true;
    for (const auto& kept : code.words)
      if (subspace_distance(s, kept) < d) {
        ok = false;
        break;
      }
    if (ok) code.words.push_back(std::move(s));
  }
  if (code.words.size() <= 1) code.claimed_d = std::nullopt;
  return code;
}

SubspaceCode orthogonal_code(const SubspaceCode& c) {
  SubspaceCode out;
  out.field = c.field;
  out.v = c.v;
  out.k = c.v - c.k;
  out.claimed_d = c.claimed_d;
  out.words.reserve(c.words.size());
  for (const auto& w : c.words)
    out.words.push_back(w.orthogonal_complement());
  return out;
}

SubspaceCode improved_linkage_assemble(const SubspaceCode& c1,
                                       const SubspaceCode& c2,
                                       const RankMetricCode& r, int d) {
  if (d < 0 || d % 2 != 0) throw ParameterError("linkage needs even d >= 0");
  const int k = c1.k;
  if (c2.k != k || r.rows != k) throw ParameterError("dimension mismatch");
  if (r.cols != c2.v - k + d / 2)
    throw ParameterError("rank code must have v2 - k + d/2 columns");
  if (c1.field->q() != c2.field->q() || c1.field->q() != r.field->q())
    throw ParameterError("field mismatch");

  SubspaceCode out;
  out.field = c1.field;
  out.v = c1.v + c2.v - k + d / 2;
  out.k = k;
  out.words.reserve(c1.words.size() * r.words.size() + c2.words.size());

  for (const auto& u : c1.words)
    for (const auto& m : r.words)
      out.words.push_back(Subspace::from_rref(u.rep().concat(m)));
  MatrixFq zero(out.field, k, c1.v - k + d / 2);
  for (const auto& w : c2.words)
    out.words.push_back(Subspace::from_rref(zero.concat(w.rep())));

  std::optional<int> guarantee;
  if (c1.words.size() > 1) guarantee = c1.claimed_d;
  if (c2.words.size() > 1) guarantee = min_opt(guarantee, c2.claimed_d);
  if (r.words.size() > 1 && r.min_rank_distance)
    guarantee = min_opt(guarantee, 2 * *r.min_rank_distance);
  if (!c1.words.empty() && !r.words.empty() && !c2.words.empty())
    guarantee = min_opt(guarantee, d);
  out.claimed_d = out.words.size() > 1 ? guarantee : std::nullopt;
  return out;
}

SubspaceCode multiple_linkage_assemble(const std::vector<SubspaceCode>& blocks,
                                       const std::vector<int>& deltas,
                                       int rank_dist) {
  if (blocks.empty() || blocks.size() != deltas.size())
    throw ParameterError("blocks/deltas mismatch");
  if (deltas.back() != 0) throw ParameterError("last delta must be 0");
  const int k = blocks.front().k;
  const std::uint32_t q = blocks.front().field->q();
  SubspaceCode combined = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    int delta = deltas[i - 1];
    if (delta < 0 || delta > k) throw ParameterError("delta out of range");
    int d_step = 2 * (k - delta);
    int rcols = combined.v - delta;
    RankMetricCode r = (rank_dist <= std::min(k, rcols))
                           ? gabidulin(q, k, rcols, rank_dist)
                           : trivial_rank_code(q, k, rcols);
    combined = improved_linkage_assemble(blocks[i], combined, r, d_step);
  }
  return combined;
}

SubspaceCode single_subspace_code(std::uint32_t q, int v, int k) {
  if (k < 0 || k > v) throw ParameterError("need 0 <= k <= v");
  FieldPtr f = field_for(q);
  MatrixFq rep(f, k, v);
  for (int i = 0; i < k; ++i) rep.set(i, i, 1);
  SubspaceCode c;
  c.field = f;
  c.v = v;
  c.k = k;
  c.words.push_back(Subspace::from_rref(rep));
  return c;
}

namespace {

struct Plan {
  enum Kind { kSingle, kLmrd, kSpread, kLinkage } kind = kSingle;
  Int value = 1;
  int m = 0;  // linkage split point
};

std::vector<Plan> linkage_plan(std::uint32_t q, int v, int d, int k) {
  std::vector<Plan> plan(static_cast<std::size_t>(v) + 1);
  for (int n = k; n <= v; ++n) {
    Plan p;
    p.kind = Plan::kSingle;
    p.value = 1;
    Int m = lifted_mrd_size(q, k, n, d);
    if (m > p.value) p = {Plan::kLmrd, m, 0};
    if (d == 2 * k && n % k == 0) {
      Int sp = (int_pow(q, n) - 1) / (int_pow(q, k) - 1);
      if (sp > p.value) p = {Plan::kSpread, sp, 0};
    }
    plan[n] = p;
  }
  for (int n = k; n <= v; ++n)
    for (int m = k; m <= n - d / 2; ++m) {
      Int cand = plan[m].value * lifted_mrd_size(q, k, n - m + k, d) +
                 plan[n - m + k - d / 2].value;
      if (cand > plan[n].value) plan[n] = {Plan::kLinkage, cand, m};
    }
  return plan;
}

SubspaceCode realize_plan(std::uint32_t q, int v, int d, int k,
                          const std::vector<Plan>& plan) {
  const Plan& p = plan[v];
  switch (p.kind) {
    case Plan::kSingle:
      return single_subspace_code(q, v, k);
    case Plan::kLmrd:
      return lift(gabidulin(q, k, v - k, d / 2));
    case Plan::kSpread:
      return spread_construct(q, v, k);
    case Plan::kLinkage: {
      SubspaceCode c1 = realize_plan(q, p.m, d, k, plan);
      SubspaceCode c2 = realize_plan(q, v - p.m + k - d / 2, d, k, plan);
      int rcols = v - p.m;
      RankMetricCode r = (d / 2 <= std::min(k, rcols))
                             ? gabidulin(q, k, rcols, d / 2)
                             : trivial_rank_code(q, k, rcols);
      return improved_linkage_assemble(c1, c2, r, d);
    }
  }
  throw ParameterError("unreachable");
}

}  // namespace

SubspaceCode best_linkage_construct(std::uint32_t q, int v, int d, int k) {
  if (k < 1 || v < k) throw ParameterError("need 1 <= k <= v");
  if (d < 2 || d % 2 != 0) throw ParameterError("need even d >= 2");
  auto plan = linkage_plan(q, v, d, k);
  if (plan[v].value > Int(static_cast<unsigned long>(kMaxCodeSize)))
    throw BudgetError("assembled code too large");
  return realize_plan(q, v, d, k, plan);
}

}  // namespace cdc
