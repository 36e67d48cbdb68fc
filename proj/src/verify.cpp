#include "cdc/verify.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <tuple>

#include "cdc/errors.hpp"

namespace cdc {

namespace {

// Rank of the 2k x v stack of two representatives, written into a scratch
// buffer to keep the pair loop allocation-free.
int stacked_rank(const Subspace& a, const Subspace& b, std::vector<Elem>& buf,
                 const Field& F) {
  const int k1 = a.dim(), k2 = b.dim(), v = a.ambient();
  const int rows = k1 + k2;
  buf.assign(static_cast<std::size_t>(rows) * v, 0);
  for (int i = 0; i < k1; ++i)
    for (int j = 0; j < v; ++j) buf[static_cast<std::size_t>(i) * v + j] = a.rep().at(i, j);
  for (int i = 0; i < k2; ++i)
    for (int j = 0; j < v; ++j)
      buf[static_cast<std::size_t>(k1 + i) * v + j] = b.rep().at(i, j);
  int r = 0;
  for (int c = 0; c < v && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (buf[static_cast<std::size_t>(i) * v + c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < v; ++j)
        std::swap(buf[static_cast<std::size_t>(piv) * v + j],
                  buf[static_cast<std::size_t>(r) * v + j]);
    Elem s = F.inv(buf[static_cast<std::size_t>(r) * v + c]);
    if (s != 1)
      for (int j = c; j < v; ++j) {
        auto& x = buf[static_cast<std::size_t>(r) * v + j];
        x = F.mul(s, x);
      }
    for (int i = r + 1; i < rows; ++i) {
      Elem f = buf[static_cast<std::size_t>(i) * v + c];
      if (f == 0) continue;
      for (int j = c; j < v; ++j) {
        auto& x = buf[static_cast<std::size_t>(i) * v + j];
        x = F.sub(x, F.mul(f, buf[static_cast<std::size_t>(r) * v + j]));
      }
    }
    ++r;
  }
  return r;
}

struct PairMin {
  int dist;
  std::size_t i, j;
  bool operator<(const PairMin& o) const {
    return std::tie(dist, i, j) < std::tie(o.dist, o.i, o.j);
  }
};

VerifyReport verify_impl(const SubspaceCode& c, std::uint64_t pair_budget,
                         bool parallel) {
  VerifyReport rep;
  rep.n = c.words.size();
  const Field& F = *c.field;

  for (const auto& w : c.words) {
    if (w.dim() != c.k || w.ambient() != c.v) rep.k_uniform = false;
    if (!w.rep().is_rref() ||
        static_cast<int>(w.rep().pivot_columns().size()) != w.dim())
      rep.rref_ok = false;
  }
  {
    std::set<std::vector<Elem>> seen;
    for (const auto& w : c.words)
      if (!seen.insert(w.rep().entries()).second) rep.distinct_ok = false;
  }
  if (!rep.k_uniform) return rep;  // distances over mixed dimensions refused
  if (rep.n <= 1) return rep;      // infinite minimum distance

  const std::size_t n = rep.n;
  const std::uint64_t total_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  rep.budget_exceeded = total_pairs > pair_budget;

  PairMin best{INT_MAX, 0, 0};
  std::uint64_t checked = 0;

  if (rep.budget_exceeded || !parallel) {
    std::vector<Elem> buf;
    for (std::size_t i = 0; i < n && checked < pair_budget; ++i)
      for (std::size_t j = i + 1; j < n && checked < pair_budget; ++j) {
        int dist = 2 * (stacked_rank(c.words[i], c.words[j], buf, F) - c.k);
        ++checked;
        PairMin cand{dist, i, j};
        if (cand < best) best = cand;
      }
  } else {
#pragma omp parallel
    {
      std::vector<Elem> buf;
      PairMin local{INT_MAX, 0, 0};
#pragma omp for schedule(dynamic, 8)
      for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
        auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = i + 1; j < n; ++j) {
          int dist = 2 * (stacked_rank(c.words[i], c.words[j], buf, F) - c.k);
          PairMin cand{dist, i, j};
          if (cand < local) local = cand;
        }
      }
#pragma omp critical
      if (local < best) best = local;
    }
    checked = total_pairs;
  }

  rep.pairs_checked = checked;
  if (checked > 0) {
    rep.min_distance = best.dist;
    rep.witness = std::make_pair(best.i, best.j);
  }
  return rep;
}

}  // namespace

VerifyReport verify_code(const SubspaceCode& c, std::uint64_t pair_budget) {
  return verify_impl(c, pair_budget, /*parallel=*/true);
}

VerifyReport verify_code_serial(const SubspaceCode& c,
                                std::uint64_t pair_budget) {
  return verify_impl(c, pair_budget, /*parallel=*/false);
}

Int oracle_count_close(std::uint32_t q, int v, int k, int m, int t) {
  auto [p, e] = prime_power_decompose(q);
  FieldPtr f = Field::make(p, e);
  // fixed m-space spanned by the first m unit vectors
  MatrixFq wrep(f, m, v);
  for (int i = 0; i < m; ++i) wrep.set(i, i, 1);
  Subspace w = Subspace::from_rref(wrep);

  GrassmannianEnumerator en(f, v, k);
  MatrixFq rep(f, k, v);
  Int count = 0;
  while (en.next(rep)) {
    Subspace u = Subspace::from_rref(rep);
    if (intersection_dim(u, w) >= k - t) ++count;
  }
  return count;
}

Int oracle_grassmannian_size(std::uint32_t q, int v, int k) {
  auto [p, e] = prime_power_decompose(q);
  FieldPtr f = Field::make(p, e);
  GrassmannianEnumerator en(f, v, k);
  MatrixFq rep(f, k, v);
  Int count = 0;
  while (en.next(rep)) ++count;
  return count;
}

std::optional<int> min_rank_distance_bruteforce(const RankMetricCode& c) {
  if (c.words.size() <= 1) return std::nullopt;
  int best = INT_MAX;
  const auto n = static_cast<long long>(c.words.size());
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (long long i = 0; i < n; ++i)
    for (long long j = i + 1; j < n; ++j) {
      int r = c.words[i].sub(c.words[j]).rank();
      best = std::min(best, r);
    }
  return best;
}

}  // namespace cdc
