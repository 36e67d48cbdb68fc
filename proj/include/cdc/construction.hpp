#pragma once

#include <optional>
#include <vector>

#include "cdc/combinatorics.hpp"
#include "cdc/matrix.hpp"

namespace cdc {

/// A rank-metric code: a set of rows x cols matrices over GF(q) with the
/// rank of differences as the distance.  `min_rank_distance` is the declared
/// design distance; nullopt means infinite (at most one codeword).
struct RankMetricCode {
  FieldPtr field;
  int rows = 0, cols = 0;
  std::optional<int> min_rank_distance;
  std::vector<MatrixFq> words;

  std::size_t size() const { return words.size(); }
};

/// A constant dimension code: k-dimensional subspaces of GF(q)^v.
/// `claimed_d` is the declared minimum subspace distance; nullopt means
/// infinite (at most one codeword).
struct SubspaceCode {
  FieldPtr field;
  int v = 0, k = 0;
  std::optional<int> claimed_d;
  std::vector<Subspace> words;

  std::size_t size() const { return words.size(); }
};

/// Linear MRD code of shape k x n over GF(q) with minimum rank distance
/// exactly d and size q^(max{k,n}(min{k,n}-d+1)), built by evaluating
/// q-linearized polynomials at the polynomial basis of GF(q^max{k,n}).
/// Requires 1 <= d <= min{k,n}.
RankMetricCode gabidulin(std::uint32_t q, int k, int n, int d);

/// The single-zero-matrix code, the only option when d > min{k,n}.
RankMetricCode trivial_rank_code(std::uint32_t q, int k, int n);

/// Prefix every codeword with an identity block: (v=k+n, N, 2d; k) code.
SubspaceCode lift(const RankMetricCode& r);

/// Spread of k-spaces via field reduction from GF(q^k)^(v/k); needs k | v.
SubspaceCode spread_construct(std::uint32_t q, int v, int k);

enum class GreedyOrder {
  weight,       ///< ascending number of nonzero entries, then stream order
  enumeration,  ///< the Grassmannian stream order
  reverse,      ///< reversed stream order
};

/// Maximal-by-inclusion code: scans the Grassmannian in the given order and
/// keeps every subspace at distance >= d from all kept ones.
SubspaceCode greedy_cdc(std::uint32_t q, int v, int d, int k,
                        GreedyOrder order = GreedyOrder::weight);

/// Complements every codeword; parameters become (v, N, d; v-k).
SubspaceCode orthogonal_code(const SubspaceCode& c);

/// Two-family linkage with overlapping pivot ranges: codewords
/// (tau(U) | M) for U in c1, M in r, together with
/// (0 | tau(W)) for W in c2, in ambient dimension v1 + v2 - k + d/2.
/// Requires r of shape k x (v2 - k + d/2) and even d.
SubspaceCode improved_linkage_assemble(const SubspaceCode& c1,
                                       const SubspaceCode& c2,
                                       const RankMetricCode& r, int d);

/// Iterated linkage over m >= 2 blocks with pivot overlaps delta_i
/// (delta_m = 0).  Rank codes are MRD with the given rank distance.
SubspaceCode multiple_linkage_assemble(const std::vector<SubspaceCode>& blocks,
                                       const std::vector<int>& deltas,
                                       int rank_dist);

/// Best code assembled recursively from single subspaces, lifted MRD codes
/// and spreads through the improved-linkage recursion; realises the
/// linkage dynamic program value restricted to constructible ingredients.
SubspaceCode best_linkage_construct(std::uint32_t q, int v, int d, int k);

/// The (k, 1, infinity; k) code: the row space of (I_k | 0).
SubspaceCode single_subspace_code(std::uint32_t q, int v, int k);

}  // namespace cdc
