#pragma once

// The binary code C_F with parity-check matrix H_F = [x ; F(x)] over the
// nonzero x, and its extension C*_F (columns [1 ; x ; F(x)] over all x).

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "atlas/gf2m.hpp"
#include "atlas/perm.hpp"

namespace atlas {

struct ParityCheck {
  unsigned m = 0;
  std::uint32_t length = 0;                       // n = 2^m - 1
  std::vector<std::vector<std::uint64_t>> rows;   // 2m bit rows, column j <-> alpha^(j-1)

  bool bit(std::size_t row, std::uint32_t col) const {
    return rows[row][col / 64] >> (col % 64) & 1;
  }
};

ParityCheck build_parity(const Field& field, const Permutation& f);

/// Exact GF(2) rank by elimination.
unsigned rank(const ParityCheck& pc);

enum class DistanceClass { Three = 3, Four = 4, AtLeastFive = 5 };

/// Resolves d(C_F) only as far as {3, 4, >=5}, by syndrome hashing over
/// column pairs.  Requires rank 2m; m <= 14.
DistanceClass min_distance_upto5(const Field& field, const Permutation& f);

/// Weight enumerator of the dual code (row space of H_F, or of the extended
/// matrix), index = weight.  Computed from the Walsh spectrum of F.
std::vector<std::uint64_t> dual_weights(const Field& field, const Permutation& f, bool extended,
                                        unsigned jobs = 1);

/// Same enumerator by walking all dual codewords in Gray-code order.
/// Reference route; m <= 10.
std::vector<std::uint64_t> dual_weights_enumerated(const Field& field, const Permutation& f,
                                                   bool extended);

/// MacWilliams transform: given the weight distribution of a code of length
/// `length` with 2^source_dim codewords, returns its dual's distribution.
/// Throws ConsistencyError if a coefficient is not integral.
std::vector<mpz_class> macwilliams(std::span<const mpz_class> counts, std::uint64_t length,
                                   std::uint64_t source_dim);

struct WeightDistribution {
  std::uint64_t length = 0;
  bool extended = false;
  std::vector<mpz_class> counts;  // counts[w] = A_w

  mpz_class total() const;
  bool operator==(const WeightDistribution& o) const {
    return length == o.length && extended == o.extended && counts == o.counts;
  }
};

inline constexpr unsigned kWeightDistributionMaxDegree = 13;

/// A_0..A_n of C_F (or A_0..A_{n+1} of C*_F).  Throws TooLarge above m=13
/// and RankDeficient when rank(H_F) < 2m.
WeightDistribution weight_distribution(const Field& field, const Permutation& f,
                                       bool extended = false, unsigned jobs = 1);

/// Weight-4 codewords of C*_F counted directly from coinciding pair syndromes.
std::uint64_t extended_weight4_count(const Field& field, const Permutation& f);

struct QuadrupleCheck {
  std::uint64_t lhs = 0;            // A_4 of C*_F
  std::uint64_t solution_sum = 0;   // sum over b != 0 of C(n_b / 2, 2), n_b at a = 1
  std::uint64_t rhs_times3 = 0;     // (2^m - 1) * solution_sum

  bool agrees() const { return 3 * lhs == rhs_times3; }
};

QuadrupleCheck quadruple_check(const Field& field, const Permutation& f);

}  // namespace atlas
