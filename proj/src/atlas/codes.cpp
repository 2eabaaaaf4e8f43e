#include "atlas/codes.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "atlas/error.hpp"

namespace atlas {
namespace {

inline unsigned parity(std::uint32_t x) { return std::popcount(x) & 1u; }

void fwht(std::vector<std::int32_t>& a) {
  const std::size_t n = a.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t x = a[j];
        const std::int32_t y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
}

void require_full_rank(const Field& field, const Permutation& f) {
  const unsigned r = rank(build_parity(field, f));
  if (r != 2 * field.m()) {
    throw Error(Errc::RankDeficient,
                "rank(H_F) = " + std::to_string(r) + " < 2m = " + std::to_string(2 * field.m()));
  }
}

std::uint64_t choose2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace

ParityCheck build_parity(const Field& field, const Permutation& f) {
  ParityCheck pc;
  pc.m = field.m();
  pc.length = field.order();
  const std::size_t words = (pc.length + 63) / 64;
  pc.rows.assign(2 * pc.m, std::vector<std::uint64_t>(words, 0));
  for (std::uint32_t j = 0; j < pc.length; ++j) {
    const Elem x = field.exp_table()[j];
    const Elem y = f(x);
    for (unsigned r = 0; r < pc.m; ++r) {
      if (x >> r & 1) pc.rows[r][j / 64] |= std::uint64_t{1} << (j % 64);
      if (y >> r & 1) pc.rows[pc.m + r][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  return pc;
}

unsigned rank(const ParityCheck& pc) {
  auto rows = pc.rows;
  unsigned r = 0;
  for (std::uint32_t col = 0; col < pc.length && r < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    std::size_t pivot = r;
    while (pivot < rows.size() && !(rows[pivot][w] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i][w] & mask)) {
        for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] ^= rows[r][k];
      }
    }
    ++r;
  }
  return r;
}

DistanceClass min_distance_upto5(const Field& field, const Permutation& f) {
  const unsigned m = field.m();
  if (m > 14) throw Error(Errc::TooLarge, "syndrome bitmap needs m <= 14");
  require_full_rank(field, f);
  const Elem n = field.order();

  // Weight 3: a black triple {x, y, x+y} whose images also sum to zero.
  for (Elem x = 1; x <= n; ++x) {
    for (Elem y = x + 1; y <= n; ++y) {
      if ((f(x) ^ f(y)) == f(x ^ y)) return DistanceClass::Three;
    }
  }
  // Weight 4: two distinct (hence disjoint) pairs with equal syndromes.
  std::vector<std::uint64_t> seen((std::size_t{1} << (2 * m)) / 64 + 1, 0);
  for (Elem x = 1; x <= n; ++x) {
    for (Elem y = x + 1; y <= n; ++y) {
      const std::size_t key = (std::size_t{x ^ y} << m) | (f(x) ^ f(y));
      std::uint64_t& word = seen[key / 64];
      const std::uint64_t bit = std::uint64_t{1} << (key % 64);
      if (word & bit) return DistanceClass::Four;
      word |= bit;
    }
  }
  return DistanceClass::AtLeastFive;
}

std::vector<std::uint64_t> dual_weights(const Field& field, const Permutation& f, bool extended,
                                        unsigned jobs) {
  const std::uint32_t q = field.size();
  const std::uint32_t length = extended ? q : q - 1;
  jobs = std::max(1u, std::min(jobs, q));

  std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(length + 1, 0));
  auto work = [&](unsigned id) {
    std::vector<std::int32_t> s(q);
    auto& hist = partial[id];
    for (std::uint32_t w = id; w < q; w += jobs) {
      for (Elem x = 0; x < q; ++x) s[x] = parity(w & f(x)) ? -1 : 1;
      fwht(s);
      for (std::uint32_t u = 0; u < q; ++u) {
        const std::int64_t walsh = s[u];
        // ones among x != 0 of u.x + w.F(x); x = 0 always contributes a zero
        ++hist[static_cast<std::uint64_t>((std::int64_t{q} - walsh) / 2)];
        if (extended) ++hist[static_cast<std::uint64_t>((std::int64_t{q} + walsh) / 2)];
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(work, id);
  }
  std::vector<std::uint64_t> out(length + 1, 0);
  for (const auto& h : partial) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += h[i];
  }
  return out;
}

std::vector<std::uint64_t> dual_weights_enumerated(const Field& field, const Permutation& f,
                                                   bool extended) {
  const unsigned m = field.m();
  if (m > 10) throw Error(Errc::TooLarge, "codeword enumeration needs m <= 10");
  const std::uint32_t q = field.size();
  const std::uint32_t length = extended ? q : q - 1;
  const std::size_t words = (length + 63) / 64;

  // Row generators; column j is x = alpha^j (and x = 0 last when extended).
  std::vector<std::vector<std::uint64_t>> rows;
  auto column_value = [&](std::uint32_t j) -> Elem {
    return j < q - 1 ? field.exp_table()[j] : 0;
  };
  for (unsigned r = 0; r < 2 * m; ++r) {
    std::vector<std::uint64_t> row(words, 0);
    for (std::uint32_t j = 0; j < length; ++j) {
      const Elem x = column_value(j);
      const Elem v = r < m ? x : f(x);
      if (v >> (r % m) & 1) row[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    rows.push_back(std::move(row));
  }
  if (extended) {
    std::vector<std::uint64_t> ones(words, 0);
    for (std::uint32_t j = 0; j < length; ++j) ones[j / 64] |= std::uint64_t{1} << (j % 64);
    rows.push_back(std::move(ones));
  }

  std::vector<std::uint64_t> hist(length + 1, 0);
  std::vector<std::uint64_t> word(words, 0);
  const std::uint64_t total = std::uint64_t{1} << rows.size();
  hist[0] = 1;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto& row = rows[std::countr_zero(i)];
    std::uint64_t weight = 0;
    for (std::size_t k = 0; k < words; ++k) {
      word[k] ^= row[k];
      weight += std::popcount(word[k]);
    }
    ++hist[weight];
  }
  return hist;
}

std::vector<mpz_class> macwilliams(std::span<const mpz_class> counts, std::uint64_t length,
                                   std::uint64_t source_dim) {
  if (counts.size() != length + 1) {
    throw Error(Errc::InvalidArgument, "enumerator must have length + 1 entries");
  }
  const std::int64_t n = static_cast<std::int64_t>(length);
  std::vector<mpz_class> acc(length + 1, 0);
  mpz_class prev, cur, next, tmp;
  for (std::uint64_t j = 0; j <= length; ++j) {
    if (counts[j] == 0) continue;
    // Krawtchouk K_w(j) by the three-term recurrence in w.
    const std::int64_t c = n - 2 * static_cast<std::int64_t>(j);
    prev = 1;
    acc[0] += counts[j];
    if (length == 0) continue;
    cur = c;
    acc[1] += counts[j] * cur;
    for (std::int64_t w = 1; w < n; ++w) {
      next = c * cur;
      tmp = (n - w + 1) * prev;
      next -= tmp;
      mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(w + 1));
      acc[static_cast<std::size_t>(w + 1)] += counts[j] * next;
      prev.swap(cur);
      cur.swap(next);
    }
  }
  for (auto& a : acc) {
    if (!mpz_divisible_2exp_p(a.get_mpz_t(), source_dim)) {
      throw Error(Errc::ConsistencyError, "MacWilliams coefficient is not integral");
    }
    mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), source_dim);
  }
  return acc;
}

mpz_class WeightDistribution::total() const {
  mpz_class s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

WeightDistribution weight_distribution(const Field& field, const Permutation& f, bool extended,
                                       unsigned jobs) {
  if (field.m() > kWeightDistributionMaxDegree) {
    throw Error(Errc::TooLarge, "weight distribution needs m <= 13");
  }
  require_full_rank(field, f);
  const auto dual = dual_weights(field, f, extended, jobs);
  std::vector<mpz_class> dual_big;
  dual_big.reserve(dual.size());
  for (std::uint64_t d : dual) dual_big.emplace_back(static_cast<unsigned long>(d));
  WeightDistribution wd;
  wd.extended = extended;
  wd.length = dual.size() - 1;
  wd.counts = macwilliams(dual_big, wd.length, 2 * field.m() + (extended ? 1 : 0));
  return wd;
}

std::uint64_t extended_weight4_count(const Field& field, const Permutation& f) {
  const std::uint32_t q = field.size();
  std::vector<std::uint32_t> cnt(q);
  std::uint64_t pairings = 0;
  for (Elem b = 1; b < q; ++b) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (Elem x = 0; x < q; ++x) ++cnt[f(x) ^ f(x ^ b)];
    for (std::uint32_t c : cnt) pairings += choose2(c / 2);
  }
  // Each quadruple {x, y, z, w} splits into pairs with a common difference
  // in three ways.
  return pairings / 3;
}

QuadrupleCheck quadruple_check(const Field& field, const Permutation& f) {
  QuadrupleCheck qc;
  qc.lhs = extended_weight4_count(field, f);
  const std::uint32_t q = field.size();
  for (Elem b = 1; b < q; ++b) {
    std::uint64_t nb = 0;
    for (Elem x = 0; x < q; ++x) nb += (f(x) ^ f(x ^ b)) == 1;
    qc.solution_sum += choose2(nb / 2);
  }
  qc.rhs_times3 = std::uint64_t{field.order()} * qc.solution_sum;
  return qc;
}

}  // namespace atlas
