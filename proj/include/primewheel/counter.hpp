#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "primewheel/sieve.hpp"

namespace primewheel {

struct XRange {
  std::int64_t lo;
  std::int64_t hi;  // half-open
};

// Block k's x-interval [m*(2^k - 1), m*(2^(k+1) - 1)); the range every
// per-block count and estimate in this library refers to.
XRange block_range(std::int64_t modulus, int k);

// Distinct wheel anchors sharing one modulus; a hit is an x where every
// member anchor + m*x is prime.
struct ConstellationPattern {
  std::int64_t modulus;
  std::vector<std::int64_t> anchors;

  ConstellationPattern(std::int64_t modulus_, std::vector<std::int64_t> anchors_);
};

// Pairs (left + 30x, right + 30(a - x)) with constant sum left + right + 30a.
struct GoldbachQuery {
  std::int64_t left_anchor;
  std::int64_t right_anchor;
  std::int64_t a;
  XRange x_range;
};

std::int64_t count_primes(const Progression& p, XRange r, unsigned threads = 1);

std::int64_t count_constellations(const ConstellationPattern& pat, XRange r,
                                  unsigned threads = 1);

// Hit x values rather than just the count.
std::vector<std::int64_t> constellation_hits(const ConstellationPattern& pat, XRange r);

std::int64_t count_goldbach_pairs(const GoldbachQuery& q, unsigned threads = 1);

std::vector<std::int64_t> goldbach_pair_hits(const GoldbachQuery& q);

struct PartitionResult {
  std::uint64_t target;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // p <= q, p + q = target
};

// All unordered prime pairs summing to an even m > 6.
PartitionResult goldbach_partitions(std::uint64_t m);

}  // namespace primewheel
