#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace primewheel {

// Residue system of a wheel modulus. Anchors live in the window (1, m+1],
// so residue 1 is represented as m+1 (31 for the 30-wheel, 211 for the
// 210-wheel). Supported moduli: 30 = 2*3*5 and 210 = 2*3*5*7.
struct Wheel {
  std::int64_t modulus;
  std::vector<std::int64_t> anchors;
};

// Throws std::invalid_argument for any modulus other than 30 or 210.
const Wheel& wheel_for(std::int64_t modulus);

std::vector<std::int64_t> coprime_anchors(std::int64_t modulus);

// Counts per residue class mod p; bins[r] = |{v : v mod p == r}|.
std::vector<std::int64_t> residue_histogram(std::span<const std::int64_t> values,
                                            std::int64_t p);

// All bins equal (exact integer equality).
bool evenly_distributed(std::span<const std::int64_t> values, std::int64_t p);

// True iff {a*q + c : a in A} is evenly distributed mod p whenever A is.
// Requires gcd(p, q) = 1; throws std::invalid_argument otherwise.
bool affine_map_preserves_distribution(std::span<const std::int64_t> a,
                                       std::int64_t q, std::int64_t c,
                                       std::int64_t p);

// Pairwise-coprime moduli.
struct ModulusSet {
  std::vector<std::int64_t> moduli;
};

bool pairwise_coprime(const ModulusSet& ms);
std::int64_t period_length(const ModulusSet& ms);

// |{a in [start, start + len) : a mod m != 0 for every m in ms}|.
// len must equal the product of the moduli; equals prod(m - 1) for any start.
std::int64_t count_coprime_survivors(const ModulusSet& ms, std::int64_t window_start,
                                     std::int64_t window_len);

// One way of writing an even residue class mod 30 as a sum of two anchor
// progressions: e + 30a = left + 30*(a + shift) + right, shift in {-1, 0}.
struct ResidueDecomposition {
  std::int64_t even_residue;
  std::int64_t left_anchor;
  std::int64_t right_anchor;
  std::int64_t shift;
  bool canonical;  // the decomposition singled out in the reference table
};

// All anchor-pair decompositions of an even residue in [0, 30), left <= right.
// Throws std::invalid_argument on odd or out-of-range input.
std::vector<ResidueDecomposition> goldbach_decompositions(std::int64_t even_residue);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace primewheel
