#include "primewheel/wheel.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace primewheel {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

namespace {

const Wheel kWheel30{30, {7, 11, 13, 17, 19, 23, 29, 31}};

// Primes in (7, 199] together with 211. The 210-wheel product in the
// reference omits composite coprime residues (121, 143, 169, 187, 209),
// so this list is a constant, not "residues coprime to 210".
const Wheel kWheel210{210,
                      {11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,
                       53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101,
                       103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157,
                       163, 167, 173, 179, 181, 191, 193, 197, 199, 211}};

// Canonical decomposition for each even residue 0, 2, ..., 28.
struct CanonicalEntry {
  std::int64_t residue, left, right, shift;
};
constexpr CanonicalEntry kCanonicalDecompositions[] = {
    {0, 7, 23, -1},  {2, 13, 19, -1},  {4, 11, 23, -1}, {6, 13, 23, -1},
    {8, 19, 19, -1}, {10, 17, 23, -1}, {12, 19, 23, -1}, {14, 13, 31, -1},
    {16, 17, 29, -1}, {18, 7, 11, 0},  {20, 7, 13, 0},  {22, 11, 11, 0},
    {24, 11, 13, 0}, {26, 13, 13, 0},  {28, 11, 17, 0},
};

}  // namespace

const Wheel& wheel_for(std::int64_t modulus) {
  if (modulus == 30) return kWheel30;
  if (modulus == 210) return kWheel210;
  throw std::invalid_argument("unsupported wheel modulus " + std::to_string(modulus) +
                              " (expected 30 or 210)");
}

std::vector<std::int64_t> coprime_anchors(std::int64_t modulus) {
  return wheel_for(modulus).anchors;
}

std::vector<std::int64_t> residue_histogram(std::span<const std::int64_t> values,
                                            std::int64_t p) {
  if (p < 1) throw std::invalid_argument("residue_histogram: p must be >= 1");
  std::vector<std::int64_t> bins(static_cast<std::size_t>(p), 0);
  for (std::int64_t v : values) {
    std::int64_t r = v % p;
    if (r < 0) r += p;
    ++bins[static_cast<std::size_t>(r)];
  }
  return bins;
}

bool evenly_distributed(std::span<const std::int64_t> values, std::int64_t p) {
  auto bins = residue_histogram(values, p);
  for (std::int64_t b : bins)
    if (b != bins[0]) return false;
  return true;
}

bool affine_map_preserves_distribution(std::span<const std::int64_t> a,
                                       std::int64_t q, std::int64_t c,
                                       std::int64_t p) {
  if (gcd64(p, q) != 1)
    throw std::invalid_argument("affine_map_preserves_distribution: gcd(p, q) != 1");
  if (!evenly_distributed(a, p)) return true;  // hypothesis vacuous
  std::vector<std::int64_t> mapped;
  mapped.reserve(a.size());
  for (std::int64_t v : a) mapped.push_back(v * q + c);
  return evenly_distributed(mapped, p);
}

bool pairwise_coprime(const ModulusSet& ms) {
  for (std::size_t i = 0; i < ms.moduli.size(); ++i)
    for (std::size_t j = i + 1; j < ms.moduli.size(); ++j)
      if (gcd64(ms.moduli[i], ms.moduli[j]) != 1) return false;
  return true;
}

std::int64_t period_length(const ModulusSet& ms) {
  std::int64_t prod = 1;
  for (std::int64_t m : ms.moduli) {
    if (m < 1) throw std::invalid_argument("period_length: moduli must be positive");
    prod *= m;
  }
  return prod;
}

std::int64_t count_coprime_survivors(const ModulusSet& ms, std::int64_t window_start,
                                     std::int64_t window_len) {
  if (!pairwise_coprime(ms))
    throw std::invalid_argument("count_coprime_survivors: moduli not pairwise coprime");
  if (window_len != period_length(ms))
    throw std::invalid_argument(
        "count_coprime_survivors: window length must equal the product of the moduli");
  std::int64_t count = 0;
  for (std::int64_t a = window_start; a < window_start + window_len; ++a) {
    bool survives = true;
    for (std::int64_t m : ms.moduli) {
      if (a % m == 0) {
        survives = false;
        break;
      }
    }
    if (survives) ++count;
  }
  return count;
}

std::vector<ResidueDecomposition> goldbach_decompositions(std::int64_t even_residue) {
  if (even_residue < 0 || even_residue >= 30 || even_residue % 2 != 0)
    throw std::invalid_argument("goldbach_decompositions: residue must be even in [0, 30)");

  std::int64_t canon_left = 0, canon_right = 0, canon_shift = 0;
  for (const auto& e : kCanonicalDecompositions) {
    if (e.residue == even_residue) {
      canon_left = e.left;
      canon_right = e.right;
      canon_shift = e.shift;
    }
  }

  std::vector<ResidueDecomposition> out;
  const auto& anchors = kWheel30.anchors;
  for (std::int64_t left : anchors) {
    for (std::int64_t right : anchors) {
      if (right < left) continue;
      for (std::int64_t shift : {std::int64_t{-1}, std::int64_t{0}}) {
        if (left + right + 30 * shift != even_residue) continue;
        bool canonical =
            left == canon_left && right == canon_right && shift == canon_shift;
        out.push_back({even_residue, left, right, shift, canonical});
      }
    }
  }
  return out;
}

}  // namespace primewheel
