#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

namespace primewheel {

// One block-structured product C(modulus * 2^k) with deficit d.
struct EstimateSpec {
  std::int64_t modulus;  // 30 or 210
  int deficit;           // 0..3, strictly below the smallest anchor
  int block_index;       // k >= 0
};

struct EstimateTerm {
  std::int64_t anchor;
  double factor;  // 1 - d/anchor
};

struct EstimateBlock {
  int block;  // j in [1, k]
  std::vector<EstimateTerm> terms;
  double partial_product;
};

struct EstimateResult {
  EstimateSpec spec;
  std::int64_t length_factor;  // modulus * 2^k
  double value;
  std::vector<EstimateTerm> base_terms;
  std::vector<EstimateBlock> blocks;
};

// Product over wheel anchors of (1 - d/anchor). Without the length factor.
double base_product(std::int64_t modulus, int deficit);

// Anchor values of block j >= 1: {r + m*t : r wheel anchor,
// t in [2^j - 1, 2^(j+1) - 2]}, ascending, composites retained.
std::vector<std::int64_t> block_anchors(std::int64_t modulus, int j);

EstimateResult estimate_C(const EstimateSpec& spec);

// 2 * product over block_anchors(m, k) of (1 - d/v); equals
// estimate_C(k) / estimate_C(k-1).
double estimate_ratio(std::int64_t modulus, int deficit, int k);

// Exact check of (1 - d/(m*x+c)) < (1 - d/(m*(2x+e+1)+c))*(1 - d/(m*(2x+e+2)+c))
// in integer arithmetic. Preconditions (throw std::invalid_argument):
// x >= 1, e >= 0, 0 < c < m+2, 0 < d < m*x.
bool lemma3_check(std::int64_t x, std::int64_t e, std::int64_t c, std::int64_t d,
                  std::int64_t modulus);

// (m*2^k - m)^2 > m*(m*2^(k+1) - m), evaluated in integers; k >= 2.
bool effective_range_check(int k, std::int64_t modulus);

void to_json(nlohmann::json& j, const EstimateResult& r);

}  // namespace primewheel
