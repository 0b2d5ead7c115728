#include "primewheel/estimator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "primewheel/wheel.hpp"

namespace primewheel {

namespace {

void validate_spec(std::int64_t modulus, int deficit, int block_index) {
  const Wheel& w = wheel_for(modulus);
  if (deficit < 0 || deficit >= w.anchors.front())
    throw std::invalid_argument("estimator: deficit must lie in [0, smallest anchor)");
  if (block_index < 0) throw std::invalid_argument("estimator: block index must be >= 0");
}

}  // namespace

double base_product(std::int64_t modulus, int deficit) {
  validate_spec(modulus, deficit, 0);
  double prod = 1.0;
  for (std::int64_t a : wheel_for(modulus).anchors)
    prod *= 1.0 - static_cast<double>(deficit) / static_cast<double>(a);
  return prod;
}

std::vector<std::int64_t> block_anchors(std::int64_t modulus, int j) {
  if (j < 1) throw std::invalid_argument("block_anchors: block index must be >= 1");
  const Wheel& w = wheel_for(modulus);
  std::vector<std::int64_t> out;
  std::int64_t t_lo = (std::int64_t{1} << j) - 1;
  std::int64_t t_hi = (std::int64_t{1} << (j + 1)) - 2;
  for (std::int64_t t = t_lo; t <= t_hi; ++t)
    for (std::int64_t r : w.anchors) out.push_back(r + modulus * t);
  std::sort(out.begin(), out.end());
  return out;
}

EstimateResult estimate_C(const EstimateSpec& spec) {
  validate_spec(spec.modulus, spec.deficit, spec.block_index);
  EstimateResult r;
  r.spec = spec;
  r.length_factor = spec.modulus << spec.block_index;
  const double d = spec.deficit;

  double prod = 1.0;
  for (std::int64_t a : wheel_for(spec.modulus).anchors) {
    double f = 1.0 - d / static_cast<double>(a);
    r.base_terms.push_back({a, f});
    prod *= f;
  }
  for (int j = 1; j <= spec.block_index; ++j) {
    EstimateBlock blk{j, {}, 1.0};
    for (std::int64_t v : block_anchors(spec.modulus, j)) {
      double f = 1.0 - d / static_cast<double>(v);
      blk.terms.push_back({v, f});
      blk.partial_product *= f;
    }
    prod *= blk.partial_product;
    r.blocks.push_back(std::move(blk));
  }
  r.value = static_cast<double>(r.length_factor) * prod;
  return r;
}

double estimate_ratio(std::int64_t modulus, int deficit, int k) {
  if (k < 1) throw std::invalid_argument("estimate_ratio: k must be >= 1");
  validate_spec(modulus, deficit, k);
  double prod = 1.0;
  for (std::int64_t v : block_anchors(modulus, k))
    prod *= 1.0 - static_cast<double>(deficit) / static_cast<double>(v);
  return 2.0 * prod;
}

bool lemma3_check(std::int64_t x, std::int64_t e, std::int64_t c, std::int64_t d,
                  std::int64_t modulus) {
  wheel_for(modulus);
  if (x < 1) throw std::invalid_argument("lemma3_check: x must be >= 1");
  if (e < 0) throw std::invalid_argument("lemma3_check: e must be >= 0");
  if (c <= 0 || c >= modulus + 2)
    throw std::invalid_argument("lemma3_check: need 0 < c < modulus + 2");
  if (d <= 0 || d >= modulus * x)
    throw std::invalid_argument("lemma3_check: need 0 < d < modulus * x");

  // (A-d)/A < (B-d)(C-d)/(BC) with A = m*x+c, B = m*(2x+e+1)+c, C = m*(2x+e+2)+c.
  using i128 = __int128;
  i128 a = i128(modulus) * x + c;
  i128 b = i128(modulus) * (2 * x + e + 1) + c;
  i128 cc = i128(modulus) * (2 * x + e + 2) + c;
  return (a - d) * b * cc < a * (b - d) * (cc - d);
}

bool effective_range_check(int k, std::int64_t modulus) {
  wheel_for(modulus);
  if (k < 2) throw std::invalid_argument("effective_range_check: k must be >= 2");
  if (k > 60) throw std::invalid_argument("effective_range_check: k too large");
  using i128 = __int128;
  i128 m = modulus;
  i128 lhs = m * (i128(1) << k) - m;
  i128 rhs = m * (i128(1) << (k + 1)) - m;
  return lhs * lhs > m * rhs;
}

void to_json(nlohmann::json& j, const EstimateResult& r) {
  j = nlohmann::json{{"modulus", r.spec.modulus},
                     {"deficit", r.spec.deficit},
                     {"k", r.spec.block_index},
                     {"value", r.value},
                     {"length_factor", r.length_factor}};
  std::size_t n_terms = r.base_terms.size();
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : r.blocks) {
    n_terms += b.terms.size();
    blocks.push_back({{"j", b.block},
                      {"first_anchor", b.terms.front().anchor},
                      {"last_anchor", b.terms.back().anchor},
                      {"partial_product", b.partial_product}});
  }
  j["n_terms"] = n_terms;
  j["blocks"] = blocks;
}

}  // namespace primewheel
