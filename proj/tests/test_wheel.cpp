#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <vector>

#include "primewheel/wheel.hpp"

using namespace primewheel;

namespace {

std::vector<std::int64_t> iota_range(std::int64_t from, std::int64_t to) {
  std::vector<std::int64_t> v;
  for (std::int64_t i = from; i <= to; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_CASE("anchor sets") {
  CHECK(coprime_anchors(30) ==
        std::vector<std::int64_t>{7, 11, 13, 17, 19, 23, 29, 31});

  auto a210 = coprime_anchors(210);
  CHECK(a210.size() == 43);
  CHECK(a210.front() == 11);
  CHECK(a210.back() == 211);
  CHECK(a210[41] == 199);
  for (std::size_t i = 0; i < a210.size(); ++i) {
    CHECK(gcd64(a210[i], 210) == 1);
    if (i > 0) CHECK(a210[i - 1] < a210[i]);
    CHECK(a210[i] > 1);
    CHECK(a210[i] <= 211);
  }
  // The list tracks the printed product, not phi(210) = 48: composite
  // coprime residues are absent.
  for (std::int64_t missing : {121, 143, 169, 187, 209})
    CHECK(std::find(a210.begin(), a210.end(), missing) == a210.end());

  CHECK_THROWS_AS(coprime_anchors(6), std::invalid_argument);
  CHECK_THROWS_AS(coprime_anchors(60), std::invalid_argument);
}

TEST_CASE("residue histogram") {
  auto full = iota_range(1, 30);
  auto bins = residue_histogram(full, 5);
  for (auto b : bins) CHECK(b == 6);
  CHECK(evenly_distributed(full, 5));

  std::vector<std::int64_t> mapped;
  for (std::int64_t i = 1; i <= 30; ++i) mapped.push_back(7 * i + 1);
  for (auto b : residue_histogram(mapped, 5)) CHECK(b == 6);

  std::vector<std::int64_t> evens{0, 2, 4};
  auto eb = residue_histogram(evens, 2);
  CHECK(eb[0] == 3);
  CHECK(eb[1] == 0);
  CHECK_FALSE(evenly_distributed(evens, 2));

  std::int64_t total = 0;
  for (auto b : residue_histogram(full, 7)) total += b;
  CHECK(total == 30);
}

TEST_CASE("affine map keeps even distribution") {
  CHECK(affine_map_preserves_distribution(iota_range(1, 10), 7, 1, 5));
  CHECK(affine_map_preserves_distribution(iota_range(1, 4), 3, 0, 2));
  CHECK(affine_map_preserves_distribution(iota_range(1, 25), 9, 4, 5));
  CHECK_THROWS_AS(affine_map_preserves_distribution(iota_range(1, 10), 10, 0, 5),
                  std::invalid_argument);
}

TEST_CASE("affine map property, random even sets") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 1000; ++trial) {
    std::int64_t p = std::uniform_int_distribution<std::int64_t>(2, 13)(rng);
    std::int64_t reps = std::uniform_int_distribution<std::int64_t>(1, 5)(rng);
    // Evenly distributed by construction: each residue class 'reps' times.
    std::vector<std::int64_t> a;
    for (std::int64_t r = 0; r < p; ++r)
      for (std::int64_t i = 0; i < reps; ++i)
        a.push_back(r + p * std::uniform_int_distribution<std::int64_t>(0, 50)(rng));
    std::int64_t q;
    do {
      q = std::uniform_int_distribution<std::int64_t>(1, 100)(rng);
    } while (std::gcd(p, q) != 1);
    std::int64_t c = std::uniform_int_distribution<std::int64_t>(0, 100)(rng);
    CHECK(affine_map_preserves_distribution(a, q, c, p));
  }
}

TEST_CASE("coprime survivor counts") {
  CHECK(count_coprime_survivors({{2, 3, 5}}, 1, 30) == 8);
  CHECK(count_coprime_survivors({{7}}, 1, 7) == 6);
  CHECK(count_coprime_survivors({{2, 3, 5}}, 6, 30) == 8);
  CHECK_THROWS_AS(count_coprime_survivors({{2, 3, 5}}, 1, 29), std::invalid_argument);
  CHECK_THROWS_AS(count_coprime_survivors({{2, 4}}, 1, 8), std::invalid_argument);
}

TEST_CASE("survivor count equals product over every subset and offset") {
  const std::vector<std::int64_t> primes{2, 3, 5, 7, 11};
  for (unsigned mask = 1; mask < (1u << primes.size()); ++mask) {
    ModulusSet ms;
    std::int64_t period = 1, product = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (1u << i)) {
        ms.moduli.push_back(primes[i]);
        period *= primes[i];
        product *= primes[i] - 1;
      }
    }
    for (std::int64_t t = 0; t <= 100; ++t)
      REQUIRE(count_coprime_survivors(ms, t + 1, period) == product);
  }
}

TEST_CASE("goldbach residue decompositions") {
  auto canonical = [](std::int64_t e) {
    for (const auto& d : goldbach_decompositions(e))
      if (d.canonical) return d;
    FAIL("no canonical decomposition for residue ", e);
    return ResidueDecomposition{};
  };

  auto d24 = canonical(24);
  CHECK(d24.left_anchor == 11);
  CHECK(d24.right_anchor == 13);
  CHECK(d24.shift == 0);

  auto d0 = canonical(0);
  CHECK(d0.left_anchor == 7);
  CHECK(d0.right_anchor == 23);
  CHECK(d0.shift == -1);

  auto d18 = canonical(18);
  CHECK(d18.left_anchor == 7);
  CHECK(d18.right_anchor == 11);
  CHECK(d18.shift == 0);

  CHECK_THROWS_AS(goldbach_decompositions(7), std::invalid_argument);
  CHECK_THROWS_AS(goldbach_decompositions(30), std::invalid_argument);
  CHECK_THROWS_AS(goldbach_decompositions(-2), std::invalid_argument);

  for (std::int64_t e = 0; e < 30; e += 2) {
    auto decs = goldbach_decompositions(e);
    CHECK(!decs.empty());
    for (const auto& d : decs) {
      CHECK(((d.left_anchor + d.right_anchor + 30 * d.shift - e) % 30 + 30) % 30 == 0);
      CHECK(gcd64(d.left_anchor, 30) == 1);
      CHECK(gcd64(d.right_anchor, 30) == 1);
      CHECK((d.shift == 0 || d.shift == -1));
    }
  }
}
