#include "primewheel/counter.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "primewheel/wheel.hpp"

namespace primewheel {

namespace {

void validate_range(XRange r) {
  if (r.lo < 0 || r.hi < r.lo) throw std::invalid_argument("x-range: need 0 <= lo <= hi");
}

// Splits [r.lo, r.hi) into chunks, counts each on its own thread, sums.
template <typename CountFn>
std::int64_t parallel_count(XRange r, unsigned threads, CountFn&& count_chunk) {
  validate_range(r);
  if (r.hi == r.lo) return 0;
  if (threads <= 1) return count_chunk(r.lo, r.hi);

  std::int64_t n = r.hi - r.lo;
  unsigned workers = static_cast<unsigned>(std::min<std::int64_t>(threads, n));
  std::vector<std::int64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    std::int64_t lo = r.lo + n * w / workers;
    std::int64_t hi = r.lo + n * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] { partial[w] = count_chunk(lo, hi); });
  }
  for (auto& t : pool) t.join();
  return std::accumulate(partial.begin(), partial.end(), std::int64_t{0});
}

}  // namespace

XRange block_range(std::int64_t modulus, int k) {
  wheel_for(modulus);
  if (k < 0 || k > 50) throw std::invalid_argument("block_range: k out of range");
  return {modulus * ((std::int64_t{1} << k) - 1),
          modulus * ((std::int64_t{1} << (k + 1)) - 1)};
}

ConstellationPattern::ConstellationPattern(std::int64_t modulus_,
                                           std::vector<std::int64_t> anchors_)
    : modulus(modulus_), anchors(std::move(anchors_)) {
  wheel_for(modulus_);
  if (anchors.empty()) throw std::invalid_argument("ConstellationPattern: no anchors");
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (gcd64(anchors[i], modulus) != 1)
      throw std::invalid_argument("ConstellationPattern: anchor not coprime to modulus");
    for (std::size_t j = i + 1; j < anchors.size(); ++j)
      if (anchors[i] == anchors[j])
        throw std::invalid_argument("ConstellationPattern: duplicate anchor");
  }
}

std::int64_t count_primes(const Progression& p, XRange r, unsigned threads) {
  return parallel_count(r, threads, [&](std::int64_t lo, std::int64_t hi) {
    std::int64_t c = 0;
    for (std::int64_t x = lo; x < hi; ++x)
      if (is_prime(static_cast<std::uint64_t>(p.value(x)))) ++c;
    return c;
  });
}

std::int64_t count_constellations(const ConstellationPattern& pat, XRange r,
                                  unsigned threads) {
  return parallel_count(r, threads, [&](std::int64_t lo, std::int64_t hi) {
    std::int64_t c = 0;
    for (std::int64_t x = lo; x < hi; ++x) {
      bool all = true;
      for (std::int64_t a : pat.anchors)
        all = all && is_prime(static_cast<std::uint64_t>(a + pat.modulus * x));
      if (all) ++c;
    }
    return c;
  });
}

std::vector<std::int64_t> constellation_hits(const ConstellationPattern& pat, XRange r) {
  validate_range(r);
  std::vector<std::int64_t> hits;
  for (std::int64_t x = r.lo; x < r.hi; ++x) {
    bool all = true;
    for (std::int64_t a : pat.anchors)
      all = all && is_prime(static_cast<std::uint64_t>(a + pat.modulus * x));
    if (all) hits.push_back(x);
  }
  return hits;
}

namespace {

void validate_goldbach(const GoldbachQuery& q) {
  validate_range(q.x_range);
  if (gcd64(q.left_anchor, 30) != 1 || gcd64(q.right_anchor, 30) != 1)
    throw std::invalid_argument("GoldbachQuery: anchors must be coprime to 30");
  if (q.x_range.hi > 0 && q.a < q.x_range.hi - 1)
    throw std::invalid_argument("GoldbachQuery: right index a - x would go negative");
}

bool goldbach_hit(const GoldbachQuery& q, std::int64_t x) {
  return is_prime(static_cast<std::uint64_t>(q.left_anchor + 30 * x)) &&
         is_prime(static_cast<std::uint64_t>(q.right_anchor + 30 * (q.a - x)));
}

}  // namespace

std::int64_t count_goldbach_pairs(const GoldbachQuery& q, unsigned threads) {
  validate_goldbach(q);
  return parallel_count(q.x_range, threads, [&](std::int64_t lo, std::int64_t hi) {
    std::int64_t c = 0;
    for (std::int64_t x = lo; x < hi; ++x)
      if (goldbach_hit(q, x)) ++c;
    return c;
  });
}

std::vector<std::int64_t> goldbach_pair_hits(const GoldbachQuery& q) {
  validate_goldbach(q);
  std::vector<std::int64_t> hits;
  for (std::int64_t x = q.x_range.lo; x < q.x_range.hi; ++x)
    if (goldbach_hit(q, x)) hits.push_back(x);
  return hits;
}

PartitionResult goldbach_partitions(std::uint64_t m) {
  if (m <= 6 || m % 2 != 0)
    throw std::invalid_argument("goldbach_partitions: m must be even and > 6");
  PartitionResult res{m, {}};
  for (std::uint64_t p = 2; p <= m / 2; p = (p == 2 ? 3 : p + 2)) {
    if (is_prime(p) && is_prime(m - p)) res.pairs.emplace_back(p, m - p);
  }
  return res;
}

}  // namespace primewheel
