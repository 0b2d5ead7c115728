// Acceptance suite: recomputes the headline numbers and property suites
// end to end and prints one PASS/FAIL line per criterion.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "primewheel/counter.hpp"
#include "primewheel/estimator.hpp"
#include "primewheel/ledger.hpp"
#include "primewheel/sieve.hpp"
#include "primewheel/wheel.hpp"

namespace pw = primewheel;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++failures;
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// Criterion 1: exact prime counts, checked against both the production
// primality path and a trial-division oracle.
void criterion_prime_counts() {
  struct Case {
    std::int64_t anchor, modulus, lo, hi, expected;
  };
  const Case cases[] = {{11, 30, 0, 30, 19},
                        {13, 30, 0, 30, 20},
                        {11, 210, 0, 210, 98},
                        {17, 210, 0, 210, 96},
                        {23, 210, 0, 210, 94}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    pw::Progression p{c.anchor, c.modulus};
    std::int64_t got = pw::count_primes(p, {c.lo, c.hi});
    std::int64_t oracle = 0;
    for (std::int64_t x = c.lo; x < c.hi; ++x)
      if (pw::trial_division_is_prime(static_cast<std::uint64_t>(p.value(x)))) ++oracle;
    if (got != c.expected || oracle != c.expected) {
      ok = false;
      detail += std::to_string(c.anchor) + "+" + std::to_string(c.modulus) + "x got " +
                std::to_string(got) + "/" + std::to_string(oracle) + " want " +
                std::to_string(c.expected) + "; ";
    }
  }
  report("criterion 1: prime counts 19/20/98/96/94", ok, detail);
}

void criterion_twin_counts() {
  const std::int64_t expected[] = {13, 15, 24, 29, 71, 113};
  pw::ConstellationPattern twins{30, {11, 13}};
  bool ok = true;
  std::string detail;
  for (int k = 0; k < 6; ++k) {
    std::int64_t got = pw::count_constellations(twins, pw::block_range(30, k));
    if (got != expected[k]) {
      ok = false;
      detail += "k=" + std::to_string(k) + " got " + std::to_string(got) + "; ";
    }
  }
  report("criterion 2: twin counts 13/15/24/29/71/113", ok, detail);
}

void criterion_goldbach_counts() {
  const std::int64_t a_values[] = {29, 89, 209, 449, 929, 1889};
  const std::int64_t expected[] = {11, 16, 29, 44, 73, 136};
  bool ok = true;
  std::string detail;
  for (int k = 0; k < 6; ++k) {
    std::int64_t got =
        pw::count_goldbach_pairs({11, 13, a_values[k], pw::block_range(30, k)});
    if (got != expected[k]) {
      ok = false;
      detail += "a=" + std::to_string(a_values[k]) + " got " + std::to_string(got) + "; ";
    }
  }
  if (pw::count_goldbach_pairs({11, 13, 99, {0, 100}}) != 27) {
    ok = false;
    detail += "(11,13,a=99) != 27; ";
  }
  if (pw::count_goldbach_pairs({7, 17, 99, {0, 100}}) != 32) {
    ok = false;
    detail += "(7,17,a=99) != 32; ";
  }
  report("criterion 3: goldbach pair counts 11/16/29/44/73/136 and 27/32", ok, detail);
}

void criterion_triple_counts() {
  const std::int64_t expected[] = {19, 22, 35};
  pw::ConstellationPattern triple{210, {11, 17, 23}};
  bool ok = true;
  std::string detail;
  for (int k = 0; k < 3; ++k) {
    std::int64_t got = pw::count_constellations(triple, pw::block_range(210, k));
    if (got != expected[k]) {
      ok = false;
      detail += "k=" + std::to_string(k) + " got " + std::to_string(got) + "; ";
    }
  }
  report("criterion 4: triple counts 19/22/35", ok, detail);
}

void criterion_estimates() {
  struct Case {
    std::int64_t modulus;
    int deficit, k;
    double expected;
  };
  const Case cases[] = {{30, 1, 0, 17.20},  {30, 2, 0, 9.31},   {30, 2, 1, 10.72},
                        {210, 3, 0, 17.46}, {210, 3, 1, 17.66}, {210, 3, 2, 20.96},
                        {210, 1, 0, 95.00}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    double got = pw::estimate_C({c.modulus, c.deficit, c.k}).value;
    if (!close(got, c.expected, 0.01)) {
      ok = false;
      detail += "C(" + std::to_string(c.modulus << c.k) + ") got " + std::to_string(got) +
                " want " + std::to_string(c.expected) + "; ";
    }
  }
  if (!close(pw::estimate_ratio(30, 2, 1) / 2.0, 0.575, 0.0005)) {
    ok = false;
    detail += "ratio 0.575 off; ";
  }
  if (!close(pw::estimate_ratio(210, 3, 1) / 2.0, 0.506, 0.0005)) {
    ok = false;
    detail += "ratio 0.506 off; ";
  }
  report("criterion 5: estimates and ratio products", ok, detail);
}

void criterion_factorizations() {
  struct Case {
    std::uint64_t n;
    std::vector<std::uint64_t> factors;
  };
  const Case cases[] = {{1001, {7, 11, 13}}, {1421, {7, 7, 29}},  {581, {7, 83}},
                        {583, {11, 53}},     {341, {11, 31}},     {553, {7, 79}},
                        {4841, {47, 103}},   {4847, {37, 131}},   {4853, {23, 211}}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    if (pw::factorize(c.n) != c.factors ||
        pw::smallest_prime_factor(c.n) != c.factors.front()) {
      ok = false;
      detail += std::to_string(c.n) + " mismatch; ";
    }
  }
  report("criterion 6: factorization fixtures", ok, detail);
}

void criterion_lemma2_exhaustive() {
  const std::vector<std::int64_t> primes{2, 3, 5, 7, 11};
  bool ok = true;
  for (unsigned mask = 1; mask < (1u << primes.size()) && ok; ++mask) {
    pw::ModulusSet ms;
    std::int64_t period = 1, product = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (1u << i)) {
        ms.moduli.push_back(primes[i]);
        period *= primes[i];
        product *= primes[i] - 1;
      }
    }
    for (std::int64_t t = 0; t <= 100 && ok; ++t)
      ok = pw::count_coprime_survivors(ms, t + 1, period) == product;
  }
  report("criterion 7a: survivor counts over all coprime subsets of {2,3,5,7,11}", ok);
}

void criterion_lemma3_random() {
  std::mt19937_64 rng(99);
  bool ok = true;
  for (std::int64_t m : {std::int64_t{30}, std::int64_t{210}}) {
    for (int i = 0; i < 100000 && ok; ++i) {
      std::int64_t x = std::uniform_int_distribution<std::int64_t>(1, 100000)(rng);
      std::int64_t e = std::uniform_int_distribution<std::int64_t>(0, 100000)(rng);
      std::int64_t c = std::uniform_int_distribution<std::int64_t>(1, m + 1)(rng);
      std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, m * x - 1)(rng);
      ok = pw::lemma3_check(x, e, c, d, m);
    }
  }
  report("criterion 7b: product inequality on 10^5 random tuples per modulus", ok);
}

void criterion_sieve_vs_trial_division() {
  const std::int64_t limit = 10000000;
  bool ok = true;
  std::string detail;
  for (std::int64_t anchor : pw::coprime_anchors(30)) {
    pw::Progression p{anchor, 30};
    std::int64_t x_max = (limit - anchor) / 30 + 1;
    auto seg = pw::sieve_segment(p, 0, x_max);
    for (std::int64_t x = 0; x < x_max && ok; ++x) {
      std::uint64_t v = static_cast<std::uint64_t>(p.value(x));
      bool sieved = seg.prime[static_cast<std::size_t>(x)];
      if (sieved != pw::trial_division_is_prime(v)) {
        ok = false;
        detail = "mismatch at " + std::to_string(v);
      }
      if (!sieved) {
        std::uint64_t f = seg.smallest_factor[static_cast<std::size_t>(x)];
        if (v % f != 0) {
          ok = false;
          detail = "non-divisor factor at " + std::to_string(v);
        }
        // least-factor check against raw trial division, desk-scale values
        if (v <= 310000) {
          for (std::uint64_t d = 2; d < f && ok; ++d)
            if (v % d == 0) {
              ok = false;
              detail = "non-minimal factor at " + std::to_string(v);
            }
        }
      }
    }
    if (!ok) break;
  }
  report("criterion 7c: sieve matches trial division below 10^7", ok, detail);
}

void criterion_monotone_ratios() {
  bool ok = true;
  for (std::int64_t m : {std::int64_t{30}, std::int64_t{210}})
    for (int d = 1; d <= 3; ++d)
      for (int k = 1; k < 10 && ok; ++k)
        ok = pw::estimate_ratio(m, d, k + 1) > pw::estimate_ratio(m, d, k);
  report("criterion 7d: ratios strictly increase for k in [1,10], d in {1,2,3}", ok);
}

void criterion_thread_invariance() {
  pw::ConstellationPattern twins{30, {11, 13}};
  pw::ConstellationPattern triple{210, {11, 17, 23}};
  bool ok = true;
  for (unsigned t : {2u, 5u, 13u}) {
    ok = ok &&
         pw::count_constellations(twins, {0, 1890}, t) ==
             pw::count_constellations(twins, {0, 1890}, 1) &&
         pw::count_constellations(triple, {0, 1470}, t) ==
             pw::count_constellations(triple, {0, 1470}, 1) &&
         pw::count_primes(pw::Progression{11, 210}, {0, 210}, t) == 98 &&
         pw::count_goldbach_pairs({11, 13, 1889, {930, 1890}}, t) == 136;
  }
  auto claims = pw::load_embedded_ledger();
  nlohmann::json serial = pw::run_verify(claims, "", 1);
  nlohmann::json fanned = pw::run_verify(claims, "", 6);
  ok = ok && serial == fanned;
  report("criterion 7e: thread count never changes counts or reports", ok);
}

// Criterion 8: the infinitude claims are represented only by finite-range
// ledger observations (estimate below actual, per block) plus the monotone
// ratio property; here we check the observations are present and recomputed.
void criterion_ledger_observations() {
  auto claims = pw::load_embedded_ledger();
  bool ok = true;
  std::string detail;
  try {
    auto report_obs = pw::run_verify(claims, "lower-bound-");
    std::int64_t twins = 0, goldbach = 0, triples = 0;
    for (const auto& e : report_obs.entries) {
      if (e.id.find("twins") != std::string::npos) ++twins;
      if (e.id.find("goldbach") != std::string::npos) ++goldbach;
      if (e.id.find("triples") != std::string::npos) ++triples;
      if (!e.pass) detail += e.id + " FAIL; ";
    }
    ok = twins == 6 && goldbach == 6 && triples == 3;
    if (!ok) detail += "coverage incomplete";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report("criterion 8: per-block estimate-vs-count observations recorded", ok, detail);
}

}  // namespace

int main() {
  criterion_prime_counts();
  criterion_twin_counts();
  criterion_goldbach_counts();
  criterion_triple_counts();
  criterion_estimates();
  criterion_factorizations();
  criterion_lemma2_exhaustive();
  criterion_lemma3_random();
  criterion_sieve_vs_trial_division();
  criterion_monotone_ratios();
  criterion_thread_invariance();
  criterion_ledger_observations();
  std::printf("%d criterion check(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
