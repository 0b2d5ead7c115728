#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace primewheel {

// Arithmetic progression anchor + modulus*x over a supported wheel.
struct Progression {
  std::int64_t anchor;
  std::int64_t modulus;

  Progression(std::int64_t anchor_, std::int64_t modulus_);
  std::int64_t value(std::int64_t x) const { return anchor + modulus * x; }
};

// Deterministic primality for n < 2^63 (Miller-Rabin with fixed bases).
bool is_prime(std::uint64_t n);

// Least prime factor of n >= 2; returns n when n is prime.
std::uint64_t smallest_prime_factor(std::uint64_t n);

// Ascending prime factorization with multiplicity.
std::vector<std::uint64_t> factorize(std::uint64_t n);

// Independent oracle path: trial division by 2, 3 and 6k+-1 candidates.
// Kept separate from is_prime so the two can be cross-checked.
bool trial_division_is_prime(std::uint64_t n);

struct SegmentResult {
  Progression progression;
  std::int64_t x_lo;
  std::int64_t x_hi;
  std::vector<bool> prime;                    // per x in [x_lo, x_hi)
  std::vector<std::uint64_t> smallest_factor;  // 0 iff prime
};

// Segmented sieve over the progression for x in [lo, hi). Composites carry
// their least prime factor. Throws std::overflow_error if value(hi-1)
// would not fit below 2^63.
SegmentResult sieve_segment(const Progression& p, std::int64_t lo, std::int64_t hi);

// Paper-style grid: blocks of 15 values, a value row followed by a factor
// row ("7*23" for composites, blank for primes).
std::string factor_table_text(const SegmentResult& seg);

// CSV with header x,value,smallest_factor,cofactor (factor cells empty for
// primes).
std::string factor_table_csv(const SegmentResult& seg);

// Residue-pair shape of a composite progression member mod 30.
// Labels: anchor 11 -> H1..H4, anchor 13 -> H5..H8, anchor 17 -> H9..H12.
struct HFormLabel {
  int label;  // 1..12
  std::int64_t left_residue;
  std::int64_t right_residue;
};

std::string h_form_name(const HFormLabel& h);

// All residue-pair forms taken by the divisor pairs of v. Throws
// std::invalid_argument if v is prime, not in p, or p's anchor is not one
// of 11, 13, 17 mod 30.
std::vector<HFormLabel> classify_h_form(std::uint64_t v, const Progression& p);

}  // namespace primewheel
