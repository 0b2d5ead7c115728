#include "primewheel/sieve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "primewheel/wheel.hpp"

namespace primewheel {

Progression::Progression(std::int64_t anchor_, std::int64_t modulus_)
    : anchor(anchor_), modulus(modulus_) {
  wheel_for(modulus_);  // throws on unsupported modulus
  if (anchor_ < 7 || std::gcd(anchor_, modulus_) != 1)
    throw std::invalid_argument("Progression: anchor must be >= 7 and coprime to modulus");
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n, u64 a) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Offsets of residues coprime to 30 within one wheel turn.
constexpr std::array<u64, 8> kWheel30Offsets = {1, 7, 11, 13, 17, 19, 23, 29};

u64 modinv(u64 a, u64 m) {
  // m prime in all call sites
  return powmod(a % m, m - 2, m);
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> primes;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Deterministic for n < 3.3 * 10^24, well past 2^63.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!miller_rabin(n, a)) return false;
  return true;
}

bool trial_division_is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (u64 d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

u64 smallest_prime_factor(u64 n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_factor: n must be >= 2");
  for (u64 p : {2ull, 3ull, 5ull}) {
    if (n % p == 0) return p;
  }
  if (is_prime(n)) return n;
  for (u64 base = 0;; base += 30) {
    for (u64 off : kWheel30Offsets) {
      u64 d = base + off;
      if (d < 7) continue;
      if (d * d > n) return n;  // unreachable for composites, keeps the loop total
      if (n % d == 0) return d;
    }
  }
}

std::vector<u64> factorize(u64 n) {
  std::vector<u64> out;
  while (n > 1) {
    u64 p = smallest_prime_factor(n);
    out.push_back(p);
    n /= p;
  }
  return out;
}

SegmentResult sieve_segment(const Progression& p, std::int64_t lo, std::int64_t hi) {
  if (lo < 0 || hi <= lo)
    throw std::invalid_argument("sieve_segment: need 0 <= lo < hi");
  u128 vmax = u128(p.anchor) + u128(p.modulus) * u128(hi - 1);
  if (vmax >= (u128(1) << 63)) throw std::overflow_error("sieve_segment: values exceed 2^63");

  const std::size_t n = static_cast<std::size_t>(hi - lo);
  SegmentResult seg{p, lo, hi, std::vector<bool>(n, true), std::vector<u64>(n, 0)};

  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(static_cast<u64>(vmax))));
  while (u128(root + 1) * (root + 1) <= vmax) ++root;
  if (root < 2) return seg;

  for (u64 q : primes_up_to(root)) {
    if (p.modulus % static_cast<std::int64_t>(q) == 0) continue;  // never divides values
    // Solve anchor + modulus*x == 0 (mod q).
    u64 a = static_cast<u64>(((p.anchor % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) % static_cast<std::int64_t>(q));
    u64 minv = modinv(static_cast<u64>(p.modulus % static_cast<std::int64_t>(q)), q);
    u64 x0 = mulmod((q - a) % q, minv, q);
    std::int64_t x = static_cast<std::int64_t>(x0);
    if (x < lo) x += ((lo - x + static_cast<std::int64_t>(q) - 1) / static_cast<std::int64_t>(q)) * static_cast<std::int64_t>(q);
    for (; x < hi; x += static_cast<std::int64_t>(q)) {
      u64 v = static_cast<u64>(p.value(x));
      if (v == q) continue;  // the prime q itself
      std::size_t i = static_cast<std::size_t>(x - lo);
      if (seg.smallest_factor[i] == 0) {
        seg.smallest_factor[i] = q;
        seg.prime[i] = false;
      }
    }
  }
  return seg;
}

std::string factor_table_text(const SegmentResult& seg) {
  constexpr std::size_t kCols = 15;
  std::ostringstream os;
  const std::size_t n = seg.prime.size();
  for (std::size_t row = 0; row < n; row += kCols) {
    std::size_t end = std::min(row + kCols, n);
    std::vector<std::string> values, cells;
    std::size_t width = 0;
    for (std::size_t i = row; i < end; ++i) {
      std::int64_t v = seg.progression.value(seg.x_lo + static_cast<std::int64_t>(i));
      values.push_back(std::to_string(v));
      std::string cell;
      if (!seg.prime[i]) {
        u64 f = seg.smallest_factor[i];
        cell = std::to_string(f) + "*" + std::to_string(static_cast<u64>(v) / f);
      }
      cells.push_back(cell);
      width = std::max({width, values.back().size(), cell.size()});
    }
    auto emit = [&](const std::vector<std::string>& items) {
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) os << " | ";
        os << std::string(width - items[i].size(), ' ') << items[i];
      }
      os << '\n';
    };
    emit(values);
    emit(cells);
  }
  return os.str();
}

std::string factor_table_csv(const SegmentResult& seg) {
  std::ostringstream os;
  os << "x,value,smallest_factor,cofactor\n";
  for (std::size_t i = 0; i < seg.prime.size(); ++i) {
    std::int64_t x = seg.x_lo + static_cast<std::int64_t>(i);
    std::int64_t v = seg.progression.value(x);
    os << x << ',' << v << ',';
    if (!seg.prime[i]) {
      u64 f = seg.smallest_factor[i];
      os << f << ',' << static_cast<u64>(v) / f;
    } else {
      os << ',';
    }
    os << '\n';
  }
  return os.str();
}

namespace {

struct HFormTable {
  std::int64_t anchor;
  int first_label;
  std::array<std::pair<std::int64_t, std::int64_t>, 4> pairs;
};

constexpr HFormTable kHForms[] = {
    {11, 1, {{{7, 23}, {13, 17}, {11, 31}, {19, 29}}}},
    {13, 5, {{{7, 19}, {13, 31}, {11, 23}, {17, 29}}}},
    {17, 9, {{{7, 11}, {13, 29}, {17, 31}, {19, 23}}}},
};

// Residue of d mod 30 in the anchor window (1, 31].
std::int64_t anchor_residue(u64 d) {
  std::int64_t r = static_cast<std::int64_t>(d % 30);
  return r == 1 ? 31 : r;
}

}  // namespace

std::string h_form_name(const HFormLabel& h) { return "H" + std::to_string(h.label); }

std::vector<HFormLabel> classify_h_form(u64 v, const Progression& p) {
  if (p.modulus != 30)
    throw std::invalid_argument("classify_h_form: progression must be mod 30");
  std::int64_t anchor = anchor_residue(static_cast<u64>(p.anchor));
  if (static_cast<std::int64_t>(v % 30) != p.anchor % 30)
    throw std::invalid_argument("classify_h_form: value not in progression");
  const HFormTable* table = nullptr;
  for (const auto& t : kHForms)
    if (t.anchor == anchor) table = &t;
  if (table == nullptr)
    throw std::invalid_argument("classify_h_form: no H-form table for anchor " +
                                std::to_string(anchor));
  if (is_prime(v)) throw std::invalid_argument("classify_h_form: value is prime");

  std::vector<HFormLabel> out;
  for (u64 d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    std::int64_t r1 = anchor_residue(d);
    std::int64_t r2 = anchor_residue(v / d);
    if (r1 > r2) std::swap(r1, r2);
    for (int i = 0; i < 4; ++i) {
      auto [a, b] = table->pairs[static_cast<std::size_t>(i)];
      if (a > b) std::swap(a, b);
      if (a == r1 && b == r2) {
        HFormLabel h{table->first_label + i, r1, r2};
        bool seen = false;
        for (const auto& prev : out) seen = seen || prev.label == h.label;
        if (!seen) out.push_back(h);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const HFormLabel& a, const HFormLabel& b) { return a.label < b.label; });
  return out;
}

}  // namespace primewheel
