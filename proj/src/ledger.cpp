#include "primewheel/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "primewheel/counter.hpp"
#include "primewheel/estimator.hpp"
#include "primewheel/sieve.hpp"
#include "primewheel/wheel.hpp"

namespace primewheel {

std::vector<LedgerClaim> parse_ledger(const nlohmann::json& doc) {
  std::vector<LedgerClaim> claims;
  for (const auto& j : doc.at("claims")) {
    LedgerClaim c;
    c.id = j.at("id").get<std::string>();
    c.kind = j.at("kind").get<std::string>();
    c.inputs = j.at("inputs");
    c.expected = j.at("expected").get<double>();
    if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
    c.curated = j.at("curated").get<bool>();
    c.citation_section = j.at("citation").at("section").get<std::string>();
    c.citation_quote = j.at("citation").at("quote").get<std::string>();
    claims.push_back(std::move(c));
  }
  return claims;
}

std::vector<LedgerClaim> load_embedded_ledger() {
  return parse_ledger(nlohmann::json::parse(embedded_ledger_json()));
}

namespace {

XRange xrange_of(const nlohmann::json& in) {
  return {in.at("x_lo").get<std::int64_t>(), in.at("x_hi").get<std::int64_t>()};
}

double recompute_inequality(const nlohmann::json& in) {
  const std::string check = in.at("check").get<std::string>();
  if (check == "effective_range") {
    return effective_range_check(in.at("k").get<int>(),
                                 in.at("modulus").get<std::int64_t>())
               ? 1.0
               : 0.0;
  }
  if (check == "partition_count_exceeds") {
    auto res = goldbach_partitions(in.at("m").get<std::uint64_t>());
    return res.pairs.size() > in.at("threshold").get<std::size_t>() ? 1.0 : 0.0;
  }
  if (check == "partition_contains") {
    auto res = goldbach_partitions(in.at("m").get<std::uint64_t>());
    std::pair<std::uint64_t, std::uint64_t> want{in.at("p").get<std::uint64_t>(),
                                                 in.at("q").get<std::uint64_t>()};
    return std::find(res.pairs.begin(), res.pairs.end(), want) != res.pairs.end() ? 1.0
                                                                                  : 0.0;
  }
  if (check == "estimate_below_count") {
    std::int64_t m = in.at("modulus").get<std::int64_t>();
    int d = in.at("deficit").get<int>();
    int k = in.at("k").get<int>();
    double est = estimate_C({m, d, k}).value;
    ConstellationPattern pat{m, in.at("anchors").get<std::vector<std::int64_t>>()};
    return est < static_cast<double>(count_constellations(pat, block_range(m, k))) ? 1.0
                                                                                   : 0.0;
  }
  if (check == "estimate_below_goldbach") {
    std::int64_t m = in.at("modulus").get<std::int64_t>();
    int d = in.at("deficit").get<int>();
    int k = in.at("k").get<int>();
    double est = estimate_C({m, d, k}).value;
    XRange r = block_range(m, k);
    GoldbachQuery q{in.at("left").get<std::int64_t>(), in.at("right").get<std::int64_t>(),
                    r.hi - 1, r};
    return est < static_cast<double>(count_goldbach_pairs(q)) ? 1.0 : 0.0;
  }
  throw std::invalid_argument("unknown inequality check: " + check);
}

}  // namespace

double recompute_claim(const LedgerClaim& claim) {
  const auto& in = claim.inputs;
  if (claim.kind == "prime_count") {
    if (in.contains("anchor")) {
      Progression p{in.at("anchor").get<std::int64_t>(),
                    in.at("modulus").get<std::int64_t>()};
      return static_cast<double>(count_primes(p, xrange_of(in)));
    }
    // Plain interval [from, to], inclusive.
    std::int64_t count = 0;
    for (std::int64_t n = in.at("from").get<std::int64_t>();
         n <= in.at("to").get<std::int64_t>(); ++n)
      if (is_prime(static_cast<std::uint64_t>(n))) ++count;
    return static_cast<double>(count);
  }
  if (claim.kind == "survivor_count") {
    ModulusSet ms{in.at("moduli").get<std::vector<std::int64_t>>()};
    return static_cast<double>(count_coprime_survivors(
        ms, in.at("start").get<std::int64_t>(), in.at("length").get<std::int64_t>()));
  }
  if (claim.kind == "constellation_count") {
    ConstellationPattern pat{in.at("modulus").get<std::int64_t>(),
                             in.at("anchors").get<std::vector<std::int64_t>>()};
    return static_cast<double>(count_constellations(pat, xrange_of(in)));
  }
  if (claim.kind == "goldbach_count") {
    GoldbachQuery q{in.at("left").get<std::int64_t>(), in.at("right").get<std::int64_t>(),
                    in.at("a").get<std::int64_t>(), xrange_of(in)};
    return static_cast<double>(count_goldbach_pairs(q));
  }
  if (claim.kind == "estimate") {
    return estimate_C({in.at("modulus").get<std::int64_t>(), in.at("deficit").get<int>(),
                       in.at("k").get<int>()})
        .value;
  }
  if (claim.kind == "ratio") {
    // The printed decimal is the block product without the leading factor 2.
    return estimate_ratio(in.at("modulus").get<std::int64_t>(),
                          in.at("deficit").get<int>(), in.at("k").get<int>()) /
           2.0;
  }
  if (claim.kind == "factorization") {
    std::uint64_t n = in.at("n").get<std::uint64_t>();
    if (in.contains("factors")) {
      auto stated = in.at("factors").get<std::vector<std::uint64_t>>();
      if (factorize(n) != stated) return -1.0;  // full factorization mismatch
    }
    return static_cast<double>(smallest_prime_factor(n));
  }
  if (claim.kind == "inequality") return recompute_inequality(in);
  throw std::invalid_argument("unknown claim kind: " + claim.kind);
}

VerifyReport run_verify(const std::vector<LedgerClaim>& claims, const std::string& filter,
                        unsigned threads) {
  std::vector<const LedgerClaim*> selected;
  for (const auto& c : claims) {
    if (filter.empty() || c.kind == filter || c.id.find(filter) != std::string::npos)
      selected.push_back(&c);
  }
  if (selected.empty() && !filter.empty())
    throw std::invalid_argument("verify: filter matches no claim: " + filter);

  VerifyReport report;
  report.entries.resize(selected.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const LedgerClaim& c = *selected[i];
      double got = recompute_claim(c);
      bool pass = c.tolerance ? std::fabs(got - c.expected) <= *c.tolerance
                              : got == c.expected;
      report.entries[i] = {c.id,    c.kind, c.inputs,  c.expected,
                           got,     pass,   c.curated, c.citation_section + ": " + c.citation_quote};
    }
  };
  unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(selected.size())));
  if (workers == 1) {
    work(0, selected.size());
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = selected.size() * w / workers;
      std::size_t hi = selected.size() * (w + 1) / workers;
      pool.emplace_back(work, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  for (const auto& e : report.entries) {
    if (e.pass) {
      ++report.summary.passed;
    } else {
      ++report.summary.failed;
      if (e.curated) ++report.summary.curated_failed;
    }
  }
  return report;
}

void to_json(nlohmann::json& j, const VerifyEntry& e) {
  j = nlohmann::json{{"id", e.id},
                     {"kind", e.kind},
                     {"inputs", e.inputs},
                     {"expected", e.expected},
                     {"recomputed", e.recomputed},
                     {"status", e.pass ? "PASS" : "FAIL"},
                     {"curated", e.curated},
                     {"citation", e.citation}};
}

void from_json(const nlohmann::json& j, VerifyEntry& e) {
  e.id = j.at("id").get<std::string>();
  e.kind = j.at("kind").get<std::string>();
  e.inputs = j.at("inputs");
  e.expected = j.at("expected").get<double>();
  e.recomputed = j.at("recomputed").get<double>();
  e.pass = j.at("status").get<std::string>() == "PASS";
  e.curated = j.at("curated").get<bool>();
  e.citation = j.at("citation").get<std::string>();
}

void to_json(nlohmann::json& j, const VerifyReport& r) {
  j = nlohmann::json{{"version", 1},
                     {"entries", r.entries},
                     {"summary",
                      {{"passed", r.summary.passed},
                       {"failed", r.summary.failed},
                       {"curated_failed", r.summary.curated_failed}}}};
}

void from_json(const nlohmann::json& j, VerifyReport& r) {
  r.entries = j.at("entries").get<std::vector<VerifyEntry>>();
  r.summary.passed = j.at("summary").at("passed").get<std::int64_t>();
  r.summary.failed = j.at("summary").at("failed").get<std::int64_t>();
  r.summary.curated_failed = j.at("summary").at("curated_failed").get<std::int64_t>();
}

std::string report_csv(const VerifyReport& r) {
  std::ostringstream os;
  os << "id,kind,expected,recomputed,status\n";
  for (const auto& e : r.entries)
    os << e.id << ',' << e.kind << ',' << e.expected << ',' << e.recomputed << ','
       << (e.pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& e : r.entries) {
    os << (e.pass ? "PASS" : "FAIL") << "  " << e.id << "  expected=" << e.expected
       << " recomputed=" << e.recomputed;
    if (!e.pass) os << "  [" << e.citation << "]";
    os << '\n';
  }
  os << "summary: " << r.summary.passed << " passed, " << r.summary.failed
     << " failed (" << r.summary.curated_failed << " curated)\n";
  return os.str();
}

}  // namespace primewheel
