// Command-line front end: progression sieving, constellation and Goldbach
// counting, block-product estimates, lemma spot checks and the claim
// verification ledger.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "primewheel/counter.hpp"
#include "primewheel/estimator.hpp"
#include "primewheel/ledger.hpp"
#include "primewheel/sieve.hpp"
#include "primewheel/wheel.hpp"

namespace pw = primewheel;
using nlohmann::json;

namespace {

struct GlobalOpts {
  std::string format = "text";
  std::string out;
  bool witnesses = false;
  unsigned threads = 1;
};

int emit(const GlobalOpts& g, const json& doc, const std::string& text,
         const std::string& csv = "") {
  std::string payload;
  if (g.format == "json") {
    payload = doc.dump(2) + "\n";
  } else if (g.format == "csv") {
    payload = csv.empty() ? text : csv;
  } else {
    payload = text;
  }
  if (g.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(g.out);
    if (!f) {
      std::cerr << "cannot open output file: " << g.out << "\n";
      return 1;
    }
    f << payload;
  }
  return 0;
}

std::string join64(const std::vector<std::int64_t>& v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

int run_primes(const GlobalOpts& g, std::int64_t anchor, std::int64_t modulus,
               std::int64_t lo, std::int64_t hi) {
  pw::Progression p{anchor, modulus};
  std::int64_t count = pw::count_primes(p, {lo, hi}, g.threads);
  json doc{{"anchor", anchor}, {"modulus", modulus}, {"x_lo", lo}, {"x_hi", hi},
           {"count", count}};
  std::string text = "primes in {" + std::to_string(anchor) + "+" +
                     std::to_string(modulus) + "*x | " + std::to_string(lo) +
                     " <= x < " + std::to_string(hi) + "}: " + std::to_string(count) +
                     "\n";
  if (g.witnesses) {
    std::vector<std::int64_t> xs;
    for (std::int64_t x = lo; x < hi; ++x)
      if (pw::is_prime(static_cast<std::uint64_t>(p.value(x)))) xs.push_back(p.value(x));
    doc["witnesses"] = xs;
    text += "  " + join64(xs) + "\n";
  }
  return emit(g, doc, text);
}

int run_constellation(const GlobalOpts& g, std::int64_t modulus,
                      std::vector<std::int64_t> anchors, std::int64_t lo,
                      std::int64_t hi) {
  pw::ConstellationPattern pat{modulus, std::move(anchors)};
  std::int64_t count = pw::count_constellations(pat, {lo, hi}, g.threads);
  json doc{{"modulus", modulus}, {"anchors", pat.anchors}, {"x_lo", lo}, {"x_hi", hi},
           {"count", count}};
  std::string text = "constellation (" + join64(pat.anchors, ',') + ") mod " +
                     std::to_string(modulus) + ", x in [" + std::to_string(lo) + "," +
                     std::to_string(hi) + "): " + std::to_string(count) + "\n";
  if (g.witnesses) {
    auto hits = pw::constellation_hits(pat, {lo, hi});
    doc["witnesses"] = hits;
    text += "  x: " + join64(hits) + "\n";
  }
  return emit(g, doc, text);
}

int run_goldbach_pairs(const GlobalOpts& g, std::int64_t l, std::int64_t r,
                       std::int64_t a) {
  pw::GoldbachQuery q{l, r, a, {0, a + 1}};
  std::int64_t count = pw::count_goldbach_pairs(q, g.threads);
  json doc{{"left", l},    {"right", r},      {"a", a},
           {"x_lo", 0},    {"x_hi", a + 1},   {"sum", l + r + 30 * a},
           {"count", count}};
  std::string text = "prime pairs (" + std::to_string(l) + "+30x, " + std::to_string(r) +
                     "+30(" + std::to_string(a) + "-x)), sum " +
                     std::to_string(l + r + 30 * a) + ": " + std::to_string(count) + "\n";
  if (g.witnesses) {
    auto hits = pw::goldbach_pair_hits(q);
    json w = json::array();
    for (std::int64_t x : hits) w.push_back({l + 30 * x, r + 30 * (a - x)});
    doc["witnesses"] = w;
    for (std::int64_t x : hits)
      text += "  " + std::to_string(l + 30 * x) + " + " +
              std::to_string(r + 30 * (a - x)) + "\n";
  }
  return emit(g, doc, text);
}

int run_goldbach_partitions(const GlobalOpts& g, std::uint64_t m) {
  auto res = pw::goldbach_partitions(m);
  json doc{{"m", m}, {"count", res.pairs.size()}};
  std::string text = "goldbach partitions of " + std::to_string(m) + ": " +
                     std::to_string(res.pairs.size()) + "\n";
  if (g.witnesses) {
    json w = json::array();
    for (auto [p, q] : res.pairs) w.push_back({p, q});
    doc["witnesses"] = w;
    for (auto [p, q] : res.pairs)
      text += "  " + std::to_string(p) + " + " + std::to_string(q) + "\n";
  }
  return emit(g, doc, text);
}

int run_estimate(const GlobalOpts& g, std::int64_t modulus, int deficit, int k) {
  pw::EstimateResult r = pw::estimate_C({modulus, deficit, k});
  json doc = r;
  std::string text = "C(" + std::to_string(r.length_factor) + ") with deficit " +
                     std::to_string(deficit) + ": " + std::to_string(r.value) + "\n";
  for (const auto& b : r.blocks)
    text += "  block " + std::to_string(b.block) + ": anchors " +
            std::to_string(b.terms.front().anchor) + ".." +
            std::to_string(b.terms.back().anchor) + ", partial product " +
            std::to_string(b.partial_product) + "\n";
  return emit(g, doc, text);
}

int run_table(const GlobalOpts& g, std::int64_t anchor, std::int64_t modulus,
              std::int64_t lo, std::int64_t hi) {
  pw::SegmentResult seg = pw::sieve_segment(pw::Progression{anchor, modulus}, lo, hi);
  json rows = json::array();
  for (std::size_t i = 0; i < seg.prime.size(); ++i) {
    std::int64_t x = seg.x_lo + static_cast<std::int64_t>(i);
    json row{{"x", x}, {"value", seg.progression.value(x)}, {"prime", (bool)seg.prime[i]}};
    if (!seg.prime[i]) {
      row["smallest_factor"] = seg.smallest_factor[i];
      row["cofactor"] =
          static_cast<std::uint64_t>(seg.progression.value(x)) / seg.smallest_factor[i];
    }
    rows.push_back(row);
  }
  json doc{{"anchor", anchor}, {"modulus", modulus}, {"x_lo", lo}, {"x_hi", hi},
           {"rows", rows}};
  return emit(g, doc, pw::factor_table_text(seg), pw::factor_table_csv(seg));
}

int run_verify(const GlobalOpts& g, const std::string& filter) {
  auto claims = pw::load_embedded_ledger();
  pw::VerifyReport report = pw::run_verify(claims, filter, g.threads);
  json doc = report;
  int rc = emit(g, doc, pw::report_text(report), pw::report_csv(report));
  if (rc != 0) return rc;
  return report.summary.curated_failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wheel-residue prime distribution toolkit"};
  app.require_subcommand(1);
  // let --format/--out/--witnesses/--threads appear after the subcommand
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write output to PATH instead of stdout");
  app.add_flag("--witnesses", g.witnesses, "include witness lists in output");
  app.add_option("--threads", g.threads, "worker threads for counting")
      ->check(CLI::PositiveNumber);

  std::int64_t anchor = 0, modulus = 30, lo = 0, hi = 0;
  std::int64_t a1 = 0, a2 = 0, a3 = 0;

  auto* primes = app.add_subcommand("primes", "count primes in a progression segment");
  primes->add_option("anchor", anchor)->required();
  primes->add_option("modulus", modulus)->required();
  primes->add_option("lo", lo)->required();
  primes->add_option("hi", hi)->required();

  auto* twins = app.add_subcommand("twins", "count twin constellations");
  twins->add_option("a1", a1)->required();
  twins->add_option("a2", a2)->required();
  twins->add_option("modulus", modulus)->required();
  twins->add_option("lo", lo)->required();
  twins->add_option("hi", hi)->required();

  std::int64_t triple_modulus = 210;
  auto* triples = app.add_subcommand("triples", "count triple constellations");
  triples->add_option("a1", a1)->required();
  triples->add_option("a2", a2)->required();
  triples->add_option("a3", a3)->required();
  triples->add_option("lo", lo)->required();
  triples->add_option("hi", hi)->required();
  triples->add_option("--modulus", triple_modulus, "wheel modulus")
      ->capture_default_str();

  std::vector<std::int64_t> pair_args;
  std::uint64_t partition_m = 0;
  auto* goldbach = app.add_subcommand("goldbach", "prime pairs with a fixed sum");
  auto* pairs_opt = goldbach->add_option("--pairs", pair_args,
                                         "left right a: count pairs (left+30x, "
                                         "right+30(a-x)) over 0 <= x <= a")
                        ->expected(3);
  auto* partitions_opt =
      goldbach->add_option("--partitions", partition_m, "all prime pairs summing to m");
  pairs_opt->excludes(partitions_opt);

  std::int64_t est_modulus = 30;
  int deficit = 0, k = 0;
  auto* estimate = app.add_subcommand("estimate", "block-structured product C(m*2^k)");
  estimate->add_option("modulus", est_modulus)->required();
  estimate->add_option("deficit", deficit)->required();
  estimate->add_option("k", k)->required();

  auto* table = app.add_subcommand("table", "smallest-factor table of a progression");
  table->add_option("anchor", anchor)->required();
  table->add_option("modulus", modulus)->required();
  table->add_option("lo", lo)->required();
  table->add_option("hi", hi)->required();

  std::vector<std::int64_t> lemma3_args, lemma2_moduli, lemma1_args;
  std::int64_t lemma_modulus = 30, lemma2_start = 1;
  auto* lemma = app.add_subcommand("lemma-check", "spot-check the three lemmas");
  lemma->add_option("--lemma3", lemma3_args, "x e c d: product inequality")->expected(4);
  lemma->add_option("--lemma2", lemma2_moduli, "pairwise-coprime moduli")
      ->expected(-1);
  lemma->add_option("--start", lemma2_start, "window start for --lemma2")
      ->capture_default_str();
  lemma->add_option("--lemma1", lemma1_args,
                    "set_lo set_hi q c p: affine map keeps even distribution")
      ->expected(5);
  lemma->add_option("--modulus", lemma_modulus, "modulus for --lemma3")
      ->capture_default_str();

  std::string filter;
  auto* verify = app.add_subcommand("verify", "recompute the embedded claim ledger");
  verify->add_option("--filter", filter, "restrict to matching claim ids or kind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (primes->parsed()) return run_primes(g, anchor, modulus, lo, hi);
    if (twins->parsed()) return run_constellation(g, modulus, {a1, a2}, lo, hi);
    if (triples->parsed())
      return run_constellation(g, triple_modulus, {a1, a2, a3}, lo, hi);
    if (goldbach->parsed()) {
      if (!pair_args.empty())
        return run_goldbach_pairs(g, pair_args[0], pair_args[1], pair_args[2]);
      if (partitions_opt->count() > 0) return run_goldbach_partitions(g, partition_m);
      std::cerr << "goldbach: need --pairs or --partitions\n";
      return 2;
    }
    if (estimate->parsed()) return run_estimate(g, est_modulus, deficit, k);
    if (table->parsed()) return run_table(g, anchor, modulus, lo, hi);
    if (lemma->parsed()) {
      json doc;
      std::string text;
      if (lemma3_args.size() == 4) {
        bool ok = pw::lemma3_check(lemma3_args[0], lemma3_args[1], lemma3_args[2],
                                   lemma3_args[3], lemma_modulus);
        doc = json{{"lemma", 3}, {"holds", ok}};
        text = std::string("lemma 3: ") + (ok ? "holds" : "violated") + "\n";
      } else if (!lemma2_moduli.empty()) {
        pw::ModulusSet ms{lemma2_moduli};
        std::int64_t len = pw::period_length(ms);
        std::int64_t got = pw::count_coprime_survivors(ms, lemma2_start, len);
        std::int64_t want = 1;
        for (std::int64_t m : lemma2_moduli) want *= m - 1;
        doc = json{{"lemma", 2}, {"survivors", got}, {"product", want},
                   {"holds", got == want}};
        text = "lemma 2: survivors " + std::to_string(got) + ", product " +
               std::to_string(want) + (got == want ? " (holds)" : " (violated)") + "\n";
      } else if (lemma1_args.size() == 5) {
        std::vector<std::int64_t> set;
        for (std::int64_t v = lemma1_args[0]; v <= lemma1_args[1]; ++v) set.push_back(v);
        bool ok = pw::affine_map_preserves_distribution(set, lemma1_args[2],
                                                        lemma1_args[3], lemma1_args[4]);
        doc = json{{"lemma", 1}, {"holds", ok}};
        text = std::string("lemma 1: ") + (ok ? "holds" : "violated") + "\n";
      } else {
        std::cerr << "lemma-check: need --lemma1, --lemma2 or --lemma3\n";
        return 2;
      }
      return emit(g, doc, text);
    }
    if (verify->parsed()) return run_verify(g, filter);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
