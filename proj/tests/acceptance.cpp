// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "kindex/kindex.hpp"
#include "support/oracle.hpp"
#include "support/random_corpus.hpp"

using namespace kindex;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;  // 0 = no runtime bound
  std::function<Outcome()> check;
};

std::vector<PaperRecord> records_of(const Corpus& corpus) { return {corpus.papers().begin(), corpus.papers().end()}; }

SynthConfig random_config(std::mt19937_64& rng, int max_papers) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto real = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  SynthConfig c;
  c.papers = uniform(1, max_papers);
  c.authors = uniform(1, 60);
  c.years = uniform(1, 40);
  c.attachment_exponent = real(0.0, 1.5);
  c.references_per_paper = real(0.0, 12.0);
  c.self_citation_rate = real(0.0, 0.5);
  c.max_authors_per_paper = uniform(1, 5);
  c.repeat_citation_rate = real(0.0, 0.3);
  c.review_rate = real(0.0, 0.2);
  c.seed = rng();
  return c;
}

std::vector<PanelRow> load_panel() {
  std::ifstream in(KINDEX_PANEL_FIXTURE);
  if (!in) throw std::runtime_error("cannot open " KINDEX_PANEL_FIXTURE);
  return parse_panel(in);
}

const PanelRow& row_named(const std::vector<PanelRow>& rows, const std::string& name) {
  for (const auto& r : rows) {
    if (r.name == name) return r;
  }
  throw std::runtime_error("fixture has no row " + name);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Outcome frontier_oracle() {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<std::int64_t> counts(std::uniform_int_distribution<std::size_t>(0, 200)(rng));
    for (auto& c : counts) c = std::uniform_int_distribution<std::int64_t>(0, 500)(rng);
    if (hirsch_frontier(counts) != oracle::frontier(counts)) {
      return {false, fmt::format("mismatch on list {} of length {}", trial, counts.size())};
    }
  }
  return {true, "10000 lists"};
}

Outcome network_oracle() {
  std::mt19937_64 rng(7001);
  std::size_t reports = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto config = random_config(rng, 300);
    const auto corpus = generate(config);
    const auto nets = build_networks(corpus);
    const oracle::Records db(records_of(corpus));
    for (const auto& author : corpus.authors()) {
      for (bool exclude_reviews : {false, true}) {
        const auto got = compute_indexes(nets, corpus, author, {exclude_reviews});
        const auto want = oracle::indexes(db, author, exclude_reviews);
        const bool same = got.researcher == author && got.n_papers == want.n && got.citations == want.c &&
                          got.citations_no_self == want.c_no_self && got.citations_per_paper == want.c_per_n &&
                          got.citing_articles == want.ca && got.citing_articles_no_self == want.ca_no_self &&
                          got.h == want.h && got.h_no_self == want.h_no_self && got.k == want.k &&
                          got.k_no_self == want.k_no_self && got.lobby == oracle::collaboration_lobby(db, author);
        if (!same) return {false, fmt::format("corpus {} (seed {}), author {}", trial, config.seed, author)};
        ++reports;
      }
    }
  }
  return {true, fmt::format("{} reports over 200 corpora", reports)};
}

Outcome paper_ratios() {
  struct Case {
    std::int64_t k, k_no_self, h;
    double k_over_h, delta;
  };
  const Case cases[] = {{46, 39, 35, 1.31, 0.18}, {206, 204, 37, 5.57, 0.01}, {76, 71, 28, 2.71, 0.07}};
  for (const auto& c : cases) {
    const auto f = fraud_indicators(c.k, c.k_no_self, c.h, std::nullopt);
    if (!f.k_over_h || !f.delta || round_to(*f.k_over_h, 2) != c.k_over_h || round_to(*f.delta, 2) != c.delta) {
      return {false, fmt::format("K={} K'={} h={}", c.k, c.k_no_self, c.h)};
    }
  }
  return {true, "(1.31, 0.18) (5.57, 0.01) (2.71, 0.07)"};
}

Outcome cv_quotients() {
  struct Case {
    double sd, mean;
    int percent;
  };
  const Case cases[] = {{66, 224, 29}, {8286, 12792, 65}, {18, 52, 35}};
  for (const auto& c : cases) {
    const auto pct = static_cast<int>(std::lround(cv_from_summary(c.mean, c.sd) * 100.0));
    if (pct != c.percent) return {false, fmt::format("{}/{} gave {}%", c.sd, c.mean, pct)};
  }
  return {true, "29% 65% 35%"};
}

Outcome witten_einstein() {
  const auto rows = load_panel();
  const auto& w = row_named(rows, "Witten");
  const auto& e = row_named(rows, "Einstein");
  const double h_ratio = round_to(static_cast<double>(*w.h) / static_cast<double>(*e.h), 2);
  const double k_ratio = round_to(static_cast<double>(*w.k) / static_cast<double>(*e.k), 2);
  return {h_ratio == 2.35 && k_ratio == 1.23, fmt::format("h {:.2f}, K {:.2f}", h_ratio, k_ratio)};
}

Outcome self_citation_robustness() {
  std::mt19937_64 rng(4242);
  std::vector<double> dk, dca;
  for (int trial = 0; trial < 100; ++trial) {
    SynthConfig config;
    config.papers = std::uniform_int_distribution<int>(150, 300)(rng);
    config.authors = std::uniform_int_distribution<int>(10, 30)(rng);
    config.seed = rng();
    const auto corpus = generate(config);
    const auto nets = build_networks(corpus);

    // Most prolific author (ties: smallest id) so the injection has room.
    std::size_t best = 0;
    for (std::size_t i = 1; i < corpus.author_count(); ++i) {
      if (nets.publication.row_nnz(i) > nets.publication.row_nnz(best)) best = i;
    }
    const auto& author = corpus.authors()[best];
    const int count = std::uniform_int_distribution<int>(1, 50)(rng);

    const auto before = compute_indexes(nets, corpus, author);
    const auto injected = inject_self_citations(corpus, author, count, rng());
    const auto after = compute_indexes(build_networks(injected), injected, author);
    if (after.k_no_self != before.k_no_self) {
      return {false, fmt::format("corpus {}: K' {} -> {}", trial, before.k_no_self, after.k_no_self)};
    }
    if (before.k == 0 || before.citing_articles == 0) continue;
    dk.push_back(static_cast<double>(after.k - before.k) / static_cast<double>(before.k));
    dca.push_back(static_cast<double>(after.citing_articles - before.citing_articles) /
                  static_cast<double>(before.citing_articles));
  }
  if (dk.size() < 50) return {false, fmt::format("only {} corpora with K > 0", dk.size())};
  const double mk = median(dk), mca = median(dca);
  return {mk <= mca, fmt::format("K' unchanged; median dK/K {:.4f} <= median dCA/CA {:.4f} over {} corpora", mk, mca,
                                 dk.size())};
}

Outcome fig3_ordering() {
  const auto rows = load_panel();
  const auto k = prize_curve(rank_panel(rows, PanelIndex::K));
  const auto h = prize_curve(rank_panel(rows, PanelIndex::H));
  return {k.auc > h.auc, fmt::format("AUC K {:.4f} > AUC h {:.4f}", k.auc, h.auc)};
}

Outcome invariants() {
  std::mt19937_64 rng(99);
  std::size_t checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    // Alternate generator corpora with unconstrained random ones (external and forward references).
    const auto corpus = trial % 2 == 0 ? generate(random_config(rng, 200))
                                       : Corpus::from_records(testing_support::random_records(rng));
    const auto nets = build_networks(corpus);
    for (const auto& author : corpus.authors()) {
      const auto r = compute_indexes(nets, corpus, author);
      const bool ok = r.h <= r.n_papers && r.k <= r.citing_articles && r.k_no_self <= r.k &&
                      r.citing_articles_no_self <= r.citing_articles && r.citations_no_self <= r.citations &&
                      r.citing_articles <= r.citations;
      if (!ok) return {false, fmt::format("corpus {}, author {}", trial, author)};
      ++checked;
    }
  }
  return {true, fmt::format("{} researchers over 1000 corpora", checked)};
}

Outcome lobby_equivalence() {
  std::mt19937_64 rng(31337);
  std::size_t checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto corpus = generate(random_config(rng, 300));
    const auto nets = build_networks(corpus);
    for (const auto& author : corpus.authors()) {
      const auto macro = macro_node_network(nets, corpus, author);
      if (lobby_index(macro, corpus.paper_count()) != compute_indexes(nets, corpus, author).k) {
        return {false, fmt::format("corpus {}, author {}", trial, author)};
      }
      ++checked;
    }
  }
  return {true, fmt::format("{} researchers over 100 corpora", checked)};
}

Outcome nobel_2016() {
  const auto rows = load_panel();
  const std::string winners[] = {"Thouless", "Haldane", "Kosterlitz"};
  const std::string predicted[] = {"York", "Thorne", "Grebogi", "Drever"};
  std::vector<std::string> parts;
  for (const auto& name : winners) {
    const auto& w = row_named(rows, name);
    int higher = 0;
    for (const auto& p : predicted) higher += *row_named(rows, p).h > *w.h ? 1 : 0;
    parts.push_back(fmt::format("{} K={} h below {}/4", name, *w.k, higher));
    if (!(*w.k > 200) || higher < 3) return {false, parts.back()};
  }
  return {true, fmt::format("{}; {}; {}", parts[0], parts[1], parts[2])};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "frontier matches brute force on random lists", 5, frontier_oracle},
      {2, "index reports match brute force on synthetic corpora", 60, network_oracle},
      {3, "fraud ratios for the three flagged researchers", 0, paper_ratios},
      {4, "coefficient of variation quotients", 0, cv_quotients},
      {5, "Witten/Einstein h and K ratios", 0, witten_einstein},
      {6, "self-citation injection leaves K' unchanged and moves K less than CA", 0, self_citation_robustness},
      {7, "prize curve AUC for K beats h on the panel fixture", 1, fig3_ordering},
      {8, "index invariants on random corpora", 60, invariants},
      {9, "macro-node lobby equals K", 30, lobby_equivalence},
      {10, "2016 laureates have high K but lower h than predicted names", 0, nobel_2016},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt::format("{:.3f}s", seconds);
    if (c.budget_seconds > 0) {
      timing += fmt::format(" of {:.0f}s", c.budget_seconds);
      if (seconds >= c.budget_seconds) {
        outcome.ok = false;
        outcome.detail += " (over time budget)";
      }
    }
    if (!outcome.ok) ++failures;
    std::cout << fmt::format("{} [{:2}] {}: {} [{}]\n", outcome.ok ? "PASS" : "FAIL", c.number, c.name,
                             outcome.detail, timing);
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
