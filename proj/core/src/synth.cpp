#include "kindex/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <fmt/format.h>

#include "kindex/errors.hpp"

namespace kindex {

namespace {

// std::mt19937_64 output is fully specified by the standard; the distribution
// adaptors below are hand-written so that a seed produces the same corpus with
// every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  int poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean > 30.0) {
      // Normal approximation; exp(-mean) underflows the product method's precision.
      const double u1 = std::max(uniform(), 0x1.0p-53);
      const double u2 = uniform();
      const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
      return std::max(0, static_cast<int>(std::lround(mean + std::sqrt(mean) * z)));
    }
    const double limit = std::exp(-mean);
    int k = 0;
    double p = uniform();
    while (p > limit) {
      ++k;
      p *= uniform();
    }
    return k;
  }

 private:
  std::mt19937_64 engine_;
};

/// Fenwick tree of non-negative weights supporting weighted sampling.
class WeightTree {
 public:
  explicit WeightTree(std::size_t n) : tree_(n + 1, 0.0), weights_(n, 0.0) {}

  void set(std::size_t i, double w) {
    const double delta = w - weights_[i];
    weights_[i] = w;
    for (std::size_t j = i + 1; j < tree_.size(); j += j & (~j + 1)) tree_[j] += delta;
  }

  double total(std::size_t prefix) const {
    double s = 0.0;
    for (std::size_t j = prefix; j > 0; j -= j & (~j + 1)) s += tree_[j];
    return s;
  }

  /// Smallest i with cumulative weight of [0, i] > target, restricted to [0, limit).
  std::size_t find(double target, std::size_t limit) const {
    std::size_t pos = 0;
    std::size_t step = 1;
    while (step * 2 < tree_.size()) step *= 2;
    for (; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] <= target) {
        pos += step;
        target -= tree_[pos];
      }
    }
    return std::min(pos, limit - 1);
  }

 private:
  std::vector<double> tree_;
  std::vector<double> weights_;
};

}  // namespace

void validate(const SynthConfig& c) {
  auto probability = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (c.papers < 1) throw ValidationError("paper count must be positive");
  if (c.authors < 1) throw ValidationError("author count must be positive");
  if (c.years < 1) throw ValidationError("year span must be positive");
  if (c.max_authors_per_paper < 1) throw ValidationError("max authors per paper must be positive");
  if (c.attachment_exponent < 0.0) throw ValidationError("attachment exponent must be non-negative");
  if (c.references_per_paper < 0.0) throw ValidationError("references per paper must be non-negative");
  if (!probability(c.self_citation_rate)) throw ValidationError("self-citation rate must be in [0, 1]");
  if (!probability(c.repeat_citation_rate)) throw ValidationError("repeat citation rate must be in [0, 1]");
  if (!probability(c.review_rate)) throw ValidationError("review rate must be in [0, 1]");
}

Corpus generate(const SynthConfig& config, Warnings* warnings) {
  validate(config);
  Rng rng(config.seed);
  const auto papers = static_cast<std::size_t>(config.papers);
  const auto authors = static_cast<std::size_t>(config.authors);
  const auto max_team = std::min<std::size_t>(static_cast<std::size_t>(config.max_authors_per_paper), authors);

  if (config.references_per_paper > static_cast<double>(papers - 1) && warnings) {
    warnings->push_back(fmt::format("{} references per paper requested but only {} papers exist; counts are clamped",
                                    config.references_per_paper, papers));
  }

  std::vector<PaperRecord> records(papers);
  std::vector<std::vector<std::size_t>> by_lead(authors);
  std::vector<std::int64_t> in_degree(papers, 0);
  WeightTree weights(papers);
  auto weight_of = [&](std::int64_t d) { return std::pow(static_cast<double>(d + 1), config.attachment_exponent); };

  std::vector<std::size_t> team;
  std::vector<std::size_t> targets;
  std::vector<char> chosen(papers, 0);
  for (std::size_t j = 0; j < papers; ++j) {
    auto& rec = records[j];
    rec.id = fmt::format("p{}", j);
    rec.year = config.start_year + static_cast<int>((j * static_cast<std::size_t>(config.years)) / papers);
    rec.is_review = rng.uniform() < config.review_rate;

    const std::size_t team_size = 1 + rng.index(max_team);
    team.clear();
    while (team.size() < team_size) {
      auto a = rng.index(authors);
      if (std::find(team.begin(), team.end(), a) == team.end()) team.push_back(a);
    }
    for (auto a : team) rec.authors.push_back(fmt::format("a{}", a));
    const std::size_t lead = team.front();

    const auto wanted = std::min<std::size_t>(static_cast<std::size_t>(rng.poisson(config.references_per_paper)), j);
    targets.clear();
    while (targets.size() < wanted) {
      std::size_t t = j;
      const auto& own = by_lead[lead];
      if (!own.empty() && rng.uniform() < config.self_citation_rate) {
        t = own[rng.index(own.size())];
      } else {
        t = weights.find(rng.uniform() * weights.total(j), j);
      }
      if (chosen[t]) {
        // Collisions become likely only when most earlier papers are already
        // taken; fall back to the first free one.
        if (rng.uniform() < 0.5) continue;
        t = 0;
        while (chosen[t]) ++t;
      }
      chosen[t] = 1;
      targets.push_back(t);
    }
    for (auto t : targets) {
      chosen[t] = 0;
      const std::int64_t multiplicity = rng.uniform() < config.repeat_citation_rate ? 2 : 1;
      rec.references.push_back({records[t].id, multiplicity});
      ++in_degree[t];
      weights.set(t, weight_of(in_degree[t]));
    }
    weights.set(j, weight_of(0));
    by_lead[lead].push_back(j);
  }
  return Corpus::from_records(std::move(records), warnings);
}

Corpus inject_self_citations(const Corpus& corpus, std::string_view author, int count, std::uint64_t seed) {
  const std::size_t a = corpus.author_index(author);
  if (count < 0) throw ValidationError("injection count must be non-negative");

  std::vector<std::size_t> own;
  for (std::size_t k = 0; k < corpus.paper_count(); ++k) {
    auto ids = corpus.paper_authors(k);
    if (std::find(ids.begin(), ids.end(), a) != ids.end()) own.push_back(k);
  }
  if (own.size() < 2) {
    throw ValidationError(fmt::format("author '{}' needs at least two papers for self-citation injection", author));
  }
  std::stable_sort(own.begin(), own.end(),
                   [&](std::size_t x, std::size_t y) { return corpus.paper(x).year < corpus.paper(y).year; });

  std::vector<PaperRecord> records(corpus.papers().begin(), corpus.papers().end());
  Rng rng(seed);
  for (int n = 0; n < count; ++n) {
    std::size_t first = rng.index(own.size());
    std::size_t second = rng.index(own.size() - 1);
    if (second >= first) ++second;
    const auto earlier = own[std::min(first, second)];
    const auto later = own[std::max(first, second)];

    auto& refs = records[later].references;
    const auto& target = records[earlier].id;
    auto it = std::find_if(refs.begin(), refs.end(), [&](const Reference& r) { return r.target == target; });
    if (it != refs.end()) {
      ++it->multiplicity;
    } else {
      refs.push_back({target, 1});
    }
  }
  return Corpus::from_records(std::move(records));
}

}  // namespace kindex
