#pragma once

#include <cstdint>
#include <string_view>

#include "kindex/corpus.hpp"

namespace kindex {

struct SynthConfig {
  int papers = 100;
  int authors = 30;
  int start_year = 2000;
  int years = 20;
  /// Target weight of a prior paper is (citations + 1)^exponent; 0 gives uniform choice.
  double attachment_exponent = 1.0;
  /// Mean number of distinct references per paper.
  double references_per_paper = 5.0;
  /// Chance that a reference goes to an earlier paper of the same lead author.
  double self_citation_rate = 0.1;
  /// Each paper has between 1 and this many authors.
  int max_authors_per_paper = 3;
  /// Chance that a reference is cited twice rather than once.
  double repeat_citation_rate = 0.1;
  /// Chance that a paper is flagged as a review.
  double review_rate = 0.0;
  std::uint64_t seed = 1;
};

/// Throws ValidationError for a config that violates its invariants.
void validate(const SynthConfig& config);

/// Deterministic preferential-attachment corpus. Papers are ordered by year,
/// ids are "p<index>" and authors "a<index>". References only point to
/// earlier papers. When the mean reference count exceeds what earlier papers
/// can supply, per-paper counts are clamped and a warning is emitted.
Corpus generate(const SynthConfig& config, Warnings* warnings = nullptr);

/// Adds `count` citations from later papers of `author` to earlier ones
/// (ordered by year, then corpus position). Repeated pairs raise the
/// multiplicity. Throws ValidationError when the author has fewer than two
/// papers and UnknownEntityError for an unknown author.
Corpus inject_self_citations(const Corpus& corpus, std::string_view author, int count, std::uint64_t seed);

}  // namespace kindex
