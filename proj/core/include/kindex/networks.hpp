#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kindex/corpus.hpp"
#include "kindex/sparse_matrix.hpp"

namespace kindex {

/// The author-paper networks derived from a corpus. Paper and author indices
/// are the corpus indices.
///
/// Orientation of the citation matrices: row = cited paper k, column = citing
/// paper l. Row k therefore lists the papers that cite k.
struct DerivedNetworks {
  SparseMatrix publication;             ///< P, authors x papers, binary
  SparseMatrix weighted_citation;       ///< C-bar, papers x papers, multiplicity of "l cites k"
  SparseMatrix citation;                ///< C = theta(C-bar)
  SparseMatrix collaboration_weighted;  ///< A-bar, authors x authors, co-authored paper counts
  SparseMatrix collaboration;           ///< A = theta(A-bar)
  SparseMatrix citing_articles;         ///< C^A = theta(P C), authors x papers

  SparseMatrix authorship;  ///< P transposed, papers x authors
  SparseMatrix references;  ///< C transposed: row l lists the papers l cites

  /// Distinct in-corpus citing papers per paper (in-degree in C).
  std::vector<std::int64_t> times_cited;
};

/// Materializes every network. References to external targets contribute nothing.
DerivedNetworks build_networks(const Corpus& corpus);

/// S_kl = P_ik P_il C_kl for author i: both papers are by i and l cites k.
/// Throws UnknownEntityError for an unknown author.
SparseMatrix self_citation_mask(const DerivedNetworks& nets, const Corpus& corpus, std::string_view author);
SparseMatrix self_citation_mask(const DerivedNetworks& nets, std::size_t author);

/// The researcher's citing articles, one entry per paper l with C^A_il = 1.
/// An entry's `citations` is the in-corpus number of distinct papers citing l;
/// it is a self-citation when the researcher co-authored l. Sorted by citations
/// descending, ties by paper id.
CitationReport citation_report_from_corpus(const DerivedNetworks& nets, const Corpus& corpus, std::string_view author);

/// Citing articles of an arbitrary set of focal papers. An entry is a
/// self-citation when any author in `self_authors` co-authored it. Every
/// citing paper is listed once no matter how many focal papers it cites.
CitationReport citation_report_for_papers(const DerivedNetworks& nets, const Corpus& corpus,
                                          std::span<const std::size_t> focal_papers,
                                          std::span<const std::size_t> self_authors, std::string researcher);

/// Paper indices authored by `author` (row of P).
std::vector<std::size_t> papers_of(const DerivedNetworks& nets, std::size_t author);

}  // namespace kindex
