#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kindex/corpus.hpp"
#include "kindex/networks.hpp"
#include "kindex/sparse_matrix.hpp"

namespace kindex {

/// Largest r such that at least r of the counts are >= r; 0 for an empty or
/// all-zero list. Order of the input does not matter. Over a researcher's
/// per-paper citation counts this is h; over the citation counts of the
/// researcher's citing articles it is K.
std::int64_t hirsch_frontier(std::span<const std::int64_t> counts);

/// Every scalar index of one researcher. Primed quantities exclude citing
/// papers co-authored by the researcher.
struct IndexReport {
  std::string researcher;
  std::int64_t n_papers = 0;
  std::int64_t citations = 0;
  std::int64_t citations_no_self = 0;
  double citations_per_paper = 0.0;
  std::int64_t citing_articles = 0;
  std::int64_t citing_articles_no_self = 0;
  std::int64_t h = 0;
  std::int64_t h_no_self = 0;
  std::int64_t k = 0;
  std::int64_t k_no_self = 0;
  /// Lobby index in the collaboration network; set only when computed from a full corpus.
  std::optional<std::int64_t> lobby;

  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

struct IndexOptions {
  /// Drop the researcher's review papers before anything is counted.
  bool exclude_reviews = false;
};

/// Throws UnknownEntityError for an unknown author.
///
/// Citation totals (C, C') use reference multiplicities; per-paper citation
/// counts behind h and K count distinct citing papers.
IndexReport compute_indexes(const DerivedNetworks& nets, const Corpus& corpus, std::string_view author,
                            IndexOptions options = {});

/// K from a standalone citation report; self-citing entries are skipped when
/// `exclude_self` is set (giving K').
std::int64_t k_index(const CitationReport& report, bool exclude_self);

/// K_m: only the researcher's papers published after `now - m` are considered.
/// Throws std::invalid_argument when m < 1.
std::int64_t k_proximal(const DerivedNetworks& nets, const Corpus& corpus, std::string_view author, int m, int now);

/// K_y: only citing articles published after `now - y` are kept; their own
/// citation counts are not windowed. Throws std::invalid_argument when y < 1.
std::int64_t k_recent(const DerivedNetworks& nets, const Corpus& corpus, std::string_view author, int y, int now);

/// Group totals: the members' papers are merged into a single body of work.
struct GroupIndexes {
  std::int64_t n_papers = 0;
  std::int64_t citing_articles = 0;
  std::int64_t citing_articles_no_self = 0;
  std::int64_t k = 0;
  std::int64_t k_no_self = 0;
};

/// K_g over the union of the members' papers. A citing article is a
/// self-citation when any member co-authored it. Throws std::invalid_argument
/// for an empty member list and UnknownEntityError for an unknown member.
GroupIndexes group_indexes(const DerivedNetworks& nets, const Corpus& corpus, std::span<const AuthorId> members);
std::int64_t k_group(const DerivedNetworks& nets, const Corpus& corpus, std::span<const AuthorId> members,
                     bool exclude_self = false);

/// Lobby index of `node`: the largest k such that the node has at least k
/// in-neighbours of in-degree >= k. `adjacency` uses the citation orientation
/// (row = target, column = source), so row `node` lists its in-neighbours.
/// Diagonal entries are ignored. Throws UnknownEntityError when node is out of range.
std::int64_t lobby_index(const SparseMatrix& adjacency, std::size_t node);

/// Citation network with one extra node (index = paper count) standing for the
/// researcher's whole body of work. Every citing article of the researcher
/// points at it; all paper-to-paper citations are kept, so the in-degree of a
/// citing article is still its citation count. The lobby index of the extra
/// node equals the researcher's K.
SparseMatrix macro_node_network(const DerivedNetworks& nets, const Corpus& corpus, std::string_view author);

/// CSV serialization: `researcher,n,c,c_no_self,c_per_n,ca,ca_no_self,h,h_no_self,k,k_no_self,lobby`.
std::string_view index_report_csv_header();
std::vector<std::string> index_report_csv_fields(const IndexReport& report);
void write_index_reports_csv(std::ostream& out, std::span<const IndexReport> reports);

/// Compact JSON object with the same keys as the CSV header.
std::string to_json(const IndexReport& report);

}  // namespace kindex
