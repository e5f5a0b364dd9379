#include "kindex/indexes.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "csv.hpp"
#include "json.hpp"
#include "kindex/errors.hpp"

namespace kindex {

std::int64_t hirsch_frontier(std::span<const std::int64_t> counts) {
  // Counting sort capped at n: the answer never exceeds the list length.
  const std::size_t n = counts.size();
  std::vector<std::size_t> bucket(n + 1, 0);
  for (auto c : counts) {
    if (c > 0) ++bucket[std::min<std::size_t>(static_cast<std::size_t>(c), n)];
  }
  std::size_t at_least = 0;
  for (std::size_t r = n; r > 0; --r) {
    at_least += bucket[r];
    if (at_least >= r) return static_cast<std::int64_t>(r);
  }
  return 0;
}

namespace {

std::vector<std::int64_t> entry_counts(const CitationReport& report, bool exclude_self) {
  std::vector<std::int64_t> counts;
  counts.reserve(report.entries.size());
  for (const auto& e : report.entries) {
    if (!(exclude_self && e.is_self_citation)) counts.push_back(e.citations);
  }
  return counts;
}

std::vector<std::size_t> focal_papers(const DerivedNetworks& nets, const Corpus& corpus, std::size_t author,
                                      bool exclude_reviews) {
  auto papers = papers_of(nets, author);
  if (exclude_reviews) {
    std::erase_if(papers, [&](std::size_t k) { return corpus.paper(k).is_review; });
  }
  return papers;
}

}  // namespace

std::int64_t k_index(const CitationReport& report, bool exclude_self) {
  return hirsch_frontier(entry_counts(report, exclude_self));
}

IndexReport compute_indexes(const DerivedNetworks& nets, const Corpus& corpus, std::string_view author,
                            IndexOptions options) {
  const std::size_t i = corpus.author_index(author);
  const auto own = focal_papers(nets, corpus, i, options.exclude_reviews);

  IndexReport out;
  out.researcher = std::string(author);
  out.n_papers = static_cast<std::int64_t>(own.size());

  // Self-citation test uses every paper of the author, reviews included.
  auto is_own = [&](std::size_t l) { return nets.publication.contains(i, l); };

  std::vector<std::int64_t> per_paper;
  std::vector<std::int64_t> per_paper_no_self;
  for (auto k : own) {
    std::int64_t distinct_no_self = 0;
    for (const auto& e : nets.weighted_citation.row(k)) {
      out.citations += e.weight;
      if (!is_own(e.col)) {
        out.citations_no_self += e.weight;
        ++distinct_no_self;
      }
    }
    per_paper.push_back(nets.times_cited[k]);
    per_paper_no_self.push_back(distinct_no_self);
  }
  out.citations_per_paper =
      out.n_papers == 0 ? 0.0 : static_cast<double>(out.citations) / static_cast<double>(out.n_papers);
  out.h = hirsch_frontier(per_paper);
  out.h_no_self = hirsch_frontier(per_paper_no_self);

  const std::size_t self[] = {i};
  auto report = options.exclude_reviews
                    ? citation_report_for_papers(nets, corpus, own, self, out.researcher)
                    : citation_report_from_corpus(nets, corpus, author);
  out.citing_articles = static_cast<std::int64_t>(report.entries.size());
  out.citing_articles_no_self = static_cast<std::int64_t>(
      std::count_if(report.entries.begin(), report.entries.end(), [](const auto& e) { return !e.is_self_citation; }));
  out.k = k_index(report, false);
  out.k_no_self = k_index(report, true);
  out.lobby = lobby_index(nets.collaboration, i);
  return out;
}

std::int64_t k_proximal(const DerivedNetworks& nets, const Corpus& corpus, std::string_view author, int m, int now) {
  if (m < 1) throw std::invalid_argument("proximal window m must be >= 1");
  const std::size_t i = corpus.author_index(author);
  auto papers = papers_of(nets, i);
  std::erase_if(papers, [&](std::size_t k) { return corpus.paper(k).year <= now - m; });
  const std::size_t self[] = {i};
  return k_index(citation_report_for_papers(nets, corpus, papers, self, std::string(author)), false);
}

std::int64_t k_recent(const DerivedNetworks& nets, const Corpus& corpus, std::string_view author, int y, int now) {
  if (y < 1) throw std::invalid_argument("recent window y must be >= 1");
  auto report = citation_report_from_corpus(nets, corpus, author);
  std::erase_if(report.entries, [&](const CitationEntry& e) { return e.year <= now - y; });
  return k_index(report, false);
}

GroupIndexes group_indexes(const DerivedNetworks& nets, const Corpus& corpus, std::span<const AuthorId> members) {
  if (members.empty()) throw std::invalid_argument("group must have at least one member");
  std::vector<std::size_t> member_ids;
  std::vector<std::size_t> papers;
  for (const auto& m : members) {
    auto a = corpus.author_index(m);
    member_ids.push_back(a);
    auto own = papers_of(nets, a);
    papers.insert(papers.end(), own.begin(), own.end());
  }
  std::sort(papers.begin(), papers.end());
  papers.erase(std::unique(papers.begin(), papers.end()), papers.end());

  auto report = citation_report_for_papers(nets, corpus, papers, member_ids, "group");
  GroupIndexes g;
  g.n_papers = static_cast<std::int64_t>(papers.size());
  g.citing_articles = static_cast<std::int64_t>(report.entries.size());
  g.citing_articles_no_self = static_cast<std::int64_t>(
      std::count_if(report.entries.begin(), report.entries.end(), [](const auto& e) { return !e.is_self_citation; }));
  g.k = k_index(report, false);
  g.k_no_self = k_index(report, true);
  return g;
}

std::int64_t k_group(const DerivedNetworks& nets, const Corpus& corpus, std::span<const AuthorId> members,
                     bool exclude_self) {
  auto g = group_indexes(nets, corpus, members);
  return exclude_self ? g.k_no_self : g.k;
}

std::int64_t lobby_index(const SparseMatrix& adjacency, std::size_t node) {
  if (node >= adjacency.rows() || node >= adjacency.cols()) {
    throw UnknownEntityError(fmt::format("node {} outside a {}-node network", node, adjacency.rows()));
  }
  std::vector<std::int64_t> degrees;
  for (const auto& e : adjacency.row(node)) {
    if (e.col == node) continue;
    if (e.col >= adjacency.rows()) throw std::invalid_argument("lobby_index needs a square adjacency matrix");
    // Self-loops (e.g. the diagonal of A) are not neighbours.
    const auto degree = adjacency.row_nnz(e.col) - (adjacency.contains(e.col, e.col) ? 1 : 0);
    degrees.push_back(static_cast<std::int64_t>(degree));
  }
  return hirsch_frontier(degrees);
}

SparseMatrix macro_node_network(const DerivedNetworks& nets, const Corpus& corpus, std::string_view author) {
  const std::size_t i = corpus.author_index(author);
  const std::size_t papers = corpus.paper_count();
  auto triplets = nets.citation.triplets();
  for (const auto& e : nets.citing_articles.row(i)) triplets.push_back({papers, e.col, 1});
  return SparseMatrix::from_triplets(papers + 1, papers + 1, std::move(triplets));
}

// ---------------------------------------------------------------------------
// Serialization

std::string_view index_report_csv_header() {
  return "researcher,n,c,c_no_self,c_per_n,ca,ca_no_self,h,h_no_self,k,k_no_self,lobby";
}

std::vector<std::string> index_report_csv_fields(const IndexReport& r) {
  return {r.researcher,
          std::to_string(r.n_papers),
          std::to_string(r.citations),
          std::to_string(r.citations_no_self),
          fmt::format("{:.4f}", r.citations_per_paper),
          std::to_string(r.citing_articles),
          std::to_string(r.citing_articles_no_self),
          std::to_string(r.h),
          std::to_string(r.h_no_self),
          std::to_string(r.k),
          std::to_string(r.k_no_self),
          r.lobby ? std::to_string(*r.lobby) : std::string()};
}

void write_index_reports_csv(std::ostream& out, std::span<const IndexReport> reports) {
  out << index_report_csv_header() << '\n';
  for (const auto& r : reports) csv::write_row(out, index_report_csv_fields(r));
}

std::string to_json(const IndexReport& r) {
  nlohmann::ordered_json obj;
  obj["researcher"] = r.researcher;
  obj["n"] = r.n_papers;
  obj["c"] = r.citations;
  obj["c_no_self"] = r.citations_no_self;
  obj["c_per_n"] = r.citations_per_paper;
  obj["ca"] = r.citing_articles;
  obj["ca_no_self"] = r.citing_articles_no_self;
  obj["h"] = r.h;
  obj["h_no_self"] = r.h_no_self;
  obj["k"] = r.k;
  obj["k_no_self"] = r.k_no_self;
  obj["lobby"] = r.lobby ? nlohmann::ordered_json(*r.lobby) : nlohmann::ordered_json(nullptr);
  return obj.dump();
}

}  // namespace kindex
