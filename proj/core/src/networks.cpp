#include "kindex/networks.hpp"

#include <algorithm>

#include "kindex/errors.hpp"

namespace kindex {

DerivedNetworks build_networks(const Corpus& corpus) {
  const std::size_t papers = corpus.paper_count();
  const std::size_t authors = corpus.author_count();

  std::vector<SparseMatrix::Triplet> pub;
  std::vector<SparseMatrix::Triplet> cites;
  std::vector<SparseMatrix::Triplet> collab;
  for (std::size_t k = 0; k < papers; ++k) {
    auto paper_authors = corpus.paper_authors(k);
    for (auto a : paper_authors) pub.push_back({a, k, 1});
    for (std::size_t x = 0; x < paper_authors.size(); ++x) {
      for (std::size_t y = 0; y < paper_authors.size(); ++y) {
        if (x != y) collab.push_back({paper_authors[x], paper_authors[y], 1});
      }
    }
    for (const auto& ref : corpus.resolved_references(k)) {
      if (!ref.external()) cites.push_back({ref.target, k, ref.multiplicity});
    }
  }

  DerivedNetworks nets;
  nets.publication = SparseMatrix::from_triplets(authors, papers, std::move(pub));
  nets.weighted_citation = SparseMatrix::from_triplets(papers, papers, std::move(cites));
  nets.citation = theta(nets.weighted_citation);
  nets.collaboration_weighted = SparseMatrix::from_triplets(authors, authors, std::move(collab));
  nets.collaboration = theta(nets.collaboration_weighted);
  nets.citing_articles = theta(multiply(nets.publication, nets.citation));
  nets.authorship = nets.publication.transpose();
  nets.references = nets.citation.transpose();
  nets.times_cited.resize(papers);
  for (std::size_t k = 0; k < papers; ++k) nets.times_cited[k] = static_cast<std::int64_t>(nets.citation.row_nnz(k));
  return nets;
}

std::vector<std::size_t> papers_of(const DerivedNetworks& nets, std::size_t author) {
  std::vector<std::size_t> out;
  for (const auto& e : nets.publication.row(author)) out.push_back(e.col);
  return out;
}

SparseMatrix self_citation_mask(const DerivedNetworks& nets, std::size_t author) {
  if (author >= nets.publication.rows()) throw UnknownEntityError("author index out of range");
  const std::size_t papers = nets.citation.rows();
  std::vector<char> own(papers, 0);
  for (const auto& e : nets.publication.row(author)) own[e.col] = 1;

  std::vector<SparseMatrix::Triplet> out;
  for (const auto& pk : nets.publication.row(author)) {
    for (const auto& citer : nets.citation.row(pk.col)) {
      if (own[citer.col]) out.push_back({pk.col, citer.col, 1});
    }
  }
  return SparseMatrix::from_triplets(papers, papers, std::move(out));
}

SparseMatrix self_citation_mask(const DerivedNetworks& nets, const Corpus& corpus, std::string_view author) {
  return self_citation_mask(nets, corpus.author_index(author));
}

namespace {

CitationEntry make_entry(const DerivedNetworks& nets, const Corpus& corpus, std::size_t citing, bool self) {
  const auto& paper = corpus.paper(citing);
  return {paper.id, nets.times_cited[citing], self, paper.year};
}

}  // namespace

CitationReport citation_report_from_corpus(const DerivedNetworks& nets, const Corpus& corpus, std::string_view author) {
  const std::size_t i = corpus.author_index(author);
  CitationReport report;
  report.researcher = std::string(author);
  for (const auto& e : nets.citing_articles.row(i)) {
    report.entries.push_back(make_entry(nets, corpus, e.col, nets.publication.contains(i, e.col)));
  }
  report.sort();
  return report;
}

CitationReport citation_report_for_papers(const DerivedNetworks& nets, const Corpus& corpus,
                                          std::span<const std::size_t> focal_papers,
                                          std::span<const std::size_t> self_authors, std::string researcher) {
  const std::size_t papers = corpus.paper_count();
  std::vector<char> seen(papers, 0);
  std::vector<std::size_t> citing;
  for (auto k : focal_papers) {
    for (const auto& e : nets.citation.row(k)) {
      if (!seen[e.col]) {
        seen[e.col] = 1;
        citing.push_back(e.col);
      }
    }
  }

  std::vector<char> is_self_author(corpus.author_count(), 0);
  for (auto a : self_authors) is_self_author.at(a) = 1;

  CitationReport report;
  report.researcher = std::move(researcher);
  report.entries.reserve(citing.size());
  for (auto l : citing) {
    auto authors = nets.authorship.row(l);
    bool self = std::any_of(authors.begin(), authors.end(), [&](const auto& e) { return is_self_author[e.col] != 0; });
    report.entries.push_back(make_entry(nets, corpus, l, self));
  }
  report.sort();
  return report;
}

}  // namespace kindex
