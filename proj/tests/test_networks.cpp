#include <random>
#include <sstream>

#include "doctest.h"
#include "kindex/errors.hpp"
#include "kindex/networks.hpp"
#include "kindex/sparse_matrix.hpp"
#include "support/oracle.hpp"
#include "support/random_corpus.hpp"

using namespace kindex;

namespace {

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int entries) {
  std::vector<SparseMatrix::Triplet> t;
  for (int i = 0; i < entries; ++i) {
    t.push_back({std::uniform_int_distribution<std::size_t>(0, rows - 1)(rng),
                 std::uniform_int_distribution<std::size_t>(0, cols - 1)(rng),
                 std::uniform_int_distribution<std::int64_t>(0, 6)(rng)});
  }
  return SparseMatrix::from_triplets(rows, cols, std::move(t));
}

}  // namespace

TEST_CASE("SparseMatrix: construction sums duplicates and drops zeros") {
  auto m = SparseMatrix::from_triplets(2, 3, {{0, 2, 1}, {0, 2, 4}, {1, 0, 0}, {1, 1, 2}});
  CHECK(m.nnz() == 2);
  CHECK(m.at(0, 2) == 5);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.at(1, 1) == 2);
  CHECK(m.row_sum(0) == 5);
  CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{2, 0, 1}}), std::out_of_range);
  CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{0, 0, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(m.at(5, 0), std::out_of_range);
}

TEST_CASE("theta: binarizes, keeps absent entries absent") {
  auto w = SparseMatrix::from_triplets(2, 2, {{0, 1, 5}});
  auto b = theta(w);
  CHECK(b.at(0, 1) == 1);
  CHECK(b.at(0, 0) == 0);
  CHECK(b.nnz() == 1);
}

TEST_CASE("theta: idempotent and monotone (property)") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto w = random_matrix(rng, 7, 9, 25);
    auto b = theta(w);
    CHECK(theta(b) == b);
    CHECK(b.is_binary());
    CHECK(b.nnz() == w.nnz());

    // Adding a positive entry never removes a binary entry.
    auto t = w.triplets();
    t.push_back({std::uniform_int_distribution<std::size_t>(0, 6)(rng),
                 std::uniform_int_distribution<std::size_t>(0, 8)(rng), 1});
    auto bigger = theta(SparseMatrix::from_triplets(7, 9, t));
    for (const auto& e : b.triplets()) CHECK(bigger.at(e.row, e.col) == 1);
  }
}

TEST_CASE("multiply, transpose and elementwise_product agree with dense arithmetic") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_matrix(rng, 5, 6, 12);
    auto b = random_matrix(rng, 6, 4, 12);
    auto c = multiply(a, b);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        std::int64_t dense = 0;
        for (std::size_t k = 0; k < 6; ++k) dense += a.at(i, k) * b.at(k, j);
        CHECK(c.at(i, j) == dense);
      }
    }
    auto at = a.transpose();
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 6; ++j) CHECK(at.at(j, i) == a.at(i, j));
    }
    CHECK(at.transpose() == a);
    auto a2 = random_matrix(rng, 5, 6, 12);
    auto p = elementwise_product(a, a2);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 6; ++j) CHECK(p.at(i, j) == a.at(i, j) * a2.at(i, j));
    }
  }
  CHECK_THROWS_AS(multiply(SparseMatrix(2, 3), SparseMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(elementwise_product(SparseMatrix(2, 3), SparseMatrix(3, 2)), std::invalid_argument);
}

TEST_CASE("write_matrix_csv") {
  auto m = SparseMatrix::from_triplets(2, 2, {{1, 0, 3}});
  std::ostringstream plain, labelled;
  write_matrix_csv(plain, m);
  CHECK(plain.str() == "row,col,weight\n1,0,3\n");
  std::vector<std::string> labels{"x", "y"};
  write_matrix_csv(labelled, m, labels, labels);
  CHECK(labelled.str() == "row,col,weight\ny,x,3\n");
}

TEST_CASE("build_networks: two-paper chain") {
  // A by x; B by y cites A twice.
  auto corpus = Corpus::from_records({{"A", 2000, {"x"}, {}, false}, {"B", 2001, {"y"}, {{"A", 2}}, false}});
  auto nets = build_networks(corpus);
  const auto A = *corpus.find_paper("A"), B = *corpus.find_paper("B");
  const auto x = corpus.author_index("x");
  CHECK(nets.weighted_citation.at(A, B) == 2);
  CHECK(nets.citation.at(A, B) == 1);
  CHECK(nets.citation.at(B, A) == 0);
  CHECK(nets.citing_articles.at(x, B) == 1);
  CHECK(nets.collaboration_weighted.nnz() == 0);
  CHECK(nets.collaboration.nnz() == 0);
  CHECK(nets.times_cited[A] == 1);
  CHECK(nets.times_cited[B] == 0);
}

TEST_CASE("build_networks: co-authorship is symmetric") {
  auto corpus = Corpus::from_records({{"A", 2000, {"x", "y"}, {}, false}, {"B", 2001, {"y", "x"}, {}, false}});
  auto nets = build_networks(corpus);
  const auto x = corpus.author_index("x"), y = corpus.author_index("y");
  CHECK(nets.collaboration_weighted.at(x, y) == 2);
  CHECK(nets.collaboration_weighted.at(y, x) == 2);
  CHECK(nets.collaboration.at(x, y) == 1);
  CHECK(nets.collaboration_weighted.at(x, x) == 0);
}

TEST_CASE("build_networks: corpus without references has empty citation networks") {
  auto corpus = Corpus::from_records({{"A", 2000, {"x"}, {{"EXT", 3}}, false}, {"B", 2001, {"y"}, {}, false}});
  auto nets = build_networks(corpus);
  CHECK(nets.weighted_citation.nnz() == 0);
  CHECK(nets.citation.nnz() == 0);
  CHECK(nets.citing_articles.nnz() == 0);
}

TEST_CASE("build_networks: every network matches brute force on random corpora") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    auto records = testing_support::random_records(rng);
    oracle::Records db(records);
    auto corpus = Corpus::from_records(records);
    auto nets = build_networks(corpus);

    CHECK(nets.publication.is_binary());
    CHECK(nets.citing_articles.is_binary());
    CHECK(nets.citation == theta(nets.weighted_citation));
    CHECK(nets.collaboration == theta(nets.collaboration_weighted));
    CHECK(nets.collaboration_weighted == nets.collaboration_weighted.transpose());

    for (std::size_t k = 0; k < corpus.paper_count(); ++k) {
      CHECK(nets.citation.at(k, k) == 0);
      for (std::size_t l = 0; l < corpus.paper_count(); ++l) {
        CHECK(nets.weighted_citation.at(k, l) == db.times(corpus.paper(l), corpus.paper(k)));
      }
    }
    for (std::size_t i = 0; i < corpus.author_count(); ++i) {
      const auto& author = corpus.authors()[i];
      CHECK(nets.collaboration_weighted.at(i, i) == 0);
      for (std::size_t j = 0; j < corpus.author_count(); ++j) {
        if (i == j) continue;
        std::int64_t shared = 0;
        for (const auto& p : records) shared += db.authored(author, p) && db.authored(corpus.authors()[j], p);
        CHECK(nets.collaboration_weighted.at(i, j) == shared);
      }
      std::int64_t citations = 0;
      for (std::size_t l = 0; l < corpus.paper_count(); ++l) {
        // Does paper l cite any paper of author i?
        bool cites = false;
        for (const auto& k : records) cites = cites || (db.authored(author, k) && db.cites(corpus.paper(l), k));
        CHECK(nets.citing_articles.at(i, l) == (cites ? 1 : 0));
        CHECK(nets.publication.at(i, l) == (db.authored(author, corpus.paper(l)) ? 1 : 0));
        for (const auto& k : records) {
          if (db.authored(author, k)) citations += db.times(corpus.paper(l), k);
        }
      }
      CHECK(static_cast<std::int64_t>(nets.citing_articles.row_nnz(i)) <= citations);
    }
  }
}

TEST_CASE("self_citation_mask") {
  SUBCASE("single paper without self references") {
    auto corpus = Corpus::from_records({{"A", 2000, {"x"}, {}, false}, {"B", 2001, {"y"}, {{"A", 1}}, false}});
    auto nets = build_networks(corpus);
    CHECK(self_citation_mask(nets, corpus, "x").nnz() == 0);
  }
  SUBCASE("x authored A and B, B cites A") {
    auto corpus = Corpus::from_records({{"A", 2000, {"x"}, {}, false}, {"B", 2001, {"x", "y"}, {{"A", 3}}, false}});
    auto nets = build_networks(corpus);
    auto s = self_citation_mask(nets, corpus, "x");
    CHECK(s.at(*corpus.find_paper("A"), *corpus.find_paper("B")) == 1);
    CHECK(s.nnz() == 1);
  }
  SUBCASE("unknown author") {
    auto corpus = Corpus::from_records({{"A", 2000, {"x"}, {}, false}});
    auto nets = build_networks(corpus);
    CHECK_THROWS_AS(self_citation_mask(nets, corpus, "nobody"), UnknownEntityError);
  }
}

TEST_CASE("self_citation_mask equals P_ik P_il C_kl on random corpora") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto corpus = Corpus::from_records(testing_support::random_records(rng));
    auto nets = build_networks(corpus);
    const std::size_t papers = corpus.paper_count();
    for (std::size_t i = 0; i < corpus.author_count(); ++i) {
      // Outer product of the publication row with itself, masked by C.
      std::vector<SparseMatrix::Triplet> outer;
      for (const auto& k : nets.publication.row(i)) {
        for (const auto& l : nets.publication.row(i)) outer.push_back({k.col, l.col, 1});
      }
      auto expected = elementwise_product(SparseMatrix::from_triplets(papers, papers, outer), nets.citation);
      CHECK(self_citation_mask(nets, i) == expected);
    }
  }
}

TEST_CASE("citation_report_from_corpus") {
  SUBCASE("citing paper without citations of its own") {
    auto corpus = Corpus::from_records({{"A", 2000, {"x"}, {}, false}, {"B", 2001, {"y"}, {{"A", 1}}, false}});
    auto nets = build_networks(corpus);
    auto report = citation_report_from_corpus(nets, corpus, "x");
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0] == CitationEntry{"B", 0, false, 2001});
  }
  SUBCASE("self-citation flag") {
    auto corpus = Corpus::from_records({{"A", 2000, {"x"}, {}, false}, {"B", 2001, {"x"}, {{"A", 1}}, false}});
    auto nets = build_networks(corpus);
    auto report = citation_report_from_corpus(nets, corpus, "x");
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].citing_id == "B");
    CHECK(report.entries[0].is_self_citation);
  }
  SUBCASE("unknown author") {
    auto corpus = Corpus::from_records({{"A", 2000, {"x"}, {}, false}});
    auto nets = build_networks(corpus);
    CHECK_THROWS_AS(citation_report_from_corpus(nets, corpus, "q"), UnknownEntityError);
  }
}

TEST_CASE("citation_report_from_corpus matches enumeration of citing papers") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    auto records = testing_support::random_records(rng);
    oracle::Records db(records);
    auto corpus = Corpus::from_records(records);
    auto nets = build_networks(corpus);
    for (const auto& author : corpus.authors()) {
      auto report = citation_report_from_corpus(nets, corpus, author);
      auto expected = oracle::citing_articles(
          db, [&](const PaperRecord& p) { return db.authored(author, p); }, {author});
      REQUIRE(report.entries.size() == expected.size());
      std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
        return a.citations != b.citations ? a.citations > b.citations : a.id < b.id;
      });
      for (std::size_t e = 0; e < expected.size(); ++e) {
        CHECK(report.entries[e] == CitationEntry{expected[e].id, expected[e].citations, expected[e].self, expected[e].year});
      }

      // The set-based extraction gives the same report.
      const std::size_t self[] = {corpus.author_index(author)};
      auto own = papers_of(nets, self[0]);
      auto alt = citation_report_for_papers(nets, corpus, own, self, author);
      CHECK(alt.entries == report.entries);
    }
  }
}
