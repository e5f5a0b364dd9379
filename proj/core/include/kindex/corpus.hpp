#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kindex {

using AuthorId = std::string;
using PaperId = std::string;

/// Non-fatal diagnostics collected while loading data.
using Warnings = std::vector<std::string>;

/// Outgoing citation from one paper: `target` is cited `multiplicity` times.
struct Reference {
  PaperId target;
  std::int64_t multiplicity = 1;

  friend bool operator==(const Reference&, const Reference&) = default;
};

struct PaperRecord {
  PaperId id;
  int year = 0;
  std::vector<AuthorId> authors;
  std::vector<Reference> references;
  bool is_review = false;

  friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

/// Reference after resolution against the corpus. External targets have no index.
struct ResolvedReference {
  static constexpr std::size_t kExternal = std::numeric_limits<std::size_t>::max();

  std::size_t target = kExternal;
  std::int64_t multiplicity = 1;

  bool external() const noexcept { return target == kExternal; }
};

/// Checks the per-record invariants of a PaperRecord. Throws ValidationError.
void validate_record(const PaperRecord& record);

/// Validated, immutable collection of papers plus the registry of their authors.
///
/// Papers keep their input order; paper index i is the i-th record. Authors are
/// indexed in ascending id order so that author indices do not depend on the
/// order in which papers were listed. Every reference is resolved to a paper
/// index or flagged external; none is dropped.
class Corpus {
 public:
  /// Throws ValidationError on an empty collection, a duplicate id or a bad record.
  /// One warning per external reference is appended to `warnings` when given.
  static Corpus from_records(std::vector<PaperRecord> papers, Warnings* warnings = nullptr);

  std::span<const PaperRecord> papers() const noexcept { return papers_; }
  const PaperRecord& paper(std::size_t index) const { return papers_.at(index); }
  std::size_t paper_count() const noexcept { return papers_.size(); }

  std::span<const AuthorId> authors() const noexcept { return authors_; }
  std::size_t author_count() const noexcept { return authors_.size(); }

  std::optional<std::size_t> find_paper(std::string_view id) const;
  std::optional<std::size_t> find_author(std::string_view id) const;

  /// Like find_author but throws UnknownEntityError.
  std::size_t author_index(std::string_view id) const;

  /// Author indices of paper `index`, in the record's author order.
  std::span<const std::size_t> paper_authors(std::size_t index) const { return paper_authors_.at(index); }

  std::span<const ResolvedReference> resolved_references(std::size_t index) const {
    return resolved_.at(index);
  }

  std::size_t external_reference_count() const noexcept { return external_count_; }

 private:
  Corpus() = default;

  std::vector<PaperRecord> papers_;
  std::vector<AuthorId> authors_;
  std::unordered_map<std::string, std::size_t> paper_lookup_;
  std::unordered_map<std::string, std::size_t> author_lookup_;
  std::vector<std::vector<std::size_t>> paper_authors_;
  std::vector<std::vector<ResolvedReference>> resolved_;
  std::size_t external_count_ = 0;
};

/// Reads the newline-delimited JSON corpus format, one paper object per line:
///
///   {"id": str, "year": int, "authors": [str], "refs": [[str, int]], "review": bool}
///
/// `refs` and `review` may be omitted. Blank lines are skipped. Throws ParseError
/// carrying the offending line number for malformed JSON, schema violations,
/// duplicate ids and empty author lists, and for an input with no records.
Corpus parse_corpus(std::istream& in, Warnings* warnings = nullptr);

/// Writes one compact JSON object per paper, in corpus order.
void write_corpus(std::ostream& out, const Corpus& corpus);
void write_corpus(std::ostream& out, std::span<const PaperRecord> papers);

// ---------------------------------------------------------------------------
// Citation reports

/// One citing article as listed in a researcher's citation report.
struct CitationEntry {
  std::string citing_id;
  std::int64_t citations = 0;
  bool is_self_citation = false;
  int year = 0;

  friend bool operator==(const CitationEntry&, const CitationEntry&) = default;
};

/// The ranked list of articles citing a researcher. Usable without a corpus.
struct CitationReport {
  std::string researcher;
  std::vector<CitationEntry> entries;

  /// Orders entries by citations descending, ties by citing id ascending.
  void sort();
};

/// CSV with header `citing_id,citations,self,year`. Entries keep file order.
CitationReport parse_citation_report(std::istream& in, std::string researcher = {});
void write_citation_report(std::ostream& out, const CitationReport& report);

// ---------------------------------------------------------------------------
// Researcher panels

/// Summary indexes of one researcher, as quoted from an external source.
/// Unknown values are empty. `k_no_self` is read from an optional extra column.
struct PanelRow {
  std::string name;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> c;
  std::optional<std::int64_t> ca;
  std::optional<std::int64_t> h;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> k_no_self;
  bool laureate = false;

  /// C/N; 0 when N is 0, empty when either is unknown.
  std::optional<double> c_per_n() const;

  friend bool operator==(const PanelRow&, const PanelRow&) = default;
};

/// Reports every broken PanelRow invariant (h <= N, K <= CA, K' <= K) as text.
std::vector<std::string> panel_row_violations(const PanelRow& row);

/// CSV with header `name,n,c,ca,h,k,laureate` and an optional trailing
/// `k_no_self` column. Unknown values are written `?` (an empty field is also
/// accepted). Invariant violations are reported as warnings, never as errors.
std::vector<PanelRow> parse_panel(std::istream& in, Warnings* warnings = nullptr);
void write_panel(std::ostream& out, std::span<const PanelRow> rows);

}  // namespace kindex
