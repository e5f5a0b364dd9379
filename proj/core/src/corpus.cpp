#include "kindex/corpus.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <fmt/format.h>

#include "csv.hpp"
#include "json.hpp"
#include "kindex/errors.hpp"

namespace kindex {

void validate_record(const PaperRecord& record) {
  if (record.id.empty()) throw ValidationError("paper id must not be empty");
  if (record.authors.empty()) throw ValidationError(fmt::format("paper '{}' has an empty author list", record.id));
  std::unordered_set<std::string_view> seen;
  for (const auto& author : record.authors) {
    if (author.empty()) throw ValidationError(fmt::format("paper '{}' has an empty author id", record.id));
    if (!seen.insert(author).second) {
      throw ValidationError(fmt::format("paper '{}' lists author '{}' twice", record.id, author));
    }
  }
  for (const auto& ref : record.references) {
    if (ref.target.empty()) throw ValidationError(fmt::format("paper '{}' has a reference with empty target", record.id));
    if (ref.target == record.id) throw ValidationError(fmt::format("paper '{}' references itself", record.id));
    if (ref.multiplicity < 1) {
      throw ValidationError(
          fmt::format("paper '{}' cites '{}' with multiplicity {} (must be >= 1)", record.id, ref.target, ref.multiplicity));
    }
  }
}

Corpus Corpus::from_records(std::vector<PaperRecord> papers, Warnings* warnings) {
  if (papers.empty()) throw ValidationError("empty corpus");

  Corpus corpus;
  corpus.paper_lookup_.reserve(papers.size());
  for (std::size_t i = 0; i < papers.size(); ++i) {
    validate_record(papers[i]);
    if (!corpus.paper_lookup_.emplace(papers[i].id, i).second) {
      throw ValidationError(fmt::format("duplicate paper id '{}'", papers[i].id));
    }
  }

  std::vector<AuthorId> authors;
  for (const auto& paper : papers) authors.insert(authors.end(), paper.authors.begin(), paper.authors.end());
  std::sort(authors.begin(), authors.end());
  authors.erase(std::unique(authors.begin(), authors.end()), authors.end());
  corpus.author_lookup_.reserve(authors.size());
  for (std::size_t i = 0; i < authors.size(); ++i) corpus.author_lookup_.emplace(authors[i], i);

  corpus.paper_authors_.resize(papers.size());
  corpus.resolved_.resize(papers.size());
  for (std::size_t i = 0; i < papers.size(); ++i) {
    auto& ids = corpus.paper_authors_[i];
    ids.reserve(papers[i].authors.size());
    for (const auto& author : papers[i].authors) ids.push_back(corpus.author_lookup_.at(author));

    auto& resolved = corpus.resolved_[i];
    resolved.reserve(papers[i].references.size());
    for (const auto& ref : papers[i].references) {
      ResolvedReference r;
      r.multiplicity = ref.multiplicity;
      if (auto it = corpus.paper_lookup_.find(ref.target); it != corpus.paper_lookup_.end()) {
        r.target = it->second;
      } else {
        ++corpus.external_count_;
        if (warnings) {
          warnings->push_back(
              fmt::format("paper '{}' cites '{}', which is not in the corpus; kept as external", papers[i].id, ref.target));
        }
      }
      resolved.push_back(r);
    }
  }

  corpus.papers_ = std::move(papers);
  corpus.authors_ = std::move(authors);
  return corpus;
}

std::optional<std::size_t> Corpus::find_paper(std::string_view id) const {
  if (auto it = paper_lookup_.find(std::string(id)); it != paper_lookup_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> Corpus::find_author(std::string_view id) const {
  if (auto it = author_lookup_.find(std::string(id)); it != author_lookup_.end()) return it->second;
  return std::nullopt;
}

std::size_t Corpus::author_index(std::string_view id) const {
  if (auto index = find_author(id)) return *index;
  throw UnknownEntityError(fmt::format("unknown author '{}'", id));
}

// ---------------------------------------------------------------------------
// JSON lines

namespace {

using nlohmann::json;

PaperRecord record_from_json(const json& obj) {
  if (!obj.is_object()) throw ValidationError("record must be a JSON object");

  PaperRecord record;
  bool has_id = false, has_year = false, has_authors = false;
  for (const auto& [key, value] : obj.items()) {
    if (key == "id") {
      if (!value.is_string()) throw ValidationError("'id' must be a string");
      record.id = value.get<std::string>();
      has_id = true;
    } else if (key == "year") {
      if (!value.is_number_integer()) throw ValidationError("'year' must be an integer");
      record.year = value.get<int>();
      has_year = true;
    } else if (key == "authors") {
      if (!value.is_array()) throw ValidationError("'authors' must be an array of strings");
      for (const auto& author : value) {
        if (!author.is_string()) throw ValidationError("'authors' must be an array of strings");
        record.authors.push_back(author.get<std::string>());
      }
      has_authors = true;
    } else if (key == "refs") {
      if (!value.is_array()) throw ValidationError("'refs' must be an array of [id, multiplicity] pairs");
      for (const auto& pair : value) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_number_integer()) {
          throw ValidationError("'refs' must be an array of [id, multiplicity] pairs");
        }
        record.references.push_back({pair[0].get<std::string>(), pair[1].get<std::int64_t>()});
      }
    } else if (key == "review") {
      if (!value.is_boolean()) throw ValidationError("'review' must be a boolean");
      record.is_review = value.get<bool>();
    } else {
      throw ValidationError(fmt::format("unknown field '{}'", key));
    }
  }
  if (!has_id) throw ValidationError("missing field 'id'");
  if (!has_year) throw ValidationError("missing field 'year'");
  if (!has_authors) throw ValidationError("missing field 'authors'");
  return record;
}

}  // namespace

Corpus parse_corpus(std::istream& in, Warnings* warnings) {
  std::vector<PaperRecord> records;
  std::unordered_map<std::string, std::size_t> first_seen;
  std::string line;
  std::size_t line_no = 0;
  while (csv::next_line(in, line, line_no)) {
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(fmt::format("malformed JSON ({})", e.what()), line_no);
    }
    try {
      auto record = record_from_json(obj);
      validate_record(record);
      if (auto [it, inserted] = first_seen.emplace(record.id, line_no); !inserted) {
        throw ValidationError(fmt::format("duplicate paper id '{}' (first seen on line {})", record.id, it->second));
      }
      records.push_back(std::move(record));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const json::exception& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (records.empty()) throw ParseError("empty corpus");
  return Corpus::from_records(std::move(records), warnings);
}

void write_corpus(std::ostream& out, std::span<const PaperRecord> papers) {
  for (const auto& paper : papers) {
    nlohmann::ordered_json obj;
    obj["id"] = paper.id;
    obj["year"] = paper.year;
    obj["authors"] = paper.authors;
    auto refs = nlohmann::ordered_json::array();
    for (const auto& ref : paper.references) refs.push_back({ref.target, ref.multiplicity});
    obj["refs"] = std::move(refs);
    obj["review"] = paper.is_review;
    out << obj.dump() << '\n';
  }
}

void write_corpus(std::ostream& out, const Corpus& corpus) { write_corpus(out, corpus.papers()); }

// ---------------------------------------------------------------------------
// Citation report CSV

void CitationReport::sort() {
  std::stable_sort(entries.begin(), entries.end(), [](const CitationEntry& a, const CitationEntry& b) {
    if (a.citations != b.citations) return a.citations > b.citations;
    return a.citing_id < b.citing_id;
  });
}

CitationReport parse_citation_report(std::istream& in, std::string researcher) {
  CitationReport report;
  report.researcher = std::move(researcher);

  std::string line;
  std::size_t line_no = 0;
  if (!csv::next_line(in, line, line_no)) throw ParseError("missing header row");
  csv::check_header(csv::split_line(line, line_no), {"citing_id", "citations", "self", "year"}, {}, line_no);

  while (csv::next_line(in, line, line_no)) {
    auto fields = csv::split_line(line, line_no);
    if (fields.size() != 4) throw ParseError(fmt::format("expected 4 fields, found {}", fields.size()), line_no);
    CitationEntry entry;
    entry.citing_id = std::string(csv::trim(fields[0]));
    auto citations = csv::parse_int(fields[1]);
    if (!citations) throw ParseError(fmt::format("unparsable citation count '{}'", fields[1]), line_no);
    if (*citations < 0) {
      throw ParseError(fmt::format("negative citation count {} for '{}'", *citations, entry.citing_id), line_no);
    }
    entry.citations = *citations;
    auto self = csv::parse_bool(fields[2]);
    if (!self) throw ParseError(fmt::format("'self' must be true or false, found '{}'", fields[2]), line_no);
    entry.is_self_citation = *self;
    auto year = csv::parse_int(fields[3]);
    if (!year) throw ParseError(fmt::format("unparsable year '{}'", fields[3]), line_no);
    entry.year = static_cast<int>(*year);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

void write_citation_report(std::ostream& out, const CitationReport& report) {
  out << "citing_id,citations,self,year\n";
  for (const auto& e : report.entries) {
    csv::write_row(out, {e.citing_id, std::to_string(e.citations), e.is_self_citation ? "true" : "false",
                         std::to_string(e.year)});
  }
}

// ---------------------------------------------------------------------------
// Panel CSV

std::optional<double> PanelRow::c_per_n() const {
  if (!n || !c) return std::nullopt;
  if (*n == 0) return 0.0;
  return static_cast<double>(*c) / static_cast<double>(*n);
}

std::vector<std::string> panel_row_violations(const PanelRow& row) {
  std::vector<std::string> out;
  if (row.h && row.n && *row.h > *row.n) out.push_back(fmt::format("h = {} exceeds N = {}", *row.h, *row.n));
  if (row.k && row.ca && *row.k > *row.ca) out.push_back(fmt::format("K = {} exceeds CA = {}", *row.k, *row.ca));
  if (row.k && row.k_no_self && *row.k_no_self > *row.k) {
    out.push_back(fmt::format("K' = {} exceeds K = {}", *row.k_no_self, *row.k));
  }
  return out;
}

namespace {

std::optional<std::int64_t> panel_value(std::string_view field, std::string_view column, std::size_t line_no) {
  auto text = csv::trim(field);
  if (text.empty() || text == "?") return std::nullopt;
  auto value = csv::parse_int(text);
  if (!value) throw ParseError(fmt::format("column '{}': unparsable integer '{}'", column, text), line_no);
  if (*value < 0) throw ParseError(fmt::format("column '{}': negative value {}", column, *value), line_no);
  return value;
}

std::string panel_text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "?"; }

}  // namespace

std::vector<PanelRow> parse_panel(std::istream& in, Warnings* warnings) {
  std::string line;
  std::size_t line_no = 0;
  if (!csv::next_line(in, line, line_no)) throw ParseError("missing header row");
  std::size_t extra = csv::check_header(csv::split_line(line, line_no), {"name", "n", "c", "ca", "h", "k", "laureate"},
                                        {"k_no_self"}, line_no);
  const std::size_t width = 7 + extra;

  std::vector<PanelRow> rows;
  while (csv::next_line(in, line, line_no)) {
    auto fields = csv::split_line(line, line_no);
    if (fields.size() != width) {
      throw ParseError(fmt::format("expected {} fields, found {}", width, fields.size()), line_no);
    }
    PanelRow row;
    row.name = std::string(csv::trim(fields[0]));
    if (row.name.empty()) throw ParseError("empty name", line_no);
    row.n = panel_value(fields[1], "n", line_no);
    row.c = panel_value(fields[2], "c", line_no);
    row.ca = panel_value(fields[3], "ca", line_no);
    row.h = panel_value(fields[4], "h", line_no);
    row.k = panel_value(fields[5], "k", line_no);
    auto laureate = csv::parse_bool(fields[6]);
    if (!laureate) throw ParseError(fmt::format("'laureate' must be true or false, found '{}'", fields[6]), line_no);
    row.laureate = *laureate;
    if (extra) row.k_no_self = panel_value(fields[7], "k_no_self", line_no);

    if (warnings) {
      for (const auto& v : panel_row_violations(row)) {
        warnings->push_back(fmt::format("line {}: {}: {}", line_no, row.name, v));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_panel(std::ostream& out, std::span<const PanelRow> rows) {
  bool with_k_no_self = std::any_of(rows.begin(), rows.end(), [](const PanelRow& r) { return r.k_no_self.has_value(); });
  out << "name,n,c,ca,h,k,laureate" << (with_k_no_self ? ",k_no_self" : "") << '\n';
  for (const auto& r : rows) {
    std::vector<std::string> fields{r.name,           panel_text(r.n), panel_text(r.c), panel_text(r.ca),
                                    panel_text(r.h), panel_text(r.k), r.laureate ? "true" : "false"};
    if (with_k_no_self) fields.push_back(panel_text(r.k_no_self));
    csv::write_row(out, fields);
  }
}

}  // namespace kindex
