#include "cli.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kindex/kindex.hpp"

namespace kindex::cli {
namespace {

using nlohmann::ordered_json;

struct Globals {
  std::string format = "csv";
  std::string output;
  bool quiet = false;
};

struct IndexArgs {
  std::string corpus;
  std::vector<std::string> authors;
  bool exclude_self = false;
  bool exclude_reviews = false;
  std::optional<int> proximal;
  std::optional<int> recent;
  std::optional<int> now;
  bool group = false;
};

struct ReportArgs {
  std::string input;
  bool exclude_self = false;
};

struct PanelArgs {
  std::string input;
  std::string analysis = "curve";
  std::optional<double> h_threshold;
  std::optional<double> k_threshold;
};

struct DumpArgs {
  std::string corpus;
  std::string network;
  std::string author;
};

class Context {
 public:
  Context(const Globals& g, std::ostream& err) : globals(g), err_(err) {}

  void warn(const Warnings& warnings) {
    if (globals.quiet) return;
    for (const auto& w : warnings) err_ << "warning: " << w << '\n';
  }

  const Globals& globals;

 private:
  std::ostream& err_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(fmt::format("cannot open input file '{}'", path));
  return in;
}

void require_format(const Globals& g, std::initializer_list<std::string_view> allowed, std::string_view command) {
  for (auto f : allowed) {
    if (g.format == f) return;
  }
  throw ValidationError(fmt::format("format '{}' is not supported by '{}'", g.format, command));
}

std::string fixed(std::optional<double> v, int decimals) {
  return v ? fmt::format("{:.{}f}", *v, decimals) : std::string();
}

ordered_json opt_json(std::optional<double> v) { return v ? ordered_json(*v) : ordered_json(nullptr); }
ordered_json opt_json(std::optional<std::int64_t> v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::string self_mode(bool exclude_self) { return exclude_self ? "excluded" : "included"; }

Corpus load_corpus(Context& ctx, const std::string& path) {
  auto in = open_input(path);
  Warnings warnings;
  auto corpus = parse_corpus(in, &warnings);
  ctx.warn(warnings);
  return corpus;
}

// ---- index ----------------------------------------------------------------

void run_group(Context& ctx, const IndexArgs& args, const Corpus& corpus, const DerivedNetworks& nets,
               std::ostream& out) {
  require_format(ctx.globals, {"csv", "json"}, "index --group");
  std::vector<AuthorId> members(args.authors.begin(), args.authors.end());
  for (const auto& m : members) corpus.author_index(m);
  const auto g = group_indexes(nets, corpus, members);
  const auto k = args.exclude_self ? g.k_no_self : g.k;
  if (ctx.globals.format == "json") {
    ordered_json doc;
    doc["schema"] = "kindex.group/1";
    doc["self_citations"] = self_mode(args.exclude_self);
    doc["members"] = members;
    doc["n"] = g.n_papers;
    doc["ca"] = g.citing_articles;
    doc["ca_no_self"] = g.citing_articles_no_self;
    doc["k"] = k;
    doc["k_all"] = g.k;
    doc["k_no_self"] = g.k_no_self;
    out << doc.dump(2) << '\n';
    return;
  }
  out << "members,n,ca,ca_no_self,k,k_no_self,self_citations\n";
  out << fmt::format("{},{},{},{},{},{},{}\n", fmt::join(members, ";"), g.n_papers, g.citing_articles,
                     g.citing_articles_no_self, k, g.k_no_self, self_mode(args.exclude_self));
}

int run_index(Context& ctx, const IndexArgs& args, std::ostream& out) {
  if ((args.proximal || args.recent) && !args.now) throw ValidationError("--proximal and --recent require --now");
  if (args.proximal && *args.proximal <= 0) throw ValidationError("--proximal must be positive");
  if (args.recent && *args.recent <= 0) throw ValidationError("--recent must be positive");

  const auto corpus = load_corpus(ctx, args.corpus);
  const auto nets = build_networks(corpus);
  if (args.group) {
    run_group(ctx, args, corpus, nets, out);
    return kOk;
  }
  require_format(ctx.globals, {"csv", "json"}, "index");

  IndexOptions options;
  options.exclude_reviews = args.exclude_reviews;

  struct Row {
    IndexReport report;
    std::optional<std::int64_t> proximal;
    std::optional<std::int64_t> recent;
  };
  std::vector<Row> rows;
  for (const auto& author : args.authors) {
    Row row{compute_indexes(nets, corpus, author, options), {}, {}};
    if (args.proximal) row.proximal = k_proximal(nets, corpus, author, *args.proximal, *args.now);
    if (args.recent) row.recent = k_recent(nets, corpus, author, *args.recent, *args.now);
    rows.push_back(std::move(row));
  }

  if (ctx.globals.format == "json") {
    ordered_json doc;
    doc["schema"] = "kindex.index/1";
    doc["self_citations"] = self_mode(args.exclude_self);
    doc["exclude_reviews"] = args.exclude_reviews;
    if (args.now) doc["now"] = *args.now;
    doc["rows"] = ordered_json::array();
    for (const auto& row : rows) {
      auto entry = ordered_json::parse(to_json(row.report));
      if (args.exclude_self) entry["k"] = row.report.k_no_self;
      if (args.proximal) entry["k_proximal"] = *row.proximal;
      if (args.recent) entry["k_recent"] = *row.recent;
      doc["rows"].push_back(std::move(entry));
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }

  out << index_report_csv_header();
  if (args.proximal) out << ",k_proximal";
  if (args.recent) out << ",k_recent";
  out << ",self_citations\n";
  for (const auto& row : rows) {
    auto fields = index_report_csv_fields(row.report);
    // With self-citations excluded the headline K column reports K'.
    if (args.exclude_self) fields[9] = std::to_string(row.report.k_no_self);
    if (args.proximal) fields.push_back(std::to_string(*row.proximal));
    if (args.recent) fields.push_back(std::to_string(*row.recent));
    fields.push_back(self_mode(args.exclude_self));
    out << fmt::format("{}\n", fmt::join(fields, ","));
  }
  return kOk;
}

// ---- report ---------------------------------------------------------------

int run_report(Context& ctx, const ReportArgs& args, std::ostream& out) {
  require_format(ctx.globals, {"csv", "json"}, "report");
  auto in = open_input(args.input);
  auto report = parse_citation_report(in, std::filesystem::path(args.input).stem().string());
  const auto k_all = k_index(report, false);
  const auto k_no_self = k_index(report, true);
  std::int64_t ca_no_self = 0;
  for (const auto& e : report.entries) ca_no_self += e.is_self_citation ? 0 : 1;
  const auto ca = static_cast<std::int64_t>(report.entries.size());
  const auto k = args.exclude_self ? k_no_self : k_all;

  if (ctx.globals.format == "json") {
    ordered_json doc;
    doc["schema"] = "kindex.report/1";
    doc["self_citations"] = self_mode(args.exclude_self);
    doc["researcher"] = report.researcher;
    doc["k"] = k;
    doc["k_no_self"] = k_no_self;
    doc["ca"] = ca;
    doc["ca_no_self"] = ca_no_self;
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "researcher,k,k_no_self,ca,ca_no_self,self_citations\n";
  out << fmt::format("{},{},{},{},{},{}\n", report.researcher, k, k_no_self, ca, ca_no_self,
                     self_mode(args.exclude_self));
  return kOk;
}

// ---- panel ----------------------------------------------------------------

void panel_curve(Context& ctx, const std::vector<PanelRow>& rows, std::ostream& out) {
  require_format(ctx.globals, {"csv", "json", "svg"}, "panel --analysis curve");
  std::vector<std::pair<PanelIndex, PrizeCurve>> curves;
  for (auto index : kPanelIndexes) curves.emplace_back(index, prize_curve(rank_panel(rows, index)));

  if (ctx.globals.format == "svg") {
    out << plot_prize_curves(curves);
    return;
  }
  if (ctx.globals.format == "json") {
    ordered_json doc;
    doc["schema"] = "kindex.curve/1";
    doc["panel_size"] = rows.size();
    doc["curves"] = ordered_json::array();
    for (const auto& [index, curve] : curves) {
      doc["curves"].push_back({{"index", std::string(to_string(index))},
                               {"laureates", curve.laureates},
                               {"area", curve.area},
                               {"auc", curve.auc},
                               {"n_r", curve.cumulative}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "index,laureates,area,auc,n_r\n";
  for (const auto& [index, curve] : curves) {
    out << fmt::format("{},{},{},{:.6f},{}\n", to_string(index), curve.laureates, curve.area, curve.auc,
                       fmt::join(curve.cumulative, ";"));
  }
}

void panel_plane(Context& ctx, const PanelArgs& args, const std::vector<PanelRow>& rows, std::ostream& out) {
  require_format(ctx.globals, {"csv", "json", "svg"}, "panel --analysis plane");
  std::vector<PanelRow> plotted;
  for (const auto& row : rows) {
    if (row.h && row.k) plotted.push_back(row);
  }
  if (plotted.empty()) throw ValidationError("panel has no rows with both h and K");
  auto thresholds = median_thresholds(plotted);
  if (args.h_threshold) thresholds.h = *args.h_threshold;
  if (args.k_threshold) thresholds.k = *args.k_threshold;

  if (ctx.globals.format == "svg") {
    out << plot_k_h_plane(plotted, thresholds);
    return;
  }
  if (ctx.globals.format == "json") {
    ordered_json doc;
    doc["schema"] = "kindex.plane/1";
    doc["h_threshold"] = thresholds.h;
    doc["k_threshold"] = thresholds.k;
    doc["rows"] = ordered_json::array();
    for (const auto& row : plotted) {
      const auto label = classify_quadrant(row, thresholds.h, thresholds.k);
      doc["rows"].push_back({{"name", row.name},
                             {"h", *row.h},
                             {"k", *row.k},
                             {"laureate", row.laureate},
                             {"quadrant", std::string(to_string(label.quadrant))}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "name,h,k,laureate,quadrant\n";
  for (const auto& row : plotted) {
    const auto label = classify_quadrant(row, thresholds.h, thresholds.k);
    out << fmt::format("{},{},{},{},{}\n", row.name, *row.h, *row.k, row.laureate, to_string(label.quadrant));
  }
}

void panel_fraud(Context& ctx, const std::vector<PanelRow>& rows, std::ostream& out) {
  require_format(ctx.globals, {"csv", "json"}, "panel --analysis fraud");
  auto cell = [](std::optional<std::int64_t> v) { return v ? std::to_string(*v) : std::string(); };

  if (ctx.globals.format == "json") {
    ordered_json doc;
    doc["schema"] = "kindex.fraud/1";
    doc["rows"] = ordered_json::array();
    for (const auto& row : rows) {
      if (!row.k) continue;
      const auto f = fraud_indicators(row);
      doc["rows"].push_back({{"name", row.name},
                             {"k", *row.k},
                             {"k_no_self", opt_json(row.k_no_self)},
                             {"h", opt_json(row.h)},
                             {"n", opt_json(row.n)},
                             {"k_over_h", opt_json(f.k_over_h)},
                             {"k_over_n", opt_json(f.k_over_n)},
                             {"delta", opt_json(f.delta)}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "name,k,k_no_self,h,n,k_over_h,k_over_n,delta\n";
  for (const auto& row : rows) {
    if (!row.k) continue;
    const auto f = fraud_indicators(row);
    out << fmt::format("{},{},{},{},{},{},{},{}\n", row.name, *row.k, cell(row.k_no_self), cell(row.h),
                       cell(row.n), fixed(f.k_over_h, 2), fixed(f.k_over_n, 2), fixed(f.delta, 2));
  }
}

int run_panel(Context& ctx, const PanelArgs& args, std::ostream& out) {
  auto in = open_input(args.input);
  Warnings warnings;
  const auto rows = parse_panel(in, &warnings);
  ctx.warn(warnings);
  if (rows.empty()) throw ValidationError("panel is empty");
  if (args.analysis == "curve") {
    panel_curve(ctx, rows, out);
  } else if (args.analysis == "plane") {
    panel_plane(ctx, args, rows, out);
  } else {
    panel_fraud(ctx, rows, out);
  }
  return kOk;
}

// ---- synth ----------------------------------------------------------------

int run_synth(Context& ctx, const SynthConfig& config, std::ostream& out) {
  Warnings warnings;
  auto corpus = generate(config, &warnings);
  ctx.warn(warnings);
  write_corpus(out, corpus);
  return kOk;
}

// ---- dump-network ---------------------------------------------------------

int run_dump(Context& ctx, const DumpArgs& args, std::ostream& out) {
  require_format(ctx.globals, {"csv"}, "dump-network");
  if (args.network == "S" && args.author.empty()) throw ValidationError("--network S requires --author");
  const auto corpus = load_corpus(ctx, args.corpus);
  const auto nets = build_networks(corpus);

  std::vector<std::string> paper_ids;
  paper_ids.reserve(corpus.paper_count());
  for (const auto& p : corpus.papers()) paper_ids.push_back(p.id);
  const auto& author_ids = corpus.authors();

  const auto& n = args.network;
  if (n == "P") {
    write_matrix_csv(out, nets.publication, author_ids, paper_ids);
  } else if (n == "Cbar") {
    write_matrix_csv(out, nets.weighted_citation, paper_ids, paper_ids);
  } else if (n == "C") {
    write_matrix_csv(out, nets.citation, paper_ids, paper_ids);
  } else if (n == "Abar") {
    write_matrix_csv(out, nets.collaboration_weighted, author_ids, author_ids);
  } else if (n == "A") {
    write_matrix_csv(out, nets.collaboration, author_ids, author_ids);
  } else if (n == "CA") {
    write_matrix_csv(out, nets.citing_articles, author_ids, paper_ids);
  } else {
    write_matrix_csv(out, self_citation_mask(nets, corpus, args.author), paper_ids, paper_ids);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Citation network indexes: h, K, lobby, prize curves and synthetic corpora", "kindex"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->capture_default_str();
  app.add_option("-o,--output", globals.output, "Write results to this file instead of stdout");
  app.add_flag("-q,--quiet", globals.quiet, "Suppress warnings");

  IndexArgs index_args;
  auto* index = app.add_subcommand("index", "Compute indexes for authors in a corpus");
  index->add_option("--corpus", index_args.corpus, "Corpus file (JSON lines)")->required();
  index->add_option("-a,--author", index_args.authors, "Author id (repeatable)")->required();
  index->add_flag("--exclude-self", index_args.exclude_self, "Report K with self-citations excluded");
  index->add_flag("--exclude-reviews", index_args.exclude_reviews, "Ignore the author's review papers");
  index->add_option("--proximal", index_args.proximal, "Also report K over papers from the last M years");
  index->add_option("--recent", index_args.recent, "Also report K over citations from the last Y years");
  index->add_option("--now", index_args.now, "Reference year for --proximal and --recent");
  index->add_flag("--group", index_args.group, "Treat the authors as one group");

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "Compute K from a citation report CSV");
  report->add_option("--input", report_args.input, "Citation report CSV")->required();
  report->add_flag("--exclude-self", report_args.exclude_self, "Report K with self-citations excluded");

  PanelArgs panel_args;
  auto* panel = app.add_subcommand("panel", "Analyse a panel of researchers");
  panel->add_option("--input", panel_args.input, "Panel CSV")->required();
  panel->add_option("--analysis", panel_args.analysis, "Analysis to run")
      ->check(CLI::IsMember({"curve", "plane", "fraud"}))
      ->capture_default_str();
  panel->add_option("--h-threshold", panel_args.h_threshold, "h threshold for the plane (default: median)");
  panel->add_option("--k-threshold", panel_args.k_threshold, "K threshold for the plane (default: median)");

  SynthConfig synth_config;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  synth->add_option("--papers", synth_config.papers)->capture_default_str();
  synth->add_option("--authors", synth_config.authors)->capture_default_str();
  synth->add_option("--start-year", synth_config.start_year)->capture_default_str();
  synth->add_option("--years", synth_config.years)->capture_default_str();
  synth->add_option("--attachment-exponent", synth_config.attachment_exponent)->capture_default_str();
  synth->add_option("--refs", synth_config.references_per_paper, "Mean references per paper")
      ->capture_default_str();
  synth->add_option("--self-rate", synth_config.self_citation_rate)->capture_default_str();
  synth->add_option("--max-authors", synth_config.max_authors_per_paper)->capture_default_str();
  synth->add_option("--repeat-rate", synth_config.repeat_citation_rate)->capture_default_str();
  synth->add_option("--review-rate", synth_config.review_rate)->capture_default_str();
  synth->add_option("--seed", synth_config.seed)->capture_default_str();

  DumpArgs dump_args;
  auto* dump = app.add_subcommand("dump-network", "Write one derived network as row,col,weight CSV");
  dump->add_option("--corpus", dump_args.corpus, "Corpus file (JSON lines)")->required();
  dump->add_option("--network", dump_args.network, "Network to dump")
      ->required()
      ->check(CLI::IsMember({"P", "Cbar", "C", "Abar", "A", "CA", "S"}));
  dump->add_option("-a,--author", dump_args.author, "Author for the self-citation mask S");

  std::vector<const char*> argv{"kindex"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  Context ctx(globals, err);
  std::ostringstream buffer;
  try {
    if (*index) {
      run_index(ctx, index_args, buffer);
    } else if (*report) {
      run_report(ctx, report_args, buffer);
    } else if (*panel) {
      run_panel(ctx, panel_args, buffer);
    } else if (*synth) {
      run_synth(ctx, synth_config, buffer);
    } else {
      run_dump(ctx, dump_args, buffer);
    }
  } catch (const UnknownEntityError& e) {
    err << "error: " << e.what() << '\n';
    return kUnknownEntity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }

  if (globals.output.empty()) {
    out << buffer.str();
    return kOk;
  }
  std::ofstream file(globals.output, std::ios::binary);
  if (!file || !(file << buffer.str())) {
    err << "error: cannot write output file '" << globals.output << "'\n";
    return kBadInput;
  }
  return kOk;
}

}  // namespace kindex::cli
