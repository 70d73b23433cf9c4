// Copyright 2026 The OneGraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "og/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "og/store_dir.hpp"
#include "onegraph/error.hpp"
#include "onegraph/labels.hpp"
#include "onegraph/ogtext.hpp"
#include "onegraph/persistence.hpp"
#include "onegraph/query.hpp"
#include "onegraph/semantics.hpp"
#include "onegraph/text.hpp"
#include "onegraph/validate.hpp"

namespace og {

namespace {

using namespace onegraph;

struct Options {
  std::string store;
  std::string regime = "raw";

  // import
  std::vector<std::string> files;
  bool strict = false;
  bool checkpoint = false;

  // export
  bool canonicalized = false;

  // query
  std::string query_file;
  bool header = false;

  // reify
  std::vector<std::string> reify_terms;
  std::string event_name;

  // canonicalize
  std::vector<std::string> texts;
  bool strict_canonical = false;
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kIo:
    case ErrorCode::kStoreLocked:
    case ErrorCode::kCorruptSnapshot:
    case ErrorCode::kCorruptLog:
      return kExitIo;
    default:
      return kExitContent;
  }
}

std::filesystem::path store_path(const Options& opt) {
  if (!opt.store.empty()) return opt.store;
  if (const char* env = std::getenv("OG_STORE"); env != nullptr && *env != '\0') return env;
  throw Error(ErrorCode::kIo, "no store given (use --store or set OG_STORE)");
}

Regime regime_of(const Options& opt) {
  auto r = parse_regime(opt.regime);
  if (!r) throw Error(ErrorCode::kQuerySyntax, "unknown regime '" + opt.regime + "'");
  return *r;
}

void print_load_warnings(const LoadResult& loaded, std::ostream& err) {
  for (const ParseDiagnostic& d : loaded.diagnostics) {
    err << "graph.oglog:" << d.line_number << ": " << severity_name(d.severity) << " "
        << diagnostic_code_name(d.code) << ": " << d.message << '\n';
  }
}

LoadResult load_read_only(const Options& opt, std::ostream& err) {
  StoreDir store = StoreDir::open(store_path(opt), StoreDir::Access::kRead, false);
  LoadResult loaded = store.load();
  print_load_warnings(loaded, err);
  return loaded;
}

int cmd_import(const Options& opt, std::ostream& err) {
  struct FileParse {
    std::string name;
    ParsedDocument doc;
  };
  std::vector<FileParse> parsed;
  std::size_t errors = 0;
  std::size_t warnings = 0;
  for (const std::string& file : opt.files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, "cannot open " + file);
    ParsedDocument doc;
    try {
      doc = parse_document(in);
    } catch (const Error& e) {
      throw Error(e.code(), file + ": " + e.what());
    }
    for (const ParseDiagnostic& d : doc.diagnostics) {
      err << file << ":" << d.line_number << ": " << severity_name(d.severity) << " "
          << diagnostic_code_name(d.code) << ": " << d.message << '\n';
    }
    errors += doc.error_count();
    warnings += doc.warning_count();
    parsed.push_back(FileParse{file, std::move(doc)});
  }
  if (opt.strict && errors > 0) {
    err << "strict mode: " << errors << " error(s); nothing imported\n";
    return kExitContent;
  }

  StoreDir store = StoreDir::open(store_path(opt), StoreDir::Access::kWrite, true);
  LoadResult loaded = store.load();
  print_load_warnings(loaded, err);
  Graph& g = loaded.graph;
  const std::size_t log_before = g.log().size();
  std::size_t inserted = 0;
  std::size_t duplicates = 0;
  for (const FileParse& f : parsed) {
    for (const TextTriple& t : f.doc.triples) {
      if (g.assert_text(t) == AssertResult::kInserted) {
        ++inserted;
      } else {
        ++duplicates;
      }
    }
  }
  std::span<const LogEntry> fresh(g.log().data() + log_before, g.log().size() - log_before);
  if (opt.checkpoint) {
    store.checkpoint(g);
  } else {
    store.append_log(fresh);
  }
  err << "inserted " << inserted << ", duplicates " << duplicates << ", warnings " << warnings
      << ", errors " << errors << '\n';
  return kExitOk;
}

// Label and identity statements keep their original endpoints under
// canonicalized export.
bool keeps_endpoints(const Graph& g, const Triple& t) {
  const ReservedIds& r = g.reserved();
  return t.relation == r.abstract_to || t.relation == r.text_label ||
         t.relation == r.format_label || t.relation == r.class_label;
}

int cmd_export(const Options& opt, std::ostream& out, std::ostream& err) {
  LoadResult loaded = load_read_only(opt, err);
  const Graph& g = loaded.graph;
  Regime regime = regime_of(opt);
  bool canonical = opt.canonicalized || regime != Regime::kRaw;

  Reasoner reasoner(g);
  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const Triple& stored : g.triples()) {
    Triple t = stored;
    if (canonical && !keeps_endpoints(g, stored)) {
      t.head = reasoner.canonical(stored.head);
      t.tail = reasoner.canonical(stored.tail);
    }
    lines.push_back(serialize_triple(t, g.dictionary()));
    if (regime == Regime::kFull) {
      for (ObjectId super : reasoner.subrelation_closure(stored.relation)) {
        if (super == stored.relation) continue;
        lines.push_back(serialize_triple(Triple{t.head, super, t.tail}, g.dictionary()));
      }
    }
  }
  write_snapshot_lines(out, std::move(lines));
  return kExitOk;
}

int cmd_query(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  std::string text;
  if (opt.query_file.empty() || opt.query_file == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(opt.query_file, std::ios::binary);
    if (!f) throw Error(ErrorCode::kIo, "cannot open " + opt.query_file);
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  Query q = parse_query(text, regime_of(opt));
  LoadResult loaded = load_read_only(opt, err);
  const Graph& g = loaded.graph;
  std::vector<std::string> projection = effective_projection(q);
  std::vector<Binding> bindings = evaluate(g, q);

  if (opt.header) {
    for (const std::string& v : projection) out << '?' << v << '\t';
    out << "certainty\n";
  }
  // Rows are distinct on (projected values, certainty); bindings arrive
  // sorted by projected texts.
  std::set<std::string> seen;
  std::size_t rows = 0;
  for (const Binding& b : bindings) {
    std::string row;
    for (const std::string& v : projection) {
      row += escape_field(g.text(b.assignment.at(v)));
      row += '\t';
    }
    row += to_string(b.certainty);
    if (!seen.insert(row).second) continue;
    out << row << '\n';
    ++rows;
  }
  err << rows << " row(s)\n";
  return kExitOk;
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  LoadResult loaded = load_read_only(opt, err);
  std::vector<Finding> findings = validate(loaded.graph);
  for (const Finding& f : findings) out << format_finding(f) << '\n';
  std::size_t n_errors = 0;
  for (const Finding& f : findings) n_errors += f.severity == Severity::kError;
  err << n_errors << " error(s), " << findings.size() - n_errors << " warning(s)\n";
  return n_errors > 0 ? kExitContent : kExitOk;
}

int cmd_stats(const Options& opt, std::ostream& out, std::ostream& err) {
  LoadResult loaded = load_read_only(opt, err);
  const Graph& g = loaded.graph;
  const ReservedIds& r = g.reserved();

  std::set<ObjectId> objects;
  std::set<ObjectId> classes;
  std::set<ObjectId> sub_relations;
  for (const Triple& t : g.triples()) {
    objects.insert({t.head, t.relation, t.tail});
    if (t.relation == r.type) classes.insert(t.tail);
    if (t.relation == r.class_label) classes.insert(t.head);
    if (t.relation == r.sub_relation_of) sub_relations.insert(t.head);
  }
  std::size_t complete = 0;
  for (ObjectId c : classes) {
    complete += derive_labels(g, c).labels.class_label == ClassLabel::kComplete;
  }
  std::size_t abstract = 0;
  g.visit(Pattern{std::nullopt, r.text_label, r.abstract}, [&](const Triple&) { ++abstract; });

  out << "objects\t" << objects.size() << '\n'
      << "triples\t" << g.size() << '\n'
      << "classes\t" << classes.size() << '\n'
      << "complete_classes\t" << complete << '\n'
      << "abstract_objects\t" << abstract << '\n'
      << "events\t" << event_objects(g).size() << '\n'
      << "relations_with_super_relations\t" << sub_relations.size() << '\n';
  return kExitOk;
}

int cmd_reify(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.reify_terms.size() != 3) {
    throw Error(ErrorCode::kFieldCount, "reify expects <head> <relation> <tail>");
  }
  TextTriple base{normalize_text(opt.reify_terms[0]), normalize_text(opt.reify_terms[1]),
                  normalize_text(opt.reify_terms[2])};
  canonicalize_vocabulary(base);

  StoreDir store = StoreDir::open(store_path(opt), StoreDir::Access::kWrite, false);
  LoadResult loaded = store.load();
  print_load_warnings(loaded, err);
  Graph& g = loaded.graph;
  auto h = g.find(base.head);
  auto rel = g.find(base.relation);
  auto t = g.find(base.tail);
  if (!h || !rel || !t || !g.contains(Triple{*h, *rel, *t})) {
    throw Error(ErrorCode::kBaseNotAsserted,
                "triple is not asserted: " + serialize_text_triple(base));
  }
  const std::size_t log_before = g.log().size();
  std::optional<std::string_view> name;
  if (!opt.event_name.empty()) name = opt.event_name;
  EventReification e = reify(g, Triple{*h, *rel, *t}, name);
  std::span<const LogEntry> fresh(g.log().data() + log_before, g.log().size() - log_before);
  store.append_log(fresh);
  out << escape_field(g.text(e.event)) << '\n';
  err << (fresh.empty() ? "already reified" : "reified") << " (" << fresh.size()
      << " triple(s) added)\n";
  return kExitOk;
}

int cmd_canonicalize(const Options& opt, std::ostream& out, std::ostream& err) {
  LoadResult loaded = load_read_only(opt, err);
  const Graph& g = loaded.graph;
  Reasoner reasoner(g);
  for (const std::string& raw : opt.texts) {
    std::string text = normalize_text(raw);
    auto id = g.find(text);
    if (!id) {
      out << escape_field(text) << '\n';
      continue;
    }
    ObjectId c = reasoner.canonicalize(
        *id, opt.strict_canonical ? CanonicalMode::kStrict : CanonicalMode::kLenient);
    out << escape_field(g.text(c)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"og: OneGraph knowledge-graph store", "og"};
  app.require_subcommand(1);
  app.add_option("--store", opt.store, "Store directory (default: $OG_STORE)");
  app.add_option("--regime", opt.regime, "Inference regime: raw, canonical or full")
      ->check(CLI::IsMember({"raw", "canonical", "full"}));

  auto* import = app.add_subcommand("import", "Import .ogt files into the store");
  import->add_option("files", opt.files, ".ogt files")->required();
  import->add_flag("--strict", opt.strict, "Fail without committing on any parse error");
  import->add_flag("--checkpoint", opt.checkpoint, "Rewrite the snapshot and empty the log");

  auto* exp = app.add_subcommand("export", "Write the graph as .ogt to stdout");
  exp->add_flag("--canonicalized", opt.canonicalized,
                "Replace heads and tails by their abstract objects");

  auto* query = app.add_subcommand("query", "Evaluate a conjunctive query");
  query->add_option("file", opt.query_file, "Query file (default: stdin)");
  query->add_flag("--header", opt.header, "Print a header row");

  auto* validate_cmd = app.add_subcommand("validate", "Report structural findings");
  auto* stats = app.add_subcommand("stats", "Print graph statistics");

  auto* reify_cmd = app.add_subcommand("reify", "Promote a stored triple to an event object");
  reify_cmd->add_option("terms", opt.reify_terms, "<head> <relation> <tail>")
      ->required()
      ->expected(3);
  reify_cmd->add_option("--name", opt.event_name, "Event name (default: '<h> <r> <t>')");

  auto* canon = app.add_subcommand("canonicalize", "Print the canonical object of each text");
  canon->add_option("texts", opt.texts, "Texts to canonicalize")->required();
  canon->add_flag("--strict", opt.strict_canonical, "Fail on malformed abstract edges");

  std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "og: " << e.what() << '\n' << "Run 'og --help' for usage.\n";
    return kExitContent;
  }

  try {
    if (*import) return cmd_import(opt, err);
    if (*exp) return cmd_export(opt, out, err);
    if (*query) return cmd_query(opt, in, out, err);
    if (*validate_cmd) return cmd_validate(opt, out, err);
    if (*stats) return cmd_stats(opt, out, err);
    if (*reify_cmd) return cmd_reify(opt, out, err);
    if (*canon) return cmd_canonicalize(opt, out, err);
  } catch (const Error& e) {
    err << "og: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "og: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitContent;
}

}  // namespace og
