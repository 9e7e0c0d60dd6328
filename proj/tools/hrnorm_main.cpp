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
//
// Command-line front end: `hrnorm normalize` rewrites Croatian text with
// all non-standard words expanded, `hrnorm evaluate` scores the pipeline
// against an annotated gold corpus, `hrnorm lexicon-check` validates the
// shipped data files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hrnorm/eval.hpp"
#include "hrnorm/fixtures.hpp"
#include "hrnorm/pipeline.hpp"
#include "hrnorm/tsv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitStrictMiss = 3;

std::string default_data_dir() {
  if (const char* env = std::getenv("HRNORM_DATA_DIR")) return env;
  return "data";
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json record_json(const hrnorm::SpanRecord& record) {
  return {{"offset", record.byte_start},
          {"end", record.byte_end},
          {"surface", record.surface},
          {"class", hrnorm::to_string(record.cls)},
          {"expansion", record.expansion},
          {"source", record.source},
          {"status", record.status}};
}

void write_report(const hrnorm::RunReport& report, std::ostream& out) {
  for (const auto& record : report.records)
    out << record_json(record).dump() << "\n";
}

struct NormalizeArgs {
  std::string profile;
  std::vector<std::string> lexicons;
  std::string spelling;
  std::string data_dir = default_data_dir();
  std::string report_path;
  std::string input_path;
  bool strict = false;
  bool no_capitalize = false;
};

hrnorm::RunConfig make_run_config(const NormalizeArgs& args) {
  hrnorm::RunConfig config;
  config.profile = args.profile;
  config.spelling_path = args.spelling.empty()
                             ? args.data_dir + "/spelling_hr.tsv"
                             : args.spelling;
  config.lexicon_paths = args.lexicons.empty()
                             ? std::vector<std::string>{args.data_dir +
                                                        "/lexicon_hr.tsv"}
                             : args.lexicons;
  config.capitalize_sentence_start = !args.no_capitalize;
  config.strict = args.strict;
  return config;
}

int run_normalize(const NormalizeArgs& args) {
  std::string text;
  if (args.input_path.empty() || args.input_path == "-") {
    text = read_stream(std::cin);
  } else {
    std::ifstream in(args.input_path, std::ios::binary);
    if (!in) {
      std::cerr << "hrnorm: cannot open input '" << args.input_path << "'\n";
      return kExitInput;
    }
    text = read_stream(in);
  }

  try {
    const hrnorm::Normalizer normalizer(make_run_config(args));
    const auto [output, report] = normalizer.normalize(text);
    std::cout << output;
    if (!args.report_path.empty()) {
      std::ofstream out(args.report_path, std::ios::binary);
      if (!out) {
        std::cerr << "hrnorm: cannot write report '" << args.report_path
                  << "'\n";
        return kExitInput;
      }
      write_report(report, out);
    }
    return kExitOk;
  } catch (const hrnorm::StrictMissError& e) {
    std::cerr << "hrnorm: " << e.what() << "\n";
    for (const auto& record : e.report().records)
      if (record.status == "miss")
        std::cerr << "  miss at byte " << record.byte_start << ": '"
                  << record.surface << "' (" << hrnorm::to_string(record.cls)
                  << ")\n";
    if (!args.report_path.empty()) {
      std::ofstream out(args.report_path, std::ios::binary);
      if (out) write_report(e.report(), out);
    }
    return kExitStrictMiss;
  } catch (const hrnorm::Error& e) {
    std::cerr << "hrnorm: " << e.what() << "\n";
    return kExitInput;
  }
}

struct EvaluateArgs {
  std::string gold_path;
  std::string texts_dir;
  std::string profile;
  std::vector<std::string> lexicons;
  std::string spelling;
  std::string data_dir = default_data_dir();
  bool structured = false;
};

int run_evaluate(const EvaluateArgs& args) {
  try {
    const std::string gold_path = args.gold_path.empty()
                                      ? args.data_dir + "/gold/gold_hr.tsv"
                                      : args.gold_path;
    const auto gold = hrnorm::load_gold(gold_path);

    std::string texts_dir = args.texts_dir;
    if (texts_dir.empty()) {
      const auto slash = gold_path.find_last_of('/');
      texts_dir = (slash == std::string::npos ? std::string(".")
                                              : gold_path.substr(0, slash)) +
                  "/texts";
    }

    // One normalizer per profile in play: the genre of a text doubles as
    // its dictionary profile unless --profile overrides it.
    std::map<std::string, std::string> genre_of_text;
    for (const auto& record : gold)
      genre_of_text[record.text_id] = record.genre;

    std::map<std::string, std::string> texts;
    std::vector<hrnorm::SystemSpan> spans;
    std::map<std::string, std::unique_ptr<hrnorm::Normalizer>> normalizers;
    for (const auto& [text_id, genre] : genre_of_text) {
      const std::string path = texts_dir + "/" + text_id + ".txt";
      texts[text_id] = hrnorm::read_file(path);

      const std::string profile = args.profile.empty() ? genre : args.profile;
      auto& normalizer = normalizers[profile];
      if (!normalizer) {
        NormalizeArgs base;
        base.profile = profile;
        base.lexicons = args.lexicons;
        base.spelling = args.spelling;
        base.data_dir = args.data_dir;
        normalizer =
            std::make_unique<hrnorm::Normalizer>(make_run_config(base));
      }
      const auto [output, report] = normalizer->normalize(texts[text_id]);
      for (const auto& record : report.records)
        spans.push_back({text_id, record.byte_start, record.byte_end,
                         record.cls, record.expansion});
    }

    const auto report = hrnorm::evaluate(spans, gold, texts);
    std::cout << hrnorm::render_report(report,
                                       args.structured
                                           ? hrnorm::ReportFormat::Structured
                                           : hrnorm::ReportFormat::Text);
    return kExitOk;
  } catch (const hrnorm::Error& e) {
    std::cerr << "hrnorm: " << e.what() << "\n";
    return kExitInput;
  }
}

struct LexiconCheckArgs {
  std::vector<std::string> files;
  std::string manifest_path;
  bool write_manifest = false;
};

std::string schema_of(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".txt")
    return "text";
  try {
    return hrnorm::header_value(hrnorm::read_tsv(path), "schema");
  } catch (const hrnorm::Error&) {
    return {};
  }
}

int run_lexicon_check(const LexiconCheckArgs& args) {
  if (args.write_manifest) {
    if (args.manifest_path.empty()) {
      std::cerr << "hrnorm: --write-manifest needs --manifest PATH\n";
      return kExitUsage;
    }
    const auto slash = args.manifest_path.find_last_of('/');
    const std::string base =
        slash == std::string::npos ? "." : args.manifest_path.substr(0, slash);
    std::ofstream out(args.manifest_path, std::ios::binary);
    if (!out) {
      std::cerr << "hrnorm: cannot write '" << args.manifest_path << "'\n";
      return kExitInput;
    }
    out << "# schema: manifest\n# columns: path, schema, rows, digest\n";
    for (const auto& file : args.files) {
      std::string rel = file;
      if (rel.rfind(base + "/", 0) == 0) rel = rel.substr(base.size() + 1);
      const std::string content = hrnorm::read_file(file);
      const std::string schema = schema_of(file);
      std::size_t rows = 0;
      if (schema != "text") rows = hrnorm::read_tsv(file).rows.size();
      out << rel << '\t' << (schema.empty() ? "text" : schema) << '\t' << rows
          << '\t' << hrnorm::fnv1a64_hex(content) << '\n';
    }
    return kExitOk;
  }

  hrnorm::ValidationReport report;
  try {
    if (!args.manifest_path.empty()) {
      const auto manifest = hrnorm::load_manifest(args.manifest_path);
      report = hrnorm::validate_all(manifest);
    }
    for (const auto& file : args.files) {
      const auto file_report = hrnorm::validate_file(file);
      report.violations.insert(report.violations.end(),
                               file_report.violations.begin(),
                               file_report.violations.end());
    }
  } catch (const hrnorm::Error& e) {
    std::cerr << "hrnorm: " << e.what() << "\n";
    return kExitInput;
  }

  for (const auto& violation : report.violations)
    std::cerr << violation.file << ":" << violation.line << ": "
              << violation.message << "\n";
  if (!report.ok()) {
    std::cerr << report.violations.size() << " violation(s)\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Croatian text normalization for speech pipelines"};
  app.require_subcommand(1);
  app.set_config("--config");

  NormalizeArgs normalize_args;
  auto* normalize =
      app.add_subcommand("normalize", "expand non-standard words in a text");
  normalize->add_option("--profile", normalize_args.profile,
                        "genre profile for the dictionaries");
  normalize->add_option("--lexicon", normalize_args.lexicons,
                        "dictionary TSV (repeatable)");
  normalize->add_option("--spelling", normalize_args.spelling,
                        "spelling-table TSV");
  normalize->add_option("--data", normalize_args.data_dir,
                        "data directory with the default tables");
  normalize->add_option("--report", normalize_args.report_path,
                        "write one JSON record per expanded span");
  normalize->add_flag("--strict", normalize_args.strict,
                      "fail on unresolved tokens instead of passing through");
  normalize->add_flag("--no-capitalize", normalize_args.no_capitalize,
                      "keep sentence-initial expansions lowercase");
  normalize->add_option("input", normalize_args.input_path,
                        "input file (stdin when absent)");

  EvaluateArgs evaluate_args;
  auto* evaluate =
      app.add_subcommand("evaluate", "score the pipeline on a gold corpus");
  evaluate->add_option("--gold", evaluate_args.gold_path, "gold TSV");
  evaluate->add_option("--texts", evaluate_args.texts_dir,
                       "directory with <text_id>.txt files");
  evaluate->add_option("--profile", evaluate_args.profile,
                       "force one profile instead of per-genre profiles");
  evaluate->add_option("--lexicon", evaluate_args.lexicons,
                       "dictionary TSV (repeatable)");
  evaluate->add_option("--spelling", evaluate_args.spelling,
                       "spelling-table TSV");
  evaluate->add_option("--data", evaluate_args.data_dir, "data directory");
  evaluate->add_flag("--json", evaluate_args.structured,
                     "emit the structured report");

  LexiconCheckArgs check_args;
  auto* check =
      app.add_subcommand("lexicon-check", "validate dictionary data files");
  check->add_option("--manifest", check_args.manifest_path,
                    "validate every file listed in this manifest");
  check->add_flag("--write-manifest", check_args.write_manifest,
                  "regenerate the manifest for the given files");
  check->add_option("files", check_args.files, "data files to validate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help/--version
    std::cerr << "hrnorm: " << e.what() << "\n";
    return kExitUsage;
  }

  if (normalize->parsed()) return run_normalize(normalize_args);
  if (evaluate->parsed()) return run_evaluate(evaluate_args);
  if (check->parsed()) return run_lexicon_check(check_args);
  return kExitUsage;
}
